#include "civar/field.hpp"

#include <string>

#include "civar/errors.hpp"

namespace civar {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p >= (1ULL << 31) || p == 2 || !is_prime(p))
    throw InputError("bad_prime", "characteristic " + std::to_string(p) +
                                      " is not an odd prime below 2^31");
  p_ = static_cast<std::uint32_t>(p);
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw InternalError("inverse of zero in F_" + std::to_string(p_));
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

}  // namespace civar

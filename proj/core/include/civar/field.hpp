#pragma once

#include <cstdint>

namespace civar {

using Scalar = std::uint32_t;

// The prime field F_p for an odd prime p < 2^31. Scalars are plain residues
// in [0, p); the field object carries the modulus.
class PrimeField {
 public:
  PrimeField() = default;
  // Throws InputError unless p is an odd prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  // Inverse of a nonzero element; throws InternalError on zero.
  Scalar inv(Scalar a) const;

  // Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t signed_value(Scalar a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_ = 101;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace civar

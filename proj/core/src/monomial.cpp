#include "civar/monomial.hpp"

#include <algorithm>

#include "civar/errors.hpp"

namespace civar {

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars) throw InputError("too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255)
      throw InputError("exponent out of range");
    exp_[i] = static_cast<std::uint8_t>(exponents[i]);
    deg_ = static_cast<std::uint16_t>(deg_ + exponents[i]);
  }
}

Monomial Monomial::variable(std::size_t index, int power) {
  std::array<int, kMaxVars> e{};
  e.at(index) = power;
  return Monomial(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned{exp_[i]} + other.exp_[i];
    if (s > 255) throw InternalError("monomial exponent overflow");
    r.exp_[i] = static_cast<std::uint8_t>(s);
  }
  r.deg_ = static_cast<std::uint16_t>(deg_ + other.deg_);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    r.exp_[i] = static_cast<std::uint8_t>(exp_[i] - other.exp_[i]);
  r.deg_ = static_cast<std::uint16_t>(deg_ - other.deg_);
  return r;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    d += r.exp_[i];
  }
  r.deg_ = static_cast<std::uint16_t>(d);
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] && other.exp_[i]) return false;
  return true;
}

bool Monomial::supported_in(std::size_t first, std::size_t last) const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] && (i < first || i >= last)) return false;
  return true;
}

int MonomialOrder::revlex(const Monomial& a, const Monomial& b, std::size_t first,
                          std::size_t last) noexcept {
  for (std::size_t i = last; i-- > first;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (kind_ == Kind::degrevlex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    return revlex(a, b, 0, nvars_);
  }
  int da = 0, db = 0;
  for (std::size_t i = 0; i < block_; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  if (int c = revlex(a, b, 0, block_)) return c;
  int ra = a.degree() - da, rb = b.degree() - db;
  if (ra != rb) return ra < rb ? -1 : 1;
  return revlex(a, b, block_, nvars_);
}

namespace {
void enumerate(std::size_t nvars, std::size_t var, int remaining, std::array<int, kMaxVars>& e,
               std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    e[var] = remaining;
    out.emplace_back(std::span<const int>(e.data(), nvars));
    e[var] = 0;
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    e[var] = k;
    enumerate(nvars, var + 1, remaining - k, e, out);
  }
  e[var] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::array<int, kMaxVars> e{};
  enumerate(nvars, 0, degree, e, out);
  auto order = MonomialOrder::degrevlex(nvars);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  return out;
}

}  // namespace civar

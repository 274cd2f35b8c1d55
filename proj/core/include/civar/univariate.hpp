#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "civar/field.hpp"
#include "civar/matrix.hpp"

namespace civar {

// Dense univariate polynomial over F_p, coefficients stored low degree first
// with no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(PrimeField field, std::vector<Scalar> coeffs);
  static UPoly x(PrimeField field) { return UPoly(field, {0, 1}); }
  static UPoly constant(PrimeField field, Scalar c) { return UPoly(field, {c}); }

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  Scalar lead() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator%(const UPoly& o) const { return divmod(o).second; }
  UPoly operator/(const UPoly& o) const { return divmod(o).first; }
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly monic() const;
  UPoly derivative() const;

  // Evaluates the polynomial at a square matrix (Horner).
  Matrix evaluate(const Matrix& a) const;

  friend bool operator==(const UPoly& a, const UPoly& b) noexcept { return a.c_ == b.c_; }

 private:
  void trim();
  PrimeField field_;
  std::vector<Scalar> c_;
};

UPoly gcd(UPoly a, UPoly b);
// Returns (g, s, t) with s a + t b = g monic.
struct ExtGcd {
  UPoly g, s, t;
};
ExtGcd ext_gcd(const UPoly& a, const UPoly& b);
UPoly powmod(UPoly base, std::uint64_t e, const UPoly& mod);

struct Factor {
  UPoly poly;        // monic irreducible
  int multiplicity;
};

// Complete factorization of a nonzero polynomial into monic irreducibles:
// square-free decomposition, distinct-degree and equal-degree splitting.
// Factors are sorted by (degree, coefficients).
std::vector<Factor> factor(const UPoly& f, std::mt19937_64& rng);

// Minimal polynomial of a square matrix via Krylov iteration on the
// matrix powers.
UPoly minimal_polynomial(const Matrix& a);

}  // namespace civar

#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "civar/field.hpp"
#include "civar/monomial.hpp"

namespace civar {

// Variable names, coefficient field and monomial order of a polynomial ring.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> vars, MonomialOrder order);
  PolyRing(PrimeField field, std::vector<std::string> vars);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }
  // Index of a variable name, or -1.
  int index_of(std::string_view name) const noexcept;

  bool same_as(const PolyRing& other) const noexcept {
    return this == &other ||
           (field_ == other.field_ && vars_ == other.vars_ && order_ == other.order_);
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::uint64_t p, std::vector<std::string> vars);

struct PolyTerm {
  Monomial mono;
  Scalar coeff;
  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

// Sparse polynomial: terms sorted strictly descending in the ring's order,
// no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  static Poly constant(RingPtr ring, Scalar c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly term(RingPtr ring, const Monomial& m, Scalar c);
  // Canonicalizes an arbitrary term list (sorts, merges, drops zeros).
  static Poly from_terms(RingPtr ring, std::vector<PolyTerm> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<PolyTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const PolyTerm& leading() const { return terms_.front(); }
  // Highest total degree of any term; -1 for zero.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  Scalar constant_term() const noexcept;
  bool is_constant() const noexcept { return terms_.empty() || terms_.front().mono.is_one(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly scaled(Scalar c) const;
  Poly times_term(const Monomial& m, Scalar c) const;
  Poly pow(unsigned e) const;
  // Makes the leading coefficient 1 (zero stays zero).
  Poly monic() const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void require_same_ring(const Poly& o) const;

  RingPtr ring_;
  std::vector<PolyTerm> terms_;
};

// Parses the polynomial grammar
//   poly := term (('+'|'-') term)*;  term := coeff? ('*'? var ('^' int)?)*
// with an optional leading sign. Throws InputError with the byte position.
Poly poly_parse(std::string_view text, const RingPtr& ring);

// Maps variable i of the source ring to variable var_map[i] of the target.
Poly embed(const Poly& p, const RingPtr& target, std::span<const std::size_t> var_map);

}  // namespace civar

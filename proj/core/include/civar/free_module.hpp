#pragma once

#include <optional>
#include <vector>

#include "civar/poly.hpp"

namespace civar {

// Graded free module over a polynomial ring; shifts[i] is the degree of the
// i-th basis vector.
struct FreeModule {
  RingPtr ring;
  std::vector<int> shifts;

  std::size_t rank() const noexcept { return shifts.size(); }
};

// Element of a free module: one polynomial per basis vector.
struct FreeElt {
  std::vector<Poly> components;

  static FreeElt zero(const FreeModule& m);
  static FreeElt unit(const FreeModule& m, std::size_t i);

  std::size_t rank() const noexcept { return components.size(); }
  bool is_zero() const noexcept;
  // Degree of the first nonzero term (component degree plus shift).
  std::optional<int> degree(const FreeModule& m) const;
  // Every nonzero component i is homogeneous of degree (degree - shifts[i]).
  bool is_homogeneous(const FreeModule& m) const;

  FreeElt operator+(const FreeElt& o) const;
  FreeElt operator-(const FreeElt& o) const;
  FreeElt times(const Poly& p) const;

  friend bool operator==(const FreeElt&, const FreeElt&) = default;
};

}  // namespace civar

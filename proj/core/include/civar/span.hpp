#pragma once

#include <map>
#include <vector>

#include "civar/groebner.hpp"

namespace civar {

// Row-echelon span of sparse vectors indexed by (component, monomial).
class SparseSpan {
 public:
  explicit SparseSpan(RingPtr ring);

  // Adds v if it is independent of the span; returns whether it was added.
  bool insert(detail::Vec v);
  bool contains(detail::Vec v) const;
  std::size_t dim() const noexcept { return pivots_.size(); }

 private:
  struct KeyLess {
    const MonomialOrder* order;
    bool operator()(const detail::Term& a, const detail::Term& b) const noexcept {
      return detail::compare(*order, a, b) > 0;
    }
  };
  detail::Vec reduce(detail::Vec v) const;

  RingPtr ring_;
  std::map<detail::Term, detail::Vec, KeyLess> pivots_;
};

}  // namespace civar

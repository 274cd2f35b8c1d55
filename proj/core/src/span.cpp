#include "civar/span.hpp"

namespace civar {

SparseSpan::SparseSpan(RingPtr ring)
    : ring_(std::move(ring)), pivots_(KeyLess{&ring_->order()}) {}

detail::Vec SparseSpan::reduce(detail::Vec v) const {
  const PrimeField& f = ring_->field();
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = pivots_.find(v[pos]);
    if (it == pivots_.end()) {
      ++pos;
      continue;
    }
    // Pivot rows are monic, so one subtraction clears position pos.
    v = detail::sub_mul(f, ring_->order(), v, 0, v[pos].coeff, Monomial{}, it->second, 0);
  }
  return v;
}

bool SparseSpan::insert(detail::Vec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const PrimeField& f = ring_->field();
  Scalar inv = f.inv(v.front().coeff);
  for (auto& t : v) t.coeff = f.mul(t.coeff, inv);
  detail::Term key = v.front();
  pivots_.emplace(key, std::move(v));
  return true;
}

bool SparseSpan::contains(detail::Vec v) const { return reduce(std::move(v)).empty(); }

}  // namespace civar

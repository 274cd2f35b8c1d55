#pragma once

#include "civar/resolve.hpp"

namespace corpus {

using civar::RingSpecPtr;

inline RingSpecPtr r1() { return civar::make_ring_spec(101, {"x", "y"}, {"x^2", "y^2"}); }
inline RingSpecPtr r2() { return civar::make_ring_spec(101, {"x"}, {"x^2"}); }
inline RingSpecPtr r3() {
  return civar::make_ring_spec(101, {"x", "y", "z"}, {"x^2", "y^2", "z^2"});
}
inline RingSpecPtr r4() { return civar::make_ring_spec(101, {"x", "y"}, {"x^2"}); }

inline civar::Poly poly(const RingSpecPtr& r, const char* s) { return civar::poly_parse(s, r->ring); }
inline civar::Poly hpoly(const RingSpecPtr& r, const char* s) { return civar::poly_parse(s, r->h); }

inline civar::ModulePresentation quotient(const RingSpecPtr& r, std::initializer_list<const char*> gens) {
  std::vector<civar::Poly> ps;
  for (const char* g : gens) ps.push_back(poly(r, g));
  return civar::cyclic_module(r, ps);
}

}  // namespace corpus

#include "civar/free_module.hpp"

#include "civar/errors.hpp"

namespace civar {

FreeElt FreeElt::zero(const FreeModule& m) {
  return FreeElt{std::vector<Poly>(m.rank(), Poly(m.ring))};
}

FreeElt FreeElt::unit(const FreeModule& m, std::size_t i) {
  FreeElt e = zero(m);
  e.components.at(i) = Poly::constant(m.ring, 1);
  return e;
}

bool FreeElt::is_zero() const noexcept {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<int> FreeElt::degree(const FreeModule& m) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (!components[i].is_zero()) return components[i].leading().mono.degree() + m.shifts.at(i);
  return std::nullopt;
}

bool FreeElt::is_homogeneous(const FreeModule& m) const {
  auto d = degree(m);
  if (!d) return true;
  for (std::size_t i = 0; i < components.size(); ++i)
    for (const auto& t : components[i].terms())
      if (t.mono.degree() + m.shifts.at(i) != *d) return false;
  return true;
}

FreeElt FreeElt::operator+(const FreeElt& o) const {
  if (o.rank() != rank()) throw InternalError("free module rank mismatch");
  FreeElt r = *this;
  for (std::size_t i = 0; i < rank(); ++i) r.components[i] += o.components[i];
  return r;
}

FreeElt FreeElt::operator-(const FreeElt& o) const {
  if (o.rank() != rank()) throw InternalError("free module rank mismatch");
  FreeElt r = *this;
  for (std::size_t i = 0; i < rank(); ++i) r.components[i] -= o.components[i];
  return r;
}

FreeElt FreeElt::times(const Poly& p) const {
  FreeElt r = *this;
  for (auto& c : r.components) c = c * p;
  return r;
}

}  // namespace civar

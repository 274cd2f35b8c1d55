#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "civar/free_module.hpp"
#include "civar/poly.hpp"

namespace civar {

struct GbOptions {
  std::size_t max_pairs = 50000;  // S-pairs (and inputs) processed
  int max_degree = 40;            // monomial degree of any processed lcm
  bool track_cofactors = false;
};

namespace detail {

// Term of a module element; lower component index ranks higher
// (position over term), ties broken by the ring's monomial order.
struct Term {
  Monomial mono;
  std::uint32_t comp;
  Scalar coeff;
};
using Vec = std::vector<Term>;

int compare(const MonomialOrder& order, const Term& a, const Term& b) noexcept;
// a[a0..] - c * m * b[b0..]
Vec sub_mul(const PrimeField& field, const MonomialOrder& order, const Vec& a, std::size_t a0,
            Scalar c, const Monomial& m, const Vec& b, std::size_t b0);
Vec to_vec(const FreeElt& e);
FreeElt to_elt(const Vec& v, const FreeModule& m);

}  // namespace detail

// Reduced Groebner basis of a submodule of a graded free module, elements
// monic and sorted ascending by leading term.
class GroebnerBasis {
 public:
  struct Reduction {
    FreeElt remainder;
    std::vector<Poly> cofactors;  // one per basis element
  };

  const FreeModule& module() const noexcept { return module_; }
  std::size_t size() const noexcept { return elems_.size(); }
  const std::vector<FreeElt>& elements() const noexcept { return elements_; }
  // Number of generators the basis was computed from (including adjoined
  // quotient relations).
  std::size_t generator_count() const noexcept { return ngens_; }
  bool has_cofactors() const noexcept { return !reps_.empty() || elems_.empty(); }
  // cofactors()[k][i] is the coefficient of generator i in element k.
  const std::vector<std::vector<Poly>>& cofactors() const noexcept { return cofactors_; }

  // v = remainder + sum cofactors[k] * element k; no remainder term is
  // divisible by a leading term. Reducers are chosen first-in-basis-order.
  Reduction normal_form(const FreeElt& v) const;
  FreeElt reduce(const FreeElt& v) const;
  bool contains(const FreeElt& v) const { return reduce(v).is_zero(); }
  // True if some element is a constant times a basis vector of rank-1 module.
  bool is_unit() const noexcept;

  struct LeadingTerm {
    std::size_t comp;
    Monomial mono;
  };
  std::vector<LeadingTerm> leading_terms() const;

  // Engine entry point; check_homogeneous=false admits inhomogeneous input
  // (used internally for elimination and the Rabinowitsch trick).
  static GroebnerBasis compute(const FreeModule& module, std::vector<FreeElt> gens,
                               const GbOptions& options, bool check_homogeneous = true);

  // Internal form used by the ideal and module routines.
  const std::vector<detail::Vec>& raw() const noexcept { return elems_; }
  detail::Vec reduce_raw(detail::Vec v) const;

 private:
  void finish();

  FreeModule module_;
  std::size_t ngens_ = 0;
  std::vector<detail::Vec> elems_;
  std::vector<detail::Vec> reps_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::vector<FreeElt> elements_;
  std::vector<std::vector<Poly>> cofactors_;
};

// Groebner basis of the submodule generated by gens. With quotient relations
// f_1..f_c the products f_j e_i are adjoined after the inputs (component
// major), so the basis describes the submodule over P/(f). Throws InputError
// on an inhomogeneous generator and ResourceError when a budget is exceeded.
GroebnerBasis groebner_basis(const FreeModule& module, const std::vector<FreeElt>& gens,
                             const GbOptions& options = {},
                             std::span<const Poly> quotient_relations = {});

// Ideal convenience wrappers (rank-one free module with shift 0).
FreeModule ideal_module(const RingPtr& ring);
GroebnerBasis ideal_basis(const RingPtr& ring, const std::vector<Poly>& gens,
                          const GbOptions& options = {});
Poly reduce_poly(const GroebnerBasis& gb, const Poly& p);

// Generators of the syzygy module of gens, living in the free module of
// rank gens.size() whose shifts are the generator degrees. Over the quotient
// the syzygies are computed modulo f and reduced to normal form.
std::vector<FreeElt> syzygies(const FreeModule& module, const std::vector<FreeElt>& gens,
                              std::span<const Poly> quotient_relations = {},
                              const GbOptions& options = {});
// Same, with the shifts of the syzygy frame given explicitly (needed when a
// generator is zero and so has no degree of its own).
std::vector<FreeElt> syzygies(const FreeModule& module, const std::vector<FreeElt>& gens,
                              const std::vector<int>& frame_shifts,
                              std::span<const Poly> quotient_relations,
                              const GbOptions& options = {});
FreeModule syzygy_module_frame(const FreeModule& module, const std::vector<FreeElt>& gens);

// Krull dimension of ring/(gens); -1 for the unit ideal.
int ideal_dimension(const RingPtr& ring, const std::vector<Poly>& gens,
                    const GbOptions& options = {});
bool ideal_membership(const Poly& g, const std::vector<Poly>& gens, const GbOptions& options = {});
// g in sqrt(gens), decided by 1 in (gens, 1 - T g) with one extra variable T.
bool radical_membership(const Poly& g, const std::vector<Poly>& gens,
                        const GbOptions& options = {});

enum class IdealOp { sum, product, intersection };
std::vector<Poly> ideal_ops(const RingPtr& ring, const std::vector<Poly>& a,
                            const std::vector<Poly>& b, IdealOp op,
                            const GbOptions& options = {});

}  // namespace civar

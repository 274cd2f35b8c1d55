#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "civar/groebner.hpp"
#include "civar/matrix.hpp"

namespace civar {

// P/(f_1..f_c) with f a homogeneous regular sequence, plus the operator ring
// H = k[chi1..chic].
struct RingSpec {
  RingPtr ring;              // ambient P
  std::vector<Poly> ci;      // f_1..f_c
  RingPtr h;                 // k[chi1..chic]
  int dim = 0;               // n - c
  GroebnerBasis ci_basis;    // reduced basis of (f) with cofactors
  GbOptions options;         // budgets used by everything built on this ring

  std::size_t codim() const noexcept { return ci.size(); }
  std::size_t nvars() const noexcept { return ring->nvars(); }
  Poly reduce(const Poly& p) const { return reduce_poly(ci_basis, p); }
};

using RingSpecPtr = std::shared_ptr<const RingSpec>;

// Validates: every f_j homogeneous of degree >= 2, dim P/(f) = n - c.
RingSpecPtr make_ring_spec(RingPtr ring, std::vector<Poly> ci, const GbOptions& options = {});
RingSpecPtr make_ring_spec(std::uint64_t p, std::vector<std::string> vars,
                           const std::vector<std::string>& ci, const GbOptions& options = {});

// Dense matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix from_columns(RingPtr ring, std::size_t rows, const std::vector<FreeElt>& cols);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  FreeElt column(std::size_t j) const;
  FreeElt row(std::size_t i) const;
  std::vector<FreeElt> columns() const;
  PolyMatrix transpose() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix scaled(const Poly& p) const;
  bool is_zero() const noexcept;
  // Constant terms of the entries.
  Matrix constant_part() const;
  PolyMatrix reduced(const RingSpec& spec) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> data_;
};

// Cokernel of relations: Q^{gens} <- Q^{relations}. Column j is homogeneous of
// degree relation_degrees[j] with respect to gen_degrees.
struct ModulePresentation {
  RingSpecPtr ring;
  std::vector<int> gen_degrees;
  PolyMatrix relations;  // rows = generators, columns = relations
  std::vector<int> relation_degrees;

  std::size_t num_gens() const noexcept { return gen_degrees.size(); }
  std::size_t num_relations() const noexcept { return relations.cols(); }
  FreeModule generator_module() const { return FreeModule{ring->ring, gen_degrees}; }
};

// Reduces entries modulo (f), drops zero columns and checks homogeneity
// (InputError "inhomogeneous" naming the column).
ModulePresentation present_module(const RingSpecPtr& ring, std::vector<int> gen_degrees,
                                  PolyMatrix relations);
// Rows of polynomial text, one row per generator.
ModulePresentation present_module(const RingSpecPtr& ring, std::vector<int> gen_degrees,
                                  const std::vector<std::vector<std::string>>& rows);

// Module file: "gens: [d1, ...]" and "relations: [[p11, ...], [p21, ...]]",
// one inner list per generator; entries may be quoted; '#' starts a comment.
ModulePresentation parse_module(std::string_view text, const RingSpecPtr& ring);
std::string format_module(const ModulePresentation& m);

ModulePresentation free_module(const RingSpecPtr& ring, std::vector<int> degrees);
// Q / (gens) on one generator of degree 0.
ModulePresentation cyclic_module(const RingSpecPtr& ring, const std::vector<Poly>& ideal);
ModulePresentation residue_field(const RingSpecPtr& ring);
ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b);
ModulePresentation shifted(const ModulePresentation& m, int shift);

// Removes generators eliminated by unit entries, then keeps a minimal set of
// relations.
ModulePresentation minimal_presentation(const ModulePresentation& m);

// Minimal generators, in input order within each degree, of the submodule
// of `module` spanned by elts (entries taken modulo (f)).
std::vector<FreeElt> minimal_generators(const RingSpec& spec, const FreeModule& module,
                                        std::vector<FreeElt> elts);

// Minimal graded free resolution over Q; extendable in place.
class Resolution {
 public:
  explicit Resolution(const ModulePresentation& m);

  const RingSpecPtr& ring() const noexcept { return ring_; }
  // Number of computed differentials.
  int length() const noexcept { return static_cast<int>(diffs_.size()); }
  void extend_to(int steps);

  // Degrees of the basis of F_i, 0 <= i <= length().
  const std::vector<int>& degrees(int i) const { return degrees_.at(static_cast<std::size_t>(i)); }
  FreeModule free_module(int i) const { return FreeModule{ring_->ring, degrees(i)}; }
  std::size_t rank(int i) const { return degrees(i).size(); }
  // d_i : F_i -> F_{i-1}, 1 <= i <= length(); entries are normal forms mod (f),
  // which double as the lift to P.
  const PolyMatrix& d(int i) const { return diffs_.at(static_cast<std::size_t>(i - 1)); }
  std::vector<std::size_t> betti() const;
  // The minimal presentation the resolution starts from.
  ModulePresentation presentation() const;

 private:
  RingSpecPtr ring_;
  std::vector<std::vector<int>> degrees_;
  std::vector<PolyMatrix> diffs_;
};

Resolution resolve_min(const ModulePresentation& m, int steps);

// Omega^n(M): generators F_n, relations d_{n+1}; n = 0 returns M.
ModulePresentation syzygy_module(const ModulePresentation& m, int n);
ModulePresentation syzygy_module(const Resolution& res, int n);

// Ext^i_Q(M, Q) = 0 for 1 <= i <= dim A.
bool is_mcm(const ModulePresentation& m);
bool is_mcm(const Resolution& res);

// Finite-dimensional expansion of a finite-length module.
struct VectorModel {
  struct BasisElt {
    std::size_t gen;
    Monomial mono;
  };
  RingSpecPtr ring;
  std::vector<int> gen_degrees;
  std::vector<BasisElt> basis;
  std::vector<int> degrees;       // internal degree of each basis element
  std::vector<Matrix> actions;    // one per ring variable, acting on columns

  std::size_t dim() const noexcept { return basis.size(); }
};

// InputError "infinite_length" unless every variable has a pure power among
// the leading terms in every component.
VectorModel vector_model(const ModulePresentation& m);

// Minimal presentation of the subspace spanned by the given vectors, which
// must be closed under the actions and spanned by homogeneous vectors.
ModulePresentation present_subspace(const VectorModel& model, const std::vector<FpVector>& span);

}  // namespace civar

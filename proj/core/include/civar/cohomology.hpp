#pragma once

#include <string>
#include <vector>

#include "civar/resolve.hpp"

namespace civar {

// t_j^{(i)} : F_{i+2} -> F_i with d_{i+1} d_{i+2} = sum_j f_j t_j^{(i)} over P.
struct EisenbudOperators {
  std::vector<std::vector<PolyMatrix>> lifted;   // [i][j], exact over P
  std::vector<std::vector<PolyMatrix>> reduced;  // [i][j], normal forms mod (f)

  // Number of homological positions i with operators.
  int levels() const noexcept { return static_cast<int>(lifted.size()); }
  const PolyMatrix& t(int i, std::size_t j) const { return reduced.at(static_cast<std::size_t>(i)).at(j); }
};

// InternalError if some entry of d_{i+1} d_{i+2} is not in (f).
EisenbudOperators eisenbud_operators(const Resolution& res);

// E(M,k) in components E^0..E^N with the chi actions E^i -> E^{i+2}.
struct ExtKModule {
  PrimeField field;
  std::size_t c = 0;
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> actions;  // [i][j], i + 2 < dims.size()

  int top() const noexcept { return static_cast<int>(dims.size()) - 1; }
  bool is_zero() const noexcept;
  ExtKModule truncated(int n) const;
  // chi^a : E^i -> E^{i + 2 deg a}, factors applied in ascending index.
  Matrix monomial_action(int i, const Monomial& a) const;
};

ExtKModule ext_k_module(const Resolution& res, const EisenbudOperators& ops);

// Homogeneous ideal of H = k[chi1..chic], meaningful up to radical.
class VarietyIdeal {
 public:
  VarietyIdeal() = default;
  // InputError "inhomogeneous" for an inhomogeneous generator.
  VarietyIdeal(RingPtr h, std::vector<Poly> gens, bool unit = false, const GbOptions& options = {});
  static VarietyIdeal full_space(RingPtr h);
  static VarietyIdeal trivial(RingPtr h, bool unit = false);
  static VarietyIdeal parse(RingPtr h, const std::vector<std::string>& gens,
                            const GbOptions& options = {});

  const RingPtr& ring() const noexcept { return h_; }
  const std::vector<Poly>& gens() const noexcept { return gens_; }
  // Reduced Groebner basis.
  const std::vector<Poly>& basis() const noexcept { return basis_; }
  int dimension() const noexcept { return dim_; }
  // Annihilator of a zero module: the unit ideal, recorded as the trivial
  // variety with this flag set.
  bool unit() const noexcept { return unit_; }
  bool is_trivial() const;
  std::vector<std::string> basis_strings() const;
  const GbOptions& options() const noexcept { return options_; }

 private:
  RingPtr h_;
  std::vector<Poly> gens_;
  std::vector<Poly> basis_;
  int dim_ = 0;
  bool unit_ = false;
  GbOptions options_;
};

// V(outer) contains V(inner): gens(outer) in sqrt(inner).
bool variety_contains(const VarietyIdeal& outer, const VarietyIdeal& inner);
bool variety_equal(const VarietyIdeal& a, const VarietyIdeal& b);
VarietyIdeal variety_intersect(const VarietyIdeal& a, const VarietyIdeal& b);
VarietyIdeal variety_union(const VarietyIdeal& a, const VarietyIdeal& b);

// Generated by all homogeneous h of degree d <= max_degree whose action
// E^i -> E^{i+2d} vanishes for every 0 <= i <= N - 2d.
VarietyIdeal annihilator_window(const ExtKModule& e, int max_degree, const RingPtr& h,
                                const GbOptions& options = {});

// Polynomial growth rate of the Betti numbers plus one, fitted on the last
// half of the sequence (each parity separately); 0 if the tail vanishes.
int complexity(const std::vector<std::size_t>& betti);
int complexity(const ModulePresentation& m, int steps);

struct VarietyOptions {
  int steps = 0;        // 0: max(8, 2c + 4)
  int degree_cap = 0;   // 0: floor(N / 2)
  int max_steps = 0;    // 0: steps + 8
};

struct VarietyResult {
  VarietyIdeal variety;   // a_{N+2}
  VarietyIdeal previous;  // a_N
  int steps = 0;          // accepted N
  int complexity = 0;
  std::vector<std::size_t> betti;  // b_0..b_{N+2}
};

int default_steps(std::size_t codim);

// ResourceError "not_stabilized" (message names both candidates) when no N
// within max_steps passes the guard.
VarietyResult support_variety(const ModulePresentation& m, const VarietyOptions& options = {});
VarietyResult support_variety(Resolution& res, const VarietyOptions& options = {});

}  // namespace civar

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "civar/cohomology.hpp"

namespace civar {

// Element of Ext^n(M, M) given by the chain-map component T : F_n -> F_0.
struct ExtElement {
  int degree = 0;           // cohomological degree n = 2d
  int internal_degree = 0;  // T lowers internal degree by this much
  PolyMatrix t;             // rows F_0, columns F_n
  Poly eta;                 // originating element of H
};

// phi_M(h) from the operators of res (extended as needed). InputError for
// zero, constant or inhomogeneous h and for mixed internal degrees;
// InternalError if the cocycle condition fails.
ExtElement phi(Resolution& res, const Poly& h);

// K_theta = coker [[d_n, 0], [-T, d_1]] : F_n + F_1 -> F_{n-1} + F_0, with
// F_n and F_{n-1} shifted down by the internal degree of theta; minimalized.
ModulePresentation pushout_cut(const Resolution& res, const ExtElement& theta);

// Convenience: K_{phi(eta)} for M.
ModulePresentation cut_variety(const ModulePresentation& m, const Poly& eta);

struct RealizeResult {
  ModulePresentation module;
  VarietyIdeal target;                   // (eta_1..eta_t)
  std::optional<VarietyResult> variety;  // set when verified
};

// M_0 = Omega^{dim A}(k), M_i = K_{phi(eta_i)}(M_{i-1}). With verify set,
// VerificationError unless V(M_t) = V_H(eta_1..eta_t).
RealizeResult realize(const RingSpecPtr& ring, const std::vector<Poly>& etas, bool verify = false,
                      const VarietyOptions& options = {});

struct DecomposeOptions {
  std::uint64_t seed = 0xC15;
  int attempts = 64;
};

struct Summand {
  ModulePresentation module;
  std::size_t dim = 0;
  // Attempts ran out while some sample had an irreducible factor of degree
  // above one, so a split over an extension field was not ruled out.
  bool possibly_decomposable = false;
};

// Idempotent splitting of the degree-0 endomorphism algebra of the vector
// model. InputError "infinite_length" for modules of infinite length.
std::vector<Summand> decompose(const ModulePresentation& m, const DecomposeOptions& options = {});

// Degree-0 endomorphisms of a vector model (commuting with every action).
std::vector<Matrix> endomorphism_basis(const VectorModel& model);

struct CarlsonSummand {
  Summand summand;
  VarietyIdeal variety;
  int group = 0;  // 1 or 2
};

struct CarlsonReport {
  VarietyResult module_variety;
  std::vector<CarlsonSummand> summands;
  ModulePresentation c1, c2;
  VarietyIdeal v1, v2;  // varieties of c1, c2
  bool pass = false;
};

// Premise failures raise InputError "premise"; an unassignable summand or a
// group whose variety differs from its side raises VerificationError.
CarlsonReport check_carlson(const ModulePresentation& m, const VarietyIdeal& a1,
                            const VarietyIdeal& a2, const VarietyOptions& variety_options = {},
                            const DecomposeOptions& options = {});

}  // namespace civar

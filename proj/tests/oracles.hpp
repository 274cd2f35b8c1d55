#pragma once

// Test-side oracles that avoid the Groebner engine entirely. Modules over
// Q = k[x_1..x_n]/(x_1^2..x_n^2) are handled as finite-dimensional vector
// spaces with explicit variable actions; resolutions are built by kernels.

#include <cstddef>
#include <vector>

#include "civar/matrix.hpp"

namespace oracle {

using civar::FpVector;
using civar::Matrix;
using civar::PrimeField;

struct FinModule {
  std::size_t dim = 0;
  std::vector<Matrix> actions;  // acting on columns
};

// Q^rank, basis e_S (S a subset bitmask) per copy.
inline FinModule free_squares(const PrimeField& f, std::size_t nvars, std::size_t rank) {
  const std::size_t q = std::size_t{1} << nvars;
  FinModule m;
  m.dim = q * rank;
  for (std::size_t v = 0; v < nvars; ++v) {
    Matrix a(f, m.dim, m.dim);
    for (std::size_t r = 0; r < rank; ++r)
      for (std::size_t s = 0; s < q; ++s)
        if (!(s & (std::size_t{1} << v))) a(r * q + (s | (std::size_t{1} << v)), r * q + s) = 1;
    m.actions.push_back(std::move(a));
  }
  return m;
}

// Q / (x_v : v in vars) as a quotient by the listed variables.
inline FinModule cyclic_squares(const PrimeField& f, std::size_t nvars,
                                const std::vector<std::size_t>& killed) {
  std::size_t mask = 0;
  for (auto v : killed) mask |= std::size_t{1} << v;
  std::vector<std::size_t> subsets;
  for (std::size_t s = 0; s < (std::size_t{1} << nvars); ++s)
    if (!(s & mask)) subsets.push_back(s);
  FinModule m;
  m.dim = subsets.size();
  for (std::size_t v = 0; v < nvars; ++v) {
    Matrix a(f, m.dim, m.dim);
    if (!(mask & (std::size_t{1} << v)))
      for (std::size_t i = 0; i < subsets.size(); ++i)
        if (!(subsets[i] & (std::size_t{1} << v)))
          for (std::size_t j = 0; j < subsets.size(); ++j)
            if (subsets[j] == (subsets[i] | (std::size_t{1} << v))) a(j, i) = 1;
    m.actions.push_back(std::move(a));
  }
  return m;
}

inline std::size_t rank_of(const std::vector<FpVector>& vs, const PrimeField& f, std::size_t dim) {
  civar::EchelonBasis e(f, dim);
  for (const auto& v : vs) e.insert(v);
  return e.size();
}

// Betti numbers b_0..b_steps of a module over the squares algebra.
inline std::vector<std::size_t> betti_squares(const PrimeField& f, std::size_t nvars,
                                              FinModule m, int steps) {
  std::vector<std::size_t> betti;
  for (int i = 0; i <= steps; ++i) {
    // m V and a complement of it spanned by standard basis vectors.
    civar::EchelonBasis span(f, m.dim);
    for (const auto& a : m.actions)
      for (std::size_t k = 0; k < m.dim; ++k) span.insert(a.column(k));
    std::vector<FpVector> gens;
    for (std::size_t k = 0; k < m.dim; ++k) {
      FpVector e(m.dim, 0);
      e[k] = 1;
      if (span.insert(e)) gens.push_back(e);
    }
    betti.push_back(gens.size());
    if (gens.empty()) {
      for (int j = i + 1; j <= steps; ++j) betti.push_back(0);
      break;
    }
    // Cover Q^b -> V and its kernel with the restricted actions.
    FinModule cover = free_squares(f, nvars, gens.size());
    const std::size_t q = std::size_t{1} << nvars;
    Matrix phi(f, m.dim, cover.dim);
    for (std::size_t r = 0; r < gens.size(); ++r)
      for (std::size_t s = 0; s < q; ++s) {
        FpVector v = gens[r];
        for (std::size_t var = 0; var < nvars; ++var)
          if (s & (std::size_t{1} << var)) v = m.actions[var].apply(v);
        for (std::size_t k = 0; k < m.dim; ++k) phi(k, r * q + s) = v[k];
      }
    std::vector<FpVector> kernel = civar::nullspace(phi);
    FinModule next;
    next.dim = kernel.size();
    Matrix basis(f, cover.dim, kernel.size());
    for (std::size_t j = 0; j < kernel.size(); ++j)
      for (std::size_t k = 0; k < cover.dim; ++k) basis(k, j) = kernel[j][k];
    for (const auto& a : cover.actions) {
      Matrix r(f, next.dim, next.dim);
      for (std::size_t j = 0; j < kernel.size(); ++j) {
        auto sol = civar::solve_linear(basis, a.apply(kernel[j]));
        for (std::size_t k = 0; k < next.dim; ++k) r(k, j) = sol.particular[k];
      }
      next.actions.push_back(std::move(r));
    }
    m = std::move(next);
  }
  return betti;
}

}  // namespace oracle

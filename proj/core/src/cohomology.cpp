#include "civar/cohomology.hpp"

#include <algorithm>
#include <sstream>

#include "civar/errors.hpp"

namespace civar {

EisenbudOperators eisenbud_operators(const Resolution& res) {
  const RingSpec& spec = *res.ring();
  const std::size_t c = spec.codim();
  const GroebnerBasis& gb = spec.ci_basis;
  EisenbudOperators ops;
  for (int i = 0; i + 2 <= res.length(); ++i) {
    PolyMatrix prod = res.d(i + 1) * res.d(i + 2);
    std::vector<PolyMatrix> lifted(c, PolyMatrix(spec.ring, prod.rows(), prod.cols()));
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t s = 0; s < prod.cols(); ++s) {
        if (prod(r, s).is_zero()) continue;
        auto red = gb.normal_form(FreeElt{{prod(r, s)}});
        if (!red.remainder.is_zero())
          throw InternalError("d_" + std::to_string(i + 1) + " d_" + std::to_string(i + 2) +
                              " has an entry outside (f)");
        for (std::size_t k = 0; k < red.cofactors.size(); ++k) {
          if (red.cofactors[k].is_zero()) continue;
          for (std::size_t j = 0; j < c; ++j) {
            const Poly& conv = gb.cofactors()[k][j];
            if (!conv.is_zero()) lifted[j](r, s) += red.cofactors[k] * conv;
          }
        }
      }
    std::vector<PolyMatrix> reduced;
    for (const auto& t : lifted) reduced.push_back(t.reduced(spec));
    ops.lifted.push_back(std::move(lifted));
    ops.reduced.push_back(std::move(reduced));
  }
  return ops;
}

// ---------------------------------------------------------------------------
// E(M,k)

bool ExtKModule::is_zero() const noexcept {
  for (auto d : dims)
    if (d) return false;
  return true;
}

ExtKModule ExtKModule::truncated(int n) const {
  ExtKModule e;
  e.field = field;
  e.c = c;
  const std::size_t keep = static_cast<std::size_t>(std::min(n, top()) + 1);
  e.dims.assign(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(keep));
  for (std::size_t i = 0; i + 2 < keep && i < actions.size(); ++i) e.actions.push_back(actions[i]);
  return e;
}

Matrix ExtKModule::monomial_action(int i, const Monomial& a) const {
  if (i < 0 || i + 2 * a.degree() > top())
    throw InputError("window", "monomial action leaves the computed range");
  Matrix m = Matrix::identity(field, dims.at(static_cast<std::size_t>(i)));
  int pos = i;
  for (std::size_t j = 0; j < c; ++j)
    for (int e = 0; e < a[j]; ++e) {
      m = actions.at(static_cast<std::size_t>(pos)).at(j) * m;
      pos += 2;
    }
  return m;
}

ExtKModule ext_k_module(const Resolution& res, const EisenbudOperators& ops) {
  const RingSpec& spec = *res.ring();
  ExtKModule e;
  e.field = spec.ring->field();
  e.c = spec.codim();
  for (int i = 0; i <= res.length(); ++i) e.dims.push_back(res.rank(i));
  for (int i = 0; i < ops.levels(); ++i) {
    std::vector<Matrix> acts;
    for (std::size_t j = 0; j < e.c; ++j) acts.push_back(ops.t(i, j).constant_part().transpose());
    e.actions.push_back(std::move(acts));
  }
  return e;
}

// ---------------------------------------------------------------------------
// Variety ideals

VarietyIdeal::VarietyIdeal(RingPtr h, std::vector<Poly> gens, bool unit, const GbOptions& options)
    : h_(std::move(h)), unit_(unit), options_(options) {
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].ring() && !gens[k].ring()->same_as(*h_))
      throw InputError("ring_mismatch", "variety generator over another ring");
    if (!gens[k].is_homogeneous())
      throw InputError("inhomogeneous", "variety generator " + std::to_string(k + 1) +
                                            " is not homogeneous");
    if (!gens[k].is_zero()) gens_.push_back(gens[k]);
  }
  GroebnerBasis gb = ideal_basis(h_, gens_, options_);
  for (const auto& e : gb.elements()) basis_.push_back(e.components[0]);
  dim_ = ideal_dimension(h_, gens_, options_);
}

VarietyIdeal VarietyIdeal::full_space(RingPtr h) { return VarietyIdeal(std::move(h), {}); }

VarietyIdeal VarietyIdeal::trivial(RingPtr h, bool unit) {
  std::vector<Poly> chi;
  for (std::size_t j = 0; j < h->nvars(); ++j) chi.push_back(Poly::variable(h, j));
  return VarietyIdeal(std::move(h), std::move(chi), unit);
}

VarietyIdeal VarietyIdeal::parse(RingPtr h, const std::vector<std::string>& gens,
                                 const GbOptions& options) {
  std::vector<Poly> ps;
  for (const auto& g : gens) ps.push_back(poly_parse(g, h));
  return VarietyIdeal(std::move(h), std::move(ps), false, options);
}

bool VarietyIdeal::is_trivial() const {
  for (std::size_t j = 0; j < h_->nvars(); ++j)
    if (!radical_membership(Poly::variable(h_, j), gens_, options_)) return false;
  return true;
}

std::vector<std::string> VarietyIdeal::basis_strings() const {
  std::vector<std::string> out;
  for (const auto& b : basis_) out.push_back(b.to_string());
  if (out.empty()) out.push_back("0");
  return out;
}

namespace {

void require_same_h(const VarietyIdeal& a, const VarietyIdeal& b) {
  if (!a.ring()->same_as(*b.ring()))
    throw InputError("codim_mismatch", "varieties live in different operator rings");
}

}  // namespace

bool variety_contains(const VarietyIdeal& outer, const VarietyIdeal& inner) {
  require_same_h(outer, inner);
  for (const auto& g : outer.gens())
    if (!radical_membership(g, inner.gens(), inner.options())) return false;
  return true;
}

bool variety_equal(const VarietyIdeal& a, const VarietyIdeal& b) {
  return variety_contains(a, b) && variety_contains(b, a);
}

VarietyIdeal variety_intersect(const VarietyIdeal& a, const VarietyIdeal& b) {
  require_same_h(a, b);
  return VarietyIdeal(a.ring(), ideal_ops(a.ring(), a.gens(), b.gens(), IdealOp::sum, a.options()),
                      a.unit() || b.unit(), a.options());
}

VarietyIdeal variety_union(const VarietyIdeal& a, const VarietyIdeal& b) {
  require_same_h(a, b);
  return VarietyIdeal(a.ring(),
                      ideal_ops(a.ring(), a.gens(), b.gens(), IdealOp::product, a.options()),
                      a.unit() && b.unit(), a.options());
}

VarietyIdeal annihilator_window(const ExtKModule& e, int max_degree, const RingPtr& h,
                                const GbOptions& options) {
  const int n = e.top();
  if (max_degree < 0 || 2 * max_degree > n)
    throw InputError("window", "operator degree cap " + std::to_string(max_degree) +
                                   " exceeds half of the " + std::to_string(n) +
                                   " computed components");
  if (e.is_zero()) return VarietyIdeal::trivial(h, true);
  std::vector<Poly> gens;
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Monomial> monos = monomials_of_degree(e.c, d);
    std::vector<std::vector<Scalar>> rows;  // one equation per matrix entry
    std::vector<Matrix> blocks(monos.size());
    for (int i = 0; i + 2 * d <= n; ++i) {
      const std::size_t r = e.dims[static_cast<std::size_t>(i + 2 * d)];
      const std::size_t s = e.dims[static_cast<std::size_t>(i)];
      if (!r || !s) continue;
      for (std::size_t a = 0; a < monos.size(); ++a) blocks[a] = e.monomial_action(i, monos[a]);
      for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = 0; q < s; ++q) {
          std::vector<Scalar> row(monos.size());
          bool any = false;
          for (std::size_t a = 0; a < monos.size(); ++a) {
            row[a] = blocks[a](p, q);
            any = any || row[a];
          }
          if (any) rows.push_back(std::move(row));
        }
    }
    Matrix sys(e.field, rows.size(), monos.size());
    for (std::size_t p = 0; p < rows.size(); ++p)
      for (std::size_t a = 0; a < monos.size(); ++a) sys(p, a) = rows[p][a];
    for (const auto& v : nullspace(sys)) {
      std::vector<PolyTerm> terms;
      for (std::size_t a = 0; a < monos.size(); ++a)
        if (v[a]) terms.push_back({monos[a], v[a]});
      gens.push_back(Poly::from_terms(h, std::move(terms)).monic());
    }
  }
  return VarietyIdeal(h, std::move(gens), false, options);
}

// ---------------------------------------------------------------------------
// Complexity and the support variety

int complexity(const std::vector<std::size_t>& betti) {
  if (betti.empty()) return 0;
  const std::size_t start = betti.size() / 2;
  int best = -1;
  for (std::size_t parity = 0; parity < 2; ++parity) {
    std::vector<long long> seq;
    for (std::size_t i = start; i < betti.size(); ++i)
      if (i % 2 == parity) seq.push_back(static_cast<long long>(betti[i]));
    if (seq.empty() || std::all_of(seq.begin(), seq.end(), [](long long v) { return v == 0; }))
      continue;
    int degree = 0;
    while (!std::all_of(seq.begin(), seq.end(), [&](long long v) { return v == seq.front(); })) {
      std::vector<long long> diff;
      for (std::size_t k = 1; k < seq.size(); ++k) diff.push_back(seq[k] - seq[k - 1]);
      seq = std::move(diff);
      ++degree;
    }
    best = std::max(best, degree);
  }
  return best + 1;
}

int complexity(const ModulePresentation& m, int steps) {
  return complexity(resolve_min(m, steps).betti());
}

int default_steps(std::size_t codim) { return std::max(8, 2 * static_cast<int>(codim) + 4); }

VarietyResult support_variety(Resolution& res, const VarietyOptions& options) {
  const RingSpec& spec = *res.ring();
  const int first = options.steps > 0 ? options.steps : default_steps(spec.codim());
  const int last = options.max_steps > 0 ? options.max_steps : first + 8;
  auto cap = [&](int n) { return options.degree_cap > 0 ? std::min(options.degree_cap, n / 2) : n / 2; };
  std::string history;
  for (int n = first; n <= last; n += 2) {
    res.extend_to(n + 2);
    EisenbudOperators ops = eisenbud_operators(res);
    ExtKModule e = ext_k_module(res, ops);
    VarietyResult out;
    out.previous = annihilator_window(e.truncated(n), cap(n), spec.h, spec.options);
    out.variety = annihilator_window(e, cap(n + 2), spec.h, spec.options);
    out.betti = res.betti();
    out.betti.resize(static_cast<std::size_t>(n + 3));
    out.complexity = complexity(out.betti);
    out.steps = n;
    const bool same = out.previous.dimension() == out.variety.dimension() &&
                      variety_equal(out.previous, out.variety);
    if (same && out.complexity == out.variety.dimension()) return out;
    std::ostringstream msg;
    msg << (history.empty() ? "" : "; ") << "N=" << n << ": a_N = (";
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k];
      return s;
    };
    msg << join(out.previous.basis_strings()) << "), a_N+2 = ("
        << join(out.variety.basis_strings()) << "), complexity " << out.complexity;
    history += msg.str();
  }
  throw ResourceError("not_stabilized", "support variety not stabilized within budget: " + history);
}

VarietyResult support_variety(const ModulePresentation& m, const VarietyOptions& options) {
  Resolution res(m);
  return support_variety(res, options);
}

}  // namespace civar

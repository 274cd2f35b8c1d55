#include "civar/construct.hpp"

#include <deque>
#include <random>

#include "civar/errors.hpp"
#include "civar/univariate.hpp"

namespace civar {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k];
  return "(" + s + ")";
}

}  // namespace

ExtElement phi(Resolution& res, const Poly& h) {
  const RingSpec& spec = *res.ring();
  if (!h.ring() || !h.ring()->same_as(*spec.h))
    throw InputError("ring_mismatch", "operator polynomial is not in k[chi1..chic]");
  if (h.is_zero() || h.is_constant())
    throw InputError("constant_eta", "operator polynomial must be nonzero of positive degree");
  if (!h.is_homogeneous())
    throw InputError("inhomogeneous", "operator polynomial " + h.to_string() + " is not homogeneous");
  const int d = h.degree();
  const int n = 2 * d;
  std::optional<int> internal;
  for (const auto& term : h.terms()) {
    int e = 0;
    for (std::size_t j = 0; j < spec.codim(); ++j) e += term.mono[j] * spec.ci[j].degree();
    if (internal && *internal != e)
      throw InputError("degree_mismatch", "terms of " + h.to_string() +
                                              " have different internal degrees");
    internal = e;
  }
  res.extend_to(n + 1);
  EisenbudOperators ops = eisenbud_operators(res);
  PolyMatrix t(spec.ring, res.rank(0), res.rank(n));
  for (const auto& term : h.terms()) {
    PolyMatrix comp;
    int pos = 0;
    for (std::size_t j = 0; j < spec.codim(); ++j)
      for (int e = 0; e < term.mono[j]; ++e) {
        const PolyMatrix& op = ops.t(pos, j);
        comp = pos == 0 ? op : (comp * op).reduced(spec);
        pos += 2;
      }
    t = t + comp.scaled(Poly::constant(spec.ring, term.coeff));
  }
  t = t.reduced(spec);
  // Cocycle condition: T d_{n+1} lands in the image of d_1.
  GroebnerBasis image = groebner_basis(res.free_module(0), res.d(1).columns(), spec.options, spec.ci);
  PolyMatrix td = (t * res.d(n + 1)).reduced(spec);
  for (std::size_t j = 0; j < td.cols(); ++j)
    if (!image.contains(td.column(j)))
      throw InternalError("cocycle condition fails for " + h.to_string());
  ExtElement out;
  out.degree = n;
  out.internal_degree = *internal;
  out.t = std::move(t);
  out.eta = h;
  return out;
}

ModulePresentation pushout_cut(const Resolution& res, const ExtElement& theta) {
  const int n = theta.degree;
  if (n < 2 || res.length() < n) throw InputError("bad_steps", "resolution too short for the cut");
  if (theta.t.rows() != res.rank(0) || theta.t.cols() != res.rank(n))
    throw InputError("degree_mismatch", "Ext element does not match the resolution");
  const RingSpecPtr& spec = res.ring();
  const std::size_t top = res.rank(n - 1), bottom = res.rank(0);
  const std::size_t left = res.rank(n), right = res.rank(1);
  std::vector<int> gens;
  for (int d : res.degrees(n - 1)) gens.push_back(d - theta.internal_degree);
  for (int d : res.degrees(0)) gens.push_back(d);
  PolyMatrix m(spec->ring, top + bottom, left + right);
  const PolyMatrix& dn = res.d(n);
  const PolyMatrix& d1 = res.d(1);
  for (std::size_t i = 0; i < top; ++i)
    for (std::size_t j = 0; j < left; ++j) m(i, j) = dn(i, j);
  for (std::size_t i = 0; i < bottom; ++i) {
    for (std::size_t j = 0; j < left; ++j) m(top + i, j) = -theta.t(i, j);
    for (std::size_t j = 0; j < right; ++j) m(top + i, left + j) = d1(i, j);
  }
  ModulePresentation k;
  try {
    k = present_module(spec, std::move(gens), std::move(m));
  } catch (const InputError& e) {
    throw InputError("degree_mismatch", std::string("pushout is not homogeneous: ") + e.what());
  }
  return minimal_presentation(k);
}

ModulePresentation cut_variety(const ModulePresentation& m, const Poly& eta) {
  Resolution res(m);
  ExtElement theta = phi(res, eta);
  return pushout_cut(res, theta);
}

RealizeResult realize(const RingSpecPtr& ring, const std::vector<Poly>& etas, bool verify,
                      const VarietyOptions& options) {
  RealizeResult out;
  out.target = VarietyIdeal(ring->h, etas, false, ring->options);
  ModulePresentation m = syzygy_module(residue_field(ring), ring->dim);
  for (const auto& eta : etas) m = cut_variety(m, eta);
  out.module = m;
  if (verify) {
    out.variety = support_variety(m, options);
    if (!variety_equal(out.variety->variety, out.target))
      throw VerificationError("realize_mismatch",
                              "realized variety " + join(out.variety->variety.basis_strings()) +
                                  " differs from target " + join(out.target.basis_strings()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition

std::vector<Matrix> endomorphism_basis(const VectorModel& model) {
  const std::size_t dim = model.dim();
  const PrimeField& f = model.ring->ring->field();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::vector<std::vector<std::size_t>> index(dim, std::vector<std::size_t>(dim, SIZE_MAX));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (model.degrees[i] == model.degrees[j]) {
        index[i][j] = unknowns.size();
        unknowns.push_back({i, j});
      }
  // (X phi - phi X)_{pq} = sum_k X_pk phi_kq - phi_pk X_kq.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (const auto& x : model.actions)
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < dim; ++q) {
        std::vector<Scalar> row(unknowns.size(), 0);
        bool any = false;
        for (std::size_t k = 0; k < dim; ++k) {
          if (x(p, k) && index[k][q] != SIZE_MAX) {
            row[index[k][q]] = f.add(row[index[k][q]], x(p, k));
            any = true;
          }
          if (x(k, q) && index[p][k] != SIZE_MAX) {
            row[index[p][k]] = f.sub(row[index[p][k]], x(k, q));
            any = true;
          }
        }
        if (!any) continue;
        std::vector<std::pair<std::size_t, Scalar>> sparse;
        for (std::size_t u = 0; u < row.size(); ++u)
          if (row[u]) sparse.push_back({u, row[u]});
        if (!sparse.empty()) rows.push_back(std::move(sparse));
      }
  Matrix sys(f, rows.size(), unknowns.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [u, v] : rows[r]) sys(r, u) = v;
  std::vector<Matrix> out;
  for (const auto& v : nullspace(sys)) {
    Matrix m(f, dim, dim);
    for (std::size_t u = 0; u < unknowns.size(); ++u) m(unknowns[u].first, unknowns[u].second) = v[u];
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

// Independent columns of e.
Matrix column_basis(const Matrix& e) {
  EchelonBasis ech(e.field(), e.rows());
  std::vector<FpVector> cols;
  for (std::size_t j = 0; j < e.cols(); ++j) {
    FpVector c = e.column(j);
    if (ech.insert(c)) cols.push_back(std::move(c));
  }
  Matrix p(e.field(), e.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < e.rows(); ++i) p(i, j) = cols[j][i];
  return p;
}

// Matrix of a on the column space of p (assumed invariant).
Matrix restrict_to(const Matrix& a, const Matrix& p) {
  Matrix r(a.field(), p.cols(), p.cols());
  for (std::size_t j = 0; j < p.cols(); ++j) {
    auto sol = solve_linear(p, a.apply(p.column(j)));
    if (!sol.consistent) throw InternalError("subspace is not invariant");
    for (std::size_t i = 0; i < p.cols(); ++i) r(i, j) = sol.particular[i];
  }
  return r;
}

}  // namespace

std::vector<Summand> decompose(const ModulePresentation& m, const DecomposeOptions& options) {
  VectorModel model = vector_model(m);
  const std::size_t dim = model.dim();
  const PrimeField& f = model.ring->ring->field();
  std::vector<Matrix> basis = endomorphism_basis(model);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Scalar> coeff(0, f.characteristic() - 1);

  struct Done {
    Matrix e;
    bool flagged;
  };
  std::vector<Done> done;
  std::deque<Matrix> work;
  if (dim > 0) work.push_back(Matrix::identity(f, dim));
  while (!work.empty()) {
    Matrix e = std::move(work.front());
    work.pop_front();
    Matrix p = column_basis(e);
    if (p.cols() <= 1) {
      done.push_back({e, false});
      continue;
    }
    bool split = false, nonlinear = false;
    for (int attempt = 0; attempt < options.attempts && !split; ++attempt) {
      Matrix b(f, dim, dim);
      for (const auto& g : basis) b = b + g.scaled(coeff(rng));
      Matrix a = e * b * e;
      UPoly mp = minimal_polynomial(restrict_to(a, p));
      auto fs = factor(mp, rng);
      if (fs.size() < 2) {
        nonlinear = nonlinear || fs.front().poly.degree() > 1;
        continue;
      }
      UPoly g1 = UPoly::constant(f, 1);
      for (int k = 0; k < fs.front().multiplicity; ++k) g1 = g1 * fs.front().poly;
      UPoly g2 = mp / g1;
      ExtGcd eg = ext_gcd(g1, g2);
      Matrix e1 = (eg.t * g2).evaluate(a) * e;
      Matrix e2 = e - e1;
      if (!(e1 * e1 == e1) || e1.is_zero() || e2.is_zero())
        throw InternalError("idempotent splitting produced a non-idempotent");
      work.push_front(e2);
      work.push_front(e1);
      split = true;
    }
    if (!split) done.push_back({e, nonlinear});
  }
  std::vector<Summand> out;
  for (const auto& d : done) {
    std::vector<FpVector> cols;
    for (std::size_t j = 0; j < dim; ++j) cols.push_back(d.e.column(j));
    Summand s;
    s.module = present_subspace(model, cols);
    s.dim = column_basis(d.e).cols();
    s.possibly_decomposable = d.flagged;
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Carlson check

CarlsonReport check_carlson(const ModulePresentation& m, const VarietyIdeal& a1,
                            const VarietyIdeal& a2, const VarietyOptions& variety_options,
                            const DecomposeOptions& options) {
  const RingSpecPtr& ring = m.ring;
  CarlsonReport rep;
  rep.module_variety = support_variety(m, variety_options);
  const VarietyIdeal& v = rep.module_variety.variety;
  VarietyIdeal u = variety_union(a1, a2);
  if (!variety_equal(u, v))
    throw InputError("premise", "V(M) = " + join(v.basis_strings()) +
                                    " is not the union of the given varieties " +
                                    join(u.basis_strings()));
  VarietyIdeal meet = variety_intersect(a1, a2);
  if (!meet.is_trivial())
    throw InputError("premise", "the given varieties meet nontrivially: " +
                                    join(meet.basis_strings()));
  std::vector<Summand> parts = decompose(m, options);
  ModulePresentation c1 = free_module(ring, {}), c2 = free_module(ring, {});
  for (std::size_t k = 0; k < parts.size(); ++k) {
    CarlsonSummand cs;
    cs.summand = parts[k];
    cs.variety = support_variety(parts[k].module, variety_options).variety;
    if (cs.variety.is_trivial()) {
      cs.group = a1.is_trivial() || !a2.is_trivial() ? 1 : 2;
    } else {
      const bool in1 = variety_contains(a1, cs.variety);
      const bool in2 = variety_contains(a2, cs.variety);
      if (in1 == in2)
        throw VerificationError("unassignable",
                                "summand " + std::to_string(k + 1) + " with variety " +
                                    join(cs.variety.basis_strings()) +
                                    (in1 ? " lies in both sides" : " lies in neither side"));
      cs.group = in1 ? 1 : 2;
    }
    (cs.group == 1 ? c1 : c2) = direct_sum(cs.group == 1 ? c1 : c2, cs.summand.module);
    rep.summands.push_back(std::move(cs));
  }
  rep.c1 = minimal_presentation(c1);
  rep.c2 = minimal_presentation(c2);
  rep.v1 = support_variety(rep.c1, variety_options).variety;
  rep.v2 = support_variety(rep.c2, variety_options).variety;
  if (!variety_equal(rep.v1, a1) || !variety_equal(rep.v2, a2))
    throw VerificationError("group_variety",
                            "group varieties " + join(rep.v1.basis_strings()) + " and " +
                                join(rep.v2.basis_strings()) + " differ from the given split");
  rep.pass = true;
  return rep;
}

}  // namespace civar

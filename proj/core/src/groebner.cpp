#include "civar/groebner.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "civar/errors.hpp"

namespace civar {

using detail::Term;
using detail::Vec;
using detail::to_elt;
using detail::to_vec;

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Arith {
 public:
  Arith(const PrimeField& f, const MonomialOrder& o) : field(f), order(o) {}

  int cmp(const Term& a, const Term& b) const noexcept {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return order.compare(a.mono, b.mono);
  }

  // a[a0..] - c * m * b[b0..]
  Vec sub_mul(const Vec& a, std::size_t a0, Scalar c, const Monomial& m, const Vec& b,
              std::size_t b0) const {
    Vec r;
    r.reserve(a.size() - a0 + b.size() - b0);
    Scalar nc = field.neg(c);
    std::size_t i = a0, j = b0;
    Term tb{};
    bool have_b = false;
    auto load_b = [&] {
      if (j < b.size()) {
        tb = {b[j].mono * m, b[j].comp, field.mul(nc, b[j].coeff)};
        have_b = true;
      } else {
        have_b = false;
      }
    };
    load_b();
    while (i < a.size() && have_b) {
      int c2 = cmp(a[i], tb);
      if (c2 > 0) {
        r.push_back(a[i++]);
      } else if (c2 < 0) {
        r.push_back(tb);
        ++j;
        load_b();
      } else {
        Scalar s = field.add(a[i].coeff, tb.coeff);
        if (s) r.push_back({a[i].mono, a[i].comp, s});
        ++i;
        ++j;
        load_b();
      }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (have_b) {
      r.push_back(tb);
      ++j;
      load_b();
    }
    return r;
  }

  void make_monic(Vec& v, Vec* rep) const {
    if (v.empty()) return;
    Scalar inv = field.inv(v.front().coeff);
    for (auto& t : v) t.coeff = field.mul(t.coeff, inv);
    if (rep)
      for (auto& t : *rep) t.coeff = field.mul(t.coeff, inv);
  }

  const PrimeField& field;
  const MonomialOrder& order;
};

struct ReduceCtx {
  const Arith& ar;
  const std::vector<Vec>& basis;
  const std::vector<std::vector<std::size_t>>& by_comp;
  const std::vector<bool>* skip = nullptr;  // elements not to use as reducers
  std::size_t exclude = kNone;              // element excluded (tail reduction)

  std::size_t find(const Term& t) const {
    if (t.comp >= by_comp.size()) return kNone;
    for (std::size_t k : by_comp[t.comp]) {
      if (k == exclude || (skip && (*skip)[k])) continue;
      if (basis[k].front().mono.divides(t.mono)) return k;
    }
    return kNone;
  }

  // Full reduction. reps (optional): representations of the basis elements
  // and of v, updated alongside. cof (optional): per-basis-element cofactor
  // terms, unsorted.
  Vec reduce(Vec v, std::size_t start, const std::vector<Vec>* reps, Vec* v_rep,
             std::vector<std::vector<PolyTerm>>* cof) const {
    Vec result(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(start));
    std::size_t pos = start;
    while (pos < v.size()) {
      const Term& t = v[pos];
      std::size_t k = find(t);
      if (k == kNone) {
        result.push_back(t);
        ++pos;
        continue;
      }
      Monomial q = t.mono / basis[k].front().mono;
      Scalar c = t.coeff;  // basis elements are monic
      if (cof) (*cof)[k].push_back({q, c});
      if (reps && v_rep) *v_rep = ar.sub_mul(*v_rep, 0, c, q, (*reps)[k], 0);
      v = ar.sub_mul(v, pos + 1, c, q, basis[k], 1);
      pos = 0;
    }
    return result;
  }
};

}  // namespace

int detail::compare(const MonomialOrder& order, const Term& a, const Term& b) noexcept {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return order.compare(a.mono, b.mono);
}

Vec detail::sub_mul(const PrimeField& field, const MonomialOrder& order, const Vec& a,
                    std::size_t a0, Scalar c, const Monomial& m, const Vec& b, std::size_t b0) {
  return Arith(field, order).sub_mul(a, a0, c, m, b, b0);
}

Vec detail::to_vec(const FreeElt& e) {
  Vec v;
  for (std::size_t i = 0; i < e.components.size(); ++i)
    for (const auto& t : e.components[i].terms())
      v.push_back({t.mono, static_cast<std::uint32_t>(i), t.coeff});
  return v;
}

FreeElt detail::to_elt(const Vec& v, const FreeModule& m) {
  std::vector<std::vector<PolyTerm>> comps(m.rank());
  for (const auto& t : v) comps.at(t.comp).push_back({t.mono, t.coeff});
  FreeElt e;
  e.components.reserve(m.rank());
  for (auto& c : comps) e.components.push_back(Poly::from_terms(m.ring, std::move(c)));
  return e;
}

namespace {

struct Pair {
  std::size_t i, j;  // j == kNone: input generator i
  Monomial lcm;
  std::uint32_t comp;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(const FreeModule& m, const GbOptions& o)
      : module_(m), opts_(o), ar_(m.ring->field(), m.ring->order()), by_comp_(m.rank()) {}

  void run(std::vector<FreeElt>& gens, std::vector<Vec>& out, std::vector<Vec>& out_reps) {
    inputs_.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Vec v = to_vec(gens[i]);
      if (v.empty()) {
        inputs_.emplace_back();
        continue;
      }
      int s = sugar_of(v);
      pairs_.push_back({i, kNone, v.front().mono, v.front().comp, s});
      inputs_.push_back(std::move(v));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (better(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (++processed > opts_.max_pairs)
        throw ResourceError("budget_pairs", "Groebner basis exceeded the S-pair budget of " +
                                                std::to_string(opts_.max_pairs));
      if (p.lcm.degree() > opts_.max_degree)
        throw ResourceError("budget_degree", "Groebner basis exceeded the degree budget of " +
                                                 std::to_string(opts_.max_degree));
      Vec v, rep;
      if (p.j == kNone) {
        v = inputs_[p.i];
        if (opts_.track_cofactors) rep = {Term{Monomial(), static_cast<std::uint32_t>(p.i), 1}};
      } else {
        spoly(p, v, rep);
      }
      ReduceCtx ctx{ar_, elems_, by_comp_};
      v = ctx.reduce(std::move(v), 0, opts_.track_cofactors ? &reps_ : nullptr,
                     opts_.track_cofactors ? &rep : nullptr, nullptr);
      if (v.empty()) continue;
      ar_.make_monic(v, opts_.track_cofactors ? &rep : nullptr);
      insert(std::move(v), std::move(rep), p.sugar);
    }
    // Keep the minimal elements and interreduce their tails.
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < elems_.size(); ++k)
      if (!redundant_[k]) keep.push_back(k);
    std::vector<bool> skip(elems_.size(), true);
    for (auto k : keep) skip[k] = false;
    for (auto k : keep) {
      ReduceCtx ctx{ar_, elems_, by_comp_, &skip, k};
      Vec* rep = opts_.track_cofactors ? &reps_[k] : nullptr;
      elems_[k] = ctx.reduce(std::move(elems_[k]), 1, opts_.track_cofactors ? &reps_ : nullptr,
                             rep, nullptr);
    }
    std::vector<std::size_t> order = keep;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return ar_.cmp(elems_[a].front(), elems_[b].front()) < 0;
    });
    for (auto k : order) {
      out.push_back(std::move(elems_[k]));
      if (opts_.track_cofactors) out_reps.push_back(std::move(reps_[k]));
    }
  }

 private:
  int sugar_of(const Vec& v) const {
    int s = std::numeric_limits<int>::min();
    for (const auto& t : v) s = std::max(s, t.mono.degree() + module_.shifts[t.comp]);
    return s;
  }

  bool better(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.comp != b.comp) return a.comp > b.comp;  // smaller term first
    int c = module_.ring->order().compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  void spoly(const Pair& p, Vec& v, Vec& rep) const {
    const Vec& a = elems_[p.i];
    const Vec& b = elems_[p.j];
    Monomial ma = p.lcm / a.front().mono, mb = p.lcm / b.front().mono;
    Vec am;
    am.reserve(a.size());
    for (std::size_t k = 1; k < a.size(); ++k) am.push_back({a[k].mono * ma, a[k].comp, a[k].coeff});
    v = ar_.sub_mul(am, 0, 1, mb, b, 1);
    if (opts_.track_cofactors) {
      Vec ra;
      for (const auto& t : reps_[p.i]) ra.push_back({t.mono * ma, t.comp, t.coeff});
      rep = ar_.sub_mul(ra, 0, 1, mb, reps_[p.j], 0);
    }
  }

  void insert(Vec h, Vec rep, int sugar) {
    const std::size_t n = elems_.size();
    const Monomial lt = h.front().mono;
    const std::uint32_t comp = h.front().comp;
    const bool ideal = module_.rank() == 1;

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> cands;
    for (std::size_t g : by_comp_[comp]) {
      if (redundant_[g]) continue;
      const Monomial& lg = elems_[g].front().mono;
      cands.push_back({g, lt.lcm(lg), ideal && lt.coprime(lg)});
    }
    // Chain criterion among the new pairs; one representative per lcm.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].alive) continue;
        if (cands[b].lcm.divides(cands[a].lcm) &&
            (!(cands[b].lcm == cands[a].lcm) || b < a)) {
          cands[a].alive = false;
          break;
        }
      }
    }
    // Criterion B_k on the old pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      if (p.j != kNone && p.comp == comp && lt.divides(p.lcm)) {
        Monomial li = elems_[p.i].front().mono.lcm(lt);
        Monomial lj = elems_[p.j].front().mono.lcm(lt);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept.push_back(p);
    }
    pairs_ = std::move(kept);
    for (const auto& c : cands) {
      if (!c.alive || c.coprime) continue;
      const Monomial& lg = elems_[c.g].front().mono;
      int s = std::max(sugar + c.lcm.degree() - lt.degree(),
                       sugars_[c.g] + c.lcm.degree() - lg.degree());
      pairs_.push_back({c.g, n, c.lcm, comp, s});
    }
    for (std::size_t g : by_comp_[comp])
      if (!redundant_[g] && lt.divides(elems_[g].front().mono)) redundant_[g] = true;

    elems_.push_back(std::move(h));
    reps_.push_back(std::move(rep));
    sugars_.push_back(sugar);
    redundant_.push_back(false);
    by_comp_[comp].push_back(n);
  }

  const FreeModule& module_;
  GbOptions opts_;
  Arith ar_;
  std::vector<Vec> inputs_;
  std::vector<Vec> elems_;
  std::vector<Vec> reps_;
  std::vector<int> sugars_;
  std::vector<bool> redundant_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis GroebnerBasis::compute(const FreeModule& module, std::vector<FreeElt> gens,
                                     const GbOptions& options, bool check_homogeneous) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].rank() != module.rank())
      throw InputError("rank_mismatch", "generator " + std::to_string(i) +
                                            " has the wrong number of components");
    if (check_homogeneous && !gens[i].is_homogeneous(module))
      throw InputError("inhomogeneous", "generator " + std::to_string(i) + " is not homogeneous");
  }
  GroebnerBasis gb;
  gb.module_ = module;
  gb.ngens_ = gens.size();
  Buchberger engine(module, options);
  engine.run(gens, gb.elems_, gb.reps_);
  if (options.track_cofactors) {
    for (const auto& rep : gb.reps_) {
      std::vector<std::vector<PolyTerm>> row(gb.ngens_);
      for (const auto& t : rep) row.at(t.comp).push_back({t.mono, t.coeff});
      std::vector<Poly> polys;
      for (auto& r : row) polys.push_back(Poly::from_terms(module.ring, std::move(r)));
      gb.cofactors_.push_back(std::move(polys));
    }
  }
  gb.finish();
  return gb;
}

void GroebnerBasis::finish() {
  by_comp_.assign(module_.rank(), {});
  for (std::size_t k = 0; k < elems_.size(); ++k) by_comp_[elems_[k].front().comp].push_back(k);
  elements_.clear();
  for (const auto& e : elems_) elements_.push_back(to_elt(e, module_));
}

Vec GroebnerBasis::reduce_raw(Vec v) const {
  Arith ar(module_.ring->field(), module_.ring->order());
  ReduceCtx ctx{ar, elems_, by_comp_};
  return ctx.reduce(std::move(v), 0, nullptr, nullptr, nullptr);
}

GroebnerBasis::Reduction GroebnerBasis::normal_form(const FreeElt& v) const {
  Arith ar(module_.ring->field(), module_.ring->order());
  ReduceCtx ctx{ar, elems_, by_comp_};
  std::vector<std::vector<PolyTerm>> cof(elems_.size());
  Vec r = ctx.reduce(to_vec(v), 0, nullptr, nullptr, &cof);
  Reduction out;
  out.remainder = to_elt(r, module_);
  for (auto& c : cof) out.cofactors.push_back(Poly::from_terms(module_.ring, std::move(c)));
  return out;
}

FreeElt GroebnerBasis::reduce(const FreeElt& v) const {
  return to_elt(reduce_raw(to_vec(v)), module_);
}

bool GroebnerBasis::is_unit() const noexcept {
  for (const auto& e : elems_)
    if (e.front().mono.is_one() && module_.rank() == 1) return true;
  return false;
}

std::vector<GroebnerBasis::LeadingTerm> GroebnerBasis::leading_terms() const {
  std::vector<LeadingTerm> out;
  for (const auto& e : elems_) out.push_back({e.front().comp, e.front().mono});
  return out;
}

GroebnerBasis groebner_basis(const FreeModule& module, const std::vector<FreeElt>& gens,
                             const GbOptions& options, std::span<const Poly> quotient) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_homogeneous(module))
      throw InputError("inhomogeneous", "generator " + std::to_string(i) + " is not homogeneous");
  std::vector<FreeElt> all = gens;
  for (std::size_t i = 0; i < module.rank(); ++i) {
    for (const auto& f : quotient) {
      FreeElt e = FreeElt::zero(module);
      e.components[i] = f;
      all.push_back(std::move(e));
    }
  }
  return GroebnerBasis::compute(module, std::move(all), options, true);
}

FreeModule ideal_module(const RingPtr& ring) { return FreeModule{ring, {0}}; }

GroebnerBasis ideal_basis(const RingPtr& ring, const std::vector<Poly>& gens,
                          const GbOptions& options) {
  std::vector<FreeElt> elts;
  for (const auto& g : gens) elts.push_back(FreeElt{{g}});
  return groebner_basis(ideal_module(ring), elts, options);
}

Poly reduce_poly(const GroebnerBasis& gb, const Poly& p) {
  return gb.reduce(FreeElt{{p}}).components.front();
}

FreeModule syzygy_module_frame(const FreeModule& module, const std::vector<FreeElt>& gens) {
  FreeModule out{module.ring, {}};
  for (const auto& g : gens) out.shifts.push_back(g.degree(module).value_or(0));
  return out;
}

std::vector<FreeElt> syzygies(const FreeModule& module, const std::vector<FreeElt>& gens,
                              std::span<const Poly> quotient, const GbOptions& options) {
  return syzygies(module, gens, syzygy_module_frame(module, gens).shifts, quotient, options);
}

std::vector<FreeElt> syzygies(const FreeModule& module, const std::vector<FreeElt>& gens,
                              const std::vector<int>& frame_shifts,
                              std::span<const Poly> quotient, const GbOptions& options) {
  const std::size_t r = module.rank(), m = gens.size();
  if (frame_shifts.size() != m)
    throw InputError("rank_mismatch", "one frame shift per generator is required");
  FreeModule target{module.ring, frame_shifts};
  // Augmented module: components [0, r) carry the generator, [r, r+m) tag it.
  FreeModule aug{module.ring, module.shifts};
  aug.shifts.insert(aug.shifts.end(), target.shifts.begin(), target.shifts.end());
  std::vector<FreeElt> input;
  for (std::size_t i = 0; i < m; ++i) {
    if (!gens[i].is_homogeneous(module))
      throw InputError("inhomogeneous", "generator " + std::to_string(i) + " is not homogeneous");
    FreeElt e = FreeElt::zero(aug);
    for (std::size_t c = 0; c < r; ++c) e.components[c] = gens[i].components.at(c);
    e.components[r + i] = Poly::constant(module.ring, 1);
    input.push_back(std::move(e));
  }
  for (std::size_t c = 0; c < r + m; ++c) {
    for (const auto& f : quotient) {
      FreeElt e = FreeElt::zero(aug);
      e.components[c] = f;
      input.push_back(std::move(e));
    }
  }
  GbOptions o = options;
  o.track_cofactors = false;
  GroebnerBasis gb = GroebnerBasis::compute(aug, std::move(input), o, true);

  std::optional<GroebnerBasis> qgb;
  if (!quotient.empty())
    qgb = ideal_basis(module.ring, std::vector<Poly>(quotient.begin(), quotient.end()), options);
  std::vector<FreeElt> out;
  for (const auto& e : gb.elements()) {
    bool in_tag = true;
    for (std::size_t c = 0; c < r; ++c)
      if (!e.components[c].is_zero()) {
        in_tag = false;
        break;
      }
    if (!in_tag) continue;
    FreeElt s;
    for (std::size_t i = 0; i < m; ++i) {
      Poly p = e.components[r + i];
      if (qgb) p = reduce_poly(*qgb, p);
      s.components.push_back(std::move(p));
    }
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  return out;
}

int ideal_dimension(const RingPtr& ring, const std::vector<Poly>& gens, const GbOptions& options) {
  GroebnerBasis gb = ideal_basis(ring, gens, options);
  if (gb.is_unit()) return -1;
  const std::size_t n = ring->nvars();
  auto lts = gb.leading_terms();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& lt : lts) {
      bool inside = true;
      for (std::size_t v = 0; v < n; ++v)
        if (lt.mono[v] && !(mask & (1u << v))) {
          inside = false;
          break;
        }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

bool ideal_membership(const Poly& g, const std::vector<Poly>& gens, const GbOptions& options) {
  if (g.is_zero()) return true;
  GroebnerBasis gb = GroebnerBasis::compute(
      ideal_module(g.ring()),
      [&] {
        std::vector<FreeElt> e;
        for (const auto& p : gens) e.push_back(FreeElt{{p}});
        return e;
      }(),
      options, false);
  return reduce_poly(gb, g).is_zero();
}

namespace {

RingPtr extended_ring(const RingPtr& ring, const std::string& name, bool first,
                      std::vector<std::size_t>& var_map) {
  std::vector<std::string> vars;
  std::string fresh = name;
  while (ring->index_of(fresh) >= 0) fresh += "_";
  if (first) vars.push_back(fresh);
  for (const auto& v : ring->vars()) vars.push_back(v);
  if (!first) vars.push_back(fresh);
  var_map.clear();
  for (std::size_t i = 0; i < ring->nvars(); ++i) var_map.push_back(first ? i + 1 : i);
  MonomialOrder order = first ? MonomialOrder::elimination(vars.size(), 1)
                              : MonomialOrder::degrevlex(vars.size());
  return std::make_shared<const PolyRing>(ring->field(), std::move(vars), order);
}

}  // namespace

bool radical_membership(const Poly& g, const std::vector<Poly>& gens, const GbOptions& options) {
  if (g.is_zero()) return true;
  std::vector<std::size_t> map;
  RingPtr ext = extended_ring(g.ring(), "T", false, map);
  const std::size_t t = ext->nvars() - 1;
  std::vector<FreeElt> input;
  for (const auto& p : gens) input.push_back(FreeElt{{embed(p, ext, map)}});
  Poly tg = Poly::variable(ext, t) * embed(g, ext, map);
  input.push_back(FreeElt{{Poly::constant(ext, 1) - tg}});
  GroebnerBasis gb = GroebnerBasis::compute(ideal_module(ext), std::move(input), options, false);
  return gb.is_unit();
}

std::vector<Poly> ideal_ops(const RingPtr& ring, const std::vector<Poly>& a,
                            const std::vector<Poly>& b, IdealOp op, const GbOptions& options) {
  switch (op) {
    case IdealOp::sum: {
      std::vector<Poly> r = a;
      r.insert(r.end(), b.begin(), b.end());
      return r;
    }
    case IdealOp::product: {
      std::vector<Poly> r;
      for (const auto& x : a)
        for (const auto& y : b) r.push_back(x * y);
      return r;
    }
    case IdealOp::intersection: {
      std::vector<std::size_t> map;
      RingPtr ext = extended_ring(ring, "t", true, map);
      Poly t = Poly::variable(ext, 0);
      Poly one_minus_t = Poly::constant(ext, 1) - t;
      std::vector<FreeElt> input;
      for (const auto& x : a) input.push_back(FreeElt{{t * embed(x, ext, map)}});
      for (const auto& y : b) input.push_back(FreeElt{{one_minus_t * embed(y, ext, map)}});
      GroebnerBasis gb = GroebnerBasis::compute(ideal_module(ext), std::move(input), options, false);
      std::vector<std::size_t> back(ext->nvars(), 0);
      for (std::size_t i = 0; i < ring->nvars(); ++i) back[i + 1] = i;
      std::vector<Poly> r;
      for (const auto& e : gb.elements()) {
        const Poly& p = e.components.front();
        bool free_of_t = true;
        for (const auto& term : p.terms())
          if (term.mono[0]) {
            free_of_t = false;
            break;
          }
        if (!free_of_t) continue;
        std::vector<PolyTerm> terms;
        for (const auto& term : p.terms()) {
          std::array<int, kMaxVars> e2{};
          for (std::size_t v = 1; v < ext->nvars(); ++v) e2[v - 1] = term.mono[v];
          terms.push_back({Monomial(std::span<const int>(e2.data(), ring->nvars())), term.coeff});
        }
        r.push_back(Poly::from_terms(ring, std::move(terms)));
      }
      auto reduced = ideal_basis(ring, r, options);
      std::vector<Poly> out;
      for (const auto& e : reduced.elements()) out.push_back(e.components.front());
      return out;
    }
  }
  return {};
}

}  // namespace civar

#include "civar/resolve.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "civar/errors.hpp"
#include "civar/span.hpp"

namespace civar {

namespace {

FreeElt reduce_elt(const RingSpec& spec, FreeElt e) {
  for (auto& c : e.components) c = spec.reduce(c);
  return e;
}

FreeElt times_mono(const FreeElt& e, const Monomial& m) {
  FreeElt r = e;
  for (auto& c : r.components) c = c.times_term(m, 1);
  return r;
}

bool is_standard(const RingSpec& spec, const Monomial& m) {
  for (const auto& lt : spec.ci_basis.leading_terms())
    if (lt.mono.divides(m)) return false;
  return true;
}

std::vector<Monomial> standard_monomials(const RingSpec& spec, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  for (auto& m : monomials_of_degree(spec.nvars(), degree))
    if (is_standard(spec, m)) out.push_back(m);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingSpec

RingSpecPtr make_ring_spec(RingPtr ring, std::vector<Poly> ci, const GbOptions& options) {
  const std::size_t n = ring->nvars(), c = ci.size();
  if (c > n) throw InputError("not_complete_intersection", "more relations than variables");
  for (std::size_t j = 0; j < c; ++j) {
    if (!ci[j].ring()->same_as(*ring))
      throw InputError("ring_mismatch", "relation " + std::to_string(j + 1) + " is over another ring");
    if (ci[j].is_zero() || !ci[j].is_homogeneous())
      throw InputError("inhomogeneous", "relation " + std::to_string(j + 1) + " is not homogeneous");
    if (ci[j].degree() < 2)
      throw InputError("low_degree", "relation " + std::to_string(j + 1) + " has degree below 2");
  }
  auto spec = std::make_shared<RingSpec>();
  spec->ring = ring;
  spec->ci = ci;
  spec->options = options;
  int d = ideal_dimension(ring, ci, options);
  if (d != static_cast<int>(n - c))
    throw InputError("not_complete_intersection",
                     "relations are not a regular sequence: dimension " + std::to_string(d) +
                         ", expected " + std::to_string(n - c));
  spec->dim = d;
  GbOptions o = options;
  o.track_cofactors = true;
  spec->ci_basis = ideal_basis(ring, ci, o);
  std::vector<std::string> chi;
  for (std::size_t j = 0; j < c; ++j) chi.push_back("chi" + std::to_string(j + 1));
  spec->h = make_ring(ring->field().characteristic(), chi);
  return spec;
}

RingSpecPtr make_ring_spec(std::uint64_t p, std::vector<std::string> vars,
                           const std::vector<std::string>& ci, const GbOptions& options) {
  RingPtr ring = make_ring(p, std::move(vars));
  std::vector<Poly> f;
  for (const auto& s : ci) f.push_back(poly_parse(s, ring));
  return make_ring_spec(ring, std::move(f), options);
}

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Poly(ring_)) {}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, std::size_t rows,
                                    const std::vector<FreeElt>& cols) {
  PolyMatrix m(ring, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].rank() != rows) throw InternalError("column has the wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j].components[i];
  }
  return m;
}

FreeElt PolyMatrix::column(std::size_t j) const {
  FreeElt e;
  for (std::size_t i = 0; i < rows_; ++i) e.components.push_back((*this)(i, j));
  return e;
}

FreeElt PolyMatrix::row(std::size_t i) const {
  FreeElt e;
  for (std::size_t j = 0; j < cols_; ++j) e.components.push_back((*this)(i, j));
  return e;
}

std::vector<FreeElt> PolyMatrix::columns() const {
  std::vector<FreeElt> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw InternalError("matrix product dimension mismatch");
  PolyMatrix r(ring_ ? ring_ : o.ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix sum dimension mismatch");
  PolyMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix sum dimension mismatch");
  PolyMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

PolyMatrix PolyMatrix::scaled(const Poly& p) const {
  PolyMatrix r = *this;
  for (auto& e : r.data_) e = e * p;
  return r;
}

bool PolyMatrix::is_zero() const noexcept {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix PolyMatrix::constant_part() const {
  Matrix m(ring_->field(), rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).constant_term();
  return m;
}

PolyMatrix PolyMatrix::reduced(const RingSpec& spec) const {
  PolyMatrix r = *this;
  for (auto& e : r.data_) e = spec.reduce(e);
  return r;
}

// ---------------------------------------------------------------------------
// Presentations

ModulePresentation present_module(const RingSpecPtr& ring, std::vector<int> gen_degrees,
                                  PolyMatrix relations) {
  if (relations.rows() != gen_degrees.size())
    throw InputError("shape", "relation matrix has " + std::to_string(relations.rows()) +
                                  " rows but there are " + std::to_string(gen_degrees.size()) +
                                  " generators");
  FreeModule frame{ring->ring, gen_degrees};
  std::vector<FreeElt> cols;
  std::vector<int> degs;
  for (std::size_t j = 0; j < relations.cols(); ++j) {
    FreeElt col = relations.column(j);
    for (const auto& c : col.components)
      if (c.ring() && !c.ring()->same_as(*ring->ring))
        throw InputError("ring_mismatch", "relation column " + std::to_string(j) + " is over another ring");
    col = reduce_elt(*ring, col);
    if (!relations.column(j).is_homogeneous(frame) || !col.is_homogeneous(frame))
      throw InputError("inhomogeneous", "relation column " + std::to_string(j) +
                                            " is not homogeneous for the generator degrees");
    if (col.is_zero()) continue;
    degs.push_back(*col.degree(frame));
    cols.push_back(std::move(col));
  }
  ModulePresentation m;
  m.ring = ring;
  m.gen_degrees = std::move(gen_degrees);
  m.relations = PolyMatrix::from_columns(ring->ring, m.gen_degrees.size(), cols);
  m.relation_degrees = std::move(degs);
  return m;
}

ModulePresentation present_module(const RingSpecPtr& ring, std::vector<int> gen_degrees,
                                  const std::vector<std::vector<std::string>>& rows) {
  if (rows.size() != gen_degrees.size())
    throw InputError("shape", "expected one relation row per generator");
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(ring->ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw InputError("shape", "relation rows have different lengths");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = poly_parse(rows[i][j], ring->ring);
  }
  return present_module(ring, std::move(gen_degrees), std::move(m));
}

namespace {

class ModuleParser {
 public:
  explicit ModuleParser(std::string_view text) {
    // Strip comments, keeping offsets stable.
    text_.assign(text);
    bool quoted = false;
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] == '"') quoted = !quoted;
      if (!quoted && text_[i] == '#')
        for (; i < text_.size() && text_[i] != '\n'; ++i) text_[i] = ' ';
    }
  }

  std::vector<int> gens;
  std::vector<std::vector<std::string>> rows;

  void parse() {
    bool have_gens = false, have_rel = false;
    skip_ws();
    while (pos_ < text_.size()) {
      std::string key = identifier();
      skip_ws();
      expect(':');
      if (key == "gens") {
        gens = int_list();
        have_gens = true;
      } else if (key == "relations") {
        rows = row_list();
        have_rel = true;
      } else {
        fail("unknown key '" + key + "'");
      }
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == ',' || text_[pos_] == ';')) ++pos_;
      skip_ws();
    }
    if (!have_gens) fail("missing 'gens'");
    if (!have_rel) rows.assign(gens.size(), {});
    if (have_rel && rows.empty()) rows.assign(gens.size(), {});
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("syntax", "module file, position " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  std::string identifier() {
    std::size_t start = pos_;
    bool quoted = pos_ < text_.size() && text_[pos_] == '"';
    if (quoted) ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string id = text_.substr(start + (quoted ? 1 : 0), pos_ - start - (quoted ? 1 : 0));
    if (quoted) {
      if (pos_ >= text_.size() || text_[pos_] != '"') fail("unterminated key");
      ++pos_;
    }
    if (id.empty()) fail("expected a key");
    return id;
  }
  std::vector<int> int_list() {
    expect('[');
    std::vector<int> out;
    if (peek(']')) {
      ++pos_;
      return out;
    }
    for (;;) {
      skip_ws();
      std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string tok = text_.substr(start, pos_ - start);
      if (tok.empty() || tok == "-" || tok == "+") fail("expected an integer");
      try {
        out.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail("integer out of range");
      }
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      return out;
    }
  }
  std::string entry() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '"') {
      std::size_t end = text_.find('"', pos_ + 1);
      if (end == std::string::npos) fail("unterminated string");
      std::string s = text_.substr(pos_ + 1, end - pos_ - 1);
      pos_ = end + 1;
      return s;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '[')
      ++pos_;
    std::string s = text_.substr(start, pos_ - start);
    if (s.find_first_not_of(" \t\r\n") == std::string::npos) fail("empty entry");
    return s;
  }
  std::vector<std::vector<std::string>> row_list() {
    expect('[');
    std::vector<std::vector<std::string>> out;
    if (peek(']')) {
      ++pos_;
      return out;
    }
    for (;;) {
      expect('[');
      std::vector<std::string> row;
      if (peek(']')) {
        ++pos_;
      } else {
        for (;;) {
          row.push_back(entry());
          if (peek(',')) {
            ++pos_;
            continue;
          }
          expect(']');
          break;
        }
      }
      out.push_back(std::move(row));
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      return out;
    }
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

ModulePresentation parse_module(std::string_view text, const RingSpecPtr& ring) {
  ModuleParser p(text);
  p.parse();
  return present_module(ring, p.gens, p.rows);
}

std::string format_module(const ModulePresentation& m) {
  std::ostringstream out;
  out << "gens: [";
  for (std::size_t i = 0; i < m.gen_degrees.size(); ++i)
    out << (i ? ", " : "") << m.gen_degrees[i];
  out << "]\nrelations: [";
  for (std::size_t i = 0; i < m.num_gens(); ++i) {
    out << (i ? ",\n  [" : "\n  [");
    for (std::size_t j = 0; j < m.num_relations(); ++j)
      out << (j ? ", " : "") << m.relations(i, j).to_string();
    out << "]";
  }
  out << (m.num_gens() ? "\n]\n" : "]\n");
  return out.str();
}

ModulePresentation free_module(const RingSpecPtr& ring, std::vector<int> degrees) {
  std::size_t n = degrees.size();
  return present_module(ring, std::move(degrees), PolyMatrix(ring->ring, n, 0));
}

ModulePresentation cyclic_module(const RingSpecPtr& ring, const std::vector<Poly>& ideal) {
  PolyMatrix m(ring->ring, 1, ideal.size());
  for (std::size_t j = 0; j < ideal.size(); ++j) m(0, j) = ideal[j];
  return present_module(ring, {0}, std::move(m));
}

ModulePresentation residue_field(const RingSpecPtr& ring) {
  std::vector<Poly> vars;
  for (std::size_t v = 0; v < ring->nvars(); ++v) vars.push_back(Poly::variable(ring->ring, v));
  return cyclic_module(ring, vars);
}

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b) {
  if (a.ring != b.ring && !a.ring->ring->same_as(*b.ring->ring))
    throw InputError("ring_mismatch", "direct sum of modules over different rings");
  std::vector<int> gens = a.gen_degrees;
  gens.insert(gens.end(), b.gen_degrees.begin(), b.gen_degrees.end());
  PolyMatrix m(a.ring->ring, gens.size(), a.num_relations() + b.num_relations());
  for (std::size_t i = 0; i < a.num_gens(); ++i)
    for (std::size_t j = 0; j < a.num_relations(); ++j) m(i, j) = a.relations(i, j);
  for (std::size_t i = 0; i < b.num_gens(); ++i)
    for (std::size_t j = 0; j < b.num_relations(); ++j)
      m(a.num_gens() + i, a.num_relations() + j) = b.relations(i, j);
  return present_module(a.ring, std::move(gens), std::move(m));
}

ModulePresentation shifted(const ModulePresentation& m, int shift) {
  ModulePresentation r = m;
  for (auto& d : r.gen_degrees) d += shift;
  for (auto& d : r.relation_degrees) d += shift;
  return r;
}

std::vector<FreeElt> minimal_generators(const RingSpec& spec, const FreeModule& module,
                                        std::vector<FreeElt> elts) {
  struct Cand {
    int degree;
    FreeElt elt;
  };
  std::vector<Cand> cands;
  for (auto& e : elts) {
    e = reduce_elt(spec, std::move(e));
    if (e.is_zero()) continue;
    if (!e.is_homogeneous(module)) throw InternalError("inhomogeneous generator candidate");
    cands.push_back({*e.degree(module), std::move(e)});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.degree < b.degree; });
  std::vector<Cand> chosen;
  std::size_t k = 0;
  while (k < cands.size()) {
    const int t = cands[k].degree;
    SparseSpan span(module.ring);
    for (const auto& g : chosen)
      for (const auto& m : monomials_of_degree(spec.nvars(), t - g.degree)) {
        FreeElt prod = reduce_elt(spec, times_mono(g.elt, m));
        if (!prod.is_zero()) span.insert(detail::to_vec(prod));
      }
    std::size_t end = k;
    while (end < cands.size() && cands[end].degree == t) ++end;
    for (; k < end; ++k)
      if (span.insert(detail::to_vec(cands[k].elt))) chosen.push_back(cands[k]);
  }
  std::vector<FreeElt> out;
  for (auto& c : chosen) out.push_back(std::move(c.elt));
  return out;
}

ModulePresentation minimal_presentation(const ModulePresentation& input) {
  const RingSpec& spec = *input.ring;
  std::vector<int> gens = input.gen_degrees;
  std::vector<FreeElt> cols = input.relations.columns();
  std::vector<int> col_degs = input.relation_degrees;
  const PrimeField& f = spec.ring->field();
  for (;;) {
    std::size_t pi = 0, pj = cols.size();
    for (std::size_t j = 0; j < cols.size() && pj == cols.size(); ++j)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Poly& e = cols[j].components[i];
        if (!e.is_zero() && e.is_constant()) {
          pi = i;
          pj = j;
          break;
        }
      }
    if (pj == cols.size()) break;
    const FreeElt pivot = cols[pj];
    Scalar inv = f.inv(pivot.components[pi].constant_term());
    std::vector<FreeElt> next;
    std::vector<int> next_degs;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j == pj) continue;
      FreeElt c = cols[j];
      const Poly a = c.components[pi];
      if (!a.is_zero()) c = reduce_elt(spec, c - pivot.times(a.scaled(inv)));
      c.components.erase(c.components.begin() + static_cast<std::ptrdiff_t>(pi));
      if (c.is_zero()) continue;
      next.push_back(std::move(c));
      next_degs.push_back(col_degs[j]);
    }
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pi));
    cols = std::move(next);
    col_degs = std::move(next_degs);
  }
  FreeModule frame{spec.ring, gens};
  std::vector<FreeElt> minimal = minimal_generators(spec, frame, cols);
  return present_module(input.ring, gens,
                        PolyMatrix::from_columns(spec.ring, gens.size(), minimal));
}

// ---------------------------------------------------------------------------
// Resolutions

Resolution::Resolution(const ModulePresentation& m) : ring_(m.ring) {
  ModulePresentation p = minimal_presentation(m);
  degrees_.push_back(p.gen_degrees);
  degrees_.push_back(p.relation_degrees);
  diffs_.push_back(p.relations);
}

void Resolution::extend_to(int steps) {
  const RingSpec& spec = *ring_;
  while (length() < steps) {
    const int top = length();
    const PolyMatrix& last = d(top);
    std::vector<FreeElt> syz = syzygies(free_module(top - 1), last.columns(), degrees(top),
                                        spec.ci, spec.options);
    FreeModule frame = free_module(top);
    std::vector<FreeElt> gens = minimal_generators(spec, frame, std::move(syz));
    std::vector<int> degs;
    for (const auto& g : gens) degs.push_back(*g.degree(frame));
    PolyMatrix next = PolyMatrix::from_columns(spec.ring, rank(top), gens);
    if (!next.constant_part().is_zero())
      throw InternalError("differential " + std::to_string(top + 1) + " is not minimal");
    degrees_.push_back(std::move(degs));
    diffs_.push_back(std::move(next));
  }
}

std::vector<std::size_t> Resolution::betti() const {
  std::vector<std::size_t> b;
  for (const auto& d : degrees_) b.push_back(d.size());
  return b;
}

ModulePresentation Resolution::presentation() const {
  ModulePresentation p;
  p.ring = ring_;
  p.gen_degrees = degrees_[0];
  p.relations = diffs_[0];
  p.relation_degrees = degrees_[1];
  return p;
}

Resolution resolve_min(const ModulePresentation& m, int steps) {
  if (steps < 1) throw InputError("bad_steps", "the number of steps must be at least 1");
  Resolution r(m);
  r.extend_to(steps);
  return r;
}

ModulePresentation syzygy_module(const Resolution& res, int n) {
  if (n < 0) throw InputError("bad_steps", "syzygy index must be nonnegative");
  if (n == 0) return res.presentation();
  const Resolution& r = res;
  if (r.length() < n + 1) throw InputError("bad_steps", "resolution too short for the syzygy");
  ModulePresentation p;
  p.ring = r.ring();
  p.gen_degrees = r.degrees(n);
  p.relations = r.d(n + 1);
  p.relation_degrees = r.degrees(n + 1);
  return p;
}

ModulePresentation syzygy_module(const ModulePresentation& m, int n) {
  if (n < 0) throw InputError("bad_steps", "syzygy index must be nonnegative");
  if (n == 0) return m;
  return syzygy_module(resolve_min(m, n + 1), n);
}

bool is_mcm(const Resolution& res) {
  const RingSpec& spec = *res.ring();
  if (spec.dim == 0) return true;
  if (res.length() < spec.dim + 1) throw InputError("bad_steps", "resolution too short for the MCM test");
  auto dual = [&](int i) {
    FreeModule m{spec.ring, {}};
    for (int d : res.degrees(i)) m.shifts.push_back(-d);
    return m;
  };
  for (int i = 1; i <= spec.dim; ++i) {
    if (res.rank(i) == 0) continue;
    const PolyMatrix& next = res.d(i + 1);
    std::vector<FreeElt> rows;
    for (std::size_t j = 0; j < next.rows(); ++j) rows.push_back(next.row(j));
    std::vector<int> frame = dual(i).shifts;
    std::vector<FreeElt> kernel = syzygies(dual(i + 1), rows, frame, spec.ci, spec.options);
    const PolyMatrix& prev = res.d(i);
    std::vector<FreeElt> image;
    for (std::size_t j = 0; j < prev.rows(); ++j) image.push_back(prev.row(j));
    GroebnerBasis gb = groebner_basis(dual(i), image, spec.options, spec.ci);
    for (const auto& k : kernel)
      if (!gb.contains(k)) return false;
  }
  return true;
}

bool is_mcm(const ModulePresentation& m) {
  const int dim = m.ring->dim;
  if (dim == 0) return true;
  return is_mcm(resolve_min(m, dim + 1));
}

// ---------------------------------------------------------------------------
// Vector models

VectorModel vector_model(const ModulePresentation& m) {
  const RingSpec& spec = *m.ring;
  const std::size_t n = spec.nvars();
  FreeModule frame = m.generator_module();
  GroebnerBasis gb = groebner_basis(frame, m.relations.columns(), spec.options, spec.ci);
  std::vector<std::vector<Monomial>> lts(m.num_gens());
  for (const auto& lt : gb.leading_terms()) lts[lt.comp].push_back(lt.mono);
  for (std::size_t c = 0; c < m.num_gens(); ++c)
    for (std::size_t v = 0; v < n; ++v) {
      bool found = false;
      for (const auto& mono : lts[c]) {
        if (mono.degree() == mono[v]) {
          found = true;
          break;
        }
      }
      if (!found)
        throw InputError("infinite_length",
                         "module has infinite length: variable " + spec.ring->vars()[v] +
                             " acts freely on generator " + std::to_string(c));
    }
  VectorModel model;
  model.ring = m.ring;
  model.gen_degrees = m.gen_degrees;
  for (std::size_t c = 0; c < m.num_gens(); ++c) {
    for (int t = 0;; ++t) {
      bool any = false;
      auto monos = monomials_of_degree(n, t);
      std::reverse(monos.begin(), monos.end());
      for (const auto& mono : monos) {
        bool standard = true;
        for (const auto& lt : lts[c])
          if (lt.divides(mono)) {
            standard = false;
            break;
          }
        if (!standard) continue;
        any = true;
        model.basis.push_back({c, mono});
        model.degrees.push_back(m.gen_degrees[c] + t);
      }
      if (!any) break;
    }
  }
  auto index_of = [&](std::size_t comp, const Monomial& mono) -> std::size_t {
    for (std::size_t k = 0; k < model.basis.size(); ++k)
      if (model.basis[k].gen == comp && model.basis[k].mono == mono) return k;
    throw InternalError("normal form produced a non-standard monomial");
  };
  const std::size_t dim = model.basis.size();
  for (std::size_t v = 0; v < n; ++v) {
    Matrix a(spec.ring->field(), dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
      FreeElt e = FreeElt::zero(frame);
      e.components[model.basis[k].gen] =
          Poly::term(spec.ring, model.basis[k].mono * Monomial::variable(v), 1);
      FreeElt r = gb.reduce(e);
      for (std::size_t c = 0; c < r.rank(); ++c)
        for (const auto& t : r.components[c].terms()) a(index_of(c, t.mono), k) = t.coeff;
    }
    model.actions.push_back(std::move(a));
  }
  return model;
}

ModulePresentation present_subspace(const VectorModel& model, const std::vector<FpVector>& span) {
  const RingSpec& spec = *model.ring;
  const PrimeField& f = spec.ring->field();
  const std::size_t dim = model.dim();
  // Homogeneous basis of the subspace, degree by degree.
  std::map<int, std::vector<FpVector>> by_degree;
  {
    std::map<int, EchelonBasis> ech;
    for (const auto& v : span) {
      if (v.size() != dim) throw InputError("dimension_mismatch", "vector has the wrong length");
      std::optional<int> deg;
      for (std::size_t k = 0; k < dim; ++k) {
        if (!v[k]) continue;
        if (deg && *deg != model.degrees[k])
          throw InputError("inhomogeneous", "subspace vector is not homogeneous");
        deg = model.degrees[k];
      }
      if (!deg) continue;
      auto it = ech.try_emplace(*deg, f, dim).first;
      if (it->second.insert(v)) by_degree[*deg].push_back(v);
    }
  }
  if (by_degree.empty()) return free_module(model.ring, {});
  // Generators: complement of m*W inside W, degree by degree.
  std::vector<FpVector> gens;
  std::vector<int> gen_degs;
  for (const auto& [deg, basis] : by_degree) {
    EchelonBasis ech(f, dim);
    auto prev = by_degree.find(deg - 1);
    if (prev != by_degree.end())
      for (const auto& w : prev->second)
        for (const auto& a : model.actions) ech.insert(a.apply(w));
    for (const auto& w : basis)
      if (ech.insert(w)) {
        gens.push_back(w);
        gen_degs.push_back(deg);
      }
  }
  // Relations: kernel of Q^s -> W in each degree up to the top degree + 1.
  const int top = by_degree.rbegin()->first;
  FreeModule frame{spec.ring, gen_degs};
  std::vector<FreeElt> kernel;
  for (int t = gen_degs.front(); t <= top + 1; ++t) {
    struct Col {
      std::size_t gen;
      Monomial mono;
    };
    std::vector<Col> cols;
    std::vector<FpVector> images;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (const auto& mono : standard_monomials(spec, t - gen_degs[i])) {
        FpVector v = gens[i];
        for (std::size_t var = 0; var < spec.nvars(); ++var)
          for (int e = 0; e < mono[var]; ++e) v = model.actions[var].apply(v);
        cols.push_back({i, mono});
        images.push_back(std::move(v));
      }
    if (cols.empty()) continue;
    Matrix a(f, dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t k = 0; k < dim; ++k) a(k, j) = images[j][k];
    for (const auto& kv : nullspace(a)) {
      FreeElt e = FreeElt::zero(frame);
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (kv[j]) e.components[cols[j].gen] += Poly::term(spec.ring, cols[j].mono, kv[j]);
      kernel.push_back(std::move(e));
    }
  }
  std::vector<FreeElt> rels = minimal_generators(spec, frame, std::move(kernel));
  return present_module(model.ring, gen_degs,
                        PolyMatrix::from_columns(spec.ring, gen_degs.size(), rels));
}

}  // namespace civar

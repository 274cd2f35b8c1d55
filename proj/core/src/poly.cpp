#include "civar/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "civar/errors.hpp"

namespace civar {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
  if (vars_.size() > kMaxVars)
    throw InputError("too_many_variables", "at most " + std::to_string(kMaxVars) +
                                               " variables are supported");
  if (order_.nvars() != vars_.size()) throw InternalError("order/variable count mismatch");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j]) throw InputError("duplicate variable '" + vars_[i] + "'");
}

PolyRing::PolyRing(PrimeField field, std::vector<std::string> vars)
    : PolyRing(field, vars, MonomialOrder::degrevlex(vars.size())) {}

int PolyRing::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(std::uint64_t p, std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(vars));
}

Poly Poly::constant(RingPtr ring, Scalar c) { return term(std::move(ring), Monomial(), c); }

Poly Poly::variable(RingPtr ring, std::size_t index) {
  return term(std::move(ring), Monomial::variable(index), 1);
}

Poly Poly::term(RingPtr ring, const Monomial& m, Scalar c) {
  Poly p(std::move(ring));
  c = p.ring_->field().reduce(c);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<PolyTerm> terms) {
  Poly p(std::move(ring));
  const auto& ord = p.ring_->order();
  const auto& f = p.ring_->field();
  std::sort(terms.begin(), terms.end(), [&](const PolyTerm& a, const PolyTerm& b) {
    return ord.compare(a.mono, b.mono) > 0;
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = f.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff % f.characteristic() != 0) {
      p.terms_.push_back({t.mono, t.coeff % f.characteristic()});
    }
  }
  return p;
}

int Poly::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Poly::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Scalar Poly::constant_term() const noexcept {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

void Poly::require_same_ring(const Poly& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
    throw InternalError("polynomials from different rings combined");
}

Poly Poly::operator+(const Poly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  require_same_ring(o);
  const auto& ord = ring_->order();
  const auto& f = ring_->field();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    int c = ord.compare(a->mono, b->mono);
    if (c > 0) {
      r.terms_.push_back(*a++);
    } else if (c < 0) {
      r.terms_.push_back(*b++);
    } else {
      Scalar s = f.add(a->coeff, b->coeff);
      if (s) r.terms_.push_back({a->mono, s});
      ++a;
      ++b;
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, o.terms_.end());
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(Scalar c) const {
  if (c == 0 || is_zero()) return Poly(ring_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Poly Poly::times_term(const Monomial& m, Scalar c) const {
  if (c == 0 || is_zero()) return Poly(ring_);
  Poly r = *this;
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coeff = ring_->field().mul(t.coeff, c);
  }
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(ring_ ? ring_ : o.ring_);
  require_same_ring(o);
  Poly r(ring_);
  // Accumulate row products; each row is already sorted.
  for (const auto& t : o.terms_) r = r + times_term(t.mono, t.coeff);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(ring_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  const auto& f = ring_->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = f.signed_value(t.coeff);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::int64_t a = c < 0 ? -c : c;
    bool wrote = false;
    if (a != 1 || t.mono.is_one()) {
      os << a;
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      int e = t.mono[i];
      if (!e) continue;
      if (wrote) os << "*";
      os << ring_->vars()[i];
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Poly parse() {
    std::vector<PolyTerm> terms;
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      PolyTerm t = parse_term();
      if (negative) t.coeff = ring_->field().neg(t.coeff);
      terms.push_back(t);
      skip();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negative = c == '-';
      ++pos_;
    }
    return Poly::from_terms(ring_, std::move(terms));
  }

 private:
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw InputError("syntax", "polynomial syntax error at position " + std::to_string(pos_) +
                                   ": " + what + " in \"" + std::string(s_) + "\"");
  }
  std::uint64_t parse_uint() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > std::numeric_limits<std::uint64_t>::max() / 10 - 10) fail("integer too large");
      v = v * 10 + static_cast<unsigned>(s_[pos_++] - '0');
    }
    return v;
  }
  PolyTerm parse_term() {
    const auto& f = ring_->field();
    Scalar coeff = 1;
    std::array<int, kMaxVars> exps{};
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = static_cast<Scalar>(parse_uint() % f.characteristic());
      any = true;
    }
    while (true) {
      std::size_t save = pos_;
      char c = peek();
      if (c == '*') {
        if (!any) fail("unexpected '*'");
        ++pos_;
        c = peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected variable");
      }
      if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
        pos_ = save;
        break;
      }
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        throw InputError("unknown_variable", "unknown variable '" + std::string(name) +
                                                 "' at position " + std::to_string(start));
      }
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        std::uint64_t v = parse_uint();
        if (v > 255) fail("exponent too large");
        e = static_cast<int>(v);
      }
      exps[static_cast<std::size_t>(idx)] += e;
      if (exps[static_cast<std::size_t>(idx)] > 255) fail("exponent too large");
      any = true;
    }
    if (!any) fail("expected term");
    return {Monomial(std::span<const int>(exps.data(), ring_->nvars())), coeff};
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly poly_parse(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

Poly embed(const Poly& p, const RingPtr& target, std::span<const std::size_t> var_map) {
  std::vector<PolyTerm> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::array<int, kMaxVars> e{};
    for (std::size_t i = 0; i < var_map.size(); ++i) e[var_map[i]] += t.mono[i];
    terms.push_back({Monomial(std::span<const int>(e.data(), target->nvars())), t.coeff});
  }
  return Poly::from_terms(target, std::move(terms));
}

}  // namespace civar

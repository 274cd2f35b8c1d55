#include "civar/univariate.hpp"

#include <algorithm>

#include "civar/errors.hpp"

namespace civar {

UPoly::UPoly(PrimeField field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& v : c_) v %= field_.characteristic();
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.add(r[i], o.c_[i]);
  return UPoly(field_, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.sub(r[i], o.c_[i]);
  return UPoly(field_, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(field_, {});
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
  return UPoly(field_, std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw InternalError("univariate division by zero");
  std::vector<Scalar> rem = c_;
  if (rem.size() < d.c_.size()) return {UPoly(field_, {}), *this};
  std::vector<Scalar> q(rem.size() - d.c_.size() + 1, 0);
  Scalar inv = field_.inv(d.lead());
  for (std::size_t k = q.size(); k-- > 0;) {
    Scalar coef = field_.mul(rem[k + d.c_.size() - 1], inv);
    q[k] = coef;
    if (!coef) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j)
      rem[k + j] = field_.sub(rem[k + j], field_.mul(coef, d.c_[j]));
  }
  return {UPoly(field_, std::move(q)), UPoly(field_, std::move(rem))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = field_.inv(lead());
  std::vector<Scalar> r = c_;
  for (auto& v : r) v = field_.mul(v, inv);
  return UPoly(field_, std::move(r));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(field_, {});
  std::vector<Scalar> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = field_.mul(c_[i], field_.reduce(static_cast<std::int64_t>(i)));
  return UPoly(field_, std::move(r));
}

Matrix UPoly::evaluate(const Matrix& a) const {
  Matrix result(a.field(), a.rows(), a.cols());
  Matrix id = Matrix::identity(a.field(), a.rows());
  for (std::size_t k = c_.size(); k-- > 0;) result = result * a + id.scaled(c_[k]);
  return result;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const UPoly& a, const UPoly& b) {
  const auto& f = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(f, 1), s1(f, {});
  UPoly t0(f, {}), t1 = UPoly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  UPoly inv = UPoly::constant(f, f.inv(r0.lead()));
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly powmod(UPoly base, std::uint64_t e, const UPoly& mod) {
  UPoly result = UPoly::constant(base.field(), 1) % mod;
  base = base % mod;
  while (e) {
    if (e & 1) result = (result * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return result;
}

namespace {

UPoly pth_root(const UPoly& f) {
  const std::size_t p = f.field().characteristic();
  std::vector<Scalar> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i]);
  return UPoly(f.field(), std::move(r));
}

void square_free(const UPoly& f, int scale, std::vector<std::pair<UPoly, int>>& out) {
  if (f.degree() <= 0) return;
  const int p = static_cast<int>(f.field().characteristic());
  UPoly c = gcd(f, f.derivative());
  UPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i * scale});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) square_free(pth_root(c).monic(), scale * p, out);
}

std::vector<std::pair<UPoly, int>> distinct_degree(UPoly f) {
  std::vector<std::pair<UPoly, int>> out;
  const auto& field = f.field();
  const std::uint64_t p = field.characteristic();
  UPoly x = UPoly::x(field);
  UPoly h = x % f;
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = powmod(h, p, f);
    UPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.push_back({g, i});
      f = f / g;
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.push_back({f.monic(), f.degree()});
  return out;
}

void equal_degree(const UPoly& f, int d, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const auto& field = f.field();
  const std::uint64_t p = field.characteristic();
  std::uniform_int_distribution<Scalar> dist(0, static_cast<Scalar>(p - 1));
  while (true) {
    std::vector<Scalar> coeffs(static_cast<std::size_t>(f.degree()));
    for (auto& c : coeffs) c = dist(rng);
    UPoly a(field, std::move(coeffs));
    if (a.degree() <= 0) continue;
    UPoly g = gcd(a, f);
    if (g.degree() <= 0) {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p - 1)/2)
      UPoly t = a % f, s = a % f;
      for (int k = 1; k < d; ++k) {
        t = powmod(t, p, f);
        s = (s * t) % f;
      }
      UPoly b = powmod(s, (p - 1) / 2, f);
      g = gcd(b - UPoly::constant(field, 1), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor(const UPoly& f, std::mt19937_64& rng) {
  if (f.is_zero()) throw InternalError("factorization of the zero polynomial");
  std::vector<std::pair<UPoly, int>> sqf;
  square_free(f.monic(), 1, sqf);
  std::vector<Factor> out;
  for (auto& [g, mult] : sqf) {
    for (auto& [h, d] : distinct_degree(g)) {
      std::vector<UPoly> irr;
      equal_degree(h, d, rng, irr);
      for (auto& q : irr) out.push_back({q, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.poly.coeffs() < b.poly.coeffs();
  });
  return out;
}

UPoly minimal_polynomial(const Matrix& a) {
  const auto& field = a.field();
  const std::size_t n = a.rows();
  const std::size_t n2 = n * n;
  // Column k of the Krylov matrix is vec(a^k).
  std::vector<Matrix> powers{Matrix::identity(field, n)};
  for (std::size_t k = 1;; ++k) {
    powers.push_back(powers.back() * a);
    Matrix krylov(field, n2, k);
    FpVector rhs(n2);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t e = 0; e < n2; ++e) krylov(e, j) = powers[j](e / n, e % n);
    for (std::size_t e = 0; e < n2; ++e) rhs[e] = powers[k](e / n, e % n);
    auto sol = solve_linear(krylov, rhs);
    if (sol.consistent) {
      std::vector<Scalar> c(k + 1);
      for (std::size_t j = 0; j < k; ++j) c[j] = field.neg(sol.particular[j]);
      c[k] = 1;
      return UPoly(field, std::move(c));
    }
  }
}

}  // namespace civar

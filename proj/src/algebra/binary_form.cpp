#include "quatroid/algebra/binary_form.hpp"

#include <algorithm>
#include <sstream>

namespace quat {

namespace {

// univariate polynomials, ascending powers, no trailing zeros
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  r = a;
  q.assign(std::max(0, deg(a) - deg(b) + 1), Rational(0));
  const Rational& lb = b.back();
  while (!r.empty() && deg(r) >= deg(b)) {
    int s = deg(r) - deg(b);
    Rational f = r.back() / lb;
    q[s] = f;
    for (std::size_t j = 0; j < b.size(); ++j) r[s + j] -= f * b[j];
    trim(r);
  }
  trim(q);
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

UPoly monic(UPoly p) {
  if (p.empty()) return p;
  Rational l = p.back();
  for (auto& c : p) c /= l;
  return p;
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Rational eval(const UPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// integer coefficients with content 1
UPoly primitive_u(const UPoly& p) {
  RatVector v(static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) v(i) = p[i];
  auto w = primitive_part(v);
  UPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rational(w(i));
  return out;
}

// F(x, 1) and the power of t1 split off
UPoly dehomogenize(const BinaryForm& f, int& t1_power) {
  t1_power = f.order_at_infinity();
  const int d = f.degree();
  UPoly u(d + 1 - t1_power);
  for (int j = 0; j <= d - t1_power; ++j) u[j] = f[d - j];
  trim(u);
  return u;
}

BinaryForm homogenize(const UPoly& u, int degree) {
  std::vector<Rational> c(degree + 1, Rational(0));
  for (int j = 0; j <= deg(u); ++j) c[degree - j] = u[j];
  return BinaryForm(std::move(c));
}

using i64 = long long;

i64 mod_of(const Integer& x, i64 p) {
  Integer r = x % p;
  i64 v = r.convert_to<i64>();
  return v < 0 ? v + p : v;
}

i64 pow_mod(i64 a, i64 e, i64 p) {
  i64 r = 1;
  for (a %= p; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

using ModPoly = std::vector<i64>;  // ascending, mod p

void trim_mod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, i64 p) {
  const i64 inv = pow_mod(b.back(), p - 2, p);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t s = a.size() - b.size();
    const i64 f = a.back() * inv % p;
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] = ((a[s + j] - f * b[j]) % p + p) % p;
    trim_mod(a);
  }
  return a;
}

int mod_gcd_degree(ModPoly a, ModPoly b, i64 p) {
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer eval_int(const std::vector<Integer>& c, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % m;
  return acc;
}

// a/b = r mod m with |a|, b <= sqrt(m/2)
std::optional<Rational> reconstruct(const Integer& r, const Integer& m) {
  const Integer limit = mp::sqrt(m / 2);
  Integer r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > limit) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1, r1 = r2, t0 = t1, t1 = t2;
  }
  if (t1 == 0 || mp::abs(t1) > limit) return std::nullopt;
  return Rational(r1, t1);
}

// Rational roots of a squarefree polynomial. A root a/b in lowest terms has
// b | lc and a | g(0), so mod a prime p not dividing lc it is a simple root;
// Hensel lifting to p^(2^k) > 2 max(|lc|, |g(0)|)^2 and rational
// reconstruction recover it.
std::vector<Rational> squarefree_rational_roots(const UPoly& g0) {
  std::vector<Rational> out;
  if (deg(g0) < 1) return out;
  UPoly g = primitive_u(g0);
  if (g[0].is_zero()) {
    out.push_back(Rational(0));
    g.erase(g.begin());
    if (deg(g) < 1) return out;
  }
  if (deg(g) == 1) {
    out.push_back(-g[0] / g[1]);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Integer> c;
  for (const auto& x : g) c.push_back(numer(x));
  std::vector<Integer> dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<long>(i));
  const Integer bound = std::max(mp::abs(c.front()), mp::abs(c.back()));
  const Integer need = 2 * bound * bound;

  i64 p = 1009;
  ModPoly gp, dp;
  for (;; p += 2) {
    if (p > 2000000) throw std::logic_error("no good prime for rational root search");
    if (!is_prime(p) || mod_of(c.back(), p) == 0) continue;
    gp.clear();
    dp.clear();
    for (const auto& x : c) gp.push_back(mod_of(x, p));
    for (const auto& x : dc) dp.push_back(mod_of(x, p));
    trim_mod(dp);
    if (!dp.empty() && mod_gcd_degree(gp, dp, p) == 0) break;
  }
  for (i64 r = 0; r < p; ++r) {
    i64 v = 0;
    for (auto it = gp.rbegin(); it != gp.rend(); ++it) v = (v * r + *it) % p;
    if (v != 0) continue;
    Integer m = p, x = r;
    while (m <= need) {
      m = m * m;
      Integer fx = eval_int(c, x, m), dx = eval_int(dc, x, m), inv;
      if (dx < 0) dx += m;
      mpz_invert(inv.backend().data(), dx.backend().data(), m.backend().data());
      x = (x - fx * inv) % m;
      if (x < 0) x += m;
    }
    auto q = reconstruct(x, m);
    if (!q) continue;
    Rational val = 0;
    for (auto it = g.rbegin(); it != g.rend(); ++it) val = val * *q + *it;
    if (val.is_zero()) out.push_back(*q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.is_zero(); });
}

Rational BinaryForm::operator()(const Rational& t0, const Rational& t1) const {
  Rational acc = 0;
  const int d = degree();
  for (int k = 0; k <= d; ++k) {
    if (c_[k].is_zero()) continue;
    acc += c_[k] * pow(t0, d - k) * pow(t1, k);
  }
  return acc;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.c_.empty()) return b;
  if (b.c_.empty()) return a;
  if (a.degree() != b.degree()) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    throw std::invalid_argument("BinaryForm: adding forms of different degree");
  }
  BinaryForm r = a;
  for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[k] += b.c_[k];
  return r;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + b * Rational(-1); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  if (a.c_.empty() || b.c_.empty()) return BinaryForm();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return BinaryForm(std::move(c));
}

BinaryForm operator*(BinaryForm a, const Rational& s) {
  for (auto& x : a.c_) x *= s;
  return a;
}

int BinaryForm::order_at_infinity() const {
  if (is_zero()) throw ZeroForm();
  int k = 0;
  while (c_[k].is_zero()) ++k;
  return k;
}

std::string BinaryForm::str() const {
  std::ostringstream os;
  const int d = degree();
  bool first = true;
  for (int k = 0; k <= d; ++k) {
    if (c_[k].is_zero()) continue;
    Rational a = c_[k];
    if (a < 0) {
      os << (first ? "-" : " - ");
      a = -a;
    } else if (!first) {
      os << " + ";
    }
    bool mono = (d - k) > 0 || k > 0;
    if (a != 1 || !mono) os << a << (mono ? "*" : "");
    std::string sep;
    if (d - k > 0) {
      os << "t0";
      if (d - k > 1) os << "^" << d - k;
      sep = "*";
    }
    if (k > 0) {
      os << sep << "t1";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

BinaryForm power(const BinaryForm& f, int e) {
  BinaryForm r = BinaryForm::constant(Rational(1));
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw ZeroForm();
  if (f.is_zero()) return BinaryForm::zero(std::max(0, f.degree() - g.degree()));
  if (f.degree() < g.degree()) return std::nullopt;
  int af, ag;
  UPoly uf = dehomogenize(f, af), ug = dehomogenize(g, ag);
  if (ag > af) return std::nullopt;
  UPoly q, r;
  divmod(uf, ug, q, r);
  if (!r.empty()) return std::nullopt;
  return homogenize(q, f.degree() - g.degree());
}

bool proportional(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) return false;
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  int k = f.order_at_infinity();
  if (g[k].is_zero()) return false;
  Rational s = g[k] / f[k];
  for (int i = 0; i <= f.degree(); ++i)
    if (f[i] * s != g[i]) return false;
  return true;
}

BinaryForm primitive(const BinaryForm& f) {
  RatVector v(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) v(i) = f[i];
  auto w = primitive_part(v);
  std::vector<Rational> c(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) c[i] = Rational(w(i));
  return BinaryForm(std::move(c));
}

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero()) return primitive(g);
  if (g.is_zero()) return primitive(f);
  int af, ag;
  UPoly uf = dehomogenize(f, af), ug = dehomogenize(g, ag);
  UPoly h = ugcd(uf, ug);
  int a = std::min(af, ag);
  return primitive(homogenize(h, deg(h) + a));
}

std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f) {
  if (f.is_zero()) throw ZeroForm();
  int a;
  UPoly u = dehomogenize(f, a);
  std::vector<std::pair<UPoly, int>> parts;
  if (deg(u) > 0) {
    // Yun
    UPoly du = derivative(u);
    UPoly g = ugcd(u, du);
    UPoly q, r, b, c, d;
    divmod(u, g, b, r);
    divmod(du, g, c, r);
    d = sub(c, derivative(b));
    int i = 1;
    while (deg(b) > 0) {
      UPoly h = ugcd(b, d);
      if (deg(h) > 0) parts.push_back({h, i});
      UPoly nb, nc;
      divmod(b, h, nb, r);
      divmod(d, h, nc, r);
      b = nb;
      d = sub(nc, derivative(b));
      ++i;
    }
  }
  std::vector<std::pair<BinaryForm, int>> out;
  for (auto& [p, m] : parts) {
    UPoly pm = p;
    int extra = (m == a) ? 1 : 0;
    out.push_back({primitive(homogenize(pm, deg(pm) + extra)), m});
  }
  if (a > 0 && std::none_of(parts.begin(), parts.end(), [&](const auto& e) { return e.second == a; }))
    out.push_back({BinaryForm::linear(Rational(0), Rational(1)), a});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

std::vector<ProjectiveRoot> rational_roots(const BinaryForm& f) {
  std::vector<ProjectiveRoot> out;
  for (const auto& [g, m] : squarefree_decomposition(f)) {
    int a;
    UPoly u = dehomogenize(g, a);
    for (const Rational& x : squarefree_rational_roots(u)) out.push_back({numer(x), denom(x), m});
    if (a > 0) out.push_back({Integer(1), Integer(0), m});
  }
  std::sort(out.begin(), out.end(), [](const ProjectiveRoot& x, const ProjectiveRoot& y) {
    if (x.at_infinity() != y.at_infinity()) return y.at_infinity();
    if (x.at_infinity()) return false;
    return Rational(x.a, x.b) < Rational(y.a, y.b);
  });
  return out;
}

BinaryForm interpolate_form(int degree, const std::function<Rational(const Rational&, const Rational&)>& value) {
  // F(1, k) = sum_j c_j k^j for k = 0..d-1, and c_d = F(0, 1)
  const int d = degree;
  Rational cd = value(Rational(0), Rational(1));
  std::vector<Rational> xs(d), ys(d);
  for (int k = 0; k < d; ++k) {
    xs[k] = k;
    ys[k] = value(Rational(1), Rational(k)) - cd * pow(Rational(k), d);
  }
  // Newton divided differences
  std::vector<Rational> coef = ys;
  for (int j = 1; j < d; ++j)
    for (int i = d - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  UPoly p;
  for (int i = d - 1; i >= 0; --i) {
    // p = p * (x - xs[i]) + coef[i]
    UPoly lin{-xs[i], Rational(1)};
    p = mul(p, lin);
    if (p.empty()) p.push_back(Rational(0));
    p[0] += coef[i];
    trim(p);
  }
  std::vector<Rational> c(d + 1, Rational(0));
  for (int j = 0; j <= deg(p); ++j) c[j] = p[j];
  c[d] = cd;
  return BinaryForm(std::move(c));
}

}  // namespace quat

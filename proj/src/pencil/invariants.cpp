#include "quatroid/pencil/cubic.hpp"

#include <stdexcept>

namespace quat {

const std::array<std::array<int, 3>, 10>& cubic_monomials() {
  static const std::array<std::array<int, 3>, 10> m = {{{3, 0, 0},
                                                        {2, 1, 0},
                                                        {2, 0, 1},
                                                        {1, 2, 0},
                                                        {1, 1, 1},
                                                        {1, 0, 2},
                                                        {0, 3, 0},
                                                        {0, 2, 1},
                                                        {0, 1, 2},
                                                        {0, 0, 3}}};
  return m;
}

namespace {

int monomial_index(int a, int b, int c) {
  const auto& m = cubic_monomials();
  for (int k = 0; k < 10; ++k)
    if (m[k][0] == a && m[k][1] == b && m[k][2] == c) return k;
  return -1;
}

}  // namespace

std::array<Rational, 10> cubic_row(const RatVector& x) {
  std::array<Rational, 10> r;
  const auto& m = cubic_monomials();
  for (int k = 0; k < 10; ++k) r[k] = pow(x(0), m[k][0]) * pow(x(1), m[k][1]) * pow(x(2), m[k][2]);
  return r;
}

Cubic Cubic::from_poly(const MultiPoly& f) {
  if (f.nvars() != 3) throw std::invalid_argument("cubic needs 3 variables");
  Cubic c;
  for (const auto& [e, v] : f.terms()) {
    int k = monomial_index(e[0], e[1], e[2]);
    if (k < 0) throw std::invalid_argument("not a ternary cubic form: " + f.str());
    c.c[k] = v;
  }
  return c;
}

Cubic Cubic::from_vector(const RatVector& v) {
  if (v.size() != 10) throw std::invalid_argument("cubic needs 10 coefficients");
  Cubic c;
  for (int k = 0; k < 10; ++k) c.c[k] = v(k);
  return c;
}

MultiPoly Cubic::poly() const {
  MultiPoly f({"x0", "x1", "x2"});
  const auto& m = cubic_monomials();
  for (int k = 0; k < 10; ++k)
    if (!quat::is_zero(c[k])) f.add_term({m[k][0], m[k][1], m[k][2]}, c[k]);
  return f;
}

RatVector Cubic::vector() const {
  RatVector v(10);
  for (int k = 0; k < 10; ++k) v(k) = c[k];
  return v;
}

bool Cubic::is_zero() const {
  for (const auto& x : c)
    if (!quat::is_zero(x)) return false;
  return true;
}

Rational Cubic::operator()(const RatVector& x) const {
  auto row = cubic_row(x);
  Rational s = 0;
  for (int k = 0; k < 10; ++k) s += c[k] * row[k];
  return s;
}

RatVector Cubic::gradient(const RatVector& x) const {
  const auto& m = cubic_monomials();
  RatVector g = RatVector::Zero(3);
  for (int k = 0; k < 10; ++k) {
    if (quat::is_zero(c[k])) continue;
    for (int i = 0; i < 3; ++i) {
      if (m[k][i] == 0) continue;
      auto e = m[k];
      e[i] -= 1;
      g(i) += c[k] * m[k][i] * pow(x(0), e[0]) * pow(x(1), e[1]) * pow(x(2), e[2]);
    }
  }
  return g;
}

RatMatrix Cubic::hessian(const RatVector& x) const {
  const auto& m = cubic_monomials();
  RatMatrix h = RatMatrix::Zero(3, 3);
  for (int k = 0; k < 10; ++k) {
    if (quat::is_zero(c[k])) continue;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        auto e = m[k];
        Rational f = e[i];
        e[i] -= 1;
        if (e[i] < 0) continue;
        f *= e[j];
        e[j] -= 1;
        if (e[j] < 0 || quat::is_zero(f)) continue;
        h(i, j) += c[k] * f * pow(x(0), e[0]) * pow(x(1), e[1]) * pow(x(2), e[2]);
      }
  }
  return h;
}

Cubic Cubic::normalized() const {
  if (is_zero()) return *this;
  return from_vector(quat::normalized(vector()));
}

Cubic operator+(const Cubic& a, const Cubic& b) {
  Cubic r;
  for (int k = 0; k < 10; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

Cubic operator*(const Rational& s, const Cubic& a) {
  Cubic r;
  for (int k = 0; k < 10; ++k) r.c[k] = s * a.c[k];
  return r;
}

namespace {

// symbolic method: f = (a.x)^3 for umbral vectors a, b, ...; a bracket
// monomial of degree 3 in each symbol becomes a polynomial in the coefficients
// via a^alpha -> f_alpha * alpha! / 3!
MultiPoly bracket(int nsym, int u, int v, int w) {
  auto var = [&](int s, int i) { return MultiPoly::variable(3 * nsym, 3 * s + i); };
  MultiPoly d(3 * nsym);
  const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int k = 0; k < 6; ++k) {
    MultiPoly t = var(u, perm[k][0]) * var(v, perm[k][1]) * var(w, perm[k][2]);
    d += k < 3 ? t : -t;
  }
  return d;
}

MultiPoly umbral_to_coefficients(const MultiPoly& sym, int nsym) {
  static const int fact[4] = {1, 1, 2, 6};
  MultiPoly out(10);
  for (const auto& [e, v] : sym.terms()) {
    MultiPoly::Exponent ce(10, 0);
    Rational scale = v;
    for (int s = 0; s < nsym; ++s) {
      int a = e[3 * s], b = e[3 * s + 1], c = e[3 * s + 2];
      int k = monomial_index(a, b, c);
      if (k < 0) throw std::logic_error("symbolic expression not of degree 3 in each symbol");
      ce[k] += 1;
      scale *= Rational(fact[a] * fact[b] * fact[c], 6);
    }
    out.add_term(ce, scale);
  }
  return out;
}

Cubic hesse(const Rational& m) {
  Cubic h;
  h.c[0] = h.c[6] = h.c[9] = 1;
  h.c[4] = 6 * m;
  return h;
}

std::vector<std::string> coefficient_names() {
  std::vector<std::string> n;
  for (int k = 0; k < 10; ++k) n.push_back("c" + std::to_string(k));
  return n;
}

MultiPoly scaled_to(MultiPoly raw, const Rational& m, const Rational& target) {
  const Cubic h = hesse(m);
  Rational v = raw(std::vector<Rational>(h.c.begin(), h.c.end()));
  if (is_zero(v)) throw std::logic_error("invariant vanishes at the normalization point");
  raw *= target / v;
  raw.set_names(coefficient_names());
  return raw;
}

}  // namespace

const MultiPoly& aronhold_S() {
  static const MultiPoly s = [] {
    MultiPoly sym = bracket(4, 0, 1, 2) * bracket(4, 0, 1, 3) * bracket(4, 0, 2, 3) * bracket(4, 1, 2, 3);
    return scaled_to(umbral_to_coefficients(sym, 4), Rational(2), Rational(14));
  }();
  return s;
}

const MultiPoly& aronhold_T() {
  static const MultiPoly t = [] {
    // a b c d e f = 0..5
    MultiPoly def = bracket(6, 3, 4, 5);
    MultiPoly sym = bracket(6, 0, 1, 2) * bracket(6, 0, 1, 3) * bracket(6, 0, 2, 4) * bracket(6, 1, 2, 5) * def * def;
    return scaled_to(umbral_to_coefficients(sym, 6), Rational(0), Rational(1));
  }();
  return t;
}

Rational aronhold_S(const Cubic& c) { return aronhold_S()(std::vector<Rational>(c.c.begin(), c.c.end())); }
Rational aronhold_T(const Cubic& c) { return aronhold_T()(std::vector<Rational>(c.c.begin(), c.c.end())); }

Rational discriminant(const Cubic& c) {
  Rational s = aronhold_S(c), t = aronhold_T(c);
  return 64 * s * s * s - t * t;
}

BinaryForm pencil_disc(const Pencil& l) {
  std::vector<BinaryForm> xs;
  for (int k = 0; k < 10; ++k) xs.push_back(BinaryForm::linear(l.c0.c[k], l.c1.c[k]));
  const BinaryForm zero, one = BinaryForm::constant(1);
  BinaryForm s = aronhold_S().evaluate(xs, zero, one);
  BinaryForm t = aronhold_T().evaluate(xs, zero, one);
  BinaryForm f = Rational(64) * (s * s * s) - t * t;
  if (f.is_zero()) return BinaryForm::zero(12);
  return f;
}

}  // namespace quat

#include "quatroid/pencil/pencil.hpp"

#include <random>

namespace quat {

namespace {

Pencil guarded_pencil(const Configuration& p) {
  CubicSystem sys = cubic_system(p);
  if (!sys.finite() || sys.dimension != 2) throw GuardViolation("base locus is not zero-dimensional");
  return sys.pencil();
}

// coefficients of C(s, t, z) as a polynomial in z, constant term first
std::array<Rational, 4> in_z(const Cubic& c, const Rational& s, const Rational& t) {
  std::array<Rational, 4> out{};
  const auto& m = cubic_monomials();
  for (int k = 0; k < 10; ++k) out[m[k][2]] += c.c[k] * pow(s, m[k][0]) * pow(t, m[k][1]);
  return out;
}

Rational resultant_in_z(const Cubic& a, const Cubic& b, const Rational& s, const Rational& t) {
  auto f = in_z(a, s, t), g = in_z(b, s, t);
  RatMatrix syl = RatMatrix::Zero(6, 6);
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 4; ++k) {
      syl(r, r + k) = f[3 - k];
      syl(r + 3, r + k) = g[3 - k];
    }
  return determinant(syl);
}

RatMatrix adjugate(const RatMatrix& m) {
  Eigen::Matrix<Rational, 3, 1> c0 = m.col(0), c1 = m.col(1), c2 = m.col(2);
  RatMatrix a(3, 3);
  a.row(0) = cross<Rational>(c1, c2).transpose();
  a.row(1) = cross<Rational>(c2, c0).transpose();
  a.row(2) = cross<Rational>(c0, c1).transpose();
  return a;
}

bool same_point(const RatVector& a, const RatVector& b) {
  Eigen::Matrix<Rational, 3, 1> u = a, v = b;
  return cross<Rational>(u, v).isZero();
}

}  // namespace

std::optional<int> nonreduced_base_locus(const Configuration& p) {
  Pencil l = guarded_pencil(p);
  for (int i = 0; i < p.size(); ++i) {
    RatMatrix g(2, 3);
    g.row(0) = l.c0.gradient(p.point(i)).transpose();
    g.row(1) = l.c1.gradient(p.point(i)).transpose();
    if (rank(g) <= 1) return i;
  }
  return std::nullopt;
}

BaseLocus cayley_bacharach(const Configuration& p, std::uint64_t seed) {
  guarded_pencil(p);
  const auto tangent = nonreduced_base_locus(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  const int n = p.size();
  for (int attempt = 0; attempt < 32; ++attempt) {
    RatMatrix m(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = coef(rng);
    if (is_zero(determinant(m))) continue;
    Configuration q(m * p.points);
    Pencil l = cubic_system(q).pencil();
    l.c0 = l.c0 + Rational(coef(rng)) * l.c1;
    RatVector e2 = RatVector::Unit(3, 2);
    if (is_zero(l.c0(e2)) || is_zero(l.c1(e2))) continue;

    // the 9 base points project from [0:0:1] to the roots of the resultant
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i)
      for (int j = 0; j < i && distinct; ++j)
        distinct = !is_zero(q.points(0, i) * q.points(1, j) - q.points(1, i) * q.points(0, j));
    if (!distinct) continue;
    BinaryForm res = interpolate_form(9, [&](const Rational& s, const Rational& t) { return resultant_in_z(l.c0, l.c1, s, t); });
    if (res.is_zero()) continue;
    bool divisible = true;
    for (int i = 0; i < n && divisible; ++i) {
      auto quo = divide_exact(res, BinaryForm::linear(q.points(1, i), -q.points(0, i)));
      if (quo) res = *quo;
      divisible = quo.has_value();
    }
    if (!divisible || res.degree() != 1) continue;
    const Rational b0 = res[1], b1 = -res[0];

    std::optional<int> same;
    for (int i = 0; i < n; ++i)
      if (is_zero(q.points(0, i) * b1 - q.points(1, i) * b0)) same = i;
    if (same) {
      // p9 projects onto p_i: either p9 = p_i or another base point shares the fibre
      if (tangent == same) {
        BaseLocus out;
        for (int i = 0; i < n; ++i) out.points.push_back(normalized(p.point(i)));
        out.points.push_back(out.points[*same]);
        out.nonreduced = *same;
        return out;
      }
      continue;
    }
    // the fibre over [b0:b1] is the line {(s b0, s b1, t)}
    auto on_fibre = [&](const Cubic& c) {
      return interpolate_form(3, [&](const Rational& s, const Rational& t) {
        RatVector x(3);
        x << s * b0, s * b1, t;
        return c(x);
      });
    };
    BinaryForm g = gcd(on_fibre(l.c0), on_fibre(l.c1));
    auto roots = rational_roots(g);
    if (g.degree() != 1 || roots.size() != 1) continue;
    RatVector q9(3);
    q9 << Rational(roots[0].a) * b0, Rational(roots[0].a) * b1, Rational(roots[0].b);
    RatVector p9 = normalized(RatVector(adjugate(m) * q9));
    Pencil orig = cubic_system(p).pencil();
    if (!is_zero(orig.c0(p9)) || !is_zero(orig.c1(p9)))
      throw std::logic_error("Cayley-Bacharach point is not a base point");
    BaseLocus out;
    for (int i = 0; i < n; ++i) {
      if (same_point(p.point(i), p9)) throw std::logic_error("reduced base locus with a repeated point");
      out.points.push_back(normalized(p.point(i)));
    }
    if (tangent) throw std::logic_error("singular member at a point but the residual point is elsewhere");
    out.points.push_back(p9);
    return out;
  }
  throw std::runtime_error("cayley_bacharach: no admissible coordinate change in 32 attempts");
}

}  // namespace quat

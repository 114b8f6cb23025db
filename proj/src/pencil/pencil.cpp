#include "quatroid/pencil/pencil.hpp"

#include <algorithm>

namespace quat {

Pencil CubicSystem::pencil() const {
  if (dimension != 2) throw GuardViolation("cubics through p do not form a pencil");
  return {basis[0], basis[1]};
}

CubicSystem cubic_system(const Configuration& p) {
  check_distinct(p);
  const int n = p.size();
  RatMatrix v(n, 10);
  for (int i = 0; i < n; ++i) {
    auto row = cubic_row(p.point(i));
    for (int k = 0; k < 10; ++k) v(i, k) = row[k];
  }
  CubicSystem sys;
  for (const auto& k : kernel_basis(v)) sys.basis.push_back(Cubic::from_vector(k));
  sys.dimension = static_cast<int>(sys.basis.size());

  for (int i = 0; i < n && !sys.four_collinear; ++i)
    for (int j = i + 1; j < n && !sys.four_collinear; ++j) {
      int on = 0;
      for (int k = 0; k < n; ++k) {
        Eigen::Matrix<Rational, 3, 3> m;
        m << p.points.col(i), p.points.col(j), p.points.col(k);
        if (is_zero(det3<Rational>(m))) ++on;
      }
      sys.four_collinear = on >= 4;
    }
  if (n >= 7) {
    for (unsigned mask = 0; mask < (1u << n) && !sys.seven_on_conic; ++mask) {
      if (popcount(mask) != 7) continue;
      RatMatrix q(7, 6);
      int r = 0;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) {
          auto row = quadric_row(p.point(i));
          for (int k = 0; k < 6; ++k) q(r, k) = row[k];
          ++r;
        }
      sys.seven_on_conic = rank(q) <= 5;
    }
  }
  return sys;
}

namespace {

PointMask points_on(const MultiPoly& line, const Configuration& p) {
  PointMask m = 0;
  for (int i = 0; i < p.size(); ++i) {
    RatVector x = p.point(i);
    if (is_zero(line({x(0), x(1), x(2)}))) m |= static_cast<PointMask>(1u << i);
  }
  return m;
}

}  // namespace

PencilIntersection count_rational(const Configuration& p) {
  CubicSystem sys = cubic_system(p);
  Pair q = quatroid_of(p);
  const bool bez = is_bezoutian(q);
  if (bez != sys.finite())
    throw ConsistencyViolation("Bezoutian test and the four-on-a-line / seven-on-a-conic test disagree");
  if (!bez) {
    if (sys.dimension == 2 && !pencil_disc(sys.pencil()).is_zero())
      throw ConsistencyViolation("non-Bezoutian configuration with finitely many singular cubics");
    throw NotBezoutian();
  }
  if (sys.dimension != 2) throw ConsistencyViolation("Bezoutian configuration without a pencil of cubics");

  PencilIntersection out;
  out.pencil = sys.pencil();
  out.disc = pencil_disc(out.pencil);
  if (out.disc.is_zero()) throw ConsistencyViolation("Bezoutian configuration whose pencil lies in the discriminant");

  int r = 0, rational_degree = 0;
  for (const auto& root : rational_roots(out.disc)) {
    Member m;
    m.root = root;
    m.cubic = out.pencil.member(Rational(root.a), Rational(root.b)).normalized();
    m.type = classify_singular(m.cubic);
    m.factors = factor_cubic(m.cubic, p);
    if (m.factors.reducible() != is_reducible(m.type))
      throw ConsistencyViolation("member " + root.str() + " classified " + type_name(m.type) +
                                 " but factors as " + m.factors.str());
    for (const auto& l : m.factors.lines) m.line_points.push_back(points_on(l, p));
    if (m.factors.reducible()) r += root.multiplicity;
    rational_degree += root.multiplicity;
    out.members.push_back(std::move(m));
  }
  out.irrational_degree = 12 - rational_degree;
  out.r = r;
  out.d = 12 - r;

  // the reducible members are exactly those predicted by the lines and conics of q
  ReducibleProfile prof = reducible_profile(q);
  std::vector<PointMask> secants, want_secants = prof.conic_secant_lines;
  std::vector<std::array<PointMask, 3>> triangles, want_triangles = prof.triangles;
  for (const auto& m : out.members) {
    if (m.line_points.size() == 1) secants.push_back(m.line_points[0]);
    if (m.line_points.size() == 3) {
      std::array<PointMask, 3> k{m.line_points[0], m.line_points[1], m.line_points[2]};
      std::sort(k.begin(), k.end());
      triangles.push_back(k);
    }
    if (m.line_points.size() == 2) throw ConsistencyViolation("member with exactly two rational lines");
  }
  std::sort(secants.begin(), secants.end());
  std::sort(want_secants.begin(), want_secants.end());
  std::sort(triangles.begin(), triangles.end());
  std::sort(want_triangles.begin(), want_triangles.end());
  if (secants != want_secants || triangles != want_triangles)
    throw ConsistencyViolation("reducible members differ from those predicted by " + pair_str(q));
  return out;
}

}  // namespace quat

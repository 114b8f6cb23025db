#include "quatroid/realization/configuration.hpp"

#include <sstream>

namespace quat {

void check_distinct(const Configuration& p) {
  if (p.points.rows() != 3) throw DegenerateInput("points need 3 homogeneous coordinates");
  for (int i = 0; i < p.size(); ++i) {
    if (p.points.col(i).isZero()) throw DegenerateInput("point " + std::to_string(i + 1) + " is zero");
    for (int j = 0; j < i; ++j) {
      Eigen::Matrix<Rational, 3, 1> u = p.points.col(i), v = p.points.col(j);
      if (cross<Rational>(u, v).isZero())
        throw DegenerateInput("points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
    }
  }
}

Configuration parse_configuration(const std::string& text) {
  std::vector<std::vector<Rational>> rows(1);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "/") {
      rows.emplace_back();
      continue;
    }
    try {
      rows.back().push_back(Rational(tok));
    } catch (const std::exception&) {
      throw DegenerateInput("bad matrix entry '" + tok + "'");
    }
  }
  if (rows.size() != 3) throw DegenerateInput("expected 3 rows separated by '/'");
  const std::size_t n = rows[0].size();
  if (n == 0 || rows[1].size() != n || rows[2].size() != n) throw DegenerateInput("rows of unequal length");
  RatMatrix m(3, static_cast<Eigen::Index>(n));
  for (int r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, static_cast<Eigen::Index>(c)) = rows[r][c];
  return Configuration(m);
}

std::string configuration_str(const Configuration& p) {
  std::string s;
  for (int r = 0; r < 3; ++r) {
    if (r) s += " /";
    for (int c = 0; c < p.size(); ++c) s += (r == 0 && c == 0 ? "" : " ") + p.points(r, c).str();
  }
  return s;
}

std::array<Rational, 6> quadric_row(const RatVector& x) {
  return {x(0) * x(0), x(0) * x(1), x(0) * x(2), x(1) * x(1), x(1) * x(2), x(2) * x(2)};
}

Matrix<Rational> quadric_matrix(const RatVector& q) {
  Matrix<Rational> m(3, 3);
  const Rational h(1, 2);
  m << q(0), h * q(1), h * q(2), h * q(1), q(3), h * q(4), h * q(2), h * q(4), q(5);
  return m;
}

bool on_irreducible_conic(const Configuration& p, PointMask mask) {
  RatMatrix v(popcount(mask), 6);
  int r = 0;
  for (int i = 0; i < p.size(); ++i)
    if ((mask >> i) & 1) {
      auto row = quadric_row(p.point(i));
      for (int k = 0; k < 6; ++k) v(r, k) = row[k];
      ++r;
    }
  auto ker = kernel_basis(v);
  if (ker.size() != 1) return false;
  Matrix<Rational> q = quadric_matrix(ker[0]);
  Eigen::Matrix<Rational, 3, 3> q3 = q;
  return !is_zero(det3<Rational>(q3));
}

Pair quatroid_of(const Configuration& p) {
  check_distinct(p);
  if (p.size() != kPoints) throw DegenerateInput("a quatroid needs exactly 8 points");
  Pair q;
  for (PointMask t : triple_masks()) {
    Eigen::Matrix<Rational, 3, 3> m;
    int c = 0;
    for (int i = 0; i < kPoints; ++i)
      if ((t >> i) & 1) m.col(c++) = p.points.col(i);
    if (is_zero(det3<Rational>(m))) q.add_triple(t);
  }
  for (PointMask s : sextuple_masks())
    if (on_irreducible_conic(p, s)) q.add_sextuple(s);
  return q;
}

std::string Verification::diagnosis() const {
  if (ok) return "ok";
  std::string s;
  auto list = [&](const char* what, const std::vector<PointMask>& v) {
    if (v.empty()) return;
    if (!s.empty()) s += "; ";
    s += what;
    for (auto m : v) s += " " + mask_str(m);
  };
  list("extra lines", extra_triples);
  list("missing lines", missing_triples);
  list("extra conics", extra_sextuples);
  list("missing conics", missing_sextuples);
  return s;
}

Verification verify_representative(const Configuration& p, const Pair& q) {
  Pair got = quatroid_of(p);
  Verification v;
  for (auto t : got.triples())
    if (!q.has_triple(t)) v.extra_triples.push_back(t);
  for (auto t : q.triples())
    if (!got.has_triple(t)) v.missing_triples.push_back(t);
  for (auto s : got.sextuples())
    if (!q.has_sextuple(s)) v.extra_sextuples.push_back(s);
  for (auto s : q.sextuples())
    if (!got.has_sextuple(s)) v.missing_sextuples.push_back(s);
  v.ok = got == q;
  return v;
}

}  // namespace quat

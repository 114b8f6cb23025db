#include "quatroid/algebra/linalg.hpp"

#include <stdexcept>

namespace quat {

namespace {

Matrix<Integer> integer_rows(const RatMatrix& m) {
  Matrix<Integer> a(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) l = mp::lcm(l, denom(m(i, j)));
    for (Eigen::Index j = 0; j < m.cols(); ++j) a(i, j) = numer(m(i, j)) * (l / denom(m(i, j)));
  }
  return a;
}

}  // namespace

Echelon<Integer> bareiss_echelon(const RatMatrix& m) {
  Echelon<Integer> e;
  e.rows = integer_rows(m);
  Matrix<Integer>& a = e.rows;
  Integer prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) a.row(r).swap(a.row(p));
    for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
      for (Eigen::Index j = c + 1; j < a.cols(); ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    e.pivots.push_back(c);
    ++r;
  }
  // entries stay minors of the input even when columns are skipped, so the
  // divisions above are exact
  return e;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  auto e = bareiss_echelon(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RatVector> out;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector x = RatVector::Constant(n, Rational(0));
    x(f) = 1;
    for (Eigen::Index k = e.rank() - 1; k >= 0; --k) {
      Eigen::Index pc = e.pivots[k];
      Rational s = 0;
      for (Eigen::Index j = pc + 1; j < n; ++j)
        if (!x(j).is_zero() && e.rows(k, j) != 0) s += Rational(e.rows(k, j)) * x(j);
      x(pc) = -s / Rational(e.rows(k, pc));
    }
    out.push_back(normalized(x));
  }
  return out;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Rational(1);
  Integer scale = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < n; ++j) l = mp::lcm(l, denom(m(i, j)));
    scale *= l;
  }
  Matrix<Integer> a = integer_rows(m);
  Integer prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return Rational(Integer(sign) * a(n - 1, n - 1), scale);
}

Eigen::Index rank(const RatMatrix& m) { return bareiss_echelon(m).rank(); }

}  // namespace quat

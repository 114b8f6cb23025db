#pragma once

#include "quatroid/algebra/rational.hpp"

#include <vector>

namespace quat {

// Row echelon form over an exact field.  pivots[k] is the pivot column of row k.
template <class Scalar>
struct Echelon {
  Matrix<Scalar> rows;
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <class Derived>
Echelon<typename Derived::Scalar> echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> e;
  e.rows = m;
  Matrix<Scalar>& a = e.rows;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    a.row(r).swap(a.row(p));
    Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      Scalar f = a(i, c);
      for (Eigen::Index j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return echelon(m).rank();
}

// right null space over the scalar field, reduced-echelon basis
template <class Derived>
std::vector<Vector<typename Derived::Scalar>> null_space(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  auto e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector<Scalar>> out;
  for (Eigen::Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<Scalar> v = Vector<Scalar>::Constant(m.cols(), Scalar(0));
    v(f) = Scalar(1);
    for (Eigen::Index k = 0; k < e.rank(); ++k) v(e.pivots[k]) = -e.rows(k, f);
    out.push_back(v);
  }
  return out;
}

template <class Scalar>
Scalar det3(const Eigen::Matrix<Scalar, 3, 3>& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

template <class Scalar>
Eigen::Matrix<Scalar, 3, 1> cross(const Eigen::Matrix<Scalar, 3, 1>& u,
                                  const Eigen::Matrix<Scalar, 3, 1>& v) {
  Eigen::Matrix<Scalar, 3, 1> w;
  w << u(1) * v(2) - u(2) * v(1), u(2) * v(0) - u(0) * v(2), u(0) * v(1) - u(1) * v(0);
  return w;
}

// fraction-free (Bareiss) routines on rational input

// integer row echelon form; rows are first scaled to integers
Echelon<Integer> bareiss_echelon(const RatMatrix& m);

// basis of the right kernel, each vector integral with content 1
std::vector<RatVector> kernel_basis(const RatMatrix& m);

Rational determinant(const RatMatrix& m);

Eigen::Index rank(const RatMatrix& m);

}  // namespace quat

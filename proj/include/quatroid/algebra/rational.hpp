#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <vector>

namespace quat {

namespace mp = boost::multiprecision;

// expression templates off: Eigen and auto don't mix well with them
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

inline Integer numer(const Rational& q) { return mp::numerator(q); }
inline Integer denom(const Rational& q) { return mp::denominator(q); }

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline Rational make_rational(const Integer& a, const Integer& b) {
  return Rational(a, b);
}

inline Rational pow(const Rational& q, int e) {
  return Rational(mp::pow(numer(q), static_cast<unsigned>(e)), mp::pow(denom(q), static_cast<unsigned>(e)));
}

inline std::string to_string(const Rational& q) { return q.str(); }

// scale to integer entries with content 1 and first nonzero entry positive
template <class Derived>
Vector<Integer> primitive_part(const Eigen::MatrixBase<Derived>& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = mp::lcm(l, denom(v(i)));
  Vector<Integer> out(v.size());
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out(i) = numer(v(i)) * (l / denom(v(i)));
    g = mp::gcd(g, out(i));
  }
  if (g == 0) return out;
  int sign = 0;
  for (Eigen::Index i = 0; i < v.size() && sign == 0; ++i)
    if (out(i) != 0) sign = out(i) > 0 ? 1 : -1;
  if (sign < 0) g = -g;
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) /= g;
  return out;
}

template <class Derived>
RatVector normalized(const Eigen::MatrixBase<Derived>& v) {
  return primitive_part(v).template cast<Rational>();
}

}  // namespace quat

#pragma once

#include "quatroid/algebra/rational.hpp"

#include <stdexcept>
#include <ostream>

namespace quat {

// a + b*sqrt(d), d squarefree; d == 0 marks a plain rational that adopts
// the radicand of whatever it meets
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int v) : a_(v) {}
  QuadExt(const Rational& a) : a_(a) {}
  QuadExt(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
    if (d_ == 0 && !b_.is_zero()) throw std::invalid_argument("QuadExt: radicand 0 with b != 0");
  }

  static QuadExt sqrt(long d) { return QuadExt(Rational(0), Rational(1), d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long radicand() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_real() const { return d_ > 0 || b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadExt conj() const { return QuadExt(a_, -b_, d_); }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, join(x, y));
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, join(x, y));
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    long d = join(x, y);
    return QuadExt(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw std::domain_error("QuadExt: division by zero");
    long d = join(x, y);
    QuadExt yc(y.a_, -y.b_, d);
    Rational n = y.a_ * y.a_ - Rational(d) * y.b_ * y.b_;
    QuadExt t = x * yc;
    return QuadExt(t.a_ / n, t.b_ / n, d);
  }
  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
    os << x.a_;
    if (!x.b_.is_zero()) os << (x.b_ > 0 ? "+" : "") << x.b_ << "*sqrt(" << x.d_ << ")";
    return os;
  }

 private:
  static long join(const QuadExt& x, const QuadExt& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw std::invalid_argument("QuadExt: mixed radicands");
  }

  Rational a_{0}, b_{0};
  long d_ = 0;
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

}  // namespace quat

namespace Eigen {
template <>
struct NumTraits<quat::QuadExt> : GenericNumTraits<quat::QuadExt> {
  using Real = quat::QuadExt;
  using NonInteger = quat::QuadExt;
  using Nested = quat::QuadExt;
  using Literal = quat::QuadExt;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 16
  };
};
}  // namespace Eigen

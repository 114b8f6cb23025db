#pragma once

#include "quatroid/algebra/binary_form.hpp"
#include "quatroid/algebra/linalg.hpp"
#include "quatroid/algebra/multipoly.hpp"

#include <array>
#include <string>

namespace quat {

// exponents of x0^3, x0^2x1, x0^2x2, x0x1^2, x0x1x2, x0x2^2, x1^3, x1^2x2, x1x2^2, x2^3
const std::array<std::array<int, 3>, 10>& cubic_monomials();

struct Cubic {
  std::array<Rational, 10> c{};

  static Cubic from_poly(const MultiPoly& f);
  static Cubic from_vector(const RatVector& v);
  MultiPoly poly() const;  // variables x0, x1, x2
  RatVector vector() const;

  bool is_zero() const;
  Rational operator()(const RatVector& x) const;
  RatVector gradient(const RatVector& x) const;
  RatMatrix hessian(const RatVector& x) const;
  // cleared denominators, content 1, first nonzero coefficient positive
  Cubic normalized() const;
  std::string str() const { return poly().str(); }

  friend Cubic operator+(const Cubic& a, const Cubic& b);
  friend Cubic operator*(const Rational& s, const Cubic& a);
  friend bool operator==(const Cubic& a, const Cubic& b) { return a.c == b.c; }
};

// the ten monomials evaluated at x
std::array<Rational, 10> cubic_row(const RatVector& x);

// Aronhold invariants as polynomials in the ten coefficients (in the order
// above), scaled so that x0^3+x1^3+x2^3+6m x0x1x2 has S = m^4 - m and
// T = 1 - 20m^3 - 8m^6
const MultiPoly& aronhold_S();
const MultiPoly& aronhold_T();

Rational aronhold_S(const Cubic& c);
Rational aronhold_T(const Cubic& c);
// 64 S^3 - T^2; zero exactly on singular cubics
Rational discriminant(const Cubic& c);

struct Pencil {
  Cubic c0, c1;
  Cubic member(const Rational& t0, const Rational& t1) const { return t0 * c0 + t1 * c1; }
};

// disc(t0 C0 + t1 C1), degree 12 or identically zero
BinaryForm pencil_disc(const Pencil& l);

}  // namespace quat

#pragma once

#include "quatroid/algebra/rational.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quat {

struct ZeroForm : std::domain_error {
  ZeroForm() : std::domain_error("binary form is identically zero") {}
};

// sum_k c[k] t0^(d-k) t1^k
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}
  static BinaryForm zero(int degree) { return BinaryForm(std::vector<Rational>(degree + 1, Rational(0))); }
  static BinaryForm linear(const Rational& a0, const Rational& a1) { return BinaryForm({a0, a1}); }
  static BinaryForm constant(const Rational& c) { return BinaryForm({c}); }

  // an empty coefficient list is the degree-free zero used as an additive identity
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int k) const { return c_[k]; }
  bool is_zero() const;

  Rational operator()(const Rational& t0, const Rational& t1) const;

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(BinaryForm a, const Rational& s);
  friend BinaryForm operator*(const Rational& s, BinaryForm a) { return std::move(a) * s; }
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }

  // multiplicity of the root [1:0], i.e. the power of t1 dividing the form
  int order_at_infinity() const;

  std::string str() const;

 private:
  std::vector<Rational> c_;
};

BinaryForm power(const BinaryForm& f, int e);

// exact quotient or nullopt
std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g);

bool proportional(const BinaryForm& f, const BinaryForm& g);

// integer coefficients, content 1, first nonzero coefficient positive
BinaryForm primitive(const BinaryForm& f);

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);

// pairs (G_m, m) with F = c * prod G_m^m, G_m squarefree and pairwise coprime;
// one entry per occurring multiplicity, ascending
std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f);

struct ProjectiveRoot {
  Integer a, b;  // the point [a:b], coprime, b >= 0 and a > 0 when b == 0
  int multiplicity = 0;
  bool at_infinity() const { return b == 0; }
  std::string str() const { return "[" + a.str() + ":" + b.str() + "]"; }
};

// all roots in P^1(Q), sorted by (b == 0, a/b)
std::vector<ProjectiveRoot> rational_roots(const BinaryForm& f);

// the degree-d form agreeing with `value` on d+1 sample points
BinaryForm interpolate_form(int degree, const std::function<Rational(const Rational&, const Rational&)>& value);

}  // namespace quat

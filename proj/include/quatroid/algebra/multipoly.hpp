#pragma once

#include "quatroid/algebra/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quat {

// Sparse polynomial over Q.  Exponent vectors compare lexicographically, so
// terms are stored in ascending lex order.
class MultiPoly {
 public:
  using Exponent = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  MultiPoly(std::vector<std::string> names) : nvars_(static_cast<int>(names.size())), names_(std::move(names)) {}

  static MultiPoly variable(int nvars, int i);
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly monomial(const Exponent& e, const Rational& c);

  int nvars() const { return nvars_; }
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names) { names_ = std::move(names); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  bool is_homogeneous() const;

  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly derivative(int var) const;

  // exact quotient if g divides *this, nullopt otherwise
  std::optional<MultiPoly> divide_exact(const MultiPoly& g) const;

  // scalar evaluation at points of any commutative ring that accepts
  // Ring * Rational
  template <class Ring>
  Ring evaluate(const std::vector<Ring>& xs, const Ring& zero, const Ring& one) const {
    std::vector<std::vector<Ring>> pw(nvars_);
    for (int v = 0; v < nvars_; ++v) pw[v].push_back(one);
    Ring acc = zero;
    for (const auto& [e, c] : terms_) {
      Ring t = one;
      bool first = true;
      for (int v = 0; v < nvars_; ++v) {
        if (e[v] == 0) continue;
        while (static_cast<int>(pw[v].size()) <= e[v]) pw[v].push_back(pw[v].back() * xs[v]);
        t = first ? pw[v][e[v]] : t * pw[v][e[v]];
        first = false;
      }
      acc = acc + t * c;
    }
    return acc;
  }

  Rational operator()(const std::vector<Rational>& xs) const {
    return evaluate<Rational>(xs, Rational(0), Rational(1));
  }

  std::string str() const;

 private:
  int nvars_ = 0;
  std::vector<std::string> names_;
  std::map<Exponent, Rational> terms_;
};

}  // namespace quat

#pragma once

#include "quatroid/algebra/linalg.hpp"
#include "quatroid/core/pair.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace quat {

struct DegenerateInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// columns are homogeneous coordinates of the points
struct Configuration {
  RatMatrix points = RatMatrix(3, 0);

  Configuration() = default;
  explicit Configuration(RatMatrix m) : points(std::move(m)) {}
  int size() const { return static_cast<int>(points.cols()); }
  RatVector point(int i) const { return points.col(i); }
  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.points.cols() == b.points.cols() && a.points == b.points;
  }
};

// throws DegenerateInput on a zero column or two proportional columns
void check_distinct(const Configuration& p);

// "24 2 -2 0 0 24 -1 1 / 0 4 4 24 0 24 -4 3 / 0 -3 -3 0 24 24 2 -3"
Configuration parse_configuration(const std::string& text);
std::string configuration_str(const Configuration& p);

// the 6 quadratic monomials x0^2 x0x1 x0x2 x1^2 x1x2 x2^2 at a point
std::array<Rational, 6> quadric_row(const RatVector& x);
// symmetric matrix of a quadric given in that monomial order
Matrix<Rational> quadric_matrix(const RatVector& q);

// true iff the points of `m` lie on a unique, nonsingular conic
bool on_irreducible_conic(const Configuration& p, PointMask m);

Pair quatroid_of(const Configuration& p);

struct Verification {
  bool ok = false;
  std::vector<PointMask> extra_triples, missing_triples, extra_sextuples, missing_sextuples;
  std::string diagnosis() const;
};

Verification verify_representative(const Configuration& p, const Pair& q);

}  // namespace quat

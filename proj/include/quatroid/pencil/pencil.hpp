#pragma once

#include "quatroid/core/profile.hpp"
#include "quatroid/pencil/cubic.hpp"
#include "quatroid/realization/configuration.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>

namespace quat {

struct NotSingular : std::domain_error {
  NotSingular() : std::domain_error("cubic is smooth") {}
};
struct PrecondViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct GuardViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// the geometry disagrees with what the combinatorics predicts
struct ConsistencyViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct CubicSystem {
  int dimension = 0;  // of the space of cubics through p
  std::vector<Cubic> basis;
  bool four_collinear = false;
  bool seven_on_conic = false;
  bool finite() const { return !four_collinear && !seven_on_conic; }
  Pencil pencil() const;  // requires dimension == 2
};

CubicSystem cubic_system(const Configuration& p);

// a cubic of the form L1 L2 L3, L Q or irreducible, with lines through pairs of points of p
struct Factorization {
  std::vector<MultiPoly> lines;
  std::optional<MultiPoly> rest;  // conic, or a product with no line through two points of p
  bool reducible() const { return !lines.empty(); }
  std::string str() const;
};

Factorization factor_cubic(const Cubic& c, const Configuration& p);

ReducibleType classify_singular(const Cubic& c);

// minimum over `trials` random pencils through c of the vanishing order of the discriminant at c
int multiplicity_probe(const Cubic& c, int trials, std::uint64_t seed = 1);

struct Member {
  ProjectiveRoot root;  // t0 C0 + t1 C1 at [t0:t1] = [a:b]
  Cubic cubic;
  ReducibleType type = ReducibleType::NodalCubic;
  Factorization factors;
  std::vector<PointMask> line_points;  // points of p on each linear factor
};

struct PencilIntersection {
  Pencil pencil;
  BinaryForm disc;
  std::vector<Member> members;  // one per rational root
  int irrational_degree = 0;    // total multiplicity of the remaining roots
  int d = 0;
  std::optional<int> r;  // nullopt when infinitely many cubics are reducible
};

// Algorithm for d_p: roots of the pencil discriminant and factorization of the rational members.
// Throws NotBezoutian (after cross-checking the infinite case) and ConsistencyViolation.
PencilIntersection count_rational(const Configuration& p);

struct BaseLocus {
  std::vector<RatVector> points;  // p1..p8 and the Cayley-Bacharach point
  std::optional<int> nonreduced;  // 0-based index i with p9 = p_i
  bool reduced() const { return !nonreduced.has_value(); }
};

BaseLocus cayley_bacharach(const Configuration& p, std::uint64_t seed = 1);

// 0-based index of a point where the pencil has a singular member
std::optional<int> nonreduced_base_locus(const Configuration& p);

}  // namespace quat

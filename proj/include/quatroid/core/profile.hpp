#pragma once

#include "quatroid/core/criteria.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace quat {

// the eight orbits of singular plane cubics
enum class ReducibleType {
  NodalCubic,
  CuspidalCubic,
  ConicSecant,
  ConicTangent,
  Triangle,
  Asterisk,
  DoubleLinePlusLine,
  TripleLine
};

constexpr int multiplicity(ReducibleType t) {
  constexpr int m[] = {1, 2, 2, 3, 3, 4, 6, 8};
  return m[static_cast<int>(t)];
}

constexpr bool is_reducible(ReducibleType t) {
  return t != ReducibleType::NodalCubic && t != ReducibleType::CuspidalCubic;
}

std::string type_name(ReducibleType t);

enum class Tangency { None, ConicSecant, Triangle };

struct ReducibleProfile {
  int conic_secant_count = 0;
  int triangle_count = 0;
  Tangency tangency = Tangency::None;

  // the members themselves: a conic+secant is named by the points on its
  // line, a triangle by its three lines
  std::vector<PointMask> conic_secant_lines;
  std::vector<std::array<PointMask, 3>> triangles;

  // raw memberships, both computed
  bool below_q10 = false;
  bool below_q77 = false;

  int reducible_weight() const { return 2 * conic_secant_count + 3 * triangle_count; }
  int d() const { return 12 - reducible_weight() - (tangency != Tangency::None ? 1 : 0); }
  std::string str() const;  // e.g. "∅^3△^1", tangency appended as "+∅" / "+△"
};

ReducibleProfile reducible_profile(const Pair& q);

// reference strata by their table index
namespace refs {
const Pair& q(int index);  // available: 1, 2, 6, 10, 32, 41, 43, 59, 62, 63, 77, 121
}

struct NonrationalCertificate {
  int ref_index = 0;  // one of 6, 32, 41, 59, 62, 121
  Perm sigma{};       // Q <= sigma . ref
  std::string str() const;
};

std::optional<NonrationalCertificate> certify_nonrational(const Pair& q);

}  // namespace quat

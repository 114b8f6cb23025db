#pragma once

#include "quatroid/core/pair.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace quat {

// sigma[i] is the image of point i+1, 0-based
using Perm = std::array<std::uint8_t, kPoints>;

Perm identity_perm();
Perm compose(const Perm& a, const Perm& b);  // a after b
Perm inverse(const Perm& a);
std::string perm_str(const Perm& p);          // one-line notation "21345678"

PointMask apply(const Perm& p, PointMask m);
Pair apply(const Perm& p, const Pair& q);

// All of S8 with per-element index images of triples and sextuples, so a
// relabeled pair costs one lookup per condition.
class SymmetricGroup {
 public:
  static const SymmetricGroup& get();
  static constexpr int kOrder = 40320;

  const std::vector<Perm>& elements() const { return perms_; }
  const Perm& operator[](int k) const { return perms_[k]; }
  std::uint8_t triple_image(int k, int r) const { return tri_[k * kTriples + r]; }
  std::uint8_t sextuple_image(int k, int r) const { return sex_[k * kSextuples + r]; }
  Pair apply(int k, const Pair& q) const;

 private:
  SymmetricGroup();
  std::vector<Perm> perms_;
  std::vector<std::uint8_t> tri_, sex_;
};

// elements of S8 generated by the given permutations (all of S8 if empty)
std::vector<int> generated_subgroup(const std::vector<Perm>& generators);

// indices of sigma with sigma.Q = Q
std::vector<int> stabilizer(const Pair& q);

}  // namespace quat

#pragma once

#include "quatroid/realization/realization.hpp"

#include <random>
#include <string>

#ifndef QUAT_DATA_DIR
#define QUAT_DATA_DIR "data"
#endif

namespace qt {

using namespace quat;

inline std::string data(const std::string& file) { return std::string(QUAT_DATA_DIR) + "/" + file; }

// representative of a table row
inline const Pair& Q(int index) {
  static const std::map<int, Pair> m = load_index_map(data("orbit_index.txt"));
  return m.at(index);
}

// coefficients in the order x0^3 x0^2x1 x0^2x2 x0x1^2 x0x1x2 x0x2^2 x1^3 x1^2x2 x1x2^2 x2^3
inline Cubic cubic(std::initializer_list<long> v) {
  Cubic c;
  int k = 0;
  for (long x : v) c.c[k++] = x;
  return c;
}

inline MultiPoly var(int i) {
  MultiPoly v = MultiPoly::variable(3, i);
  v.set_names({"x0", "x1", "x2"});
  return v;
}

inline MultiPoly lin(long a, long b, long c) {
  return Rational(a) * var(0) + Rational(b) * var(1) + Rational(c) * var(2);
}

// the worked Q43 configuration and the two printed basis cubics
inline Configuration q43_config() {
  return parse_configuration("-2 2 2 1 -2 1 2 -2 / 2 -2 -2 2 -1 -2 -1 1 / 0 2 -2 1 -1 1 -1 2");
}
inline Cubic q43_C0() { return cubic({0, 2, -2, 2, -3, 1, 0, -2, 1, 1}); }
inline Cubic q43_C1() { return cubic({8, 0, 8, 0, -3, -29, 8, 8, -29, -19}); }

// the Q10 illustration
inline Configuration q10_config() {
  return parse_configuration("24 2 -2 0 0 24 -1 1 / 0 4 4 24 0 24 -4 3 / 0 -3 -3 0 24 24 2 -3");
}

// random invertible 3x3 integer matrix
inline RatMatrix random_pgl(std::mt19937_64& rng, int box = 6) {
  std::uniform_int_distribution<int> u(-box, box);
  for (;;) {
    RatMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = u(rng);
    if (determinant(m) != 0) return m;
  }
}

inline Configuration transformed(const Configuration& p, const RatMatrix& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> s(1, 7);
  RatMatrix m = g * p.points;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    Rational k(s(rng) * (rng() & 1 ? 1 : -1), s(rng));
    m.col(c) *= k;
  }
  return Configuration(m);
}

inline Perm random_perm(std::mt19937_64& rng) {
  Perm p = identity_perm();
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Pair random_pair(std::mt19937_64& rng, double pt = 0.06, double ps = 0.08) {
  std::bernoulli_distribution bt(pt), bs(ps);
  Pair q;
  for (int r = 0; r < kTriples; ++r)
    if (bt(rng)) q.tri |= 1ull << r;
  for (int r = 0; r < kSextuples; ++r)
    if (bs(rng)) q.sex |= 1u << r;
  return q;
}

}  // namespace qt

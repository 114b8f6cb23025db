#pragma once

#include "quatroid/algebra/quad_ext.hpp"
#include "quatroid/enumeration/enumeration.hpp"
#include "quatroid/pencil/pencil.hpp"
#include "quatroid/realization/configuration.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace quat {

// inconclusive: the budget ran out, which proves nothing about representability
struct SearchFailure : std::runtime_error {
  int attempts;
  explicit SearchFailure(int n)
      : std::runtime_error("no representative found within " + std::to_string(n) + " attempts"), attempts(n) {}
};

struct SearchOptions {
  std::uint64_t seed = 0;
  int budget = 4000;  // attempts
  int box = 40;       // initial bound on random integer coordinates
};

Configuration search_representative(const Pair& q, const SearchOptions& opt = {});

// "10 : 24 2 -2 ... / ... / ..."
std::map<int, Configuration> parse_representatives(std::istream& in);
std::map<int, Configuration> load_representatives(const std::string& path);
std::string representative_line(int index, const Configuration& p);

struct Q41Realization {
  Matrix<QuadExt> points;      // 3 x 8 over Q(sqrt(-3))
  QuadExt z2, z2_conjugate;    // the two roots of z^2 - z + 1
  Rational discriminant;       // of z^2 - z + 1
  Pair realized;               // incidences of the matrix, computed over Q(sqrt(-3))
  bool verified = false;       // realized == Q41 and z2 is not real
};

Q41Realization realize_Q41();
Pair quatroid_of(const Matrix<QuadExt>& p);

// 9-point matroid of the Cayley-Bacharach completion, points 1..9 as bits 0..8
struct BaseLocusMatroid {
  std::vector<PointMask> nonbases;  // sorted 3-subsets
  std::string str() const;
};

// requires q Bezoutian, exhaustive and not below the orbit of Q10
BaseLocusMatroid base_locus_matroid(const Pair& q);
bool is_exhaustive(const Pair& q);

struct FanoCertificate {
  BaseLocusMatroid matroid;
  std::vector<PointMask> fano;  // the 7 lines of a Fano subplane found in the matroid
  bool holds = false;
};

// Fano subplane inside a 9-point matroid, if any
std::optional<std::vector<PointMask>> find_fano(const BaseLocusMatroid& m);
FanoCertificate refute(const Pair& q);
FanoCertificate refute_Q63();

// Q63-orbit: No (Fano certificate); Q41-orbit: ComplexOnly; otherwise Rational
Representability classify_representability(const Pair& q);

// the quatroids obtained by deleting one of the 9 base points, canonicalized
std::vector<Pair> modifications(const Pair& q);
Pair modification(const Pair& q, int point);  // point in 0..8, renumbered, not canonicalized

enum class ReductionVerdict { ReducedToIrreducible, Stuck };

struct ReductionStep {
  int point = 0;   // 1-based label in the original numbering
  char rule = 0;   // 'i' (at most two lines, no conic) or 'c' (one conic, no line)
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  std::vector<PointMask> lines, conics;  // flats at the end of the chain
  ReductionVerdict verdict = ReductionVerdict::Stuck;
  std::string str() const;
};

ReductionTrace reductions(const Pair& q);

}  // namespace quat

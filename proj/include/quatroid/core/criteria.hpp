#pragma once

#include "quatroid/core/pair.hpp"
#include "quatroid/core/perm.hpp"

#include <optional>
#include <stdexcept>

namespace quat {

struct NotBezoutian : std::domain_error {
  NotBezoutian() : std::domain_error("pair is not Bezoutian") {}
};

struct WeakCriteria {
  bool line_meets_conic = true;   // every |I cap J| <= 2
  bool lines_closed = true;       // |I1 cap I2| > 1 forces all triples of I1 cup I2
  bool conics_closed = true;      // |J1 cap J2| > 4 forces all sextuples of J1 cup J2
  bool all() const { return line_meets_conic && lines_closed && conics_closed; }
  friend bool operator==(const WeakCriteria&, const WeakCriteria&) = default;
};

struct StrongCriteria {
  bool lines_meet_once = true;    // |I1 cap I2| <= 1
  bool conics_meet_in_four = true;  // |J1 cap J2| <= 4
  bool all() const { return lines_meet_once && conics_meet_in_four; }
  friend bool operator==(const StrongCriteria&, const StrongCriteria&) = default;
};

WeakCriteria weak_criteria(const Pair& q);
StrongCriteria strong_criteria(const Pair& q);
bool is_bezoutian(const Pair& q);

std::uint64_t close_triples(std::uint64_t tri);
std::uint32_t close_sextuples(std::uint32_t sex);
Pair closure(const Pair& q);

// sextuples that are unions of two disjoint triples of I
std::uint32_t triple_squares(std::uint64_t tri);

int m_Q(const Pair& q);

// Q <= Q2: Q2's conditions all hold on Q's stratum
bool leq(const Pair& q, const Pair& q2);

// some sigma with leq(q, sigma . ref)
std::optional<Perm> orbit_witness(const Pair& q, const Pair& ref);
bool contained_in_orbit(const Pair& q, const Pair& ref);

// conditions avoiding point i; labels unchanged
Pair delete_point(const Pair& q, int i);

}  // namespace quat

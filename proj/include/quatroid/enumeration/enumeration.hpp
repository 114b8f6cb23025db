#pragma once

#include "quatroid/core/profile.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quat {

struct MatroidRecord {
  std::uint64_t nonbases = 0;  // triples, as in Pair::tri
  int source_line = 0;
};

std::vector<MatroidRecord> parse_matroids(std::istream& in);
std::vector<MatroidRecord> load_matroids(const std::string& path);

// isomorphism classes of simple matroids of rank <= 3 on 8 points, with the
// ones containing a Fano subplane removed; one line per class
std::vector<MatroidRecord> representable_matroid_classes();
std::string matroid_line(const MatroidRecord& m);
bool contains_fano(std::uint64_t tri);

// lexicographically minimal image of the serialized (triples, sextuples)
// encoding over the group; `group` holds indices into SymmetricGroup
Pair canonical_form(const Pair& q, const std::vector<int>& group);
Pair canonical_form(const Pair& q);
Pair canonical_form(const Pair& q, const std::vector<Perm>& generators);
// true iff a precedes b in the serialized lex order
bool canonical_less(const Pair& a, const Pair& b);

int orbit_size(const Pair& q);

std::vector<Pair> all_conic_extensions(const MatroidRecord& m);

enum class Representability { Rational, ComplexOnly, No };
std::string representability_name(Representability r);

struct OrbitRecord {
  int index = 0;  // table numbering when an index map is supplied, else canonical order
  Pair canonical;
  Pair display;  // the index-map representative when one is supplied
  int orbit_size = 0;
  bool bezoutian = false;
  std::optional<ReducibleProfile> profile;  // Bezoutian only
  int m = 0;
  int d = 0;  // 0 for non-Bezoutian strata
  Representability representable = Representability::Rational;
};

struct Enumeration {
  std::vector<OrbitRecord> orbits;  // sorted by index
  long total_pairs = 0;
  std::map<int, int> size_histogram;  // orbit size -> number of orbits
  int bezoutian_orbits = 0;
  long bezoutian_pairs = 0;
  int tangency_orbits = 0;
};

// table index -> canonical pair
std::map<int, Pair> load_index_map(const std::string& path);
std::map<int, Pair> parse_index_map(std::istream& in);

// `classify` marks strata that cannot be realized; without it all are taken as rational
Enumeration generate_all_candidates(const std::vector<MatroidRecord>& matroids, int jobs = 1,
                                    const std::map<int, Pair>* index_map = nullptr,
                                    const std::function<Representability(const Pair&)>& classify = {});

// the covering graph of the Bezoutian strata
enum class CoverKind { LineAdded, ConicAdded, SextupleBroken };
std::string cover_kind_name(CoverKind k);

struct PosetEdge {
  int upper = 0, lower = 0;  // orbit indices, upper has one condition fewer
  CoverKind kind = CoverKind::LineAdded;
};

struct PosetGraph {
  std::vector<int> nodes;        // orbit indices
  std::map<int, int> layer;      // 8 - (|I| + |J|)
  std::map<int, int> d;
  std::vector<PosetEdge> covers;
  int top = 0;     // unique maximal element
  int bottom = 0;  // unique element of layer 0
  std::vector<int> minimal;
};

struct GradingViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// strata with a known non-realizability certificate are passed in `skip`
PosetGraph build_poset(const std::vector<OrbitRecord>& orbits, const std::vector<int>& skip = {});
std::string poset_dot(const PosetGraph& g, bool label_by_d = false);

// rows as in the appendix tables
struct TableRow {
  int index = 0;
  int orbit_size = 0;
  std::string lines, conics, reducibles, d;
};

std::vector<TableRow> emit_table(const std::vector<OrbitRecord>& orbits);
std::vector<TableRow> load_table(const std::string& path);
std::string table_tsv(const std::vector<TableRow>& rows);

}  // namespace quat

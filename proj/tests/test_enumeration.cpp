#include "common.hpp"

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

using namespace qt;

namespace {

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

const std::vector<MatroidRecord>& matroids() {
  static const auto m = load_matroids(data("matroids.txt"));
  return m;
}

const Enumeration& full() {
  static const auto idx = load_index_map(data("orbit_index.txt"));
  static const Enumeration e = generate_all_candidates(matroids(), jobs(), &idx, classify_representability);
  return e;
}

// every closed conic system on 8 points: a matching of complementary pairs,
// or a single 7- or 8-point conic flat
std::vector<std::uint32_t> closed_conic_systems() {
  std::vector<std::uint32_t> out;
  std::vector<PointMask> pairs;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) pairs.push_back(static_cast<PointMask>((1u << a) | (1u << b)));
  auto sex_of = [](PointMask complement) { return 1u << sextuple_index(static_cast<PointMask>(kAllPoints & ~complement)); };
  std::function<void(std::size_t, PointMask, std::uint32_t)> grow = [&](std::size_t from, PointMask used, std::uint32_t j) {
    out.push_back(j);
    for (std::size_t k = from; k < pairs.size(); ++k)
      if (!(pairs[k] & used)) grow(k + 1, used | pairs[k], j | sex_of(pairs[k]));
  };
  grow(0, 0, 0);
  for (int x = 0; x < 8; ++x) {
    std::uint32_t j = 0;
    for (int y = 0; y < 8; ++y)
      if (y != x) j |= sex_of(static_cast<PointMask>((1u << x) | (1u << y)));
    out.push_back(j);
  }
  out.push_back((1u << kSextuples) - 1);
  return out;
}

bool admissible(std::uint64_t tri, std::uint32_t sex) {
  for (auto s : Pair(0, sex).sextuples())
    for (auto t : Pair(tri, 0).triples())
      if ((t & s) == t) return false;
  return true;
}

// no four collinear points, no seven on a conic
bool bezoutian_direct(std::uint64_t tri, std::uint32_t sex) {
  for (auto a : Pair(tri, 0).triples())
    for (auto b : Pair(tri, 0).triples())
      if (a != b && std::popcount(unsigned(a & b)) > 1) return false;
  for (auto a : Pair(0, sex).sextuples())
    for (auto b : Pair(0, sex).sextuples())
      if (a != b && std::popcount(unsigned(a & b)) > 4) return false;
  return true;
}

}  // namespace

TEST_CASE("matroid file matches regeneration") {
  auto regen = representable_matroid_classes();
  REQUIRE(regen.size() == 67u);
  std::ifstream f(data("matroids.txt"));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(f, line))
    if (line.empty() || line[0] != '#') lines.push_back(line);
  REQUIRE(lines.size() == regen.size());
  for (std::size_t i = 0; i < lines.size(); ++i) CHECK(lines[i] == matroid_line(regen[i]));
  CHECK(matroids().size() == 67u);
  CHECK(matroids().back().nonbases == 0);
}

TEST_CASE("matroid parsing errors") {
  std::istringstream bad_token("123 12x\n");
  CHECK_THROWS_AS(parse_matroids(bad_token), ParseError);
  std::istringstream not_closed("123 124\n");
  CHECK_THROWS_AS(parse_matroids(not_closed), ParseError);
  std::istringstream not_triple("1234\n");
  CHECK_THROWS_AS(parse_matroids(not_triple), ParseError);
  CHECK_THROWS_AS(load_matroids("/nonexistent/file"), ParseError);
}

TEST_CASE("Fano detection") {
  Pair fano = parse_pair("lines: 123 145 167 246 257 347 356 ; conics:");
  CHECK(contains_fano(fano.tri));
  fano.tri &= ~(1ull << triple_index(parse_mask("356")));
  CHECK_FALSE(contains_fano(fano.tri));
  for (const auto& m : matroids()) CHECK_FALSE(contains_fano(m.nonbases));
}

TEST_CASE("orbit and pair counts") {
  const auto& e = full();
  CHECK(e.orbits.size() == 126u);
  CHECK(e.total_pairs == 780617);
  CHECK(e.bezoutian_orbits == 76);
  CHECK(e.bezoutian_pairs == 544748);
  CHECK(e.tangency_orbits == 24);
  int n = 0;
  long pairs = 0;
  for (auto [size, count] : e.size_histogram) {
    CHECK(40320 % size == 0);
    n += count;
    pairs += long(size) * count;
  }
  CHECK(n == 126);
  CHECK(pairs == 780617);
  for (std::size_t i = 0; i < e.orbits.size(); ++i) CHECK(e.orbits[i].index == int(i) + 1);
}

TEST_CASE("counts agree with Burnside over matroid stabilizers") {
  const auto systems = closed_conic_systems();
  CHECK(systems.size() == 773u);
  const auto& g = SymmetricGroup::get();
  long labeled = 0, labeled_bez = 0;
  long orbit_sum = 0;
  for (const auto& m : matroids()) {
    const Pair base(m.nonbases, 0);
    const long msize = orbit_size(base);
    std::vector<std::uint32_t> ok;
    for (auto j : systems)
      if (admissible(m.nonbases, j)) ok.push_back(j);
    for (auto j : ok) {
      labeled += msize;
      if (bezoutian_direct(m.nonbases, j)) labeled_bez += msize;
    }
    const auto h = stabilizer(base);
    std::set<std::uint32_t> okset(ok.begin(), ok.end());
    long fixed = 0;
    for (int k : h)
      for (auto j : ok) fixed += g.apply(k, Pair(m.nonbases, j)).sex == j;
    CHECK(fixed % long(h.size()) == 0);
    orbit_sum += fixed / long(h.size());
  }
  CHECK(orbit_sum == 126);
  CHECK(labeled == 780617);
  // before removing the orbit with no realization
  CHECK(labeled_bez == 545588);
  CHECK(labeled_bez - orbit_size(Q(63)) == 544748);
}

TEST_CASE("raw enumeration without a classifier") {
  auto e = generate_all_candidates(matroids(), jobs());
  CHECK(e.orbits.size() == 126u);
  CHECK(e.bezoutian_orbits == 77);
  CHECK(e.bezoutian_pairs == 545588);
}

TEST_CASE("emitted table matches the appendix tables") {
  auto rows = emit_table(full().orbits);
  auto golden = load_table(data("appendix_tables.tsv"));
  REQUIRE(rows.size() == golden.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(rows[i].index);
    CHECK(rows[i].index == golden[i].index);
    CHECK(rows[i].orbit_size == golden[i].orbit_size);
    CHECK(rows[i].lines == golden[i].lines);
    CHECK(rows[i].conics == golden[i].conics);
    CHECK(rows[i].reducibles == golden[i].reducibles);
    CHECK(rows[i].d == golden[i].d);
  }

  auto tmp = std::filesystem::temp_directory_path() / "quat_table_roundtrip.tsv";
  std::ofstream(tmp) << table_tsv(rows);
  auto back = load_table(tmp.string());
  std::filesystem::remove(tmp);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(back[i].conics == rows[i].conics);
}

TEST_CASE("d values from profiles") {
  for (const auto& r : full().orbits) {
    if (!r.bezoutian) continue;
    CAPTURE(r.index);
    CHECK(r.d == 12 - r.m - (r.profile->tangency != Tangency::None ? 1 : 0));
    if (r.representable != Representability::No) CHECK(r.d >= 0);
    CHECK(r.profile->below_q10 == (r.profile->tangency != Tangency::None));
    CHECK(r.profile->below_q77 == (r.profile->tangency == Tangency::Triangle));
  }
  for (int i : {63}) CHECK(full().orbits[i - 1].representable == Representability::No);
  CHECK(full().orbits[40].representable == Representability::ComplexOnly);
}

TEST_CASE("poset of Bezoutian strata") {
  PosetGraph g = build_poset(full().orbits);
  CHECK(g.nodes.size() == 76u);
  CHECK(g.covers.size() == 244u);
  CHECK(g.top == 1);
  CHECK(g.bottom == 41);
  CHECK(g.minimal == std::vector<int>{33, 35, 41, 59});
  int layer0 = 0;
  for (int v : g.nodes) layer0 += g.layer.at(v) == 0;
  CHECK(layer0 == 1);
  for (const auto& e : g.covers) {
    CHECK(g.layer.at(e.upper) == g.layer.at(e.lower) + 1);
    CHECK(g.d.at(e.upper) >= g.d.at(e.lower));
  }
  CHECK(std::find(g.nodes.begin(), g.nodes.end(), 63) == g.nodes.end());

  std::string dot = poset_dot(g);
  CHECK(dot.rfind("digraph", 0) == 0);
  std::size_t arrows = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++arrows;
  CHECK(arrows == 244u);
  CHECK(dot.find("q1 -> ") != std::string::npos);
  CHECK(poset_dot(g, true).find("q1 [label=\"12\"]") != std::string::npos);
}

TEST_CASE("poset rejects a bad grading") {
  auto orbits = full().orbits;
  orbits[40].d = 5;  // bottom stratum above its covers
  CHECK_THROWS_AS(build_poset(orbits), GradingViolation);
}

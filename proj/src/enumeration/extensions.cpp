#include "quatroid/enumeration/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

namespace quat {

namespace {

// lex-min serialization == max of the bit-reversed words
struct Key {
  std::uint64_t tri = 0;
  std::uint32_t sex = 0;
  friend auto operator<=>(const Key&, const Key&) = default;
};

Key key_of(const SymmetricGroup& g, int k, const Pair& q) {
  Key key;
  for (auto t = q.tri; t; t &= t - 1) key.tri |= 1ull << (kTriples - 1 - g.triple_image(k, std::countr_zero(t)));
  for (auto s = q.sex; s; s &= s - 1) key.sex |= 1u << (kSextuples - 1 - g.sextuple_image(k, std::countr_zero(s)));
  return key;
}

Key key_of(const Pair& q) {
  Key key;
  for (auto t = q.tri; t; t &= t - 1) key.tri |= 1ull << (kTriples - 1 - std::countr_zero(t));
  for (auto s = q.sex; s; s &= s - 1) key.sex |= 1u << (kSextuples - 1 - std::countr_zero(s));
  return key;
}

Pair pair_of(const Key& key) {
  Pair q;
  for (auto t = key.tri; t; t &= t - 1) q.tri |= 1ull << (kTriples - 1 - std::countr_zero(t));
  for (auto s = key.sex; s; s &= s - 1) q.sex |= 1u << (kSextuples - 1 - std::countr_zero(s));
  return q;
}

}  // namespace

bool canonical_less(const Pair& a, const Pair& b) { return key_of(a) > key_of(b); }

Pair canonical_form(const Pair& q, const std::vector<int>& group) {
  const auto& g = SymmetricGroup::get();
  Key best = key_of(q);
  for (int k : group) best = std::max(best, key_of(g, k, q));
  return pair_of(best);
}

Pair canonical_form(const Pair& q) {
  const auto& g = SymmetricGroup::get();
  Key best{};
  for (int k = 0; k < SymmetricGroup::kOrder; ++k) best = std::max(best, key_of(g, k, q));
  return pair_of(best);
}

Pair canonical_form(const Pair& q, const std::vector<Perm>& generators) {
  return canonical_form(q, generated_subgroup(generators));
}

int orbit_size(const Pair& q) { return SymmetricGroup::kOrder / static_cast<int>(stabilizer(q).size()); }

namespace {

// every sextuple the triples allow: no line inside the conic
std::uint32_t admissible_sextuples(std::uint64_t tri) {
  std::uint32_t ok = 0;
  const auto& sm = sextuple_masks();
  const auto& tm = triple_masks();
  for (int s = 0; s < kSextuples; ++s) {
    bool good = true;
    for (auto t = tri; t && good; t &= t - 1) {
      PointMask m = tm[std::countr_zero(t)];
      good = (m & sm[s]) != m;
    }
    if (good) ok |= 1u << s;
  }
  return ok;
}

}  // namespace

std::vector<Pair> all_conic_extensions(const MatroidRecord& m) {
  Pair base(m.nonbases, 0);
  std::vector<int> h = stabilizer(base);
  const std::uint32_t admissible = admissible_sextuples(m.nonbases);
  std::set<std::uint32_t> seen;
  std::vector<std::uint32_t> todo{0};
  seen.insert(0);
  while (!todo.empty()) {
    std::uint32_t j = todo.back();
    todo.pop_back();
    for (int s = 0; s < kSextuples; ++s) {
      if ((j >> s) & 1 || !((admissible >> s) & 1)) continue;
      std::uint32_t next = close_sextuples(j | (1u << s));
      if ((next & admissible) != next) continue;
      std::uint32_t c = canonical_form(Pair(m.nonbases, next), h).sex;
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  std::vector<Pair> out;
  for (auto j : seen) out.push_back(Pair(m.nonbases, j));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::string representability_name(Representability r) {
  switch (r) {
    case Representability::Rational: return "Q";
    case Representability::ComplexOnly: return "C-only";
    case Representability::No: return "No";
  }
  return "?";
}

std::map<int, Pair> parse_index_map(std::istream& in) {
  std::map<int, Pair> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(no, "expected 'index : pair'");
    int idx;
    try {
      idx = std::stoi(line.substr(0, colon));
      out[idx] = parse_pair(line.substr(colon + 1));
    } catch (const std::exception& e) {
      throw ParseError(no, e.what());
    }
  }
  return out;
}

std::map<int, Pair> load_index_map(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open " + path);
  return parse_index_map(f);
}

Enumeration generate_all_candidates(const std::vector<MatroidRecord>& matroids, int jobs,
                                    const std::map<int, Pair>* index_map,
                                    const std::function<Representability(const Pair&)>& classify) {
  struct Found {
    Pair canonical;
    int size;
  };
  std::vector<std::vector<Found>> per(matroids.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < matroids.size(); i = next++) {
      for (const Pair& q : all_conic_extensions(matroids[i])) {
        Pair c = canonical_form(q);
        per[i].push_back({c, orbit_size(c)});
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::max(1, jobs); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  Enumeration e;
  std::vector<Found> all;
  for (auto& v : per) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end(), [](const Found& a, const Found& b) { return canonical_less(a.canonical, b.canonical); });
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i].canonical == all[i - 1].canonical) throw std::logic_error("duplicate orbit across matroid classes");

  std::map<Pair, std::pair<int, Pair>> by_canonical;
  if (index_map)
    for (const auto& [idx, p] : *index_map) by_canonical[canonical_form(p)] = {idx, p};

  int running = 0;
  for (const auto& f : all) {
    OrbitRecord r;
    r.canonical = f.canonical;
    r.display = f.canonical;
    r.orbit_size = f.size;
    if (index_map) {
      auto it = by_canonical.find(f.canonical);
      if (it == by_canonical.end()) throw std::logic_error("orbit missing from index map: " + pair_str(f.canonical));
      r.index = it->second.first;
      r.display = it->second.second;
    } else {
      r.index = ++running;
    }
    r.bezoutian = is_bezoutian(f.canonical);
    if (classify) r.representable = classify(f.canonical);
    if (r.bezoutian) {
      r.profile = reducible_profile(f.canonical);
      r.m = m_Q(f.canonical);
      r.d = r.profile->d();
    }
    e.orbits.push_back(r);
    e.total_pairs += f.size;
    e.size_histogram[f.size] += 1;
    if (r.bezoutian && r.representable != Representability::No) {
      e.bezoutian_orbits += 1;
      e.bezoutian_pairs += f.size;
      if (r.profile->tangency != Tangency::None) e.tangency_orbits += 1;
    }
  }
  std::sort(e.orbits.begin(), e.orbits.end(), [](const OrbitRecord& a, const OrbitRecord& b) { return a.index < b.index; });
  return e;
}

}  // namespace quat

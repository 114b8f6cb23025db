#include "quatroid/realization/realization.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace quat {

Pair modification(const Pair& q, int point) {
  if (point < 0 || point > 8) throw std::out_of_range("base point index must be in 0..8");
  const BaseLocusMatroid m = base_locus_matroid(q);
  auto dependent = [&](PointMask t) { return std::binary_search(m.nonbases.begin(), m.nonbases.end(), t); };
  const PointMask ground = 0x1FF;
  const PointMask rest = static_cast<PointMask>(ground & ~(1u << point));
  // order-preserving renumbering of the surviving points onto 0..7
  auto renumber = [&](PointMask x) {
    PointMask out = 0;
    int k = 0;
    for (int i = 0; i < 9; ++i) {
      if (i == point) continue;
      if ((x >> i) & 1) out |= static_cast<PointMask>(1u << k);
      ++k;
    }
    return out;
  };
  Pair out;
  for (auto t : m.nonbases)
    if ((t & rest) == t) out.add_triple(renumber(t));
  for (unsigned s = 0; s < (1u << 9); ++s) {
    if (popcount(s) != 6 || (s & rest) != s) continue;
    if (!dependent(static_cast<PointMask>(ground & ~s))) continue;
    // a line inside makes the conic a line pair
    bool split = false;
    for (auto a : m.nonbases)
      if ((a & s) == a) split = true;
    if (!split) out.add_sextuple(renumber(static_cast<PointMask>(s)));
  }
  return out;
}

std::vector<Pair> modifications(const Pair& q) {
  std::set<Pair> seen;
  for (int i = 0; i < 9; ++i) seen.insert(canonical_form(modification(q, i)));
  std::vector<Pair> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::string ReductionTrace::str() const {
  std::string s;
  for (const auto& st : steps) s += (s.empty() ? "" : " ") + std::string("-") + std::to_string(st.point) + "(" + st.rule + ")";
  std::string l, c;
  for (auto f : lines) l += (l.empty() ? "" : " ") + mask_str(f);
  for (auto f : conics) c += (c.empty() ? "" : " ") + mask_str(f);
  return (s.empty() ? std::string("no deletions") : s) + " -> lines: " + l + " ; conics: " + c + " => " +
         (verdict == ReductionVerdict::ReducedToIrreducible ? "irreducible" : "stuck");
}

ReductionTrace reductions(const Pair& q) {
  struct State {
    std::vector<PointMask> lines, conics;
    auto operator<=>(const State&) const = default;
  };
  State start{line_flats(q), conic_flats(q)};
  std::set<State> seen;
  ReductionTrace best;
  std::vector<ReductionStep> path;
  bool found = false;

  std::function<void(const State&)> dfs = [&](const State& st) {
    if (found || !seen.insert(st).second) return;
    if (st.conics.empty() && st.lines.size() <= 6) {
      found = true;
      best.steps = path;
      best.lines = st.lines;
      best.conics = st.conics;
      best.verdict = ReductionVerdict::ReducedToIrreducible;
      return;
    }
    bool moved = false;
    for (int i = 0; i < kPoints && !found; ++i) {
      int nl = 0, nc = 0;
      for (auto f : st.lines) nl += (f >> i) & 1;
      for (auto f : st.conics) nc += (f >> i) & 1;
      char rule = 0;
      if (nc == 0 && nl >= 1 && nl <= 2) rule = 'i';
      if (nl == 0 && nc == 1) rule = 'c';
      if (!rule) continue;
      moved = true;
      State next;
      // deletion drops every flat through i
      for (auto f : st.lines)
        if (!((f >> i) & 1)) next.lines.push_back(f);
      for (auto f : st.conics)
        if (!((f >> i) & 1)) next.conics.push_back(f);
      path.push_back({i + 1, rule});
      dfs(next);
      path.pop_back();
    }
    if (!moved && !found && path.size() >= best.steps.size()) {
      best.steps = path;
      best.lines = st.lines;
      best.conics = st.conics;
    }
  };
  dfs(start);
  return best;
}

}  // namespace quat

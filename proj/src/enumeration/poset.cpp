#include "quatroid/enumeration/enumeration.hpp"

#include <algorithm>
#include <sstream>

namespace quat {

std::string cover_kind_name(CoverKind k) {
  switch (k) {
    case CoverKind::LineAdded: return "line-added";
    case CoverKind::ConicAdded: return "conic-added";
    case CoverKind::SextupleBroken: return "sextuple-broken";
  }
  return "?";
}

PosetGraph build_poset(const std::vector<OrbitRecord>& orbits, const std::vector<int>& skip) {
  std::vector<const OrbitRecord*> nodes;
  for (const auto& r : orbits)
    if (r.bezoutian && r.representable != Representability::No &&
        std::find(skip.begin(), skip.end(), r.index) == skip.end())
      nodes.push_back(&r);
  const std::size_t n = nodes.size();
  // below[a][b]: stratum a lies in the closure of stratum b
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) below[a][b] = contained_in_orbit(nodes[a]->canonical, nodes[b]->canonical);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (below[a][b] && below[b][a])
        throw GradingViolation("order not antisymmetric between " + std::to_string(nodes[a]->index) + " and " +
                               std::to_string(nodes[b]->index));

  PosetGraph g;
  for (auto* r : nodes) {
    g.nodes.push_back(r->index);
    g.layer[r->index] = 8 - r->canonical.num_conditions();
    g.d[r->index] = r->d;
  }
  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t up = 0; up < n; ++up) {
      if (!below[lo][up]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != lo && c != up && below[lo][c] && below[c][up]) cover = false;
      if (!cover) continue;
      const Pair& u = nodes[up]->canonical;
      const Pair& l = nodes[lo]->canonical;
      PosetEdge e{nodes[up]->index, nodes[lo]->index, CoverKind::SextupleBroken};
      if (l.num_triples() == u.num_triples() + 1 && l.num_sextuples() == u.num_sextuples())
        e.kind = CoverKind::LineAdded;
      else if (l.num_sextuples() == u.num_sextuples() + 1 && l.num_triples() == u.num_triples())
        e.kind = CoverKind::ConicAdded;
      g.covers.push_back(e);
    }
  std::sort(g.covers.begin(), g.covers.end(), [](const PosetEdge& a, const PosetEdge& b) {
    return std::pair(a.upper, a.lower) < std::pair(b.upper, b.lower);
  });

  std::vector<int> tops, layer8, layer0;
  for (std::size_t a = 0; a < n; ++a) {
    bool has_above = false, has_below = false;
    for (std::size_t b = 0; b < n; ++b) {
      has_above = has_above || below[a][b];
      has_below = has_below || below[b][a];
    }
    int v = nodes[a]->index;
    if (!has_above) tops.push_back(v);
    if (!has_below) g.minimal.push_back(v);
    if (g.layer[v] == 8) layer8.push_back(v);
    if (g.layer[v] == 0) layer0.push_back(v);
  }
  if (tops.size() != 1) throw GradingViolation("poset has " + std::to_string(tops.size()) + " maximal elements");
  if (layer8 != tops) throw GradingViolation("layer 8 is not exactly the maximum");
  if (layer0.size() != 1) throw GradingViolation("layer 0 has " + std::to_string(layer0.size()) + " elements");
  g.top = tops[0];
  g.bottom = layer0[0];
  if (std::find(g.minimal.begin(), g.minimal.end(), g.bottom) == g.minimal.end())
    throw GradingViolation("layer 0 element is not minimal");
  for (const auto& e : g.covers) {
    if (g.layer[e.upper] - g.layer[e.lower] != 1)
      throw GradingViolation("cover " + std::to_string(e.upper) + " > " + std::to_string(e.lower) + " skips a layer");
    if (g.d[e.lower] > g.d[e.upper])
      throw GradingViolation("d increases from " + std::to_string(e.upper) + " down to " + std::to_string(e.lower));
  }
  return g;
}

std::string poset_dot(const PosetGraph& g, bool label_by_d) {
  std::ostringstream os;
  os << "digraph quatroids {\n  rankdir=TB;\n  node [shape=circle, fontsize=10];\n";
  for (int layer = 8; layer >= 0; --layer) {
    os << "  { rank=same;";
    for (int v : g.nodes)
      if (g.layer.at(v) == layer) os << " q" << v << ";";
    os << " }\n";
  }
  for (int v : g.nodes)
    os << "  q" << v << " [label=\"" << (label_by_d ? g.d.at(v) : v) << "\"];\n";
  for (const auto& e : g.covers) {
    const char* color = e.kind == CoverKind::LineAdded ? "red" : e.kind == CoverKind::ConicAdded ? "blue" : "black";
    os << "  q" << e.upper << " -> q" << e.lower << " [color=" << color << ", kind=\"" << cover_kind_name(e.kind)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace quat

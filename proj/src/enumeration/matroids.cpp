#include "quatroid/enumeration/enumeration.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace quat {

std::vector<MatroidRecord> parse_matroids(std::istream& in) {
  std::vector<MatroidRecord> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      // comment-only lines are skipped; a blank line is the uniform matroid
      if (line.find_first_not_of(" \t\r") == hash) continue;
      line = line.substr(0, hash);
    }
    MatroidRecord m;
    m.source_line = no;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      PointMask t;
      try {
        t = parse_mask(tok);
      } catch (const ParseError& e) {
        throw ParseError(no, e.what());
      }
      int r = triple_index(t);
      if (r < 0) throw ParseError(no, "not a triple of {1..8}: " + tok);
      m.nonbases |= 1ull << r;
    }
    if (close_triples(m.nonbases) != m.nonbases) throw ParseError(no, "nonbases not closed under collinearity");
    out.push_back(m);
  }
  return out;
}

std::vector<MatroidRecord> load_matroids(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open " + path);
  return parse_matroids(f);
}

bool contains_fano(std::uint64_t tri) {
  const auto& tm = triple_masks();
  for (int skip = 0; skip < kPoints; ++skip) {
    PointMask s = static_cast<PointMask>(kAllPoints & ~(1u << skip));
    std::vector<PointMask> lines;
    for (int r = 0; r < kTriples; ++r)
      if (((tri >> r) & 1) && (tm[r] & s) == tm[r]) lines.push_back(tm[r]);
    if (lines.size() != 7) continue;
    bool ok = true;
    for (std::size_t a = 0; a < lines.size() && ok; ++a)
      for (std::size_t b = a + 1; b < lines.size() && ok; ++b) ok = std::popcount(unsigned(lines[a] & lines[b])) == 1;
    if (ok) return true;
  }
  return false;
}

std::string matroid_line(const MatroidRecord& m) {
  std::string s;
  for (auto t : Pair(m.nonbases, 0).triples()) s += (s.empty() ? "" : " ") + mask_str(t);
  return s;
}

std::vector<MatroidRecord> representable_matroid_classes() {
  // closed triple systems up to relabeling, grown one triple at a time
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> todo{0};
  seen.insert(0);
  while (!todo.empty()) {
    std::uint64_t cur = todo.back();
    todo.pop_back();
    for (int r = 0; r < kTriples; ++r) {
      if ((cur >> r) & 1) continue;
      std::uint64_t next = close_triples(cur | (1ull << r));
      std::uint64_t c = canonical_form(Pair(next, 0)).tri;
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  std::vector<Pair> classes;
  for (auto t : seen)
    if (!contains_fano(t)) classes.push_back(Pair(t, 0));
  std::sort(classes.begin(), classes.end(), canonical_less);
  std::vector<MatroidRecord> out;
  int line = 0;
  for (const auto& p : classes) out.push_back({p.tri, ++line});
  return out;
}

}  // namespace quat

#include "quatroid/core/pair.hpp"

#include <algorithm>
#include <sstream>

namespace quat {

namespace {

struct Tables {
  std::array<PointMask, kTriples> tri{};
  std::array<PointMask, kSextuples> sex{};
  std::array<int, 512> tri_idx{};
  std::array<int, 512> sex_idx{};
  Tables() {
    tri_idx.fill(-1);
    sex_idx.fill(-1);
    // lex order of sorted tuples; for a fixed size this is the order of the
    // masks read with point 1 as the most significant digit
    std::vector<PointMask> t, s;
    for (unsigned m = 0; m < 256; ++m) {
      if (std::popcount(m) == 3) t.push_back(static_cast<PointMask>(m));
      if (std::popcount(m) == 6) s.push_back(static_cast<PointMask>(m));
    }
    auto lex = [](PointMask a, PointMask b) {
      for (int i = 1; i <= 8; ++i) {
        bool x = has_point(a, i), y = has_point(b, i);
        if (x != y) return x;
      }
      return false;
    };
    std::sort(t.begin(), t.end(), lex);
    std::sort(s.begin(), s.end(), lex);
    for (int i = 0; i < kTriples; ++i) {
      tri[i] = t[i];
      tri_idx[t[i]] = i;
    }
    for (int i = 0; i < kSextuples; ++i) {
      sex[i] = s[i];
      sex_idx[s[i]] = i;
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

template <class Bits>
std::vector<PointMask> masks_of(Bits bits, const PointMask* table) {
  std::vector<PointMask> out;
  while (bits) {
    int r = std::countr_zero(bits);
    out.push_back(table[r]);
    bits &= bits - 1;
  }
  return out;
}

void expand(PointMask flat, int k, std::vector<PointMask>& out) {
  for (unsigned m = flat;; m = (m - 1) & flat) {
    if (std::popcount(m) == k) out.push_back(static_cast<PointMask>(m));
    if (m == 0) break;
  }
}

}  // namespace

const std::array<PointMask, kTriples>& triple_masks() { return tables().tri; }
const std::array<PointMask, kSextuples>& sextuple_masks() { return tables().sex; }
int triple_index(PointMask m) { return m < 512 ? tables().tri_idx[m] : -1; }
int sextuple_index(PointMask m) { return m < 512 ? tables().sex_idx[m] : -1; }

std::string mask_str(PointMask m) {
  std::string s;
  for (int i = 1; i <= 9; ++i)
    if (has_point(m, i)) s += static_cast<char>('0' + i);
  return s;
}

PointMask parse_mask(const std::string& digits) {
  PointMask m = 0;
  for (char c : digits) {
    if (c < '1' || c > '9') throw ParseError(0, "bad point label '" + std::string(1, c) + "' in " + digits);
    PointMask b = static_cast<PointMask>(1u << (c - '1'));
    if (m & b) throw ParseError(0, "repeated point in " + digits);
    m |= b;
  }
  return m;
}

Pair Pair::from_masks(const std::vector<PointMask>& triples, const std::vector<PointMask>& sextuples) {
  Pair q;
  for (auto m : triples) q.add_triple(m);
  for (auto m : sextuples) q.add_sextuple(m);
  return q;
}

std::vector<PointMask> Pair::triples() const { return masks_of(tri, triple_masks().data()); }
std::vector<PointMask> Pair::sextuples() const { return masks_of(sex, sextuple_masks().data()); }

bool Pair::has_triple(PointMask m) const {
  int i = triple_index(m);
  return i >= 0 && ((tri >> i) & 1);
}

bool Pair::has_sextuple(PointMask m) const {
  int i = sextuple_index(m);
  return i >= 0 && ((sex >> i) & 1);
}

void Pair::add_triple(PointMask m) {
  int i = triple_index(m);
  if (i < 0) throw std::invalid_argument("not a 3-subset of {1..8}: " + mask_str(m));
  tri |= 1ull << i;
}

void Pair::add_sextuple(PointMask m) {
  int i = sextuple_index(m);
  if (i < 0) throw std::invalid_argument("not a 6-subset of {1..8}: " + mask_str(m));
  sex |= 1u << i;
}

PointMask Pair::support() const {
  PointMask s = 0;
  for (auto m : triples()) s |= m;
  for (auto m : sextuples()) s |= m;
  return s;
}

Pair parse_pair(const std::string& text) {
  std::string lines_part = text, conics_part;
  auto semi = text.find(';');
  if (semi != std::string::npos) {
    lines_part = text.substr(0, semi);
    conics_part = text.substr(semi + 1);
  }
  auto strip_label = [](std::string s, const std::string& label) {
    auto p = s.find(label);
    if (p != std::string::npos) s = s.substr(p + label.size());
    for (char& c : s)
      if (c == '{' || c == '}' || c == ',') c = ' ';
    return s;
  };
  if (semi == std::string::npos && text.find("conics:") != std::string::npos) {
    conics_part = text.substr(text.find("conics:"));
    lines_part = text.substr(0, text.find("conics:"));
  }
  Pair q;
  std::istringstream ls(strip_label(lines_part, "lines:"));
  std::string tok;
  while (ls >> tok) {
    PointMask m = parse_mask(tok);
    if (std::popcount(m) < 3 || (m & ~kAllPoints)) throw ParseError(0, "bad line " + tok);
    std::vector<PointMask> sub;
    expand(m, 3, sub);
    for (auto t : sub) q.add_triple(t);
  }
  std::istringstream cs(strip_label(conics_part, "conics:"));
  while (cs >> tok) {
    PointMask m = parse_mask(tok);
    if (std::popcount(m) < 6 || (m & ~kAllPoints)) throw ParseError(0, "bad conic " + tok);
    std::vector<PointMask> sub;
    expand(m, 6, sub);
    for (auto t : sub) q.add_sextuple(t);
  }
  return q;
}

std::string pair_str(const Pair& q) {
  std::string s = "lines:";
  for (auto m : q.triples()) s += " " + mask_str(m);
  s += " ; conics:";
  for (auto m : q.sextuples()) s += " " + mask_str(m);
  return s;
}

namespace {

// grow a seed to the largest superset all of whose k-subsets satisfy `in`
PointMask grow(PointMask seed, int k, const std::function<bool(PointMask)>& in) {
  PointMask f = seed;
  for (int x = 1; x <= 8; ++x) {
    if (has_point(f, x)) continue;
    PointMask g = f | static_cast<PointMask>(1u << (x - 1));
    std::vector<PointMask> sub;
    expand(g, k, sub);
    if (std::all_of(sub.begin(), sub.end(), in)) f = g;
  }
  return f;
}

std::vector<PointMask> flats(const std::vector<PointMask>& elems, int k, const std::function<bool(PointMask)>& in) {
  std::vector<PointMask> out;
  for (auto e : elems) {
    bool covered = std::any_of(out.begin(), out.end(), [&](PointMask f) { return (f & e) == e; });
    if (!covered) out.push_back(grow(e, k, in));
  }
  // a non-closed input may produce overlapping or nested sets; drop nested ones
  std::vector<PointMask> keep;
  for (auto f : out) {
    bool nested = std::any_of(out.begin(), out.end(), [&](PointMask g) { return g != f && (g & f) == f; });
    if (!nested && std::find(keep.begin(), keep.end(), f) == keep.end()) keep.push_back(f);
  }
  auto lex = [](PointMask a, PointMask b) { return mask_str(a) < mask_str(b); };
  std::sort(keep.begin(), keep.end(), lex);
  return keep;
}

}  // namespace

std::vector<PointMask> line_flats(const Pair& q) {
  return flats(q.triples(), 3, [&](PointMask m) { return q.has_triple(m); });
}

std::vector<PointMask> conic_flats(const Pair& q) {
  return flats(q.sextuples(), 6, [&](PointMask m) { return q.has_sextuple(m); });
}

std::string flats_str(const std::vector<PointMask>& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " " : "") + mask_str(f[i]);
  return s + "}";
}

std::string pair_flats_str(const Pair& q) {
  std::string s = "lines:";
  for (auto m : line_flats(q)) s += " " + mask_str(m);
  s += " ; conics:";
  for (auto m : conic_flats(q)) s += " " + mask_str(m);
  return s;
}

}  // namespace quat

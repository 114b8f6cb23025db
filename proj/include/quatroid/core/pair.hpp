#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quat {

// point i in {1..9} is bit i-1
using PointMask = std::uint16_t;

constexpr int kPoints = 8;
constexpr int kTriples = 56;
constexpr int kSextuples = 28;
constexpr PointMask kAllPoints = 0xFF;

inline int popcount(unsigned x) { return std::popcount(x); }
inline bool has_point(PointMask m, int i) { return (m >> (i - 1)) & 1; }

// lex-ordered index tables for 3- and 6-subsets of {1..8}
const std::array<PointMask, kTriples>& triple_masks();
const std::array<PointMask, kSextuples>& sextuple_masks();
int triple_index(PointMask m);     // -1 unless popcount 3 inside {1..8}
int sextuple_index(PointMask m);   // -1 unless popcount 6 inside {1..8}

std::string mask_str(PointMask m);        // "123"
PointMask parse_mask(const std::string& digits);

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& why)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + why : why), line(line_no) {}
};

// A pair (I, J) of collinear triples and conconic sextuples.
struct Pair {
  std::uint64_t tri = 0;  // bit r: r-th triple in lex order
  std::uint32_t sex = 0;  // bit r: r-th sextuple in lex order

  Pair() = default;
  Pair(std::uint64_t t, std::uint32_t s) : tri(t), sex(s) {}
  static Pair from_masks(const std::vector<PointMask>& triples, const std::vector<PointMask>& sextuples);

  std::vector<PointMask> triples() const;
  std::vector<PointMask> sextuples() const;
  int num_triples() const { return std::popcount(tri); }
  int num_sextuples() const { return std::popcount(sex); }
  int num_conditions() const { return num_triples() + num_sextuples(); }
  bool has_triple(PointMask m) const;
  bool has_sextuple(PointMask m) const;
  void add_triple(PointMask m);
  void add_sextuple(PointMask m);
  bool empty() const { return tri == 0 && sex == 0; }
  // points appearing in some condition
  PointMask support() const;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair& a, const Pair& b) = default;
};

struct PairHash {
  std::size_t operator()(const Pair& p) const {
    return std::hash<std::uint64_t>()(p.tri * 0x9E3779B97F4A7C15ull ^ p.sex);
  }
};

// "lines: 123 145 ; conics: 234678"; longer digit strings are flats and
// expand to all their 3-subsets (lines) or 6-subsets (conics)
Pair parse_pair(const std::string& text);
std::string pair_str(const Pair& q);

// maximal collinear / conconic point sets, as in the appendix tables
std::vector<PointMask> line_flats(const Pair& q);
std::vector<PointMask> conic_flats(const Pair& q);
std::string flats_str(const std::vector<PointMask>& flats);  // "{123 145}"
std::string pair_flats_str(const Pair& q);                     // "lines: 123 145 ; conics: 1234567"

}  // namespace quat

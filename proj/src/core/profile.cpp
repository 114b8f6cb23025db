#include "quatroid/core/profile.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace quat {

std::string type_name(ReducibleType t) {
  switch (t) {
    case ReducibleType::NodalCubic: return "nodal";
    case ReducibleType::CuspidalCubic: return "cuspidal";
    case ReducibleType::ConicSecant: return "conic+secant";
    case ReducibleType::ConicTangent: return "conic+tangent";
    case ReducibleType::Triangle: return "triangle";
    case ReducibleType::Asterisk: return "asterisk";
    case ReducibleType::DoubleLinePlusLine: return "double+transverse";
    case ReducibleType::TripleLine: return "triple";
  }
  return "?";
}

std::string ReducibleProfile::str() const {
  std::string s;
  if (conic_secant_count) s += "∅^" + std::to_string(conic_secant_count);
  if (triangle_count) s += "△^" + std::to_string(triangle_count);
  if (tangency == Tangency::ConicSecant) s += "+∅";
  if (tangency == Tangency::Triangle) s += "+△";
  return s;
}

ReducibleProfile reducible_profile(const Pair& q) {
  if (!is_bezoutian(q)) throw NotBezoutian();
  ReducibleProfile p;
  auto tri = q.triples();
  auto line_through = [&](PointMask pts) -> PointMask {
    for (auto t : tri)
      if ((t & pts) == pts) return t;
    return pts;
  };

  // line through a triple, conic through the other five
  for (auto t : tri) {
    PointMask rest = kAllPoints & ~t;
    bool split = std::any_of(tri.begin(), tri.end(), [&](PointMask u) { return (u & rest) == u; });
    if (!split) p.conic_secant_lines.push_back(t);
  }
  // conic through a sextuple, line through the remaining pair
  for (auto s : q.sextuples()) {
    PointMask pairpts = kAllPoints & ~s;
    if (line_through(pairpts) == pairpts) p.conic_secant_lines.push_back(pairpts);
  }
  // two disjoint lines and the line through what is left
  for (std::size_t x = 0; x < tri.size(); ++x)
    for (std::size_t y = x + 1; y < tri.size(); ++y) {
      if (tri[x] & tri[y]) continue;
      std::array<PointMask, 3> key{tri[x], tri[y], line_through(kAllPoints & ~(tri[x] | tri[y]))};
      std::sort(key.begin(), key.end());
      if (std::find(p.triangles.begin(), p.triangles.end(), key) == p.triangles.end()) p.triangles.push_back(key);
    }
  p.conic_secant_count = static_cast<int>(p.conic_secant_lines.size());
  p.triangle_count = static_cast<int>(p.triangles.size());

  p.below_q77 = contained_in_orbit(q, refs::q(77));
  p.below_q10 = contained_in_orbit(q, refs::q(10));
  if (p.below_q77)
    p.tangency = Tangency::Triangle;
  else if (p.below_q10)
    p.tangency = Tangency::ConicSecant;
  return p;
}

namespace refs {

const Pair& q(int index) {
  static const std::map<int, Pair> table = {
      {1, parse_pair("lines: ; conics:")},
      {2, parse_pair("lines: ; conics: 123456")},
      {6, parse_pair("lines: ; conics: 1234567")},
      {10, parse_pair("lines: 123 ; conics: 145678")},
      {32, parse_pair("lines: 123 145 167 246 257 347 ; conics:")},
      {41, parse_pair("lines: 123 145 167 246 258 357 368 478 ; conics:")},
      {43, parse_pair("lines: 123 145 167 246 357 ; conics:")},
      {59, parse_pair("lines: 123 145 246 ; conics: 125678 134678 234578")},
      {62, parse_pair("lines: 123 145 246 356 ; conics: 125678 134678")},
      {63, parse_pair("lines: 123 145 246 356 ; conics: 125678 134678 234578")},
      {77, parse_pair("lines: 123 145 678 ; conics:")},
      {121, parse_pair("lines: 1234 ; conics:")},
  };
  auto it = table.find(index);
  if (it == table.end()) throw std::out_of_range("no built-in reference stratum " + std::to_string(index));
  return it->second;
}

}  // namespace refs

std::string NonrationalCertificate::str() const {
  return "Q <= sigma.Q" + std::to_string(ref_index) + " with sigma = " + perm_str(sigma);
}

namespace {

// a permutation sending {1..k} onto the points of m (in order)
Perm onto(PointMask m) {
  Perm p{};
  int lo = 0, hi = popcount(m);
  for (int i = 0; i < kPoints; ++i) {
    if ((m >> i) & 1)
      p[lo++] = static_cast<std::uint8_t>(i);
    else
      p[hi++] = static_cast<std::uint8_t>(i);
  }
  return p;
}

}  // namespace

std::optional<NonrationalCertificate> certify_nonrational(const Pair& q0) {
  if (!weak_criteria(q0).line_meets_conic) return std::nullopt;
  Pair q = closure(q0);
  if (!weak_criteria(q).line_meets_conic) return std::nullopt;
  if (is_bezoutian(q)) {
    for (int ref : {32, 41, 59, 62})
      if (auto s = orbit_witness(q, refs::q(ref))) return NonrationalCertificate{ref, *s};
    return std::nullopt;
  }
  // four collinear points or seven on a conic
  for (unsigned m = 0; m < 256; ++m) {
    if (popcount(m) == 4) {
      bool all = true;
      for (int x = 0; x < 8 && all; ++x)
        if ((m >> x) & 1) all = q.has_triple(static_cast<PointMask>(m & ~(1u << x)));
      if (all) return NonrationalCertificate{121, onto(static_cast<PointMask>(m))};
    }
  }
  for (unsigned m = 0; m < 256; ++m) {
    if (popcount(m) == 7) {
      bool all = true;
      for (int x = 0; x < 8 && all; ++x)
        if ((m >> x) & 1) all = q.has_sextuple(static_cast<PointMask>(m & ~(1u << x)));
      if (all) return NonrationalCertificate{6, onto(static_cast<PointMask>(m))};
    }
  }
  return std::nullopt;
}

}  // namespace quat

#include "quatroid/realization/realization.hpp"

#include <algorithm>

namespace quat {

Pair quatroid_of(const Matrix<QuadExt>& p) {
  if (p.rows() != 3 || p.cols() != kPoints) throw DegenerateInput("expected a 3 x 8 matrix");
  Pair q;
  for (PointMask t : triple_masks()) {
    Eigen::Matrix<QuadExt, 3, 3> m;
    int c = 0;
    for (int i = 0; i < kPoints; ++i)
      if ((t >> i) & 1) m.col(c++) = p.col(i);
    if (is_zero(det3<QuadExt>(m))) q.add_triple(t);
  }
  for (PointMask s : sextuple_masks()) {
    Matrix<QuadExt> v(6, 6);
    int r = 0;
    for (int i = 0; i < kPoints; ++i)
      if ((s >> i) & 1) {
        const auto x = p.col(i);
        QuadExt row[6] = {x(0) * x(0), x(0) * x(1), x(0) * x(2), x(1) * x(1), x(1) * x(2), x(2) * x(2)};
        for (int k = 0; k < 6; ++k) v(r, k) = row[k];
        ++r;
      }
    auto ker = null_space(v);
    if (ker.size() != 1) continue;
    const auto& k = ker[0];
    const QuadExt h = QuadExt(Rational(1, 2));
    Eigen::Matrix<QuadExt, 3, 3> m;
    m << k(0), h * k(1), h * k(2), h * k(1), k(3), h * k(4), h * k(2), h * k(4), k(5);
    if (!is_zero(det3<QuadExt>(m))) q.add_sextuple(s);
  }
  return q;
}

Q41Realization realize_Q41() {
  Q41Realization out;
  // z^2 - z + 1 = 0
  out.discriminant = Rational(1) - 4;
  const QuadExt root = QuadExt::sqrt(-3);
  out.z2 = (QuadExt(1) + root) / QuadExt(2);
  out.z2_conjugate = out.z2.conj();
  const QuadExt z2 = out.z2, z1 = QuadExt(1) - z2, z3 = 1, z4 = 1;
  const QuadExt o = 1, n = 0;
  out.points.resize(3, 8);
  out.points << o, n, o, n, o, n, o, o,  //
      n, o, z1, n, n, o, o, z4,          //
      n, n, n, o, z2, z3, o, z2;
  out.realized = quatroid_of(out.points);
  const bool is_root = is_zero(z2 * z2 - z2 + QuadExt(1)) && is_zero(out.z2_conjugate * out.z2_conjugate - out.z2_conjugate + QuadExt(1));
  out.verified = out.realized == refs::q(41) && is_root && !z2.is_real() && z2 != out.z2_conjugate && out.discriminant < 0;
  return out;
}

bool is_exhaustive(const Pair& q) {
  PointMask used = 0;
  for (auto t : q.triples()) used |= t;
  for (auto s : q.sextuples()) used |= s;
  return used == kAllPoints;
}

std::string BaseLocusMatroid::str() const {
  std::string s;
  for (auto t : nonbases) s += (s.empty() ? "" : " ") + mask_str(t);
  return "{" + s + "}";
}

BaseLocusMatroid base_locus_matroid(const Pair& q) {
  if (!is_bezoutian(q)) throw GuardViolation("base locus matroid needs a Bezoutian quatroid");
  if (!is_exhaustive(q)) throw GuardViolation("base locus matroid needs an exhaustive quatroid");
  if (contained_in_orbit(q, refs::q(10))) throw GuardViolation("base locus may be nonreduced (below the Q10 orbit)");
  std::vector<PointMask> nb = q.triples();
  for (auto s : q.sextuples()) nb.push_back(static_cast<PointMask>((kAllPoints & ~s) | (1u << 8)));
  // closure on 9 points: two dependent triples sharing two points span a line, and
  // a 6-set on a conic through a collinear triple has its other three collinear
  auto add = [&](PointMask t) {
    if (std::find(nb.begin(), nb.end(), t) != nb.end()) return false;
    nb.push_back(t);
    return true;
  };
  const PointMask ground = 0x1FF;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (popcount(nb[a] & nb[b]) != 2) continue;
        PointMask u = nb[a] | nb[b];
        for (int x = 0; x < 9; ++x)
          if ((u >> x) & 1) grew |= add(static_cast<PointMask>(u & ~(1u << x)));
      }
    for (std::size_t a = 0; a < nb.size(); ++a) {
      const auto rest = static_cast<PointMask>(ground & ~nb[a]);
      for (std::size_t b = 0; b < nb.size(); ++b)
        if ((nb[b] & rest) == nb[b]) grew |= add(static_cast<PointMask>(rest & ~nb[b]));
    }
  }
  std::sort(nb.begin(), nb.end());
  return {nb};
}

std::optional<std::vector<PointMask>> find_fano(const BaseLocusMatroid& m) {
  for (unsigned s = 0; s < (1u << 9); ++s) {
    if (popcount(s) != 7) continue;
    std::vector<PointMask> in;
    for (auto t : m.nonbases)
      if ((t & s) == t) in.push_back(t);
    if (in.size() != 7) continue;
    bool ok = true;
    for (std::size_t a = 0; a < in.size() && ok; ++a)
      for (std::size_t b = a + 1; b < in.size() && ok; ++b) ok = popcount(in[a] & in[b]) == 1;
    if (ok) return in;
  }
  return std::nullopt;
}

FanoCertificate refute(const Pair& q) {
  FanoCertificate c;
  c.matroid = base_locus_matroid(q);
  if (auto f = find_fano(c.matroid)) {
    c.fano = *f;
    c.holds = true;
  }
  return c;
}

FanoCertificate refute_Q63() { return refute(refs::q(63)); }

Representability classify_representability(const Pair& q) {
  static const Pair q41 = canonical_form(refs::q(41));
  if (canonical_form(q) == q41) return Representability::ComplexOnly;
  if (is_bezoutian(q) && is_exhaustive(q) && !contained_in_orbit(q, refs::q(10)) && refute(q).holds)
    return Representability::No;
  return Representability::Rational;
}

}  // namespace quat

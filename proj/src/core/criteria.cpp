#include "quatroid/core/criteria.hpp"

#include <bit>

namespace quat {

namespace {

template <class Bits>
std::vector<int> bits_of(Bits b) {
  std::vector<int> out;
  for (; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::uint64_t triples_within(PointMask s) {
  std::uint64_t out = 0;
  const auto& tm = triple_masks();
  for (int r = 0; r < kTriples; ++r)
    if ((tm[r] & s) == tm[r]) out |= 1ull << r;
  return out;
}

std::uint32_t sextuples_within(PointMask s) {
  std::uint32_t out = 0;
  const auto& sm = sextuple_masks();
  for (int r = 0; r < kSextuples; ++r)
    if ((sm[r] & s) == sm[r]) out |= 1u << r;
  return out;
}

}  // namespace

WeakCriteria weak_criteria(const Pair& q) {
  WeakCriteria w;
  const auto& tm = triple_masks();
  const auto& sm = sextuple_masks();
  auto ti = bits_of(q.tri);
  auto si = bits_of(q.sex);
  for (int a : ti)
    for (int b : si)
      if ((tm[a] & sm[b]) == tm[a]) w.line_meets_conic = false;
  for (std::size_t x = 0; x < ti.size(); ++x)
    for (std::size_t y = x + 1; y < ti.size(); ++y)
      if (std::popcount(unsigned(tm[ti[x]] & tm[ti[y]])) > 1) {
        auto need = triples_within(tm[ti[x]] | tm[ti[y]]);
        if ((q.tri & need) != need) w.lines_closed = false;
      }
  for (std::size_t x = 0; x < si.size(); ++x)
    for (std::size_t y = x + 1; y < si.size(); ++y)
      if (std::popcount(unsigned(sm[si[x]] & sm[si[y]])) > 4) {
        auto need = sextuples_within(sm[si[x]] | sm[si[y]]);
        if ((q.sex & need) != need) w.conics_closed = false;
      }
  return w;
}

StrongCriteria strong_criteria(const Pair& q) {
  StrongCriteria s;
  const auto& tm = triple_masks();
  const auto& sm = sextuple_masks();
  auto ti = bits_of(q.tri);
  auto si = bits_of(q.sex);
  for (std::size_t x = 0; x < ti.size(); ++x)
    for (std::size_t y = x + 1; y < ti.size(); ++y)
      if (std::popcount(unsigned(tm[ti[x]] & tm[ti[y]])) > 1) s.lines_meet_once = false;
  for (std::size_t x = 0; x < si.size(); ++x)
    for (std::size_t y = x + 1; y < si.size(); ++y)
      if (std::popcount(unsigned(sm[si[x]] & sm[si[y]])) > 4) s.conics_meet_in_four = false;
  return s;
}

bool is_bezoutian(const Pair& q) { return weak_criteria(q).all() && strong_criteria(q).all(); }

std::uint64_t close_triples(std::uint64_t tri) {
  const auto& tm = triple_masks();
  bool changed = true;
  while (changed) {
    changed = false;
    auto ti = bits_of(tri);
    for (std::size_t x = 0; x < ti.size() && !changed; ++x)
      for (std::size_t y = x + 1; y < ti.size() && !changed; ++y)
        if (std::popcount(unsigned(tm[ti[x]] & tm[ti[y]])) > 1) {
          auto need = triples_within(tm[ti[x]] | tm[ti[y]]);
          if ((tri & need) != need) {
            tri |= need;
            changed = true;
          }
        }
  }
  return tri;
}

std::uint32_t close_sextuples(std::uint32_t sex) {
  const auto& sm = sextuple_masks();
  bool changed = true;
  while (changed) {
    changed = false;
    auto si = bits_of(sex);
    for (std::size_t x = 0; x < si.size() && !changed; ++x)
      for (std::size_t y = x + 1; y < si.size() && !changed; ++y)
        if (std::popcount(unsigned(sm[si[x]] & sm[si[y]])) > 4) {
          auto need = sextuples_within(sm[si[x]] | sm[si[y]]);
          if ((sex & need) != need) {
            sex |= need;
            changed = true;
          }
        }
  }
  return sex;
}

Pair closure(const Pair& q) { return Pair(close_triples(q.tri), close_sextuples(q.sex)); }

std::uint32_t triple_squares(std::uint64_t tri) {
  const auto& tm = triple_masks();
  auto ti = bits_of(tri);
  std::uint32_t out = 0;
  for (std::size_t x = 0; x < ti.size(); ++x)
    for (std::size_t y = x + 1; y < ti.size(); ++y)
      if ((tm[ti[x]] & tm[ti[y]]) == 0) out |= 1u << sextuple_index(tm[ti[x]] | tm[ti[y]]);
  return out;
}

int m_Q(const Pair& q) {
  if (!is_bezoutian(q)) throw NotBezoutian();
  auto t = q.triples();
  auto s = q.sextuples();
  int incidences = 0, disjoint = 0, covering = 0;
  for (auto a : t)
    for (auto b : s)
      if (std::popcount(unsigned(a & b)) == 1) ++incidences;
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = x + 1; y < t.size(); ++y) {
      if ((t[x] & t[y]) == 0) ++disjoint;
      for (std::size_t z = y + 1; z < t.size(); ++z)
        if ((t[x] | t[y] | t[z]) == kAllPoints) ++covering;
    }
  return 2 * static_cast<int>(t.size()) + 2 * static_cast<int>(s.size()) - 2 * incidences - disjoint - covering;
}

bool leq(const Pair& q, const Pair& q2) {
  if (!is_bezoutian(q) || !is_bezoutian(q2)) throw NotBezoutian();
  if ((q2.tri & q.tri) != q2.tri) return false;
  std::uint32_t allowed = q.sex | triple_squares(q.tri);
  return (q2.sex & allowed) == q2.sex;
}

std::optional<Perm> orbit_witness(const Pair& q, const Pair& ref) {
  if (!is_bezoutian(q) || !is_bezoutian(ref)) throw NotBezoutian();
  if (ref.num_triples() > q.num_triples()) return std::nullopt;
  const auto& g = SymmetricGroup::get();
  const std::uint32_t allowed = q.sex | triple_squares(q.tri);
  auto rt = bits_of(ref.tri);
  auto rs = bits_of(ref.sex);
  for (int k = 0; k < SymmetricGroup::kOrder; ++k) {
    bool ok = true;
    for (int r : rt)
      if (!((q.tri >> g.triple_image(k, r)) & 1)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (int r : rs)
      if (!((allowed >> g.sextuple_image(k, r)) & 1)) {
        ok = false;
        break;
      }
    if (ok) return g[k];
  }
  return std::nullopt;
}

bool contained_in_orbit(const Pair& q, const Pair& ref) { return orbit_witness(q, ref).has_value(); }

Pair delete_point(const Pair& q, int i) {
  Pair r;
  for (auto m : q.triples())
    if (!has_point(m, i)) r.add_triple(m);
  for (auto m : q.sextuples())
    if (!has_point(m, i)) r.add_sextuple(m);
  return r;
}

}  // namespace quat

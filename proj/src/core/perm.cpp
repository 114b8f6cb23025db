#include "quatroid/core/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace quat {

Perm identity_perm() {
  Perm p;
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c;
  for (int i = 0; i < kPoints; ++i) c[i] = a[b[i]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c;
  for (int i = 0; i < kPoints; ++i) c[a[i]] = static_cast<std::uint8_t>(i);
  return c;
}

std::string perm_str(const Perm& p) {
  std::string s;
  for (auto x : p) s += static_cast<char>('1' + x);
  return s;
}

PointMask apply(const Perm& p, PointMask m) {
  PointMask r = 0;
  for (int i = 0; i < kPoints; ++i)
    if ((m >> i) & 1) r |= static_cast<PointMask>(1u << p[i]);
  return r | (m & ~kAllPoints);
}

Pair apply(const Perm& p, const Pair& q) {
  Pair r;
  for (auto m : q.triples()) r.add_triple(apply(p, m));
  for (auto m : q.sextuples()) r.add_sextuple(apply(p, m));
  return r;
}

const SymmetricGroup& SymmetricGroup::get() {
  static const SymmetricGroup g;
  return g;
}

SymmetricGroup::SymmetricGroup() {
  Perm p = identity_perm();
  do perms_.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  tri_.resize(perms_.size() * kTriples);
  sex_.resize(perms_.size() * kSextuples);
  const auto& tm = triple_masks();
  const auto& sm = sextuple_masks();
  for (std::size_t k = 0; k < perms_.size(); ++k) {
    for (int r = 0; r < kTriples; ++r) tri_[k * kTriples + r] = static_cast<std::uint8_t>(triple_index(quat::apply(perms_[k], tm[r])));
    for (int r = 0; r < kSextuples; ++r) sex_[k * kSextuples + r] = static_cast<std::uint8_t>(sextuple_index(quat::apply(perms_[k], sm[r])));
  }
}

Pair SymmetricGroup::apply(int k, const Pair& q) const {
  Pair r;
  for (auto t = q.tri; t; t &= t - 1) r.tri |= 1ull << triple_image(k, std::countr_zero(t));
  for (auto s = q.sex; s; s &= s - 1) r.sex |= 1u << sextuple_image(k, std::countr_zero(s));
  return r;
}

namespace {

int perm_rank(const Perm& p) {
  // lexicographic rank, matching the enumeration order of SymmetricGroup
  static const int fact[] = {5040, 720, 120, 24, 6, 2, 1, 1};
  int r = 0;
  for (int i = 0; i < kPoints; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < kPoints; ++j) smaller += p[j] < p[i];
    r += smaller * fact[i];
  }
  return r;
}

}  // namespace

std::vector<int> generated_subgroup(const std::vector<Perm>& generators) {
  std::vector<int> out;
  if (generators.empty()) {
    out.resize(SymmetricGroup::kOrder);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  const auto& g = SymmetricGroup::get();
  std::vector<bool> seen(SymmetricGroup::kOrder, false);
  std::queue<int> todo;
  int id = perm_rank(identity_perm());
  seen[id] = true;
  todo.push(id);
  while (!todo.empty()) {
    int k = todo.front();
    todo.pop();
    out.push_back(k);
    for (const auto& s : generators) {
      int n = perm_rank(compose(s, g[k]));
      if (!seen[n]) {
        seen[n] = true;
        todo.push(n);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> stabilizer(const Pair& q) {
  const auto& g = SymmetricGroup::get();
  std::vector<int> out;
  for (int k = 0; k < SymmetricGroup::kOrder; ++k)
    if (g.apply(k, q) == q) out.push_back(k);
  return out;
}

}  // namespace quat

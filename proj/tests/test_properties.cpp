#include "common.hpp"

#include "doctest.h"

using namespace qt;

namespace {

const std::map<int, Configuration>& reps() {
  static const auto r = load_representatives(data("representatives.txt"));
  return r;
}

std::pair<int, Configuration> random_rep(std::mt19937_64& rng) {
  auto it = reps().begin();
  std::advance(it, rng() % reps().size());
  return *it;
}

// a closed pair that passes the weak criteria
Pair random_candidate(std::mt19937_64& rng) {
  for (;;) {
    Pair q = closure(random_pair(rng, 0.03, 0.05));
    if (weak_criteria(q).all()) return q;
  }
}

Cubic random_cubic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> u(-5, 5);
  Cubic c;
  for (auto& x : c.c) x = u(rng);
  return c;
}

// C(g x)
Cubic substitute(const Cubic& c, const RatMatrix& g) {
  std::vector<MultiPoly> sub;
  for (int i = 0; i < 3; ++i)
    sub.push_back(g(i, 0) * var(0) + g(i, 1) * var(1) + g(i, 2) * var(2));
  MultiPoly zero(3), one = MultiPoly::constant(3, 1);
  return Cubic::from_poly(c.poly().evaluate<MultiPoly>(sub, zero, one));
}

}  // namespace

TEST_CASE("closure is idempotent and equivariant") {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 300; ++k) {
    Pair q = random_pair(rng, 0.04, 0.06);
    Pair c = closure(q);
    CHECK(closure(c) == c);
    CHECK((c.tri & q.tri) == q.tri);
    CHECK((c.sex & q.sex) == q.sex);
    Perm s = random_perm(rng);
    CHECK(closure(quat::apply(s, q)) == quat::apply(s, c));
  }
}

TEST_CASE("criteria are invariant under relabeling") {
  std::mt19937_64 rng(102);
  for (int k = 0; k < 300; ++k) {
    Pair q = random_pair(rng, 0.04, 0.06);
    Perm s = random_perm(rng);
    Pair r = quat::apply(s, q);
    CHECK(weak_criteria(r) == weak_criteria(q));
    CHECK(strong_criteria(r) == strong_criteria(q));
    CHECK(is_bezoutian(r) == is_bezoutian(q));
  }
  for (int k = 0; k < 150; ++k) {
    Pair q = random_candidate(rng);
    if (!is_bezoutian(q)) continue;
    Perm s = random_perm(rng);
    Pair r = quat::apply(s, q);
    CHECK(m_Q(r) == m_Q(q));
    CHECK(reducible_profile(r).d() == reducible_profile(q).d());
    CHECK(leq(q, q));
    CHECK(leq(r, quat::apply(s, Q(1))));
  }
}

TEST_CASE("canonical forms are orbit invariants") {
  std::mt19937_64 rng(103);
  for (int k = 0; k < 200; ++k) {
    Pair q = random_candidate(rng);
    Pair c = canonical_form(q);
    CHECK(canonical_form(quat::apply(random_perm(rng), q)) == c);
    CHECK(canonical_form(c) == c);
    CHECK_FALSE(canonical_less(q, c));
  }
  for (int i = 1; i <= 126; ++i) {
    Pair q = quat::apply(random_perm(rng), Q(i));
    CHECK(canonical_form(q) == canonical_form(Q(i)));
    CHECK(orbit_size(q) == orbit_size(Q(i)));
  }
}

TEST_CASE("incidences are projectively invariant") {
  std::mt19937_64 rng(104);
  for (int k = 0; k < 150; ++k) {
    auto [idx, p] = random_rep(rng);
    CAPTURE(idx);
    CHECK(quatroid_of(transformed(p, random_pgl(rng), rng)) == Q(idx));
  }
}

TEST_CASE("relabeling points relabels the quatroid") {
  std::mt19937_64 rng(105);
  for (int k = 0; k < 120; ++k) {
    auto [idx, p] = random_rep(rng);
    Perm s = random_perm(rng);
    RatMatrix m(3, 8);
    for (int i = 0; i < 8; ++i) m.col(s[i]) = p.points.col(i);
    CHECK(quatroid_of(Configuration(m)) == quat::apply(s, Q(idx)));
  }
}

TEST_CASE("rational count is projectively invariant") {
  std::mt19937_64 rng(106);
  int done = 0;
  while (done < 100) {
    auto [idx, p] = random_rep(rng);
    if (!is_bezoutian(Q(idx))) continue;
    CAPTURE(idx);
    auto a = count_rational(p);
    auto b = count_rational(transformed(p, random_pgl(rng), rng));
    CHECK(a.d == b.d);
    CHECK(a.r == b.r);
    REQUIRE(b.r);
    CHECK(b.d + *b.r == 12);
    CHECK(b.d == reducible_profile(Q(idx)).d());
    ++done;
  }
}

TEST_CASE("generic configurations count twelve") {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<int> u(-30, 30);
  int done = 0;
  while (done < 100) {
    RatMatrix m(3, 8);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 8; ++j) m(i, j) = u(rng);
    Configuration p(m);
    try {
      check_distinct(p);
    } catch (const DegenerateInput&) {
      continue;
    }
    Pair q = quatroid_of(p);
    if (!q.empty()) continue;
    auto r = count_rational(p);
    CHECK(r.d + r.r.value() == 12);
    CHECK(r.d == 12);
    ++done;
  }
}

TEST_CASE("Aronhold invariants have weights 4 and 6") {
  std::mt19937_64 rng(108);
  for (int k = 0; k < 100; ++k) {
    Cubic c = random_cubic(rng);
    RatMatrix g = random_pgl(rng, 2);
    Rational det = determinant(g);
    Cubic h = substitute(c, g);
    CHECK(aronhold_S(h) == det * det * det * det * aronhold_S(c));
    CHECK(aronhold_T(h) == det * det * det * det * det * det * aronhold_T(c));
  }
}

TEST_CASE("triangles in Hesse-type pencils are triple roots") {
  std::mt19937_64 rng(109);
  Cubic fermat = Cubic::from_poly(var(0) * var(0) * var(0) + var(1) * var(1) * var(1) + var(2) * var(2) * var(2));
  Cubic xyz = Cubic::from_poly(var(0) * var(1) * var(2));
  for (int k = 0; k < 100; ++k) {
    RatMatrix g = random_pgl(rng, 3);
    Pencil l{substitute(fermat, g), substitute(xyz, g)};
    auto roots = rational_roots(pencil_disc(l));
    REQUIRE(roots.size() == 2u);
    for (const auto& r : roots) {
      CHECK(r.multiplicity == 3);
      CHECK(classify_singular(l.member(Rational(r.a), Rational(r.b))) == ReducibleType::Triangle);
    }
  }
}

TEST_CASE("rational roots of products of linear forms") {
  std::mt19937_64 rng(110);
  std::uniform_int_distribution<long> big(-1000000007L, 1000000007L);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int k = 0; k < 100; ++k) {
    std::map<std::pair<Integer, Integer>, int> want;
    BinaryForm f = BinaryForm::constant(Rational(big(rng) | 1));
    // an irreducible quadratic factor keeps some roots irrational
    f = f * BinaryForm({Rational(1), Rational(0), Rational(-2 - long(rng() % 5) * 3)});
    for (int j = 0, n = 1 + rng() % 4; j < n; ++j) {
      Integer a = big(rng), b = big(rng) % 1000 + 1000;
      if (rng() % 7 == 0) a = 1, b = 0;
      Integer g = mp::gcd(a, b);
      a /= g, b /= g;
      int m = mult(rng);
      want[{a, b}] += m;
      for (int e = 0; e < m; ++e) f = f * BinaryForm::linear(Rational(b), Rational(-a));
    }
    auto roots = rational_roots(f);
    std::map<std::pair<Integer, Integer>, int> got;
    for (const auto& r : roots) got[{r.a, r.b}] += r.multiplicity;
    CHECK(got == want);
  }
}

#include "common.hpp"

#include "doctest.h"

#include <set>

using namespace qt;

namespace {

// 4 points with two collinear triples sharing two points: all four 3-subsets collinear
std::uint64_t naive_line_closure(std::uint64_t tri) {
  for (bool grew = true; grew;) {
    grew = false;
    auto ts = Pair(tri, 0).triples();
    for (auto a : ts)
      for (auto b : ts) {
        PointMask u = a | b;
        if (std::popcount(unsigned(u)) != 4) continue;
        for (int x = 0; x < 8; ++x)
          if ((u >> x) & 1) {
            int r = triple_index(static_cast<PointMask>(u & ~(1u << x)));
            if (!((tri >> r) & 1)) tri |= 1ull << r, grew = true;
          }
      }
  }
  return tri;
}

int naive_stabilizer(const Pair& q) {
  Perm p = identity_perm();
  int n = 0;
  do n += quat::apply(p, q) == q;
  while (std::next_permutation(p.begin(), p.end()));
  return n;
}

}  // namespace

TEST_CASE("masks and index tables") {
  CHECK(triple_masks().size() == 56);
  CHECK(sextuple_masks().size() == 28);
  CHECK(mask_str(triple_masks().front()) == "123");
  CHECK(mask_str(triple_masks().back()) == "678");
  CHECK(mask_str(sextuple_masks().front()) == "123456");
  CHECK(mask_str(sextuple_masks().back()) == "345678");
  for (int r = 0; r < kTriples; ++r) CHECK(triple_index(triple_masks()[r]) == r);
  for (int r = 0; r < kSextuples; ++r) CHECK(sextuple_index(sextuple_masks()[r]) == r);
  CHECK(triple_index(parse_mask("1234")) == -1);
  CHECK(triple_index(parse_mask("129")) == -1);
  CHECK_THROWS_AS(parse_mask("12a"), ParseError);
  CHECK_THROWS_AS(parse_mask("112"), ParseError);
}

TEST_CASE("pair text round trip and flats") {
  Pair q = parse_pair("lines: 123 145 ; conics: 234678");
  CHECK(q.num_triples() == 2);
  CHECK(q.num_sextuples() == 1);
  CHECK(q.has_triple(parse_mask("145")));
  CHECK(parse_pair(pair_str(q)) == q);

  Pair flat = parse_pair("lines: 1234 ; conics: 1234567");
  CHECK(flat.num_triples() == 4);
  CHECK(flat.num_sextuples() == 7);
  CHECK(flats_str(line_flats(flat)) == "{1234}");
  CHECK(flats_str(conic_flats(flat)) == "{1234567}");
  CHECK(parse_pair(pair_flats_str(flat)) == flat);

  CHECK(parse_pair("lines: ; conics:").empty());
  CHECK_THROWS_AS(parse_pair("lines: 12 ; conics:"), ParseError);
  CHECK_THROWS_AS(parse_pair("lines: ; conics: 12345"), ParseError);
  CHECK_THROWS(parse_pair("lines: 129 ; conics:"));
}

TEST_CASE("permutations") {
  const auto& g = SymmetricGroup::get();
  CHECK(g.elements().size() == 40320u);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    Perm a = random_perm(rng), b = random_perm(rng);
    CHECK(compose(a, inverse(a)) == identity_perm());
    PointMask m = triple_masks()[rng() % kTriples];
    CHECK(quat::apply(compose(a, b), m) == quat::apply(a, quat::apply(b, m)));
    Pair q = random_pair(rng);
    CHECK(quat::apply(inverse(a), quat::apply(a, q)) == q);
  }
  for (int k : {0, 1, 777, 40319}) {
    Pair q = Q(43);
    CHECK(g.apply(k, q) == quat::apply(g[k], q));
  }
  Perm swap12 = identity_perm();
  std::swap(swap12[0], swap12[1]);
  CHECK(perm_str(swap12) == "21345678");
  CHECK(generated_subgroup({swap12}).size() == 2u);
  CHECK(generated_subgroup({}).size() == 40320u);
}

TEST_CASE("criteria on small examples") {
  Pair ok = parse_pair("lines: 123 ; conics: 145678");
  CHECK(weak_criteria(ok).all());
  CHECK(strong_criteria(ok).all());
  CHECK(is_bezoutian(ok));

  Pair line_in_conic = parse_pair("lines: 123 ; conics: 123456");
  CHECK_FALSE(weak_criteria(line_in_conic).line_meets_conic);

  Pair open_lines = parse_pair("lines: 123 124 ; conics:");
  CHECK_FALSE(weak_criteria(open_lines).lines_closed);
  CHECK(weak_criteria(closure(open_lines)).all());
  CHECK_FALSE(strong_criteria(closure(open_lines)).lines_meet_once);

  Pair open_conics = parse_pair("lines: ; conics: 123456 123457");
  CHECK_FALSE(weak_criteria(open_conics).conics_closed);
  CHECK(closure(open_conics).num_sextuples() == 7);
  CHECK_FALSE(is_bezoutian(closure(open_conics)));

  CHECK_FALSE(is_bezoutian(Q(121)));
  CHECK_FALSE(is_bezoutian(Q(6)));
  CHECK(is_bezoutian(Q(1)));
  CHECK(is_bezoutian(Q(41)));
}

TEST_CASE("line closure matches a naive fixpoint") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    Pair q = random_pair(rng, 0.04, 0);
    CHECK(close_triples(q.tri) == naive_line_closure(q.tri));
  }
}

TEST_CASE("triple squares") {
  Pair q = parse_pair("lines: 123 456 178 ; conics:");
  std::uint32_t sq = triple_squares(q.tri);
  CHECK(std::popcount(sq) == 2);
  CHECK(Pair(0, sq).has_sextuple(parse_mask("123456")));
  CHECK(Pair(0, sq).has_sextuple(parse_mask("145678")));
}

TEST_CASE("conditions imposed on cubics") {
  CHECK(m_Q(Q(1)) == 0);
  CHECK(m_Q(Q(2)) == 2);
  CHECK(m_Q(Q(10)) == 2);
  CHECK(m_Q(Q(43)) == 9);
  CHECK(m_Q(Q(32)) == 12);
  CHECK(m_Q(Q(41)) == 12);
}

TEST_CASE("order between strata") {
  CHECK(leq(Q(43), Q(1)));
  CHECK_FALSE(leq(Q(1), Q(43)));
  CHECK(leq(Q(10), Q(10)));
  // a conic made of two lines satisfies the sextuple condition
  CHECK(leq(parse_pair("lines: 123 456 ; conics:"), parse_pair("lines: ; conics: 123456")));
  CHECK_FALSE(leq(parse_pair("lines: 123 ; conics:"), parse_pair("lines: ; conics: 123456")));
  CHECK_THROWS_AS(leq(Q(121), Q(1)), NotBezoutian);

  CHECK(contained_in_orbit(Q(49), Q(77)));
  CHECK(contained_in_orbit(Q(77), Q(10)));
  CHECK_FALSE(contained_in_orbit(Q(72), Q(77)));
  CHECK_FALSE(contained_in_orbit(Q(43), Q(10)));
  auto w = orbit_witness(Q(49), Q(77));
  REQUIRE(w);
  CHECK(leq(Q(49), quat::apply(*w, Q(77))));
}

TEST_CASE("deleting a point") {
  Pair q = Q(43);
  Pair r = delete_point(q, 1);
  CHECK(r.num_triples() == 2);
  for (auto t : r.triples()) CHECK_FALSE(has_point(t, 1));
  CHECK(delete_point(Q(10), 9) == Q(10));
}

TEST_CASE("reducible profiles") {
  CHECK(reducible_profile(Q(10)).str() == "∅^1+∅");
  CHECK(reducible_profile(Q(10)).d() == 9);
  CHECK(reducible_profile(Q(43)).str() == "∅^3△^1");
  CHECK(reducible_profile(Q(43)).d() == 3);
  CHECK(reducible_profile(Q(49)).str() == "∅^3△^1+△");
  CHECK(reducible_profile(Q(77)).tangency == Tangency::Triangle);
  CHECK(reducible_profile(Q(1)).d() == 12);
  CHECK(reducible_profile(Q(41)).triangle_count == 4);
  auto p = reducible_profile(Q(43));
  REQUIRE(p.triangles.size() == 1u);
  std::set<PointMask> lines(p.triangles[0].begin(), p.triangles[0].end());
  CHECK(lines == std::set<PointMask>{parse_mask("18"), parse_mask("357"), parse_mask("246")});
}

TEST_CASE("nonrationality certificates") {
  CHECK_FALSE(certify_nonrational(Q(1)));
  CHECK_FALSE(certify_nonrational(Q(43)));
  for (int ref : {32, 41, 59, 62}) {
    auto c = certify_nonrational(Q(ref));
    REQUIRE(c);
    CHECK(c->ref_index == ref);
  }
  auto c = certify_nonrational(Q(121));
  REQUIRE(c);
  CHECK(c->ref_index == 121);
  c = certify_nonrational(Q(6));
  REQUIRE(c);
  CHECK(c->ref_index == 6);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    Perm s = random_perm(rng);
    Pair q = quat::apply(s, Q(32));
    auto cert = certify_nonrational(q);
    REQUIRE(cert);
    CHECK(cert->ref_index == 32);
    CHECK(leq(q, quat::apply(cert->sigma, refs::q(32))));
  }
}

TEST_CASE("stabilizers against brute force") {
  for (int i : {1, 2, 10, 32, 41, 43, 77, 121}) {
    int n = naive_stabilizer(Q(i));
    CHECK(static_cast<int>(stabilizer(Q(i)).size()) == n);
    CHECK(orbit_size(Q(i)) == 40320 / n);
  }
  CHECK(orbit_size(Q(10)) == 168);
  CHECK(orbit_size(Q(43)) == 3360);
  CHECK(orbit_size(Q(7)) == 1);
}

#include <catch2/catch_amalgamated.hpp>

#include "wqt/lattice/from_propositions.hpp"
#include "wqt/lattice/lattice.hpp"
#include "wqt/lattice/projector_family.hpp"
#include "wqt/lattice/search.hpp"

using namespace wqt::lattice;

namespace {

FiniteLattice boolean2() {
  // {0, a, a', 1}
  return FiniteLattice::from_order({"0", "a", "a'", "1"},
                                   {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                                   {{1, 2}});
}

FiniteLattice diamond_m3() {
  return FiniteLattice::from_order({"0", "x", "y", "z", "1"},
                                   {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FiniteLattice pentagon_n5() {
  // 0 < a < c < 1 and 0 < b < 1, with a,b and c,b incomparable.
  return FiniteLattice::from_order({"0", "a", "c", "b", "1"},
                                   {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

// The hexagon: 0 < a < b < 1 and 0 < b' < a' < 1, complement pairs (a,a'),
// (b,b').
FiniteLattice benzene_o6() {
  return FiniteLattice::from_order(
      {"0", "a", "b", "b'", "a'", "1"},
      {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}},
      {{1, 4}, {2, 3}});
}

FiniteLattice chinese_lantern_mo2() {
  return FiniteLattice::from_order(
      {"0", "a", "a'", "b", "b'", "1"},
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}},
      {{1, 2}, {3, 4}});
}

}  // namespace

TEST_CASE("lattice construction validates the tables", "[lattice]") {
  SECTION("meets recomputed from the order must match") {
    auto lat = boolean2();
    CHECK_NOTHROW(lat.validate());
    lat.meet[1 * lat.n + 2] = 3;  // corrupt a ^ a'
    CHECK_THROWS_AS(lat.validate(), std::invalid_argument);
  }
  SECTION("posets without meets are rejected") {
    // Two maximal elements: no top, join fails.
    CHECK_THROWS_AS(
        FiniteLattice::from_order({"0", "x", "y"}, {{0, 1}, {0, 2}}),
        std::invalid_argument);
  }
  SECTION("bad orthocomplementations are rejected") {
    // a' = a violates a ^ a' = 0.
    CHECK_THROWS_AS(
        FiniteLattice::from_order({"0", "a", "1"}, {{0, 1}, {1, 2}}, {{1, 1}}),
        std::invalid_argument);
  }
}

TEST_CASE("law checks", "[lattice]") {
  SECTION("Boolean lattices are distributive with no witnesses") {
    const auto verdict = check_laws(boolean2());
    CHECK(verdict.distributive);
    CHECK(verdict.absorption);
    CHECK(verdict.boolean_local);
    CHECK_FALSE(verdict.distributivity_witness.has_value());
  }
  SECTION("the diamond is not distributive") {
    const auto verdict = check_laws(diamond_m3());
    CHECK_FALSE(verdict.distributive);
    REQUIRE(verdict.distributivity_witness.has_value());
    // Replay the witness triple.
    const auto [a, b, c] = *verdict.distributivity_witness;
    const auto& lat = diamond_m3();
    const bool law1 = lat.meet_of(a, lat.join_of(b, c)) ==
                      lat.join_of(lat.meet_of(a, b), lat.meet_of(a, c));
    const bool law2 = lat.join_of(a, lat.meet_of(b, c)) ==
                      lat.meet_of(lat.join_of(a, b), lat.join_of(a, c));
    CHECK_FALSE((law1 && law2));
    CHECK(verdict.absorption);
  }
  SECTION("the pentagon is not distributive") {
    CHECK_FALSE(check_laws(pentagon_n5()).distributive);
  }
  SECTION("the qubit projector family is not distributive") {
    const auto lat = projector_family_lattice(qubit_projector_family());
    const auto verdict = check_laws(lat);
    CHECK_FALSE(verdict.distributive);
    CHECK(verdict.absorption);
    // Each comparable pair only involves the bounds, so the local Boolean
    // condition holds even though the lattice is not distributive.
    CHECK(verdict.boolean_local);
  }
  SECTION("the hexagon fails the local Boolean condition") {
    const auto verdict = check_laws(benzene_o6());
    CHECK_FALSE(verdict.distributive);
    CHECK_FALSE(verdict.boolean_local);
    REQUIRE(verdict.boolean_local_witness.has_value());
  }
}

TEST_CASE("non-distributivity classification", "[lattice]") {
  SECTION("Boolean lattices produce empty witness lists") {
    const auto verdict = classify_nondistributivity(boolean2());
    CHECK(verdict.meet_form_witnesses.empty());
    CHECK(verdict.join_form_witnesses.empty());
  }
  SECTION("classification requires an orthocomplementation") {
    CHECK_THROWS_AS(classify_nondistributivity(diamond_m3()), std::logic_error);
  }
  SECTION("the qubit projector family witnesses the meet form") {
    const auto lat = projector_family_lattice(qubit_projector_family());
    const auto verdict = classify_nondistributivity(lat);
    REQUIRE_FALSE(verdict.meet_form_witnesses.empty());
    // The documented pair: a = span(|0>), b = span(|0> + |1>).
    const int a = lat.index_of("z+");
    const int b = lat.index_of("x+");
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    bool found = false;
    for (const auto& w : verdict.meet_form_witnesses) {
      if ((w.a == a && w.b == b) || (w.a == b && w.b == a)) found = true;
    }
    CHECK(found);
    CHECK(strict_meet_relation(lat, a, b));
    CHECK(strict_meet_relation(lat, b, a));
  }
  SECTION("the hexagon has a join-form witness that is not a meet-form witness") {
    const auto lat = benzene_o6();
    const auto verdict = classify_nondistributivity(lat);
    bool join_only = false;
    for (const auto& w : verdict.join_form_witnesses) {
      bool also_meet = false;
      for (const auto& m : verdict.meet_form_witnesses) {
        if (m.a == w.a && m.b == w.b) also_meet = true;
      }
      if (!also_meet) join_only = true;
    }
    CHECK(join_only);
    // The concrete pair: a < b gives a < (a v b) ^ (a v b') = b, but the pair
    // fails the conjunctive meet form because a = (a ^ b) v (a ^ b').
    const int a = lat.index_of("a");
    const int b = lat.index_of("b");
    CHECK(strict_join_relation(lat, a, b));
    CHECK_FALSE(strict_meet_relation(lat, a, b));
    CHECK(strict_meet_relation(lat, b, a));  // one-sided only
  }
}

TEST_CASE("dualization", "[lattice]") {
  SECTION("the Boolean square is self-dual") {
    CHECK(is_isomorphic(boolean2(), dualize(boolean2())));
  }
  SECTION("the pentagon is self-dual up to isomorphism") {
    const auto n5 = pentagon_n5();
    const auto dual = dualize(n5);
    CHECK_FALSE(std::equal(n5.leq.begin(), n5.leq.end(), dual.leq.begin()));
    CHECK(is_isomorphic(n5, dual));
  }
  SECTION("dualizing twice restores the tables") {
    const auto lat = benzene_o6();
    const auto twice = dualize(dualize(lat));
    CHECK(twice.leq == lat.leq);
    CHECK(twice.meet == lat.meet);
    CHECK(twice.join == lat.join);
    CHECK(twice.bottom == lat.bottom);
  }
  SECTION("duality swaps the two relation forms on every pair") {
    for (const auto& lat : {chinese_lantern_mo2(), benzene_o6()}) {
      const auto dual = dualize(lat);
      for (int a = 0; a < lat.n; ++a) {
        for (int b = 0; b < lat.n; ++b) {
          CHECK(strict_join_relation(lat, a, b) == strict_meet_relation(dual, a, b));
          CHECK(strict_meet_relation(lat, a, b) == strict_join_relation(dual, a, b));
        }
      }
    }
  }
}

TEST_CASE("ortholattice search", "[lattice][search]") {
  const auto lattices = enumerate_ortholattices(8);
  REQUIRE_FALSE(lattices.empty());

  auto join_only_witness = [](const FiniteLattice& lat) {
    const auto verdict = classify_nondistributivity(lat);
    for (const auto& w : verdict.join_form_witnesses) {
      bool also_meet = false;
      for (const auto& m : verdict.meet_form_witnesses) {
        if (m.a == w.a && m.b == w.b) also_meet = true;
      }
      if (!also_meet) return true;
    }
    return false;
  };

  SECTION("no lattice with at most four elements has a join-only witness") {
    for (const auto& lat : enumerate_ortholattices(4)) {
      CHECK_FALSE(join_only_witness(lat));
    }
  }
  SECTION("the smallest join-only witness lattice has six elements") {
    int smallest = 100;
    const FiniteLattice* example = nullptr;
    for (const auto& lat : lattices) {
      if (join_only_witness(lat) && lat.n < smallest) {
        smallest = lat.n;
        example = &lat;
      }
    }
    REQUIRE(example != nullptr);
    CHECK(smallest == 6);
    CHECK(is_isomorphic(*example, benzene_o6()));
  }
  SECTION("witnessed join-form relations dualize to meet-form relations") {
    for (const auto& lat : lattices) {
      const auto verdict = classify_nondistributivity(lat);
      const auto dual = dualize(lat);
      for (const auto& w : verdict.join_form_witnesses) {
        CHECK((strict_meet_relation(dual, w.a, w.b) ||
               strict_meet_relation(dual, w.b, w.a)));
      }
    }
  }
}

TEST_CASE("lattices from compatible propositions", "[lattice][propositions]") {
  using wqt::weak::Proposition;
  using wqt::weak::StateSpace;
  auto space = StateSpace::create({"s11", "s10", "s01", "s00", "o"}, "o");
  wqt::weak::WeakSystem sys(
      space, {wqt::weak::Observable::unit(space), wqt::weak::Observable::zero(space)});

  SECTION("no propositions give the two-element lattice") {
    const auto lat = from_propositions(sys, {});
    CHECK(lat.n == 2);
    CHECK(check_laws(lat).distributive);
  }
  SECTION("one proposition and its negation give the Boolean square") {
    const auto p = Proposition::filter(space, "P", {"s11", "s10"});
    const auto lat = from_propositions(sys, {p, p.negation()});
    CHECK(lat.n == 4);
    CHECK(is_isomorphic(lat, boolean2()));
  }
  SECTION("two independent propositions generate the sixteen-element Boolean lattice") {
    const auto p = Proposition::filter(space, "P", {"s11", "s10"});
    const auto q = Proposition::filter(space, "Q", {"s11", "s01"});
    const auto lat = from_propositions(sys, {p, p.negation(), q, q.negation()});
    CHECK(lat.n == 16);
    const auto verdict = check_laws(lat);
    CHECK(verdict.distributive);
    CHECK(verdict.absorption);
    const auto classified = classify_nondistributivity(lat);
    CHECK(classified.meet_form_witnesses.empty());
    CHECK(classified.join_form_witnesses.empty());
  }
  SECTION("sets not closed under negation are rejected") {
    const auto p = Proposition::filter(space, "P", {"s11", "s10"});
    CHECK_THROWS_AS(from_propositions(sys, {p}), std::invalid_argument);
  }
}

TEST_CASE("projector family lattice matches the iterated meets", "[lattice]") {
  const auto lat = projector_family_lattice(qubit_projector_family());
  CHECK(lat.n == 6);
  CHECK(is_isomorphic(lat, chinese_lantern_mo2()));
}

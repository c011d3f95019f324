#include <catch2/catch_amalgamated.hpp>

#include "wqt/weak/composite.hpp"
#include "wqt/weak/enumerate.hpp"
#include "wqt/weak/proposition.hpp"
#include "wqt/weak/system.hpp"

#include <set>

using namespace wqt::weak;

namespace {

SpacePtr three_states() {
  return StateSpace::create({"z1", "z2", "o"}, "o");
}

Observable make_obs(const SpacePtr& space, std::string name,
                    std::vector<std::string> images,
                    Spectrum spec = Spectrum::unlabeled()) {
  std::vector<int> table;
  for (const auto& img : images) {
    table.push_back(img == "?" ? kUndefined : space->index_of(img));
  }
  return Observable(std::move(name), space, std::move(table), std::move(spec));
}

// The closed five-element system on {z1, z2, o}: unit, zero, the swap, and
// both constants.
WeakSystem swap_const_system() {
  auto space = three_states();
  std::vector<Observable> obs;
  obs.push_back(Observable::unit(space));
  obs.push_back(Observable::zero(space));
  obs.push_back(make_obs(space, "swap", {"z2", "z1", "o"}, Spectrum::of({"a", "b"})));
  obs.push_back(make_obs(space, "c1", {"z1", "z1", "o"}, Spectrum::of({"hit"})));
  obs.push_back(make_obs(space, "c2", {"z2", "z2", "o"}, Spectrum::of({"hit"})));
  return WeakSystem(space, std::move(obs));
}

}  // namespace

TEST_CASE("composition follows the function tables", "[weak]") {
  const auto sys = swap_const_system();
  const int unit = sys.unit_index();
  const int zero = sys.zero_index();
  const int swap = sys.index_of("swap");
  const int c1 = sys.index_of("c1");

  SECTION("unit law") {
    for (int i = 0; i < sys.size(); ++i) {
      CHECK(sys.compose(unit, i).table() == sys.obs(i).table());
      CHECK(sys.compose(i, unit).table() == sys.obs(i).table());
    }
  }
  SECTION("zero absorbs") {
    for (int i = 0; i < sys.size(); ++i) {
      CHECK(sys.compose(zero, i).is_zero_map());
      CHECK(sys.compose(i, zero).is_zero_map());
    }
  }
  SECTION("swap after constant vs constant after swap") {
    CHECK(sys.compose(swap, c1).table() == sys.obs(sys.index_of("c2")).table());
    CHECK(sys.compose(c1, swap).table() == sys.obs(c1).table());
    CHECK_FALSE(compatible(sys.obs(swap), sys.obs(c1)));
    CHECK(complementary(sys.obs(swap), sys.obs(c1)));
  }
  SECTION("listed composites inherit the listed outcome set") {
    const Observable composed = sys.compose(swap, swap);
    CHECK(composed.spectrum().labeled);
    CHECK(composed.spectrum().outcomes == std::vector<std::string>{"true"});
  }
  SECTION("unlisted composites stay unlabeled") {
    auto space = three_states();
    const Observable k1 = make_obs(space, "k1", {"z1", "o", "o"});
    const Observable k2 = make_obs(space, "k2", {"o", "z2", "o"});
    CHECK_FALSE(compose(k1, k2).spectrum().labeled);
  }
  SECTION("mismatched state spaces are rejected") {
    auto other = StateSpace::create({"w", "o"}, "o");
    CHECK_THROWS_AS(compose(sys.obs(0), Observable::unit(other)), std::invalid_argument);
  }
}

TEST_CASE("compatibility is reflexive and symmetric", "[weak]") {
  const auto sys = swap_const_system();
  for (int i = 0; i < sys.size(); ++i) {
    CHECK(compatible(sys.obs(i), sys.obs(i)));
    CHECK(compatible(sys.obs(sys.unit_index()), sys.obs(i)));
    for (int j = 0; j < sys.size(); ++j) {
      CHECK(compatible(sys.obs(i), sys.obs(j)) == compatible(sys.obs(j), sys.obs(i)));
      CHECK(complementary(sys.obs(i), sys.obs(j)) ==
            !compatible(sys.obs(i), sys.obs(j)));
    }
  }
}

TEST_CASE("associativity of listed compositions", "[weak]") {
  const auto sys = swap_const_system();
  for (int i = 0; i < sys.size(); ++i) {
    for (int j = 0; j < sys.size(); ++j) {
      for (int k = 0; k < sys.size(); ++k) {
        const auto left = compose(sys.obs(i), compose(sys.obs(j), sys.obs(k)));
        const auto right = compose(compose(sys.obs(i), sys.obs(j)), sys.obs(k));
        REQUIRE(left.table() == right.table());
      }
    }
  }
}

TEST_CASE("axiom checker on well-formed systems", "[weak][axioms]") {
  SECTION("minimal unit/zero system") {
    auto space = StateSpace::create({"z1", "o"}, "o");
    WeakSystem sys(space, {Observable::unit(space), Observable::zero(space)});
    const auto report = check_axioms(sys);
    CHECK(report.passed());
    CHECK(report.verdict_for("VIa") == Verdict::NotApplicable);
    CHECK(report.axiom_vi() == Verdict::NotApplicable);
  }
  SECTION("five-element closed system") {
    const auto report = check_axioms(swap_const_system());
    CAPTURE(report.entries.front().witness);
    CHECK(report.passed());
  }
}

TEST_CASE("axiom checker pinpoints violations", "[weak][axioms]") {
  auto space = three_states();
  const auto unit = Observable::unit(space);
  const auto zero = Observable::zero(space);

  SECTION("a partial map fails exactly the mapping axiom") {
    auto partial = make_obs(space, "partial", {"?", "z2", "o"});
    WeakSystem sys(space, {unit, zero, partial});
    const auto report = check_axioms(sys);
    CHECK(report.failing_axioms() == std::vector<std::string>{"II"});
    CHECK(report.find("II")->witness_labels ==
          std::vector<std::string>{"partial", "z1"});
  }
  SECTION("a missing composite fails exactly closure") {
    auto swap = make_obs(space, "swap", {"z2", "z1", "o"});
    auto c1 = make_obs(space, "c1", {"z1", "z1", "o"});
    WeakSystem sys(space, {unit, zero, swap, c1});
    const auto report = check_axioms(sys);
    CHECK(report.failing_axioms() == std::vector<std::string>{"III"});
    // Replay the witness: composing the named observables leaves the table.
    const auto& labels = report.find("III")->witness_labels;
    REQUIRE(labels.size() == 2);
    const auto composed =
        compose(sys.obs(sys.index_of(labels[0])), sys.obs(sys.index_of(labels[1])));
    CHECK_FALSE(sys.find_map(composed.table()).has_value());
  }
  SECTION("a monoid without the identity fails exactly the unit axiom") {
    auto c1 = make_obs(space, "c1", {"z1", "z1", "o"});
    WeakSystem sys(space, {zero, c1});
    const auto report = check_axioms(sys);
    CHECK(report.failing_axioms() == std::vector<std::string>{"IV"});
  }
  SECTION("moving the zero state fails exactly the zero axiom") {
    auto bad = make_obs(space, "g", {"z1", "z1", "z1"});
    WeakSystem sys(space, {unit, zero, bad});
    const auto report = check_axioms(sys);
    CHECK(report.failing_axioms() == std::vector<std::string>{"V"});
    CHECK(report.find("V")->witness_labels == std::vector<std::string>{"g"});
  }
  SECTION("a non-idempotent proposition fails exactly the proposition axiom") {
    auto swap = make_obs(space, "swap", {"z2", "z1", "o"},
                         Spectrum::of({"true", "false"}));
    WeakSystem sys(space, {unit, zero, swap},
                   {PropositionPair{2, 2}});
    const auto report = check_axioms(sys);
    CHECK(report.failing_axioms() == std::vector<std::string>{"VI"});
    CHECK(report.verdict_for("VIa") == Verdict::Fail);
    CHECK(report.axiom_vi() == Verdict::Fail);
  }
}

TEST_CASE("proposition calculus", "[weak][propositions]") {
  auto space = StateSpace::create({"s11", "s10", "s01", "s00", "o"}, "o");
  const auto p = Proposition::filter(space, "P", {"s11", "s10"});
  const auto q = Proposition::filter(space, "Q", {"s11", "s01"});
  const auto top = Proposition::unit(space);
  const auto bot = Proposition::zero(space);

  SECTION("idempotence and bounds") {
    CHECK(conjunction(p, p).obs().table() == p.obs().table());
    CHECK(adjunction(p, p).obs().table() == p.obs().table());
    CHECK(conjunction(p, top).obs().table() == p.obs().table());
    CHECK(conjunction(p, bot).obs().table() == bot.obs().table());
    CHECK(adjunction(p, bot).obs().table() == p.obs().table());
    CHECK(adjunction(p, top).obs().table() == top.obs().table());
  }
  SECTION("independent pair multiplies into the overlap") {
    const auto meet = conjunction(p, q);
    CHECK(meet.obs().true_set() == std::vector<int>{space->index_of("s11")});
    const auto join = adjunction(p, q);
    CHECK(join.obs().true_set() ==
          std::vector<int>{space->index_of("s11"), space->index_of("s10"),
                           space->index_of("s01")});
  }
  SECTION("excluded middle on the fixture tables") {
    CHECK(adjunction(p, p.negation()).obs().is_identity());
    CHECK(conjunction(p, p.negation()).obs().is_zero_map());
  }
  SECTION("negation of negation") {
    CHECK(p.negation().negation().obs().table() == p.obs().table());
  }
  SECTION("incompatible pairs are refused in the weak regime") {
    auto tiny = three_states();
    // Two propositions whose underlying maps do not commute: a filter and a
    // swap-like idempotent paired with itself.
    auto swapish = Observable("r", tiny, {tiny->index_of("z2"), tiny->index_of("z2"),
                                          tiny->index_of("o")},
                              Spectrum::of({"true", "false"}));
    Proposition weird(swapish, Observable::zero(tiny));
    auto filt = Proposition::filter(tiny, "F", {"z1"});
    REQUIRE_FALSE(compatible(weird.obs(), filt.obs()));
    CHECK_THROWS_AS(conjunction(weird, filt), IncompatibleError);
    CHECK_THROWS_AS(conjunction(weird, filt, Regime::Enriched), IncompatibleError);
  }
}

TEST_CASE("proposition identities hold for every compatible pair", "[weak][propositions]") {
  auto space = StateSpace::create({"a", "b", "c", "o"}, "o");
  std::vector<Proposition> props;
  // All eight filters over the three non-zero states.
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<std::string> trues;
    if (mask & 1) trues.push_back("a");
    if (mask & 2) trues.push_back("b");
    if (mask & 4) trues.push_back("c");
    props.push_back(Proposition::filter(space, "m" + std::to_string(mask), trues));
  }
  for (const auto& p1 : props) {
    for (const auto& p2 : props) {
      REQUIRE(compatible(p1.obs(), p2.obs()));
      const auto meet = conjunction(p1, p2);
      const auto join = adjunction(p1, p2);
      // Commutativity and De Morgan.
      CHECK(meet.obs().table() == conjunction(p2, p1).obs().table());
      CHECK(join.obs().table() ==
            conjunction(p1.negation(), p2.negation()).negation().obs().table());
      // Absorption within the pair.
      CHECK(conjunction(p1, join).obs().table() == p1.obs().table());
      CHECK(adjunction(p1, meet).obs().table() == p1.obs().table());
      for (const auto& p3 : props) {
        CHECK(conjunction(p1, conjunction(p2, p3)).obs().table() ==
              conjunction(conjunction(p1, p2), p3).obs().table());
        CHECK(adjunction(p1, adjunction(p2, p3)).obs().table() ==
              adjunction(adjunction(p1, p2), p3).obs().table());
      }
    }
  }
}

TEST_CASE("spectral families", "[weak][families]") {
  auto space = StateSpace::create({"z1", "z2", "z3", "o"}, "o");
  const auto unit = Observable::unit(space);
  const auto zero = Observable::zero(space);
  // A has two outcomes: "a" on z1, "b" on the swapped pair {z2, z3}.
  auto a = Observable("A", space,
                      {space->index_of("z1"), space->index_of("z3"),
                       space->index_of("z2"), space->index_of("o")},
                      Spectrum::of({"a", "b"}));
  auto pa = Observable::filter(space, "Aa", {"z1"});
  auto pb = Observable::filter(space, "Ab", {"z2", "z3"});
  // The swap restricted to the b-cell closes the monoid (it is A after Ab).
  auto af = Observable("Af", space,
                       {space->index_of("o"), space->index_of("z3"),
                        space->index_of("z2"), space->index_of("o")},
                       Spectrum::unlabeled());

  std::vector<Observable> obs = {unit, zero, a, pa, pb, af};
  std::vector<PropositionPair> props = {{3, 4}, {0, 1}};

  SECTION("a well-formed family passes") {
    SpectralFamilyDecl fam{2, {{"a", 3}, {"b", 4}}};
    WeakSystem sys(space, obs, props, {fam});
    const auto report = check_axioms(sys);
    CAPTURE(report.find("VIc")->witness);
    CHECK(report.passed());
    CHECK(report.verdict_for("VIc") == Verdict::Pass);
  }
  SECTION("the trivial family of the unit passes") {
    SpectralFamilyDecl fam{0, {{"true", 0}}};
    WeakSystem sys(space, obs, props, {fam});
    CHECK(check_axioms(sys).passed());
  }
  SECTION("overlapping members fail with a witness") {
    auto pa_wide = Observable::filter(space, "Aa", {"z1", "z2"});
    std::vector<Observable> obs2 = {unit, zero, a, pa_wide, pb, af};
    SpectralFamilyDecl fam{2, {{"a", 3}, {"b", 4}}};
    WeakSystem sys(space, obs2, props, {fam});
    const auto report = check_axioms(sys);
    CHECK(report.verdict_for("VIc") == Verdict::Fail);
    CHECK_FALSE(report.find("VIc")->witness_labels.empty());
  }
}

TEST_CASE("composite systems", "[weak][composite]") {
  SECTION("product of minimal systems keeps the minimal structure") {
    auto space = StateSpace::create({"z1", "o"}, "o");
    WeakSystem minimal(space, {Observable::unit(space), Observable::zero(space)});
    const auto comp = composite(minimal, minimal);
    CHECK(comp.system().size() == 2);  // products collapse onto unit and zero
    CHECK(comp.system().space()->size() == 2);
    CHECK(check_axioms(comp.system()).passed());
  }
  SECTION("lifted observables of different factors are compatible") {
    const auto sys = swap_const_system();
    const auto comp = composite(sys, sys);
    const auto& c = comp.system();
    CHECK(c.space()->size() == 5);  // 2 x 2 pairs + zero
    CHECK(check_axioms(c).passed());
    for (const auto& a : sys.observables()) {
      for (const auto& b : sys.observables()) {
        const int lifted_a = c.index_of(a.name() + "(x)1l");
        const int lifted_b = c.index_of("1l(x)" + b.name());
        if (lifted_a < 0 || lifted_b < 0) continue;  // deduplicated zero maps
        CHECK(compatible(c.obs(lifted_a), c.obs(lifted_b)));
      }
    }
  }
  SECTION("global swap is weak entanglement") {
    const auto sys = swap_const_system();
    auto comp = composite(sys, sys);
    const auto& space = comp.system().space();
    // Exchange of the two factors: (a,b) -> (b,a).
    std::vector<int> table(space->size());
    for (int s = 0; s < space->size(); ++s) {
      const auto& dec = comp.info().decomposition[s];
      if (!dec || s == space->zero) {
        table[s] = s;
        continue;
      }
      table[s] = space->index_of("(" + dec->second + "," + dec->first + ")");
    }
    auto flipped = comp.with_observable(
        Observable("exchange", space, table, Spectrum::unlabeled()));
    const std::vector<std::string> part1 = {"1l(x)1l", "0(x)0", "swap(x)1l", "c1(x)1l",
                                            "c2(x)1l"};
    const std::vector<std::string> part2 = {"1l(x)1l", "0(x)0", "1l(x)swap", "1l(x)c1",
                                            "1l(x)c2"};
    const auto report = detect_entanglement(flipped, part1, part2);
    CHECK(report.weak_entanglement);
    bool exchange_flagged = false;
    for (const auto& [global, member] : report.incompatible_globals) {
      if (global == "exchange" && member == "c1(x)1l") exchange_flagged = true;
    }
    CHECK(exchange_flagged);
    CHECK(report.nonproduct_states.empty());

    // Without the exchange the very same parts show no entanglement.
    const auto baseline = detect_entanglement(comp, part1, part2);
    CHECK_FALSE(baseline.weak_entanglement);
    CHECK(baseline.incompatible_globals.empty());
  }
  SECTION("a registered non-product state is reported") {
    const auto sys = swap_const_system();
    auto comp = composite(sys, sys).with_state("ghost");
    CHECK(check_axioms(comp.system()).passed());
    const auto report =
        detect_entanglement(comp, {"1l(x)1l", "0(x)0"}, {"1l(x)1l", "0(x)0"});
    CHECK(report.nonproduct_states == std::vector<std::string>{"ghost"});
    CHECK_FALSE(report.weak_entanglement);
  }
  SECTION("parts must be closed under composition") {
    const auto sys = swap_const_system();
    auto comp = composite(sys, sys);
    CHECK_THROWS_AS(
        detect_entanglement(comp, {"swap(x)1l", "c1(x)1l"}, {"1l(x)1l", "0(x)0"}),
        std::invalid_argument);
  }
}

TEST_CASE("model enumeration", "[weak][enumerate]") {
  SECTION("one state admits only the minimal system") {
    const auto models = enumerate_models(1, 8);
    REQUIRE(models.size() == 1);
    CHECK(models[0].profile.size == 2);
    CHECK(models[0].profile.commutative());
  }
  SECTION("two states: counts match the brute-force subset oracle") {
    // Oracle: enumerate all subsets of the nine zero-fixing maps on {z1,z2,o}
    // that contain the identity and the constant-zero map and are closed under
    // composition, then canonicalize under the swap of z1 and z2.
    struct Oracle {
      using Map = std::array<int, 2>;  // images of z1, z2; 2 encodes o
      static int apply(const Map& m, int x) { return x == 2 ? 2 : m[x]; }
      static Map compose(const Map& f, const Map& g) {
        return {apply(f, apply(g, 0)), apply(f, apply(g, 1))};
      }
    };
    std::vector<Oracle::Map> maps;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) maps.push_back({a, b});
    }
    auto index_of = [&maps](const Oracle::Map& m) {
      for (std::size_t i = 0; i < maps.size(); ++i) {
        if (maps[i] == m) return static_cast<int>(i);
      }
      return -1;
    };
    const int id = index_of({0, 1});
    const int zero = index_of({2, 2});
    std::vector<std::set<int>> closed;
    for (std::uint32_t bits = 0; bits < (1u << 9); ++bits) {
      if (!(bits >> id & 1) || !(bits >> zero & 1)) continue;
      std::set<int> subset;
      for (int m = 0; m < 9; ++m) {
        if (bits >> m & 1) subset.insert(m);
      }
      bool is_closed = true;
      for (int f : subset) {
        for (int g : subset) {
          if (!subset.count(index_of(Oracle::compose(maps[f], maps[g])))) {
            is_closed = false;
          }
        }
      }
      if (is_closed) closed.push_back(std::move(subset));
    }
    CHECK(closed.size() == 33);

    auto relabeled = [&](const std::set<int>& monoid) {
      std::set<int> out;
      for (int m : monoid) {
        const auto& f = maps[m];
        auto swap_state = [](int v) { return v == 2 ? 2 : 1 - v; };
        out.insert(index_of({swap_state(Oracle::apply(f, 1)),
                             swap_state(Oracle::apply(f, 0))}));
      }
      return out;
    };
    std::set<std::set<int>> classes;
    for (const auto& monoid : closed) {
      classes.insert(std::min(monoid, relabeled(monoid)));
    }
    CHECK(classes.size() == 21);

    const auto models = enumerate_models(2, 16);
    REQUIRE(models.size() == classes.size());

    // Size histogram must agree with the oracle's.
    std::map<int, int> oracle_sizes, model_sizes;
    for (const auto& c : classes) ++oracle_sizes[static_cast<int>(c.size())];
    for (const auto& m : models) ++model_sizes[m.profile.size];
    CHECK(oracle_sizes == model_sizes);
  }
  SECTION("every emitted system passes the axiom checker") {
    for (const auto& model : enumerate_models(2, 16)) {
      REQUIRE(check_axioms(model.system).passed());
    }
  }
  SECTION("the commutativity profile spots the full monoid") {
    const auto models = enumerate_models(2, 16);
    const auto& largest = models.back();
    CHECK(largest.profile.size == 9);
    CHECK_FALSE(largest.profile.commutative());
  }
  SECTION("budget guards") {
    CHECK_THROWS_AS(enumerate_models(0, 8), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_models(6, 8), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_models(2, 65), std::invalid_argument);
  }
}

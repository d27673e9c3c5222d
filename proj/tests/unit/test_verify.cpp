#include <stdexcept>
#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "qp/verify.hpp"

using namespace qp;

namespace {

Universe make_universe(int m, int n, UniverseMode mode = UniverseMode::exhaustive) {
  Universe u;
  u.m = m;
  u.n = n;
  u.mode = mode;
  return u;
}

}  // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("mode and theorem names round trip") {
  for (const UniverseMode mode :
       {UniverseMode::exhaustive, UniverseMode::exhaustive_nondecreasing, UniverseMode::sample}) {
    const auto back = universe_mode_from_string(std::string(to_string(mode)));
    REQUIRE(back.has_value());
    CHECK(*back == mode);
  }
  CHECK(to_string(UniverseMode::exhaustive_nondecreasing) == "exhaustive-nondecreasing");
  CHECK_FALSE(universe_mode_from_string("full").has_value());
  for (const TheoremId t : kAllTheorems) {
    const auto back = theorem_from_string(std::string(to_string(t)));
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
  CHECK(to_string(TheoremId::T_QUASIPOL) == "T-QUASIPOL");
  CHECK(to_string(TheoremId::L_QHOM_HOR) == "L-QHOM-HOR");
  CHECK_FALSE(theorem_from_string("T-NOPE").has_value());
}

TEST_CASE("universe cardinality") {
  CHECK(universe_cardinality(2, 1) == 4);
  CHECK(universe_cardinality(2, 2) == 16);
  CHECK(universe_cardinality(3, 2) == 19683);
  CHECK(universe_cardinality(2, 4) == 65536);
  CHECK(universe_cardinality(4, 2) == 4294967296u);
  CHECK(universe_cardinality(3, 16) == SIZE_MAX);
  CHECK(universe_cardinality(10, 10) == SIZE_MAX);
}

TEST_CASE("budget admission") {
  CHECK_NOTHROW(check_budget(make_universe(2, 2)));
  CHECK_NOTHROW(check_budget(make_universe(3, 2)));

  CHECK_THROWS_AS(check_budget(make_universe(4, 3)), BudgetError);
  CHECK_THROWS_AS(check_budget(make_universe(2, 0)), BudgetError);
  CHECK_THROWS_AS(check_budget(make_universe(2, 17)), BudgetError);
  CHECK_THROWS_AS(check_budget(make_universe(1, 2)), std::invalid_argument);

  Universe s = make_universe(5, 3, UniverseMode::sample);
  CHECK_THROWS_AS(check_budget(s), BudgetError);  // sample_count still zero
  s.sample_count = 100;
  CHECK_NOTHROW(check_budget(s));
  s.sample_count = s.budget + 1;
  CHECK_THROWS_AS(check_budget(s), BudgetError);

  Universe big = make_universe(4, 3);
  try {
    check_budget(big);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("more than 2^64") != std::string::npos);
  }
}

TEST_CASE("exhaustive stream order and early stop") {
  const Universe u = make_universe(2, 2);
  std::vector<std::vector<int>> tables;
  std::size_t expected_ordinal = 0;
  const std::size_t seen = for_each_function(u, [&](std::size_t ordinal, const DiscreteFunction& f) {
    CHECK(ordinal == expected_ordinal);
    ++expected_ordinal;
    tables.push_back(f.table());
    return true;
  });
  CHECK(seen == 16);
  REQUIRE(tables.size() == 16);
  CHECK(tables.front() == std::vector<int>{0, 0, 0, 0});
  CHECK(tables.back() == std::vector<int>{1, 1, 1, 1});
  CHECK(std::set<std::vector<int>>(tables.begin(), tables.end()).size() == 16);

  const std::size_t stopped =
      for_each_function(u, [](std::size_t ordinal, const DiscreteFunction&) { return ordinal < 4; });
  CHECK(stopped == 5);
}

TEST_CASE("nondecreasing stream filters the exhaustive one") {
  const Universe u = make_universe(2, 2, UniverseMode::exhaustive_nondecreasing);
  std::size_t seen = for_each_function(u, [](std::size_t, const DiscreteFunction& f) {
    CHECK(check_nondecreasing(f).nondecreasing);
    return true;
  });
  CHECK(seen == 6);

  const Universe u31 = make_universe(3, 1, UniverseMode::exhaustive_nondecreasing);
  seen = for_each_function(u31, [](std::size_t, const DiscreteFunction&) { return true; });
  CHECK(seen == 10);
}

TEST_CASE("sample stream replays random_function") {
  Universe u = make_universe(3, 2, UniverseMode::sample);
  u.sample_count = 5;
  u.seed = 42;
  const std::size_t seen = for_each_function(u, [&](std::size_t ordinal, const DiscreteFunction& f) {
    CHECK(f.table() == random_function(3, 2, 42 + ordinal).table());
    return true;
  });
  CHECK(seen == 5);
}

TEST_CASE("random functions are deterministic and in range") {
  const DiscreteFunction a = random_function(3, 2, 9);
  const DiscreteFunction b = random_function(3, 2, 9);
  CHECK(a.table() == b.table());
  CHECK(a.table() != random_function(3, 2, 10).table());
  for (const int v : a.table()) {
    CHECK(v >= 0);
    CHECK(v <= 2);
  }
}

TEST_CASE("constrained sampling yields nondecreasing tables") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const DiscreteFunction f2 = random_function(2, 3, seed, SampleConstraint::nondecreasing);
    CHECK(check_nondecreasing(f2).nondecreasing);
    const DiscreteFunction f3 = random_function(3, 2, seed, SampleConstraint::nondecreasing);
    CHECK(check_nondecreasing(f3).nondecreasing);
    CHECK(f3.table() ==
          random_function(3, 2, seed, SampleConstraint::nondecreasing).table());
  }
}

TEST_CASE("verify sweeps the Boolean square") {
  const VerificationReport r = verify(TheoremId::T_QUASIPOL, make_universe(2, 2));
  CHECK(r.holds);
  CHECK(r.functions_checked == 16);
  CHECK_FALSE(r.counterexample.has_value());
  REQUIRE(r.theorem.has_value());
  CHECK(*r.theorem == TheoremId::T_QUASIPOL);
  CHECK(r.universe.m == 2);
  CHECK(r.universe.n == 2);
  CHECK(r.wall_seconds >= 0.0);
}

TEST_CASE("verify handles a ternary exhaustive sweep with workers") {
  const VerificationReport r = verify(TheoremId::T_HORMAX, make_universe(3, 2), 2);
  CHECK(r.holds);
  CHECK(r.functions_checked == 19683);
}

TEST_CASE("verify samples deterministically") {
  Universe u = make_universe(3, 2, UniverseMode::sample);
  u.sample_count = 50;
  u.seed = 5;
  const VerificationReport r = verify(TheoremId::T_COMMAX, u);
  CHECK(r.holds);
  CHECK(r.functions_checked == 50);
}

TEST_CASE("predicate harness reports the lowest ordinal without early stop") {
  const Universe u = make_universe(2, 2);
  const VerificationReport all = verify_predicate(
      u, [](const DiscreteFunction&) { return std::optional<std::string>("boom"); });
  CHECK_FALSE(all.holds);
  CHECK(all.functions_checked == 16);
  REQUIRE(all.counterexample.has_value());
  CHECK(all.counterexample->ordinal == 0);
  CHECK(all.counterexample->detail == "boom");
  CHECK(all.counterexample->function.table() == std::vector<int>{0, 0, 0, 0});
  CHECK_FALSE(all.theorem.has_value());

  std::vector<std::vector<int>> head;
  for_each_function(u, [&](std::size_t ordinal, const DiscreteFunction& f) {
    head.push_back(f.table());
    return ordinal + 1 < 7;
  });
  REQUIRE(head.size() == 7);
  const auto late = [&](const DiscreteFunction& f) -> std::optional<std::string> {
    if (std::find(head.begin(), head.end(), f.table()) != head.end()) return std::nullopt;
    return "late";
  };
  const VerificationReport serial = verify_predicate(u, late, 1);
  const VerificationReport parallel = verify_predicate(u, late, 4);
  for (const VerificationReport* r : {&serial, &parallel}) {
    CHECK_FALSE(r->holds);
    CHECK(r->functions_checked == 16);
    REQUIRE(r->counterexample.has_value());
    CHECK(r->counterexample->ordinal == 7);
    CHECK(r->counterexample->detail == "late");
  }
  CHECK(serial.counterexample->function.table() == parallel.counterexample->function.table());
}

TEST_CASE("single-function theorem evaluation finds no violations") {
  const Chain k3(3);
  const AxiomChecker ax(k3, 2);
  const std::vector<DiscreteFunction> subjects = {
      DiscreteFunction::join_of_all(k3, 2),
      DiscreteFunction::meet_of_all(k3, 2),
      DiscreteFunction(k3, 2, {0, 1, 2, 1, 2, 2, 2, 2, 2}),
      DiscreteFunction::constant(k3, 2, 1),
      random_function(3, 2, 77),
  };
  for (const DiscreteFunction& f : subjects)
    for (const TheoremId t : kAllTheorems)
      CHECK_MESSAGE(!theorem_violation(t, f, ax).has_value(), to_string(t));
}

TEST_CASE("class census of the Boolean square") {
  const ClassCounts c = count_classes(2, 2);
  CHECK(c.m == 2);
  CHECK(c.n == 2);
  CHECK(c.total == 16);
  const std::array<std::size_t, 21> expected = {
      6,  4, 6, 9, 9, 6, 6, 9, 9, 6, 6,
      5,  5, 9, 9, 6, 6, 6, 10, 4, 10,
  };
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK_MESSAGE(c.axiom[i] == expected[i], to_string(kAllAxioms[i]));
  CHECK(c.polynomial == 6);
  CHECK(c.quasi_polynomial == 6);
  CHECK(c.quasi_term == 6);
  CHECK(c.quasi_weighted_max == 5);
  CHECK(c.quasi_weighted_min == 5);
}

TEST_CASE("class census of the unary ternary chain") {
  const ClassCounts c = count_classes(3, 1);
  CHECK(c.total == 27);
  CHECK(c.axiom[0] == 10);  // NONDECREASING
  CHECK(c.polynomial == 6);
  CHECK(c.quasi_polynomial == 10);
}

TEST_CASE("census is independent of worker count") {
  const ClassCounts a = count_classes(2, 2, 10'000'000, 1);
  const ClassCounts b = count_classes(2, 2, 10'000'000, 3);
  CHECK(a.total == b.total);
  CHECK(a.axiom == b.axiom);
  CHECK(a.polynomial == b.polynomial);
  CHECK(a.quasi_polynomial == b.quasi_polynomial);
  CHECK(a.quasi_term == b.quasi_term);
  CHECK(a.quasi_weighted_max == b.quasi_weighted_max);
  CHECK(a.quasi_weighted_min == b.quasi_weighted_min);
}

TEST_CASE("census refuses oversized domains") {
  CHECK_THROWS_AS(count_classes(4, 3), BudgetError);
}

TEST_SUITE_END();

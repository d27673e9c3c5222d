#include <algorithm>
#include <span>
#include <variant>
#include <vector>

#include "doctest.h"
#include "qp/classify.hpp"
#include "qp/rng.hpp"

using namespace qp;

namespace {

const Chain k3(3);
const Chain k2(2);

DiscreteFunction bounded_sum() {
  return DiscreteFunction(k3, 2, {0, 1, 2, 1, 2, 2, 2, 2, 2});
}

const std::vector<int> kJoinTable3{0, 1, 2, 1, 1, 2, 2, 2, 2};

}  // namespace

TEST_SUITE_BEGIN("classify");

TEST_CASE("canonical reconstruction accepts a composed join") {
  const UnaryMap phi(k3, {0, 0, 2});
  const DiscreteFunction f = compose_unary(DiscreteFunction::join_of_all(k3, 2), phi);
  CHECK(f.table() == std::vector<int>{0, 0, 2, 0, 0, 2, 2, 2, 2});
  const QuasiPolynomialCheck qc = is_quasi_polynomial(f);
  CHECK(qc.quasi_polynomial);
  CHECK(qc.delta.values() == std::vector<int>{0, 0, 2});
  REQUIRE(qc.canonical.has_value());
  CHECK(qc.canonical->p.table() == kJoinTable3);
  CHECK(qc.canonical->phi.values() == std::vector<int>{0, 0, 2});
  CHECK(qc.canonical->kind == FactorKind::general);
  CHECK_FALSE(qc.failure.has_value());
}

TEST_CASE("bounded sum fails at reconstruction") {
  const QuasiPolynomialCheck qc = is_quasi_polynomial(bounded_sum());
  CHECK_FALSE(qc.quasi_polynomial);
  CHECK(qc.delta.values() == std::vector<int>{0, 2, 2});
  REQUIRE(qc.failure.has_value());
  CHECK(qc.failure->stage == QpFailStage::reconstruction_mismatch);
  REQUIRE(qc.failure->point.has_value());
  CHECK(qc.failure->point->to_string() == "(0,1)");
  CHECK(qc.failure->values == std::pair<int, int>{2, 1});
}

TEST_CASE("decreasing diagonal fails at the delta stage") {
  const DiscreteFunction f(k3, 1, {2, 1, 0});
  const QuasiPolynomialCheck qc = is_quasi_polynomial(f);
  CHECK_FALSE(qc.quasi_polynomial);
  REQUIRE(qc.failure.has_value());
  CHECK(qc.failure->stage == QpFailStage::delta_not_nondecreasing);
  CHECK(qc.failure->constants == std::pair<int, int>{0, 1});
  CHECK(qc.failure->values == std::pair<int, int>{2, 1});
}

TEST_CASE("non-isotone vertices fail at the vertex stage") {
  const DiscreteFunction f(k2, 2, {0, 1, 1, 0});
  const QuasiPolynomialCheck qc = is_quasi_polynomial(f);
  CHECK_FALSE(qc.quasi_polynomial);
  REQUIRE(qc.failure.has_value());
  CHECK(qc.failure->stage == QpFailStage::vertices_not_isotone);
  CHECK(qc.failure->masks == std::pair<std::uint32_t, std::uint32_t>{1, 3});
  CHECK(qc.failure->values == std::pair<int, int>{1, 0});
  CHECK_THROWS_AS(canonical_polynomial(f), NotIsotoneOnVertices);
}

TEST_CASE("canonical polynomial is the vertex extension") {
  const DiscreteFunction join = DiscreteFunction::join_of_all(k3, 2);
  CHECK(canonical_polynomial(join).table() == join.table());
  CHECK(canonical_polynomial(bounded_sum()).table() == kJoinTable3);
}

TEST_CASE("factorization sets match between search and characterization") {
  const DiscreteFunction zero = DiscreteFunction::constant(k2, 2, 0);
  const FactorizationSets sz = factorization_sets(zero);
  CHECK(sz.by_search.size() == 7);
  CHECK(sz.equal);
  CHECK(sz.contains_canonical);

  const DiscreteFunction join = DiscreteFunction::join_of_all(k2, 2);
  const FactorizationSets sj = factorization_sets(join);
  REQUIRE(sj.by_search.size() == 1);
  CHECK(sj.equal);
  CHECK(sj.contains_canonical);
  CHECK(sj.by_search[0].p.table() == join.table());
  CHECK(sj.by_search[0].phi.values() == std::vector<int>{0, 1});

  const auto all = factorizations(join);
  CHECK(all.size() == 1);
}

TEST_CASE("factorizations reproduce the function") {
  const UnaryMap phi(k3, {0, 0, 2});
  const DiscreteFunction f = compose_unary(DiscreteFunction::join_of_all(k3, 2), phi);
  const auto all = factorizations(f);
  CHECK_FALSE(all.empty());
  for (const Factorization& fac : all) CHECK(compose_unary(fac.p, fac.phi).table() == f.table());
}

TEST_CASE("quasi-Sugeno form uses a normalized outer integral") {
  const UnaryMap phi(k3, {0, 0, 2});
  const DiscreteFunction f = compose_unary(DiscreteFunction::join_of_all(k3, 2), phi);
  const Factorization fac = as_quasi_sugeno(f);
  CHECK(fac.kind == FactorKind::sugeno);
  CHECK(fac.p.table() == kJoinTable3);
  CHECK(fac.phi.values() == std::vector<int>{0, 0, 2});
  CHECK(compose_unary(fac.p, fac.phi).table() == f.table());
  CHECK(fac.p({0, 0}) == 0);
  CHECK(fac.p({2, 2}) == 2);
  CHECK_THROWS_AS(as_quasi_sugeno(bounded_sum()), NotQuasiPolynomial);
}

TEST_CASE("median refuses the term class with a replayable witness") {
  const DiscreteFunction f =
      DiscreteFunction::tabulate(k3, 2, [](std::span<const int> x) { return med3(x[0], 1, x[1]); });
  const auto r = as_quasi_term(f);
  REQUIRE(std::holds_alternative<Refusal>(r));
  const Refusal& refusal = std::get<Refusal>(r);
  CHECK(refusal.axiom == AxiomId::QUASI_CONSERVATIVE);
  REQUIRE(refusal.witness.tuples.size() == 1);
  CHECK(refusal.witness.tuples[0].to_string() == "(0,2)");
  CHECK(witness_violates(f, refusal.axiom, refusal.witness));
}

TEST_CASE("join is a quasi-term function") {
  const DiscreteFunction join = DiscreteFunction::join_of_all(k3, 2);
  const auto r = as_quasi_term(join);
  REQUIRE(std::holds_alternative<Factorization>(r));
  const Factorization& fac = std::get<Factorization>(r);
  CHECK(fac.kind == FactorKind::term);
  CHECK(compose_unary(fac.p, fac.phi).table() == join.table());
  for (std::uint32_t mask = 0; mask < 4; ++mask) {
    const int v = fac.p.eval(Tuple::vertex(k3, 2, mask));
    CHECK((v == 0 || v == 2));
  }
}

TEST_CASE("weighted maximum form of the join") {
  const DiscreteFunction join = DiscreteFunction::join_of_all(k3, 2);
  const auto r = as_quasi_weighted_max(join);
  REQUIRE(std::holds_alternative<Factorization>(r));
  const Factorization& fac = std::get<Factorization>(r);
  CHECK(fac.kind == FactorKind::weighted_max);
  CHECK(fac.p.table() == kJoinTable3);
  CHECK(fac.phi.values() == std::vector<int>{0, 1, 2});
  CHECK(fac.weights == std::vector<int>{0, 2, 2});
  for (std::size_t i = 0; i < join.size(); ++i) {
    const Tuple x = point_at(k3, 2, i);
    int acc = fac.weights[0];
    for (int k = 0; k < 2; ++k) acc = k3.join(acc, k3.meet(fac.weights[1 + k], fac.phi(x[k])));
    CHECK(acc == join.eval(x));
  }
}

TEST_CASE("meet refuses the weighted maximum class") {
  const DiscreteFunction meet = DiscreteFunction::meet_of_all(k2, 2);
  const auto r = as_quasi_weighted_max(meet);
  REQUIRE(std::holds_alternative<Refusal>(r));
  const Refusal& refusal = std::get<Refusal>(r);
  CHECK(refusal.axiom == AxiomId::MAXITIVE);
  CHECK(witness_violates(meet, refusal.axiom, refusal.witness));
  const auto rd = as_quasi_weighted_min(meet);
  CHECK(std::holds_alternative<Factorization>(rd));
}

TEST_CASE("maxitive functions split into slotwise parts") {
  const DiscreteFunction g = DiscreteFunction::tabulate(
      k3, 2, [](std::span<const int> x) { return std::max(x[1], std::min(1, x[0])); });
  const auto r = maxitive_decomposition(g);
  REQUIRE(std::holds_alternative<std::vector<UnaryMap>>(r));
  const auto& parts = std::get<std::vector<UnaryMap>>(r);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].values() == std::vector<int>{0, 1, 1});
  CHECK(parts[1].values() == std::vector<int>{0, 1, 2});
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Tuple x = point_at(k3, 2, i);
    CHECK(k3.join(parts[0](x[0]), parts[1](x[1])) == g.eval(x));
  }
  const auto rm = maxitive_decomposition(DiscreteFunction::meet_of_all(k2, 2));
  REQUIRE(std::holds_alternative<Refusal>(rm));
  CHECK(std::get<Refusal>(rm).axiom == AxiomId::MAXITIVE);
}

TEST_CASE("class report for the join") {
  const ClassReport rep = classify(DiscreteFunction::join_of_all(k3, 2));
  CHECK(rep.polynomial);
  CHECK(rep.quasi_polynomial);
  CHECK(rep.quasi_sugeno);
  CHECK(rep.quasi_term);
  CHECK(rep.quasi_weighted_max);
  CHECK_FALSE(rep.quasi_weighted_min);
  REQUIRE(rep.weighted_min_refusal.has_value());
  CHECK(rep.weighted_min_refusal->axiom == AxiomId::MINITIVE);
  CHECK_FALSE(rep.term_refusal.has_value());
  CHECK_FALSE(rep.failure.has_value());
}

TEST_CASE("class report for a constant") {
  const ClassReport rep = classify(DiscreteFunction::constant(k3, 2, 1));
  CHECK(rep.polynomial);
  CHECK(rep.quasi_polynomial);
  CHECK(rep.quasi_sugeno);
  CHECK(rep.quasi_term);
  CHECK(rep.quasi_weighted_max);
  CHECK(rep.quasi_weighted_min);
}

TEST_CASE("class report for a non-quasi-polynomial") {
  const ClassReport rep = classify(bounded_sum());
  CHECK_FALSE(rep.polynomial);
  CHECK_FALSE(rep.quasi_polynomial);
  CHECK_FALSE(rep.quasi_sugeno);
  CHECK_FALSE(rep.quasi_term);
  CHECK_FALSE(rep.quasi_weighted_max);
  CHECK_FALSE(rep.quasi_weighted_min);
  REQUIRE(rep.failure.has_value());
  CHECK(rep.failure->stage == QpFailStage::reconstruction_mismatch);
  CHECK_FALSE(rep.term_refusal.has_value());
}

TEST_CASE("report flags agree with the direct deciders on the Boolean square") {
  std::vector<int> digits(4);
  for (int t = 0; t < 16; ++t) {
    for (int i = 0; i < 4; ++i) digits[static_cast<std::size_t>(i)] = t >> i & 1;
    const DiscreteFunction f(k2, 2, digits);
    const ClassReport rep = classify(f);
    CHECK(rep.polynomial == is_polynomial(f).polynomial);
    CHECK(rep.quasi_polynomial == is_quasi_polynomial(f).quasi_polynomial);
    CHECK(rep.quasi_sugeno == rep.quasi_polynomial);
    if (rep.quasi_term || rep.quasi_weighted_max || rep.quasi_weighted_min)
      CHECK(rep.quasi_polynomial);
    if (rep.polynomial) CHECK(rep.quasi_polynomial);
  }
}

TEST_CASE("seeded ternary reports stay internally consistent") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SplitMix64 rng(7000 + seed);
    std::vector<int> t(9);
    for (int& v : t) v = static_cast<int>(rng.bounded(3));
    const DiscreteFunction f(k3, 2, t);
    const ClassReport rep = classify(f);
    CHECK(rep.quasi_sugeno == rep.quasi_polynomial);
    if (rep.quasi_polynomial) {
      REQUIRE(rep.canonical.has_value());
      CHECK(compose_unary(rep.canonical->p, rep.canonical->phi).table() == f.table());
      CHECK(is_polynomial(rep.canonical->p).polynomial);
      CHECK(rep.canonical->phi.is_nondecreasing());
      if (!rep.quasi_term) {
        REQUIRE(rep.term_refusal.has_value());
        CHECK(witness_violates(f, rep.term_refusal->axiom, rep.term_refusal->witness));
      }
      if (!rep.quasi_weighted_max) {
        REQUIRE(rep.weighted_max_refusal.has_value());
        CHECK(witness_violates(f, rep.weighted_max_refusal->axiom,
                               rep.weighted_max_refusal->witness));
      }
      if (!rep.quasi_weighted_min) {
        REQUIRE(rep.weighted_min_refusal.has_value());
        CHECK(witness_violates(f, rep.weighted_min_refusal->axiom,
                               rep.weighted_min_refusal->witness));
      }
    } else {
      REQUIRE(rep.failure.has_value());
      CHECK_FALSE(rep.canonical.has_value());
    }
  }
}

TEST_SUITE_END();

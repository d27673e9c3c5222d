#include <stdexcept>
#include <set>
#include <vector>

#include "doctest.h"
#include "qp/poly.hpp"

using namespace qp;

namespace {

const Chain k3(3);
const Chain k2(2);

DiscreteFunction bounded_sum() {
  return DiscreteFunction(k3, 2, {0, 1, 2, 1, 2, 2, 2, 2, 2});
}

void for_all_tables(const Chain& chain, int n,
                    const std::function<void(const DiscreteFunction&)>& body) {
  const std::size_t size = table_size_for(chain, n);
  std::vector<int> digits(size, 0);
  while (true) {
    body(DiscreteFunction(chain, n, digits));
    bool carried = true;
    for (std::size_t i = size; i-- > 0;) {
      if (++digits[i] < chain.size()) {
        carried = false;
        break;
      }
      digits[i] = 0;
    }
    if (carried) break;
  }
}

}  // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("set function isotonicity") {
  const SetFunction alpha(k3, 2, {0, 1, 1, 2});
  CHECK(alpha.is_isotone());
  CHECK_FALSE(alpha.is_antitone());
  const SetFunction beta(k3, 2, {2, 1, 1, 0});
  CHECK(beta.is_antitone());
  CHECK_THROWS_AS(SetFunction(k3, 2, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("canonical coefficients of the join") {
  const DiscreteFunction join = DiscreteFunction::join_of_all(k2, 2);
  const SetFunction alpha = canonical_alpha(join);
  CHECK(alpha.values() == std::vector<int>{0, 1, 1, 1});
  CHECK(dnf_table(alpha).table() == join.table());
  const SetFunction beta = canonical_beta(join);
  CHECK(beta.values() == std::vector<int>{1, 1, 1, 0});
  CHECK(cnf_table(beta).table() == join.table());
}

TEST_CASE("canonical beta of the ternary median") {
  const DiscreteFunction med = DiscreteFunction::tabulate(
      k3, 3, [](std::span<const int> x) { return med3(x[0], x[1], x[2]); });
  const SetFunction beta = canonical_beta(med);
  CHECK(beta.values() == std::vector<int>{2, 2, 2, 0, 2, 0, 0, 0});
  CHECK(cnf_table(beta).table() == med.table());
  CHECK(is_polynomial(med).polynomial);
}

TEST_CASE("polynomial recognition on hand examples") {
  CHECK(is_polynomial(DiscreteFunction::join_of_all(k3, 2)).polynomial);
  CHECK(is_polynomial(DiscreteFunction::meet_of_all(k3, 2)).polynomial);
  CHECK(is_polynomial(DiscreteFunction::constant(k3, 2, 1)).polynomial);
  const PolynomialCheck pc = is_polynomial(bounded_sum());
  CHECK_FALSE(pc.polynomial);
  REQUIRE(pc.witness.has_value());
  // canonical DNF of bounded_sum is the join; first disagreement is (1,1)
  CHECK(pc.witness->to_string() == "(1,1)");
  CHECK(dnf_eval(pc.alpha, *pc.witness) != bounded_sum().eval(*pc.witness));
}

TEST_CASE("dnf and cnf reconstructions characterize polynomials") {
  for_all_tables(k2, 2, [](const DiscreteFunction& f) {
    const bool poly = is_polynomial(f).polynomial;
    CHECK(poly == (dnf_table(canonical_alpha(f)).table() == f.table()));
    CHECK(poly == (cnf_table(canonical_beta(f)).table() == f.table()));
  });
}

TEST_CASE("four evaluators agree on isotone coefficients") {
  for (const SetFunction& alpha : all_isotone_set_functions(k2, 2)) {
    const DiscreteFunction f = dnf_table(alpha);
    const SetFunction beta = canonical_beta(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Tuple x = point_at(k2, 2, i);
      CHECK(dnf_eval(alpha, x) == f.value_at(i));
      CHECK(cnf_eval(beta, x) == f.value_at(i));
      CHECK(simplex_eval(alpha, x) == f.value_at(i));
      CHECK(simplex_eval_cnf(beta, x) == f.value_at(i));
      CHECK(median_eval(f, x) == f.value_at(i));
    }
  }
}

TEST_CASE("median_eval only sees vertex values") {
  // bounded_sum agrees with join on the vertex cube, so median_eval
  // reproduces the polynomial extension, not the table
  const DiscreteFunction f = bounded_sum();
  CHECK(median_eval(f, Tuple(k3, {0, 1})) == 1);
  CHECK(median_eval(f, Tuple(k3, {1, 1})) == 1);
  CHECK(f.eval(Tuple(k3, {1, 1})) == 2);
  const DiscreteFunction join = DiscreteFunction::join_of_all(k3, 2);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Tuple x = point_at(k3, 2, i);
    CHECK(median_eval(f, x) == join.eval(x));
  }
}

TEST_CASE("vertex extension") {
  const VertexFunction iso(k3, 2, {0, 2, 1, 2});
  const VertexExtension ext = extend_from_vertices(iso);
  REQUIRE(ext.function.has_value());
  CHECK_FALSE(ext.violation.has_value());
  CHECK(is_polynomial(*ext.function).polynomial);
  for (std::uint32_t mask = 0; mask < 4; ++mask)
    CHECK(ext.function->eval(Tuple::vertex(k3, 2, mask)) == iso.value(mask));
  const VertexFunction dip(k3, 2, {0, 2, 1, 1});
  const VertexExtension bad = extend_from_vertices(dip);
  CHECK_FALSE(bad.function.has_value());
  REQUIRE(bad.violation.has_value());
  CHECK(bad.violation->first == 0b01u);
  CHECK(bad.violation->second == 0b11u);
}

TEST_CASE("capacity validation") {
  CHECK_NOTHROW(Capacity(SetFunction(k3, 2, {0, 1, 1, 2})));
  CHECK_THROWS_AS(Capacity(SetFunction(k3, 2, {1, 1, 1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(Capacity(SetFunction(k3, 2, {0, 1, 1, 1})), std::invalid_argument);
  // with both ends pinned, a violation needs n >= 3: mu({1}) > mu({1,2})
  CHECK_THROWS_AS(Capacity(SetFunction(k3, 3, {0, 2, 0, 1, 0, 2, 2, 2})),
                  std::invalid_argument);
}

TEST_CASE("sugeno integral is the capacity DNF") {
  const Capacity mu(SetFunction(k3, 2, {0, 1, 2, 2}));
  const DiscreteFunction s = sugeno_from_capacity(mu);
  CHECK(s.table() == dnf_table(mu.coefficients()).table());
  CHECK(s.value_at(0) == 0);
  CHECK(s.value_at(s.size() - 1) == 2);
}

TEST_CASE("sugeno_normalize forces the ends and keeps the middles") {
  const DiscreteFunction p = dnf_table(SetFunction(k3, 2, {1, 1, 2, 2}));
  const Capacity mu = sugeno_normalize(p);
  CHECK(mu.coefficients().values() == std::vector<int>{0, 1, 2, 2});
  // the clamped Sugeno integral recovers p
  const DiscreteFunction s = sugeno_from_capacity(mu);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int clamped = med3(p.value_at(0), s.value_at(i), p.value_at(p.size() - 1));
    CHECK(clamped == p.value_at(i));
  }
}

TEST_CASE("homogeneity shift identities hold for polynomials") {
  for (const DiscreteFunction& p : all_polynomials(k3, 2))
    for (std::size_t i = 0; i < p.size(); ++i)
      for (int c = 0; c < 3; ++c) {
        const HomogeneityShift h = homogeneity_shift(p, point_at(k3, 2, i), c);
        CHECK(h.joined == h.join_expected);
        CHECK(h.met == h.meet_expected);
      }
}

TEST_CASE("enumerations have the expected cardinalities") {
  CHECK(all_isotone_set_functions(k2, 2).size() == 6);
  CHECK(all_isotone_set_functions(k3, 2).size() == 20);
  CHECK(all_polynomials(k2, 2).size() == 6);
  CHECK(all_polynomials(k3, 2).size() == 20);
  CHECK(all_polynomials(Chain(4), 2).size() == 50);
  std::set<std::vector<int>> tables;
  for (const DiscreteFunction& p : all_polynomials(k3, 2)) {
    CHECK(is_polynomial(p).polynomial);
    tables.insert(p.table());
  }
  CHECK(tables.size() == 20);  // distinct as functions
}

TEST_SUITE_END();

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qp/function.hpp"

using namespace qp;

namespace {

const Chain k3(3);
const Chain k2(2);

// min(2, x1 + x2), the running non-polynomial example
DiscreteFunction bounded_sum() {
  return DiscreteFunction(k3, 2, {0, 1, 2, 1, 2, 2, 2, 2, 2});
}

}  // namespace

TEST_SUITE_BEGIN("function");

TEST_CASE("unary map basics") {
  const UnaryMap id = UnaryMap::identity(k3);
  CHECK(id(0) == 0);
  CHECK(id(2) == 2);
  CHECK(id.is_nondecreasing());
  const UnaryMap c1 = UnaryMap::constant(k3, 1);
  CHECK(c1(0) == 1);
  CHECK(c1(2) == 1);
  const UnaryMap dip(k3, {0, 2, 1});
  CHECK_FALSE(dip.is_nondecreasing());
  const auto viol = dip.monotonicity_violation();
  REQUIRE(viol.has_value());
  CHECK(viol->first == 1);
  CHECK(viol->second == 2);
  CHECK_FALSE(UnaryMap::identity(k3).monotonicity_violation().has_value());
}

TEST_CASE("unary composition and duality") {
  const UnaryMap f(k3, {0, 0, 1});
  const UnaryMap g(k3, {1, 2, 2});
  const UnaryMap gf = g.compose(f);  // g after f
  CHECK(gf.values() == std::vector<int>{1, 1, 2});
  const UnaryMap fd = f.dual();  // c -> dual(f(dual(c)))
  CHECK(fd.values() == std::vector<int>{1, 2, 2});
  CHECK(fd.dual().values() == f.values());
}

TEST_CASE("point indexing is last-coordinate-fastest") {
  CHECK(table_size_for(k3, 2) == 9);
  CHECK(point_index(Tuple(k3, {0, 1})) == 1);
  CHECK(point_index(Tuple(k3, {1, 0})) == 3);
  CHECK(point_index(Tuple(k3, {2, 2})) == 8);
  for (std::size_t i = 0; i < 9; ++i) CHECK(point_index(point_at(k3, 2, i)) == i);
}

TEST_CASE("factory tables") {
  CHECK(DiscreteFunction::projection(k3, 2, 0).table() ==
        std::vector<int>{0, 0, 0, 1, 1, 1, 2, 2, 2});
  CHECK(DiscreteFunction::projection(k3, 2, 1).table() ==
        std::vector<int>{0, 1, 2, 0, 1, 2, 0, 1, 2});
  CHECK(DiscreteFunction::join_of_all(k2, 2).table() == std::vector<int>{0, 1, 1, 1});
  CHECK(DiscreteFunction::meet_of_all(k2, 2).table() == std::vector<int>{0, 0, 0, 1});
  CHECK(DiscreteFunction::constant(k3, 2, 1).table() == std::vector<int>(9, 1));
}

TEST_CASE("tabulate agrees with eval everywhere") {
  const DiscreteFunction f = DiscreteFunction::tabulate(
      k3, 2, [](std::span<const int> x) { return med3(x[0], 1, x[1]); });
  CHECK(f.table() == std::vector<int>{0, 1, 1, 1, 1, 1, 1, 1, 2});
  for (std::size_t i = 0; i < f.size(); ++i)
    CHECK(f.value_at(i) == f.eval(point_at(k3, 2, i)));
}

TEST_CASE("diagonal section") {
  CHECK(diagonal(DiscreteFunction::join_of_all(k3, 2)).values() == std::vector<int>{0, 1, 2});
  CHECK(diagonal(bounded_sum()).values() == std::vector<int>{0, 2, 2});
}

TEST_CASE("vertex restriction picks up the vertex cube") {
  const VertexFunction g = vertex_restriction(bounded_sum());
  CHECK(g.arity() == 2);
  CHECK(g.value(0b00u) == 0);
  CHECK(g.value(0b01u) == 2);  // f(2,0)
  CHECK(g.value(0b10u) == 2);  // f(0,2)
  CHECK(g.value(0b11u) == 2);
  CHECK(g.is_isotone());
  const VertexFunction dipped(k2, 2, {0, 1, 1, 0});
  const auto viol = dipped.isotonicity_violation();
  REQUIRE(viol.has_value());
  CHECK(viol->first == 0b01u);
  CHECK(viol->second == 0b11u);
}

TEST_CASE("nondecreasing check returns a covering witness") {
  CHECK(check_nondecreasing(DiscreteFunction::join_of_all(k3, 2)).nondecreasing);
  const DiscreteFunction f(k3, 2, {0, 1, 2, 1, 0, 2, 2, 2, 2});
  const MonotonicityCheck mc = check_nondecreasing(f);
  REQUIRE_FALSE(mc.nondecreasing);
  REQUIRE(mc.violation.has_value());
  const auto& [lo, hi] = *mc.violation;
  CHECK(tuple_leq(lo, hi));
  CHECK(f.eval(lo) > f.eval(hi));
  CHECK(lo.to_string() == "(0,1)");
  CHECK(hi.to_string() == "(1,1)");
}

TEST_CASE("range hull and clamping") {
  const DiscreteFunction f(k3, 2, {1, 1, 1, 1, 1, 2, 1, 2, 2});
  CHECK(range_hull(f) == std::pair<int, int>{1, 2});
  CHECK(clamp_to_range(f, 0) == 1);
  CHECK(clamp_to_range(f, 2) == 2);
  const Tuple clamped = clamp_to_range(f, Tuple(k3, {0, 2}));
  CHECK(clamped.to_string() == "(1,2)");
  CHECK(clamp_to_range(f, UnaryMap::identity(k3)).values() == std::vector<int>{1, 1, 2});
}

TEST_CASE("compose_unary applies phi to every coordinate") {
  const DiscreteFunction join = DiscreteFunction::join_of_all(k3, 2);
  const UnaryMap phi(k3, {0, 0, 2});
  CHECK(compose_unary(join, phi).table() == std::vector<int>{0, 0, 2, 0, 0, 2, 2, 2, 2});
}

TEST_CASE("dualize swaps join and meet") {
  CHECK(dualize(DiscreteFunction::join_of_all(k3, 2)).table() ==
        DiscreteFunction::meet_of_all(k3, 2).table());
  const DiscreteFunction f = bounded_sum();
  CHECK(dualize(dualize(f)).table() == f.table());
  // dual table: g(x) = dual(f(dual x)); spot value g(0,0) = 2 - f(2,2)
  CHECK(dualize(f).value_at(0) == 2 - f.value_at(8));
}

TEST_CASE("all nondecreasing unary maps") {
  const auto m2 = all_nondecreasing_unary_maps(k2);
  REQUIRE(m2.size() == 3);
  CHECK(m2[0].values() == std::vector<int>{0, 0});
  CHECK(m2[1].values() == std::vector<int>{0, 1});
  CHECK(m2[2].values() == std::vector<int>{1, 1});
  const auto m3 = all_nondecreasing_unary_maps(k3);
  CHECK(m3.size() == 10);  // C(5, 2)
  for (std::size_t i = 0; i < m3.size(); ++i) {
    CHECK(m3[i].is_nondecreasing());
    if (i + 1 < m3.size()) CHECK(m3[i].values() < m3[i + 1].values());
  }
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(DiscreteFunction(k3, 2, std::vector<int>(8, 0)), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteFunction(k3, 2, {0, 1, 2, 1, 2, 2, 2, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(table_size_for(Chain(1024), 31), std::invalid_argument);
}

TEST_SUITE_END();

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "qp/io.hpp"
#include "qp/rng.hpp"

using namespace qp;

TEST_SUITE_BEGIN("io");

TEST_CASE("qpf golden round trip") {
  const DiscreteFunction join = DiscreteFunction::join_of_all(Chain(2), 2);
  const std::string text = serialize(join);
  CHECK(text == "qpf 1\nchain 2 arity 2\n0 1\n1 1\n");
  const DiscreteFunction back = parse_function(text);
  CHECK(back.table() == join.table());
  CHECK(back.chain().size() == 2);
  CHECK(back.arity() == 2);
}

TEST_CASE("qpf random round trips") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + static_cast<int>(rng.bounded(4));
    const int n = 1 + static_cast<int>(rng.bounded(3));
    const Chain chain(m);
    std::vector<int> table(table_size_for(chain, n));
    for (int& v : table) v = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m)));
    const DiscreteFunction f(chain, n, table);
    const DiscreteFunction back = parse_function(serialize(f));
    CHECK(back.table() == f.table());
    CHECK(back.chain().size() == m);
    CHECK(back.arity() == n);
  }
}

TEST_CASE("qsf and qum round trips") {
  const SetFunction alpha(Chain(3), 2, {0, 1, 1, 2});
  const SetFunction alpha_back = parse_set_function(serialize(alpha));
  CHECK(alpha_back.values() == alpha.values());
  CHECK(alpha_back.arity() == 2);
  const UnaryMap phi(Chain(4), {0, 0, 2, 3});
  const UnaryMap phi_back = parse_unary_map(serialize(phi));
  CHECK(phi_back.values() == phi.values());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_function("qsf 1\nchain 2 arity 2\n0 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_function("qpf 2\nchain 2 arity 2\n0 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_function("qpf 1\nchain 2 arity 2\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_function("qpf 1\nchain 2 arity 2\n0 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_function("qpf 1\nchain 2 arity 2\n0 1\n1 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_function("qpf 1\nchain 1025 arity 1\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_function("qpf 1\nchain 2 arity 0\n0\n"), ParseError);
  try {
    parse_function("qpf 1\nchain 2 arity 2\n0 1\n1 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("load failures mention the path") {
  try {
    load_function("/nonexistent/f.qpf");
    FAIL("expected an exception");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("/nonexistent/f.qpf") != std::string::npos);
  }
}

TEST_CASE("load_function reads a written file") {
  const std::string path = "test_io_tmp.qpf";
  {
    std::ofstream out(path);
    out << serialize(DiscreteFunction::meet_of_all(Chain(3), 2));
  }
  const DiscreteFunction f = load_function(path);
  CHECK(f.table() == DiscreteFunction::meet_of_all(Chain(3), 2).table());
  std::remove(path.c_str());
}

TEST_SUITE_END();

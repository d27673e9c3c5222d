#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qp/chain.hpp"

namespace qp {

/// Unary map L -> L stored as its value list (values_[a] = phi(a)).
class UnaryMap {
 public:
  UnaryMap(Chain chain, std::vector<int> values);
  static UnaryMap identity(const Chain& chain);
  static UnaryMap constant(const Chain& chain, int c);

  const Chain& chain() const noexcept { return chain_; }
  int operator()(int a) const { return values_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& values() const noexcept { return values_; }

  bool is_nondecreasing() const;
  /// First adjacent pair (a, a+1) with phi(a) > phi(a+1), if any.
  std::optional<std::pair<int, int>> monotonicity_violation() const;

  /// this after inner: a -> this(inner(a)).
  UnaryMap compose(const UnaryMap& inner) const;
  /// a -> dual(phi(dual(a))).
  UnaryMap dual() const;

  friend bool operator==(const UnaryMap&, const UnaryMap&) = default;

 private:
  Chain chain_;
  std::vector<int> values_;
};

/// Table size m^n with overflow and memory guards.
std::size_t table_size_for(const Chain& chain, int arity);

/// Row-major index with the last coordinate fastest:
/// idx = sum_i x_i * m^(n-1-i).
std::size_t point_index(const Tuple& x);
Tuple point_at(const Chain& chain, int arity, std::size_t index);

/// Restriction of a function to the vertex tuples e_I, stored by mask.
class VertexFunction {
 public:
  VertexFunction(Chain chain, int arity, std::vector<int> values);

  const Chain& chain() const noexcept { return chain_; }
  int arity() const noexcept { return arity_; }
  int value(std::uint32_t mask) const { return values_[mask]; }
  const std::vector<int>& values() const noexcept { return values_; }

  bool is_isotone() const;
  /// First covering pair I, I + {i} (lexicographic in (I, i)) whose values
  /// decrease, if any. Masks returned as (subset, superset).
  std::optional<std::pair<std::uint32_t, std::uint32_t>> isotonicity_violation() const;

  friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

 private:
  Chain chain_;
  int arity_;
  std::vector<int> values_;
};

/// Total function L^n -> L stored as a value table in point_index order.
class DiscreteFunction {
 public:
  DiscreteFunction(Chain chain, int arity, std::vector<int> table);

  static DiscreteFunction constant(const Chain& chain, int arity, int value);
  static DiscreteFunction projection(const Chain& chain, int arity, int coordinate);
  static DiscreteFunction join_of_all(const Chain& chain, int arity);
  static DiscreteFunction meet_of_all(const Chain& chain, int arity);
  static DiscreteFunction tabulate(const Chain& chain, int arity,
                                   const std::function<int(std::span<const int>)>& fn);

  const Chain& chain() const noexcept { return chain_; }
  int arity() const noexcept { return arity_; }
  const std::vector<int>& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return table_.size(); }

  int value_at(std::size_t index) const { return table_[index]; }
  int eval(const Tuple& x) const;
  int operator()(std::initializer_list<int> coords) const;

  friend bool operator==(const DiscreteFunction&, const DiscreteFunction&) = default;

 private:
  Chain chain_;
  int arity_;
  std::vector<int> table_;
};

/// Diagonal section delta_f(c) = f(c, ..., c).
UnaryMap diagonal(const DiscreteFunction& f);

/// Values at the 2^n vertex tuples.
VertexFunction vertex_restriction(const DiscreteFunction& f);

struct MonotonicityCheck {
  bool nondecreasing = false;
  /// First covering pair x <= x' (lexicographic in (x, coordinate)) with
  /// f(x) > f(x'), if any.
  std::optional<std::pair<Tuple, Tuple>> violation;
};
MonotonicityCheck check_nondecreasing(const DiscreteFunction& f);

/// (min, max) of the table values.
std::pair<int, int> range_hull(const DiscreteFunction& f);

/// med(f(bottom...), value, f(top...)): clamp into the diagonal hull of f.
int clamp_to_range(const DiscreteFunction& f, int value);
Tuple clamp_to_range(const DiscreteFunction& f, const Tuple& x);
UnaryMap clamp_to_range(const DiscreteFunction& f, const UnaryMap& phi);

/// x -> p(phi(x_1), ..., phi(x_n)).
DiscreteFunction compose_unary(const DiscreteFunction& p, const UnaryMap& phi);

/// Dual function x -> dual(f(dual x)); an involution.
DiscreteFunction dualize(const DiscreteFunction& f);

/// Every nondecreasing unary map on the chain, in lexicographic value order.
/// There are C(2m-1, m) of them; refuses chains larger than 12.
std::vector<UnaryMap> all_nondecreasing_unary_maps(const Chain& chain);

}  // namespace qp

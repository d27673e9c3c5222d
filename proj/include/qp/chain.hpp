#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qp {

/// Bounded totally ordered carrier {0, ..., size-1}. Meet is min, join is
/// max; 0 is bottom and size-1 is top. Chains of size < 2 are rejected so
/// bottom and top are always distinct.
class Chain {
 public:
  explicit Chain(int size);

  int size() const noexcept { return size_; }
  int bottom() const noexcept { return 0; }
  int top() const noexcept { return size_ - 1; }
  bool contains(int a) const noexcept { return a >= 0 && a < size_; }

  int meet(int a, int b) const noexcept { return a < b ? a : b; }
  int join(int a, int b) const noexcept { return a < b ? b : a; }
  /// Order reversal a -> top - a.
  int dual(int a) const noexcept { return size_ - 1 - a; }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int size_;
};

/// Ternary median (a v b) ^ (b v c) ^ (c v a); the middle value on a chain.
int med3(int a, int b, int c) noexcept;

/// Bijection of {0, ..., arity-1}, stored as the image sequence.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int arity);

  int arity() const noexcept { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Point of the product lattice L^n. Immutable after construction.
class Tuple {
 public:
  Tuple(Chain chain, std::vector<int> components);
  static Tuple filled(const Chain& chain, int arity, int value);
  static Tuple bottom(const Chain& chain, int arity);
  static Tuple top(const Chain& chain, int arity);
  /// Characteristic tuple of a coordinate subset: component i is top when
  /// bit i of mask is set, bottom otherwise.
  static Tuple vertex(const Chain& chain, int arity, std::uint32_t mask);

  const Chain& chain() const noexcept { return chain_; }
  int arity() const noexcept { return static_cast<int>(components_.size()); }
  int operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }
  std::span<const int> components() const noexcept { return components_; }

  /// Copy with coordinate i replaced by value.
  Tuple with_component(int i, int value) const;

  std::string to_string() const;  // "(2,0,1)"

  friend bool operator==(const Tuple&, const Tuple&) = default;

 private:
  Chain chain_;
  std::vector<int> components_;
};

Tuple tuple_meet(const Tuple& x, const Tuple& y);
Tuple tuple_join(const Tuple& x, const Tuple& y);
bool tuple_leq(const Tuple& x, const Tuple& y);

/// x ^ c and x v c, componentwise against a constant.
Tuple cut_meet(const Tuple& x, int c);
Tuple cut_join(const Tuple& x, int c);

/// [x]_c: component i becomes bottom when x_i <= c, otherwise stays x_i.
Tuple upper_part(const Tuple& x, int c);
/// [x]^c: component i becomes top when x_i >= c, otherwise stays x_i.
Tuple lower_part(const Tuple& x, int c);

/// Componentwise order reversal; an involution.
Tuple dual_tuple(const Tuple& x);

/// True iff some permutation sorts both tuples nondecreasingly;
/// equivalently there is no inversion pair x_i < x_j with y_i > y_j.
bool is_comonotonic(const Tuple& x, const Tuple& y);

/// Oracle form of is_comonotonic: searches all permutations directly.
/// Exponential; test and cross-validation use only.
bool is_comonotonic_by_search(const Tuple& x, const Tuple& y);

/// Stable sorting permutation: x[image(0)] <= ... <= x[image(n-1)], ties
/// broken by ascending original index.
Permutation sorting_permutation(const Tuple& x);

}  // namespace qp

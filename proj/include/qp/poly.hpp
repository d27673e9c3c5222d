#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qp/chain.hpp"
#include "qp/function.hpp"

namespace qp {

/// Map from coordinate subsets of {1..n} to L, stored by bitmask
/// (bit i-1 represents coordinate i).
class SetFunction {
 public:
  SetFunction(Chain chain, int arity, std::vector<int> values);

  const Chain& chain() const noexcept { return chain_; }
  int arity() const noexcept { return arity_; }
  int value(std::uint32_t mask) const { return values_[mask]; }
  const std::vector<int>& values() const noexcept { return values_; }
  std::uint32_t subset_count() const noexcept { return 1u << arity_; }

  bool is_isotone() const;
  bool is_antitone() const;

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  Chain chain_;
  int arity_;
  std::vector<int> values_;
};

/// Isotone set function with value bottom at the empty set and top at the
/// full set; the coefficient data of a Sugeno integral.
class Capacity {
 public:
  explicit Capacity(SetFunction coefficients);
  const SetFunction& coefficients() const noexcept { return coefficients_; }

 private:
  SetFunction coefficients_;
};

/// Disjunctive normal form over all subsets:
/// OR_I (alpha(I) AND AND_{i in I} x_i), the empty meet being top.
int dnf_eval(const SetFunction& alpha, const Tuple& x);

/// Conjunctive normal form over all subsets:
/// AND_I (beta(I) OR OR_{i in I} x_i), the empty join being bottom.
int cnf_eval(const SetFunction& beta, const Tuple& x);

/// alpha_f(I) = f(e_I) and beta_f(I) = f(e_{complement of I}).
SetFunction canonical_alpha(const DiscreteFunction& f);
SetFunction canonical_beta(const DiscreteFunction& f);

/// Full table of the DNF determined by alpha.
DiscreteFunction dnf_table(const SetFunction& alpha);
/// Full table of the CNF determined by beta.
DiscreteFunction cnf_table(const SetFunction& beta);

struct VertexExtension {
  /// Present when the vertex data is isotone: the unique polynomial
  /// function agreeing with it on all vertex tuples.
  std::optional<DiscreteFunction> function;
  /// Otherwise the first covering mask pair witnessing non-isotonicity.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> violation;
};
VertexExtension extend_from_vertices(const VertexFunction& g);

/// n+1 term chain form along a sorting permutation s of x:
/// OR_{i=1..n+1} (alpha(S_i) AND x_s(i)) where S_i = {s(i), ..., s(n)}
/// holds the coordinates of the n-i+1 largest values and the last term
/// uses x = top. Requires isotone alpha.
int simplex_eval(const SetFunction& alpha, const Tuple& x);

/// Dual chain form AND_{i=0..n} (beta(T_i) OR x_s(i)) where
/// T_i = {s(1), ..., s(i)} holds the coordinates of the i smallest values
/// and the i = 0 term uses x = bottom. Requires antitone beta.
int simplex_eval_cnf(const SetFunction& beta, const Tuple& x);

/// Median-recursive evaluation: coordinates are pinned to bottom/top in
/// ascending order, f(x) = med(f(x_k at bottom), x_k, f(x_k at top)),
/// bottoming out on the vertex cube. Uses f only at vertex tuples; equals
/// f everywhere iff f is median decomposable.
int median_eval(const DiscreteFunction& f, const Tuple& x);

struct PolynomialCheck {
  bool polynomial = false;
  SetFunction alpha;  // canonical DNF coefficients, valid either way
  /// First point (lexicographic) where the DNF disagrees with f.
  std::optional<Tuple> witness;
};
PolynomialCheck is_polynomial(const DiscreteFunction& f);

/// Sugeno integral of the capacity: the DNF with its coefficients.
DiscreteFunction sugeno_from_capacity(const Capacity& mu);

/// Both sides of the polynomial homogeneity identities
/// p(x v c) = p(x) v clamp(c) and p(x ^ c) = p(x) ^ clamp(c).
/// Property oracle; requires a polynomial p.
struct HomogeneityShift {
  int joined;
  int join_expected;
  int met;
  int meet_expected;
};
HomogeneityShift homogeneity_shift(const DiscreteFunction& p, const Tuple& x, int c);

/// Capacity mu whose Sugeno integral, clamped into the hull of p, recovers
/// p: med(p(bottom...), S_mu(x), p(top...)) == p(x) for all x. Built as
/// mu(I) = alpha_p(I) on proper nonempty subsets. Requires a polynomial p.
Capacity sugeno_normalize(const DiscreteFunction& p);

/// Every isotone set function on subsets of [arity], ordered by their value
/// vectors (mask-major). Grows steeply with both parameters; callers keep
/// the domain small.
std::vector<SetFunction> all_isotone_set_functions(const Chain& chain, int arity);

/// Every polynomial function on the domain: the DNF tables of all isotone
/// coefficient functions, in the same order.
std::vector<DiscreteFunction> all_polynomials(const Chain& chain, int arity);

}  // namespace qp

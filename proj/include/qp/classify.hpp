#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "qp/axioms.hpp"
#include "qp/poly.hpp"

namespace qp {

enum class FactorKind { general, sugeno, term, weighted_max, weighted_min };

/// A pair (p, phi) with f = p(phi(x_1), ..., phi(x_n)). The inner map phi is
/// nondecreasing; p is a polynomial function whose flavor is tagged by kind.
/// For the weighted kinds, weights holds (v_0, v_1, ..., v_n).
struct Factorization {
  DiscreteFunction p;
  UnaryMap phi;
  FactorKind kind = FactorKind::general;
  std::vector<int> weights;
};

class NotIsotoneOnVertices : public std::invalid_argument {
 public:
  NotIsotoneOnVertices() : std::invalid_argument("vertex restriction is not isotone") {}
};

class NotQuasiPolynomial : public std::invalid_argument {
 public:
  NotQuasiPolynomial() : std::invalid_argument("function is not quasi-polynomial") {}
};

/// A construction that theory guarantees to work did not; always a bug or a
/// falsified theorem, never an expected outcome.
class ConstructionFailed : public std::runtime_error {
 public:
  explicit ConstructionFailed(const std::string& what) : std::runtime_error(what) {}
};

/// The unique polynomial function agreeing with f on vertex tuples.
/// Throws NotIsotoneOnVertices when no such extension exists.
DiscreteFunction canonical_polynomial(const DiscreteFunction& f);

/// Why f failed the quasi-polynomial test, staged in check order.
enum class QpFailStage {
  delta_not_nondecreasing,
  vertices_not_isotone,
  reconstruction_mismatch,
};

struct QpFailure {
  QpFailStage stage;
  /// delta stage: adjacent (c, c+1) with delta(c) > delta(c+1).
  std::optional<std::pair<int, int>> constants;
  /// vertex stage: covering masks (I, J), I subset of J, f(e_I) > f(e_J).
  std::optional<std::pair<std::uint32_t, std::uint32_t>> masks;
  /// reconstruction stage: first point with p_f(delta(x)) != f(x).
  std::optional<Tuple> point;
  /// The two disagreeing values at the witness, in (got, expected) order;
  /// for the reconstruction stage (p_f o delta_f, f).
  std::pair<int, int> values{0, 0};
};

struct QuasiPolynomialCheck {
  bool quasi_polynomial = false;
  UnaryMap delta;
  /// Set iff quasi_polynomial: the canonical pair (p_f, delta_f).
  std::optional<Factorization> canonical;
  std::optional<QpFailure> failure;
};

/// Decides representability as p o phi by canonical reconstruction:
/// delta_f nondecreasing, vertex values isotone, and p_f o delta_f == f.
QuasiPolynomialCheck is_quasi_polynomial(const DiscreteFunction& f);

/// All factorizations of a quasi-polynomial f, computed two independent
/// ways over the same (polynomial, nondecreasing map) enumeration order:
/// by_search filters on f == p o phi directly, by_characterization on
/// p_f == med(f(0),p,f(1)) and delta_f == med(p(0),phi,p(1)).
struct FactorizationSets {
  std::vector<Factorization> by_search;
  std::vector<Factorization> by_characterization;
  bool equal = false;
  bool contains_canonical = false;
};
FactorizationSets factorization_sets(const DiscreteFunction& f);

/// by_search of factorization_sets; throws ConstructionFailed when the two
/// computations disagree or the canonical pair is missing.
std::vector<Factorization> factorizations(const DiscreteFunction& f);

/// Rewrites the canonical factorization with a Sugeno integral outer part:
/// f = S_mu o phi' where phi' = med(p_f(0), delta_f, p_f(1)).
Factorization as_quasi_sugeno(const DiscreteFunction& f);

/// A constructive "no": the axiom separating f from the class, with a
/// replayable witness.
struct Refusal {
  AxiomId axiom;
  Witness witness;
};

/// Term-function outer part (coefficients in {bottom, top}); refusal axiom
/// is QUASI_CONSERVATIVE.
std::variant<Factorization, Refusal> as_quasi_term(const DiscreteFunction& f);

/// Weighted maximum outer part v_0 v (v_1 ^ x_1) v ... ; refusal axiom is
/// MAXITIVE.
std::variant<Factorization, Refusal> as_quasi_weighted_max(const DiscreteFunction& f);

/// Weighted minimum outer part w_0 ^ (w_1 v x_1) ^ ... ; refusal axiom is
/// MINITIVE.
std::variant<Factorization, Refusal> as_quasi_weighted_min(const DiscreteFunction& f);

/// Slotwise parts f_i(c) = f(bottom with c at slot i) of a maxitive f, with
/// f(x) = f_1(x_1) v ... v f_n(x_n). Works for any maxitive f, not only
/// quasi-polynomials; refusal axiom is MAXITIVE.
std::variant<std::vector<UnaryMap>, Refusal> maxitive_decomposition(const DiscreteFunction& f);

struct ClassReport {
  bool polynomial = false;
  bool quasi_polynomial = false;
  bool quasi_sugeno = false;  // always equals quasi_polynomial
  bool quasi_term = false;
  bool quasi_weighted_max = false;
  bool quasi_weighted_min = false;
  UnaryMap delta;
  std::optional<Factorization> canonical;
  std::optional<QpFailure> failure;
  /// Witnessed refusals for the three subclasses, present when f is
  /// quasi-polynomial but outside the subclass.
  std::optional<Refusal> term_refusal;
  std::optional<Refusal> weighted_max_refusal;
  std::optional<Refusal> weighted_min_refusal;
};

/// Membership report across the five classes. Subclass flags are only
/// meaningful (and only computed) when f is quasi-polynomial.
ClassReport classify(const DiscreteFunction& f);

}  // namespace qp

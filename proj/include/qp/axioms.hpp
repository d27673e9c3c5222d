#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qp/chain.hpp"
#include "qp/function.hpp"

namespace qp {

enum class AxiomId {
  NONDECREASING,
  IDEMPOTENT,
  RANGE_IDEMPOTENT,
  HOR_MAX,
  HOR_MIN,
  P1,
  D1,
  P2,
  D2,
  COM_MAX,
  COM_MIN,
  MAXITIVE,
  MINITIVE,
  S_MAX_HOM,
  S_MIN_HOM,
  QUASI_MAX_HOM,
  QUASI_MIN_HOM,
  MEDIAN_DECOMP,
  QUASI_MEDIAN_DECOMP,
  CONSERVATIVE,
  QUASI_CONSERVATIVE,
};

inline constexpr std::array<AxiomId, 21> kAllAxioms = {
    AxiomId::NONDECREASING,  AxiomId::IDEMPOTENT,    AxiomId::RANGE_IDEMPOTENT,
    AxiomId::HOR_MAX,        AxiomId::HOR_MIN,       AxiomId::P1,
    AxiomId::D1,             AxiomId::P2,            AxiomId::D2,
    AxiomId::COM_MAX,        AxiomId::COM_MIN,       AxiomId::MAXITIVE,
    AxiomId::MINITIVE,       AxiomId::S_MAX_HOM,     AxiomId::S_MIN_HOM,
    AxiomId::QUASI_MAX_HOM,  AxiomId::QUASI_MIN_HOM, AxiomId::MEDIAN_DECOMP,
    AxiomId::QUASI_MEDIAN_DECOMP, AxiomId::CONSERVATIVE, AxiomId::QUASI_CONSERVATIVE,
};

std::string_view to_string(AxiomId a);
std::optional<AxiomId> axiom_from_string(std::string_view name);

/// Partner under order dualization: check(f, a) holds iff
/// check(dualize(f), dual_axiom(a)) holds. For the S-parameterized pair
/// the subset S dualizes elementwise.
AxiomId dual_axiom(AxiomId a);

/// S_MAX_HOM and S_MIN_HOM take an explicit subset of the chain.
bool takes_s_set(AxiomId a);

/// Instantiation of the failed quantifier. Layout by axiom:
///   NONDECREASING                tuples {x, x'}
///   IDEMPOTENT/RANGE_IDEMPOTENT  constants {c}
///   HOR_MAX/HOR_MIN              tuples {x}, constants {c}
///   P1/D1                        tuples {e, e'}, constants {c}
///   P2/D2                        tuples {e}, constants {c, c'}
///   COM_MAX/COM_MIN/MAXITIVE/MINITIVE  tuples {x, x'}
///   S_/QUASI_ homogeneity        tuples {x}, constants {c}
///   MEDIAN_DECOMP family         tuples {x}, constants {k} (0-based)
///   CONSERVATIVE family          tuples {x}
struct Witness {
  std::vector<Tuple> tuples;
  std::vector<int> constants;
};

struct AxiomResult {
  AxiomId axiom;
  bool holds = true;
  std::optional<Witness> witness;
};

/// co(R_f): the interval of chain elements between the least and greatest
/// table value, in ascending order. Default S for the S-homogeneity pair.
std::vector<int> range_hull_set(const DiscreteFunction& f);

/// Brute-force axiom deciders over one fixed domain (chain, arity).
/// Construction precomputes index geometry shared by all checks, so reuse
/// one checker when scanning many functions on the same domain.
/// Witnesses are first-found in lexicographic scan order.
class AxiomChecker {
 public:
  AxiomChecker(Chain chain, int arity);

  const Chain& chain() const noexcept;
  int arity() const noexcept;

  /// Decision only, no witness materialization. S-parameterized axioms
  /// default to S = range_hull_set(f).
  bool holds(const DiscreteFunction& f, AxiomId a) const;
  bool holds(const DiscreteFunction& f, AxiomId a, std::span<const int> s) const;

  AxiomResult check(const DiscreteFunction& f, AxiomId a) const;
  AxiomResult check(const DiscreteFunction& f, AxiomId a, std::span<const int> s) const;

  /// One result per AxiomId in kAllAxioms order.
  std::vector<AxiomResult> check_all(const DiscreteFunction& f) const;

  struct Geometry;  // opaque precomputed index geometry, defined in the .cpp

 private:
  std::shared_ptr<const Geometry> geo_;
};

/// One-shot conveniences; they build a fresh checker per call.
AxiomResult check(const DiscreteFunction& f, AxiomId a);
AxiomResult check(const DiscreteFunction& f, AxiomId a, std::span<const int> s);
std::vector<AxiomResult> check_all(const DiscreteFunction& f);

/// Replays a witness against the axiom's formula; true iff it instantiates
/// a genuine violation on f.
bool witness_violates(const DiscreteFunction& f, AxiomId a, const Witness& w);
bool witness_violates(const DiscreteFunction& f, AxiomId a, const Witness& w,
                      std::span<const int> s);

/// Image of a witness under dualization; witness_violates(f, a, w) implies
/// witness_violates(dualize(f), dual_axiom(a), dual_witness(chain, a, w)).
/// The chain argument dualizes constants in tuple-free witnesses.
Witness dual_witness(const Chain& chain, AxiomId a, const Witness& w);

/// Renders instantiation plus the violated relation, e.g.
/// "x=(2,0), c=1: f(x^c)=1 != f(x)^d(1)=2". Compact form uses no spaces
/// (for machine-readable output). Coordinates in the text are 1-based.
std::string describe(const DiscreteFunction& f, AxiomId a, const Witness& w,
                     bool compact = false);

}  // namespace qp

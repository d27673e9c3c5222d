#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qp/classify.hpp"

namespace qp {

enum class UniverseMode { exhaustive, exhaustive_nondecreasing, sample };

std::string_view to_string(UniverseMode mode);
std::optional<UniverseMode> universe_mode_from_string(std::string_view name);

/// A family of functions L^n -> L to sweep: every table, every nondecreasing
/// table, or a seeded pseudo-random selection.
struct Universe {
  int m = 2;
  int n = 1;
  UniverseMode mode = UniverseMode::exhaustive;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  std::size_t budget = 10'000'000;
};

/// An infeasibly large or malformed universe request. Deliberate refusal,
/// not a resource failure: callers get it before any work starts.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// m^(m^n), saturating at SIZE_MAX.
std::size_t universe_cardinality(int m, int n);

/// Throws BudgetError unless the universe is admissible: exhaustive modes
/// need universe_cardinality(m, n) <= budget, sample needs
/// 1 <= sample_count <= budget.
void check_budget(const Universe& u);

enum class TheoremId {
  T_HORMAX,
  L_DNFSIMPLEX,
  T_HORMIN,
  C_HORMAXMIN,
  L_COMHOR,
  T_COMMAX,
  T_COMMIN,
  T_QUASIPOL,
  L_HOM,
  P_FACT,
  C_QSUGENO,
  L_QHOM_HOR,
  T_QHOM,
  T_QMED,
  T_QTERM,
  P_MAXDEC,
  T_QWMAX,
  T_QWMIN,
  R_BOOLHOR,
  R_POLYCHAR,
};

inline constexpr std::array<TheoremId, 20> kAllTheorems{
    TheoremId::T_HORMAX,  TheoremId::L_DNFSIMPLEX, TheoremId::T_HORMIN,
    TheoremId::C_HORMAXMIN, TheoremId::L_COMHOR,   TheoremId::T_COMMAX,
    TheoremId::T_COMMIN,  TheoremId::T_QUASIPOL,   TheoremId::L_HOM,
    TheoremId::P_FACT,    TheoremId::C_QSUGENO,    TheoremId::L_QHOM_HOR,
    TheoremId::T_QHOM,    TheoremId::T_QMED,       TheoremId::T_QTERM,
    TheoremId::P_MAXDEC,  TheoremId::T_QWMAX,      TheoremId::T_QWMIN,
    TheoremId::R_BOOLHOR, TheoremId::R_POLYCHAR,
};

std::string_view to_string(TheoremId t);
std::optional<TheoremId> theorem_from_string(std::string_view name);

struct Counterexample {
  DiscreteFunction function;
  /// Position in the universe stream.
  std::size_t ordinal = 0;
  /// Space-free account of which sides disagreed.
  std::string detail;
};

struct VerificationReport {
  std::optional<TheoremId> theorem;
  Universe universe;
  std::size_t functions_checked = 0;
  bool holds = true;
  std::optional<Counterexample> counterexample;
  double wall_seconds = 0.0;
};

/// Evaluates both sides of the theorem on one function using only the
/// lower-level deciders; empty when they agree. The checker must live on
/// the same domain as f. One-off convenience; verify() caches the
/// enumerations this rebuilds per call.
std::optional<std::string> theorem_violation(TheoremId t, const DiscreteFunction& f,
                                             const AxiomChecker& ax);

/// Sweeps the universe and reports the lowest-ordinal disagreement, if any.
/// The full stream is always scanned (no early stop), so the report is
/// identical for every worker count.
VerificationReport verify(TheoremId t, const Universe& u, int jobs = 1);

/// The same harness with an arbitrary per-function predicate (the testing
/// seam for the merge logic). The predicate is shared across workers and
/// must be thread-safe when jobs > 1.
VerificationReport verify_predicate(
    const Universe& u,
    const std::function<std::optional<std::string>(const DiscreteFunction&)>& violation,
    int jobs = 1);

/// Visits every function of the universe in stream order with its ordinal;
/// returns the number visited. Stops early when visit returns false (the
/// count then includes the function that stopped it).
std::size_t for_each_function(const Universe& u,
                              const std::function<bool(std::size_t, const DiscreteFunction&)>& visit);

enum class SampleConstraint { any, nondecreasing };

/// Deterministic in (m, n, seed): splitmix64-filled table for `any`;
/// for `nondecreasing`, rejection resampling at m = 2 and a lexicographic
/// sweep with max-of-predecessors lower bounds at m >= 3. The sweep covers
/// every monotone table but is not uniform over them.
DiscreteFunction random_function(int m, int n, std::uint64_t seed,
                                 SampleConstraint constraint = SampleConstraint::any);

/// Exhaustive class cardinalities: one count per axiom (kAllAxioms order,
/// S-parameterized axioms at S = range_hull_set(f)) plus the classify
/// classes.
struct ClassCounts {
  int m = 0;
  int n = 0;
  std::size_t total = 0;
  std::array<std::size_t, kAllAxioms.size()> axiom{};
  std::size_t polynomial = 0;
  std::size_t quasi_polynomial = 0;
  std::size_t quasi_term = 0;
  std::size_t quasi_weighted_max = 0;
  std::size_t quasi_weighted_min = 0;
};

ClassCounts count_classes(int m, int n, std::size_t budget = 10'000'000, int jobs = 1);

}  // namespace qp

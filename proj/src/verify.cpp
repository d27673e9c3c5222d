#include "qp/verify.hpp"

#include "qp/rng.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <thread>

namespace qp {

std::string_view to_string(UniverseMode mode) {
  switch (mode) {
    case UniverseMode::exhaustive: return "exhaustive";
    case UniverseMode::exhaustive_nondecreasing: return "exhaustive-nondecreasing";
    case UniverseMode::sample: return "sample";
  }
  return "?";
}

std::optional<UniverseMode> universe_mode_from_string(std::string_view name) {
  if (name == "exhaustive") return UniverseMode::exhaustive;
  if (name == "exhaustive-nondecreasing") return UniverseMode::exhaustive_nondecreasing;
  if (name == "sample") return UniverseMode::sample;
  return std::nullopt;
}

std::string_view to_string(TheoremId t) {
  switch (t) {
    case TheoremId::T_HORMAX: return "T-HORMAX";
    case TheoremId::L_DNFSIMPLEX: return "L-DNFSIMPLEX";
    case TheoremId::T_HORMIN: return "T-HORMIN";
    case TheoremId::C_HORMAXMIN: return "C-HORMAXMIN";
    case TheoremId::L_COMHOR: return "L-COMHOR";
    case TheoremId::T_COMMAX: return "T-COMMAX";
    case TheoremId::T_COMMIN: return "T-COMMIN";
    case TheoremId::T_QUASIPOL: return "T-QUASIPOL";
    case TheoremId::L_HOM: return "L-HOM";
    case TheoremId::P_FACT: return "P-FACT";
    case TheoremId::C_QSUGENO: return "C-QSUGENO";
    case TheoremId::L_QHOM_HOR: return "L-QHOM-HOR";
    case TheoremId::T_QHOM: return "T-QHOM";
    case TheoremId::T_QMED: return "T-QMED";
    case TheoremId::T_QTERM: return "T-QTERM";
    case TheoremId::P_MAXDEC: return "P-MAXDEC";
    case TheoremId::T_QWMAX: return "T-QWMAX";
    case TheoremId::T_QWMIN: return "T-QWMIN";
    case TheoremId::R_BOOLHOR: return "R-BOOLHOR";
    case TheoremId::R_POLYCHAR: return "R-POLYCHAR";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (TheoremId t : kAllTheorems)
    if (to_string(t) == name) return t;
  return std::nullopt;
}

std::size_t universe_cardinality(int m, int n) {
  const Chain chain(m);  // validates m without bounding the table size
  std::size_t exponent = 1;
  for (int i = 0; i < n; ++i) {
    if (exponent > SIZE_MAX / static_cast<std::size_t>(m)) {
      exponent = SIZE_MAX;
      break;
    }
    exponent *= static_cast<std::size_t>(m);
  }
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (result > SIZE_MAX / static_cast<std::size_t>(m)) return SIZE_MAX;
    result *= static_cast<std::size_t>(m);
  }
  return result;
}

void check_budget(const Universe& u) {
  Chain chain(u.m);  // validates m >= 2
  if (u.n < 1 || u.n > 16) throw BudgetError("universe arity out of range [1, 16]");
  if (u.mode == UniverseMode::sample) {
    if (u.sample_count < 1) throw BudgetError("sample universe needs sample_count >= 1");
    if (u.sample_count > u.budget)
      throw BudgetError("sample_count " + std::to_string(u.sample_count) +
                        " exceeds budget " + std::to_string(u.budget));
    return;
  }
  const std::size_t cardinality = universe_cardinality(u.m, u.n);
  if (cardinality > u.budget)
    throw BudgetError("exhaustive universe has " +
                      (cardinality == SIZE_MAX ? std::string("more than 2^64")
                                               : std::to_string(cardinality)) +
                      " tables, budget is " + std::to_string(u.budget));
}

namespace {

std::vector<std::size_t> strides_for(int m, int n) {
  std::vector<std::size_t> stride(static_cast<std::size_t>(n));
  std::size_t p = 1;
  for (int i = n; i-- > 0;) {
    stride[static_cast<std::size_t>(i)] = p;
    p *= static_cast<std::size_t>(m);
  }
  return stride;
}

bool table_nondecreasing(const std::vector<int>& digits, int m, int n,
                         const std::vector<std::size_t>& stride) {
  std::vector<int> coords(static_cast<std::size_t>(n), 0);
  std::size_t idx = 0;
  while (true) {
    for (int k = 0; k < n; ++k)
      if (coords[static_cast<std::size_t>(k)] + 1 < m &&
          digits[idx] > digits[idx + stride[static_cast<std::size_t>(k)]])
        return false;
    int k = n - 1;
    while (k >= 0 && ++coords[static_cast<std::size_t>(k)] == m) {
      coords[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) return true;
    ++idx;
  }
}

}  // namespace

DiscreteFunction random_function(int m, int n, std::uint64_t seed, SampleConstraint constraint) {
  Chain chain(m);
  const std::size_t size = table_size_for(chain, n);
  SplitMix64 rng(seed);
  std::vector<int> digits(size);
  if (constraint == SampleConstraint::any) {
    for (int& d : digits) d = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m)));
    return DiscreteFunction(chain, n, std::move(digits));
  }
  const std::vector<std::size_t> stride = strides_for(m, n);
  if (m == 2) {
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
      for (int& d : digits) d = static_cast<int>(rng.bounded(2));
      if (table_nondecreasing(digits, m, n, stride))
        return DiscreteFunction(chain, n, std::move(digits));
    }
    throw std::runtime_error("random_function: monotone rejection sampling stalled");
  }
  // Lexicographic sweep; each entry drawn from [max of predecessors, top].
  std::vector<int> coords(static_cast<std::size_t>(n), 0);
  std::size_t idx = 0;
  while (true) {
    int lo = chain.bottom();
    for (int k = 0; k < n; ++k)
      if (coords[static_cast<std::size_t>(k)] > 0)
        lo = std::max(lo, digits[idx - stride[static_cast<std::size_t>(k)]]);
    digits[idx] = lo + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m - lo)));
    int k = n - 1;
    while (k >= 0 && ++coords[static_cast<std::size_t>(k)] == m) {
      coords[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++idx;
  }
  return DiscreteFunction(chain, n, std::move(digits));
}

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

/// Index arithmetic shared by the closed-form evaluators.
struct Dom {
  Chain chain;
  int m;
  int n;
  std::size_t size;
  std::vector<std::size_t> stride;
  std::vector<std::size_t> maskstride;  // sum of strides over the mask bits
  std::vector<int> coords_flat;         // [idx * n + i]

  Dom(const Chain& c, int n_) : chain(c), m(c.size()), n(n_), size(table_size_for(c, n_)) {
    stride = strides_for(m, n);
    maskstride.assign(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 1; mask < maskstride.size(); ++mask)
      maskstride[mask] = maskstride[mask & (mask - 1)] +
                         stride[static_cast<std::size_t>(std::countr_zero(mask))];
    coords_flat.resize(size * static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::size_t rest = idx;
      for (int i = n; i-- > 0;) {
        coords_flat[idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
            static_cast<int>(rest % static_cast<std::size_t>(m));
        rest /= static_cast<std::size_t>(m);
      }
    }
  }

  const int* coords(std::size_t idx) const {
    return coords_flat.data() + idx * static_cast<std::size_t>(n);
  }
  std::uint32_t full() const { return (1u << n) - 1u; }
};

/// f(x) == OR_{I subset [n]} g(e_I ^ AND_{i in I} x_i) everywhere.
bool form4_holds(const Dom& d, const DiscreteFunction& f, const DiscreteFunction& g) {
  const std::uint32_t masks = 1u << d.n;
  for (std::size_t idx = 0; idx < d.size; ++idx) {
    const int* co = d.coords(idx);
    int acc = g.value_at(0);
    for (std::uint32_t mask = 1; mask < masks; ++mask) {
      int c = d.m - 1;
      for (int i = 0; i < d.n; ++i)
        if (mask >> i & 1u) c = std::min(c, co[i]);
      acc = std::max(acc, g.value_at(static_cast<std::size_t>(c) * d.maskstride[mask]));
    }
    if (acc != f.value_at(idx)) return false;
  }
  return true;
}

/// f(x) == AND_{I subset [n]} g(e_{[n] minus I} v OR_{i in I} x_i) everywhere.
bool dual_form4_holds(const Dom& d, const DiscreteFunction& f, const DiscreteFunction& g) {
  const std::uint32_t masks = 1u << d.n;
  const std::size_t all = d.maskstride[d.full()];
  for (std::size_t idx = 0; idx < d.size; ++idx) {
    const int* co = d.coords(idx);
    int acc = g.value_at(all * static_cast<std::size_t>(d.m - 1));  // I empty: g(top...)
    for (std::uint32_t mask = 1; mask < masks; ++mask) {
      int c = 0;
      for (int i = 0; i < d.n; ++i)
        if (mask >> i & 1u) c = std::max(c, co[i]);
      const std::size_t at = static_cast<std::size_t>(c) * d.maskstride[mask] +
                             static_cast<std::size_t>(d.m - 1) * (all - d.maskstride[mask]);
      acc = std::min(acc, g.value_at(at));
    }
    if (acc != f.value_at(idx)) return false;
  }
  return true;
}

/// For every permutation s and every x sorted nondecreasingly along s:
/// f(x) == OR_{i=1..n+1} g(e_{S(i)} ^ x_{s(i)}) with S(i) = {s(i)..s(n)}.
bool simplex_chain_holds(const Dom& d, const DiscreteFunction& f, const DiscreteFunction& g) {
  std::vector<int> sigma(static_cast<std::size_t>(d.n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    for (std::size_t idx = 0; idx < d.size; ++idx) {
      const int* co = d.coords(idx);
      bool in_simplex = true;
      for (int j = 0; j + 1 < d.n && in_simplex; ++j)
        in_simplex = co[sigma[static_cast<std::size_t>(j)]] <= co[sigma[static_cast<std::size_t>(j) + 1]];
      if (!in_simplex) continue;
      int acc = g.value_at(0);  // the i = n+1 term
      std::uint32_t mask = 0;
      for (int j = d.n - 1; j >= 0; --j) {
        mask |= 1u << sigma[static_cast<std::size_t>(j)];
        acc = std::max(acc, g.value_at(static_cast<std::size_t>(co[sigma[static_cast<std::size_t>(j)]]) *
                                       d.maskstride[mask]));
      }
      if (acc != f.value_at(idx)) return false;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return true;
}

/// All the sections c -> f(e_I ^ c) nondecreasing.
bool cut_sections_nondecreasing_meet(const Dom& d, const DiscreteFunction& f) {
  const std::uint32_t masks = 1u << d.n;
  for (std::uint32_t mask = 0; mask < masks; ++mask)
    for (int c = 0; c + 1 < d.m; ++c)
      if (f.value_at(static_cast<std::size_t>(c) * d.maskstride[mask]) >
          f.value_at(static_cast<std::size_t>(c + 1) * d.maskstride[mask]))
        return false;
  return true;
}

/// All the sections c -> f(e_{[n] minus I} v c) nondecreasing.
bool cut_sections_nondecreasing_join(const Dom& d, const DiscreteFunction& f) {
  const std::uint32_t masks = 1u << d.n;
  const std::size_t all = d.maskstride[d.full()];
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    const std::size_t rest = static_cast<std::size_t>(d.m - 1) * (all - d.maskstride[mask]);
    for (int c = 0; c + 1 < d.m; ++c)
      if (f.value_at(static_cast<std::size_t>(c) * d.maskstride[mask] + rest) >
          f.value_at(static_cast<std::size_t>(c + 1) * d.maskstride[mask] + rest))
        return false;
  }
  return true;
}

/// p(phi(x)) == f(x) everywhere, with early exit.
bool compose_equals(const Dom& d, const DiscreteFunction& p, const UnaryMap& phi,
                    const DiscreteFunction& f) {
  for (std::size_t idx = 0; idx < d.size; ++idx) {
    const int* co = d.coords(idx);
    std::size_t pidx = 0;
    for (int i = 0; i < d.n; ++i)
      pidx = pidx * static_cast<std::size_t>(d.m) + static_cast<std::size_t>(phi(co[i]));
    if (p.value_at(pidx) != f.value_at(idx)) return false;
  }
  return true;
}

bool slot_join_decomposes(const Dom& d, const DiscreteFunction& f) {
  // parts f_i(c) = f(bottom with c at slot i) must be nondecreasing and join to f
  for (int i = 0; i < d.n; ++i)
    for (int c = 0; c + 1 < d.m; ++c)
      if (f.value_at(static_cast<std::size_t>(c) * d.stride[static_cast<std::size_t>(i)]) >
          f.value_at(static_cast<std::size_t>(c + 1) * d.stride[static_cast<std::size_t>(i)]))
        return false;
  for (std::size_t idx = 0; idx < d.size; ++idx) {
    const int* co = d.coords(idx);
    int acc = d.chain.bottom();
    for (int i = 0; i < d.n; ++i)
      acc = std::max(acc, f.value_at(static_cast<std::size_t>(co[i]) * d.stride[static_cast<std::size_t>(i)]));
    if (acc != f.value_at(idx)) return false;
  }
  return true;
}

bool slot_meet_decomposes(const Dom& d, const DiscreteFunction& f) {
  const std::size_t all = d.maskstride[d.full()];
  auto part_at = [&](int i, int c) {
    return f.value_at(static_cast<std::size_t>(c) * d.stride[static_cast<std::size_t>(i)] +
                      static_cast<std::size_t>(d.m - 1) * (all - d.stride[static_cast<std::size_t>(i)]));
  };
  for (int i = 0; i < d.n; ++i)
    for (int c = 0; c + 1 < d.m; ++c)
      if (part_at(i, c) > part_at(i, c + 1)) return false;
  for (std::size_t idx = 0; idx < d.size; ++idx) {
    const int* co = d.coords(idx);
    int acc = d.chain.top();
    for (int i = 0; i < d.n; ++i) acc = std::min(acc, part_at(i, co[i]));
    if (acc != f.value_at(idx)) return false;
  }
  return true;
}

/// Per-theorem decision logic, with the enumerated families cached so one
/// instance can sweep a whole universe.
class TheoremChecker {
 public:
  TheoremChecker(TheoremId t, const AxiomChecker& ax)
      : t_(t), ax_(ax), dom_(ax.chain(), ax.arity()) {}

  std::optional<std::string> violation(const DiscreteFunction& f);

 private:
  const std::vector<DiscreteFunction>& sugenos() {
    if (!sugenos_) {
      sugenos_.emplace();
      for (const SetFunction& alpha : all_isotone_set_functions(dom_.chain, dom_.n))
        if (alpha.value(0) == dom_.chain.bottom() && alpha.value(dom_.full()) == dom_.chain.top())
          sugenos_->push_back(dnf_table(alpha));
    }
    return *sugenos_;
  }

  const std::vector<DiscreteFunction>& terms() {
    if (!terms_) {
      terms_.emplace();
      const std::uint32_t masks = 1u << dom_.n;
      std::vector<int> vals(masks, dom_.chain.bottom());
      vals[masks - 1] = dom_.chain.top();
      // free choices on the proper nonempty subsets, kept isotone
      const std::uint32_t free_count = masks - 2;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free_count); ++bits) {
        for (std::uint32_t mask = 1; mask + 1 < masks; ++mask)
          vals[mask] = (bits >> (mask - 1) & 1u) ? dom_.chain.top() : dom_.chain.bottom();
        SetFunction alpha(dom_.chain, dom_.n, vals);
        if (alpha.is_isotone()) terms_->push_back(dnf_table(alpha));
      }
    }
    return *terms_;
  }

  const std::vector<UnaryMap>& phis() {
    if (!phis_) phis_ = all_nondecreasing_unary_maps(dom_.chain);
    return *phis_;
  }

  bool exists_factor(const std::vector<DiscreteFunction>& outers, const DiscreteFunction& f) {
    for (const DiscreteFunction& p : outers)
      for (const UnaryMap& phi : phis())
        if (compose_equals(dom_, p, phi, f)) return true;
    return false;
  }

  bool exists_weighted(const DiscreteFunction& f, bool max_side) {
    const int n = dom_.n;
    std::vector<int> w(static_cast<std::size_t>(n) + 1, 0);
    while (true) {
      for (const UnaryMap& phi : phis()) {
        bool match = true;
        for (std::size_t idx = 0; idx < dom_.size && match; ++idx) {
          const int* co = dom_.coords(idx);
          int acc = w[0];
          for (int i = 0; i < n; ++i) {
            const int v = phi(co[i]);
            acc = max_side ? std::max(acc, std::min(w[static_cast<std::size_t>(i) + 1], v))
                           : std::min(acc, std::max(w[static_cast<std::size_t>(i) + 1], v));
          }
          match = acc == f.value_at(idx);
        }
        if (match) return true;
      }
      int k = n;
      while (k >= 0 && ++w[static_cast<std::size_t>(k)] == dom_.m) {
        w[static_cast<std::size_t>(k)] = 0;
        --k;
      }
      if (k < 0) return false;
    }
  }

  TheoremId t_;
  AxiomChecker ax_;
  Dom dom_;
  std::optional<std::vector<DiscreteFunction>> sugenos_;
  std::optional<std::vector<DiscreteFunction>> terms_;
  std::optional<std::vector<UnaryMap>> phis_;
};

std::optional<std::string> TheoremChecker::violation(const DiscreteFunction& f) {
  using A = AxiomId;
  switch (t_) {
    case TheoremId::T_HORMAX: {
      const bool lhs = ax_.holds(f, A::HOR_MAX) && ax_.holds(f, A::P1);
      const bool rhs = ax_.holds(f, A::P2) && form4_holds(dom_, f, f);
      if (lhs == rhs) return {};
      return std::string("HOR_MAX&P1=") + yn(lhs) + ",P2&form4[g=f]=" + yn(rhs);
    }
    case TheoremId::L_DNFSIMPLEX: {
      if (!ax_.holds(f, A::P1)) return {};
      const bool a = form4_holds(dom_, f, f);
      const bool b = simplex_chain_holds(dom_, f, f);
      if (a == b) return {};
      return std::string("form4[g=f]=") + yn(a) + ",chain_form[g=f]=" + yn(b);
    }
    case TheoremId::T_HORMIN: {
      const bool lhs = ax_.holds(f, A::HOR_MIN) && ax_.holds(f, A::D1);
      const bool rhs = ax_.holds(f, A::D2) && dual_form4_holds(dom_, f, f);
      if (lhs == rhs) return {};
      return std::string("HOR_MIN&D1=") + yn(lhs) + ",D2&dual_form4[g=f]=" + yn(rhs);
    }
    case TheoremId::C_HORMAXMIN: {
      const bool lhs_max = ax_.holds(f, A::HOR_MAX) && ax_.holds(f, A::P1);
      const bool rhs_max = cut_sections_nondecreasing_meet(dom_, f) && form4_holds(dom_, f, f);
      if (lhs_max != rhs_max)
        return std::string("HOR_MAX&P1=") + yn(lhs_max) + ",phi_I_form=" + yn(rhs_max);
      const bool lhs_min = ax_.holds(f, A::HOR_MIN) && ax_.holds(f, A::D1);
      const bool rhs_min = cut_sections_nondecreasing_join(dom_, f) && dual_form4_holds(dom_, f, f);
      if (lhs_min != rhs_min)
        return std::string("HOR_MIN&D1=") + yn(lhs_min) + ",dual_phi_I_form=" + yn(rhs_min);
      return {};
    }
    case TheoremId::L_COMHOR: {
      const bool cmax = ax_.holds(f, A::COM_MAX);
      const bool hmax = ax_.holds(f, A::HOR_MAX) && ax_.holds(f, A::P1);
      if (cmax != hmax) return std::string("COM_MAX=") + yn(cmax) + ",HOR_MAX&P1=" + yn(hmax);
      const bool cmin = ax_.holds(f, A::COM_MIN);
      const bool hmin = ax_.holds(f, A::HOR_MIN) && ax_.holds(f, A::D1);
      if (cmin != hmin) return std::string("COM_MIN=") + yn(cmin) + ",HOR_MIN&D1=" + yn(hmin);
      return {};
    }
    case TheoremId::T_COMMAX: {
      const bool lhs = ax_.holds(f, A::COM_MAX);
      const bool rhs = ax_.holds(f, A::P2) && form4_holds(dom_, f, f);
      if (lhs == rhs) return {};
      return std::string("COM_MAX=") + yn(lhs) + ",P2&form4[g=f]=" + yn(rhs);
    }
    case TheoremId::T_COMMIN: {
      const bool lhs = ax_.holds(f, A::COM_MIN);
      const bool rhs = ax_.holds(f, A::D2) && dual_form4_holds(dom_, f, f);
      if (lhs == rhs) return {};
      return std::string("COM_MIN=") + yn(lhs) + ",D2&dual_form4[g=f]=" + yn(rhs);
    }
    case TheoremId::T_QUASIPOL: {
      const bool hmax = ax_.holds(f, A::HOR_MAX), hmin = ax_.holds(f, A::HOR_MIN);
      const bool cmax = ax_.holds(f, A::COM_MAX), cmin = ax_.holds(f, A::COM_MIN);
      const bool i = hmax && hmin && (ax_.holds(f, A::P1) || ax_.holds(f, A::D1));
      const bool ii = cmax && cmin;
      const bool iii = hmax && cmin;
      const bool iv = cmax && hmin;
      const bool v = is_quasi_polynomial(f).quasi_polynomial;
      if (i == ii && ii == iii && iii == iv && iv == v) return {};
      return std::string("(i)=") + yn(i) + ",(ii)=" + yn(ii) + ",(iii)=" + yn(iii) +
             ",(iv)=" + yn(iv) + ",(v)=" + yn(v);
    }
    case TheoremId::L_HOM: {
      if (!is_polynomial(f).polynomial) return {};
      for (std::size_t idx = 0; idx < dom_.size; ++idx) {
        const int* co = dom_.coords(idx);
        for (int c = 0; c < dom_.m; ++c) {
          const int shift = clamp_to_range(f, c);
          std::size_t jx = 0, mx = 0;
          for (int i = 0; i < dom_.n; ++i) {
            jx = jx * static_cast<std::size_t>(dom_.m) + static_cast<std::size_t>(std::max(co[i], c));
            mx = mx * static_cast<std::size_t>(dom_.m) + static_cast<std::size_t>(std::min(co[i], c));
          }
          if (f.value_at(jx) != std::max(f.value_at(idx), shift))
            return "join_shift,x=" + point_at(dom_.chain, dom_.n, idx).to_string() +
                   ",c=" + std::to_string(c);
          if (f.value_at(mx) != std::min(f.value_at(idx), shift))
            return "meet_shift,x=" + point_at(dom_.chain, dom_.n, idx).to_string() +
                   ",c=" + std::to_string(c);
        }
      }
      return {};
    }
    case TheoremId::P_FACT: {
      if (!is_quasi_polynomial(f).quasi_polynomial) return {};
      FactorizationSets sets = factorization_sets(f);
      if (!sets.equal)
        return "factorization_sets_differ,search=" + std::to_string(sets.by_search.size()) +
               ",characterization=" + std::to_string(sets.by_characterization.size());
      if (!sets.contains_canonical) return std::string("canonical_pair_missing");
      return {};
    }
    case TheoremId::C_QSUGENO: {
      const bool qp = is_quasi_polynomial(f).quasi_polynomial;
      const bool factorable = exists_factor(sugenos(), f);
      if (qp != factorable)
        return std::string("quasi_polynomial=") + yn(qp) + ",sugeno_factorable=" + yn(factorable);
      if (qp) {
        try {
          as_quasi_sugeno(f);
        } catch (const ConstructionFailed&) {
          return std::string("as_quasi_sugeno_construction_failed");
        }
      }
      return {};
    }
    case TheoremId::L_QHOM_HOR: {
      const bool nd = ax_.holds(f, A::NONDECREASING);
      if (nd && ax_.holds(f, A::QUASI_MIN_HOM)) {
        const bool qmax = ax_.holds(f, A::QUASI_MAX_HOM);
        const bool hmax = ax_.holds(f, A::HOR_MAX);
        if (qmax != hmax)
          return std::string("under_ND&QUASI_MIN_HOM:QUASI_MAX_HOM=") + yn(qmax) +
                 ",HOR_MAX=" + yn(hmax);
      }
      if (nd && ax_.holds(f, A::QUASI_MAX_HOM)) {
        const bool qmin = ax_.holds(f, A::QUASI_MIN_HOM);
        const bool hmin = ax_.holds(f, A::HOR_MIN);
        if (qmin != hmin)
          return std::string("under_ND&QUASI_MAX_HOM:QUASI_MIN_HOM=") + yn(qmin) +
                 ",HOR_MIN=" + yn(hmin);
      }
      return {};
    }
    case TheoremId::T_QHOM: {
      const bool qp = is_quasi_polynomial(f).quasi_polynomial;
      const bool rhs = ax_.holds(f, A::NONDECREASING) && ax_.holds(f, A::QUASI_MAX_HOM) &&
                       ax_.holds(f, A::QUASI_MIN_HOM);
      if (qp == rhs) return {};
      return std::string("quasi_polynomial=") + yn(qp) + ",ND&QUASI_MAX_HOM&QUASI_MIN_HOM=" + yn(rhs);
    }
    case TheoremId::T_QMED: {
      const bool qp = is_quasi_polynomial(f).quasi_polynomial;
      const bool rhs = diagonal(f).is_nondecreasing() && ax_.holds(f, A::QUASI_MEDIAN_DECOMP);
      if (qp == rhs) return {};
      return std::string("quasi_polynomial=") + yn(qp) + ",delta_ND&QUASI_MEDIAN_DECOMP=" + yn(rhs);
    }
    case TheoremId::T_QTERM: {
      if (!is_quasi_polynomial(f).quasi_polynomial) return {};
      const bool qcons = ax_.holds(f, A::QUASI_CONSERVATIVE);
      const bool factorable = exists_factor(terms(), f);
      if (qcons != factorable)
        return std::string("QUASI_CONSERVATIVE=") + yn(qcons) + ",term_factorable=" + yn(factorable);
      bool constructed;
      try {
        constructed = std::holds_alternative<Factorization>(as_quasi_term(f));
      } catch (const ConstructionFailed&) {
        return std::string("as_quasi_term_construction_failed");
      }
      if (constructed != qcons)
        return std::string("as_quasi_term=") + yn(constructed) + ",QUASI_CONSERVATIVE=" + yn(qcons);
      return {};
    }
    case TheoremId::P_MAXDEC: {
      const bool maxit = ax_.holds(f, A::MAXITIVE);
      const bool join_dec = slot_join_decomposes(dom_, f);
      if (maxit != join_dec)
        return std::string("MAXITIVE=") + yn(maxit) + ",slot_join_form=" + yn(join_dec);
      const bool minit = ax_.holds(f, A::MINITIVE);
      const bool meet_dec = slot_meet_decomposes(dom_, f);
      if (minit != meet_dec)
        return std::string("MINITIVE=") + yn(minit) + ",slot_meet_form=" + yn(meet_dec);
      return {};
    }
    case TheoremId::T_QWMAX: {
      if (!is_quasi_polynomial(f).quasi_polynomial) return {};
      const bool maxit = ax_.holds(f, A::MAXITIVE);
      const bool factorable = exists_weighted(f, true);
      if (maxit != factorable)
        return std::string("MAXITIVE=") + yn(maxit) + ",weighted_max_factorable=" + yn(factorable);
      bool constructed;
      try {
        constructed = std::holds_alternative<Factorization>(as_quasi_weighted_max(f));
      } catch (const ConstructionFailed&) {
        return std::string("as_quasi_weighted_max_construction_failed");
      }
      if (constructed != maxit)
        return std::string("as_quasi_weighted_max=") + yn(constructed) + ",MAXITIVE=" + yn(maxit);
      return {};
    }
    case TheoremId::T_QWMIN: {
      if (!is_quasi_polynomial(f).quasi_polynomial) return {};
      const bool minit = ax_.holds(f, A::MINITIVE);
      const bool factorable = exists_weighted(f, false);
      if (minit != factorable)
        return std::string("MINITIVE=") + yn(minit) + ",weighted_min_factorable=" + yn(factorable);
      bool constructed;
      try {
        constructed = std::holds_alternative<Factorization>(as_quasi_weighted_min(f));
      } catch (const ConstructionFailed&) {
        return std::string("as_quasi_weighted_min_construction_failed");
      }
      if (constructed != minit)
        return std::string("as_quasi_weighted_min=") + yn(constructed) + ",MINITIVE=" + yn(minit);
      return {};
    }
    case TheoremId::R_BOOLHOR: {
      auto [lo, hi] = range_hull(f);
      const bool bottom_minimal = f.value_at(0) == lo;
      const bool top_maximal = f.value_at(f.size() - 1) == hi;
      const bool hmax = ax_.holds(f, A::HOR_MAX);
      const bool hmin = ax_.holds(f, A::HOR_MIN);
      if (dom_.m == 2) {
        if (hmax != bottom_minimal)
          return std::string("HOR_MAX=") + yn(hmax) + ",f(bottom)_minimal=" + yn(bottom_minimal);
        if (hmin != top_maximal)
          return std::string("HOR_MIN=") + yn(hmin) + ",f(top)_maximal=" + yn(top_maximal);
        return {};
      }
      // Beyond the Boolean chain only the forward implications hold.
      if (hmax && !bottom_minimal) return std::string("HOR_MAX=yes,f(bottom)_minimal=no");
      if (hmin && !top_maximal) return std::string("HOR_MIN=yes,f(top)_maximal=no");
      return {};
    }
    case TheoremId::R_POLYCHAR: {
      const bool poly = is_polynomial(f).polynomial;
      const bool hor = ax_.holds(f, A::RANGE_IDEMPOTENT) && ax_.holds(f, A::NONDECREASING) &&
                       ax_.holds(f, A::HOR_MAX) && ax_.holds(f, A::HOR_MIN);
      const bool com = ax_.holds(f, A::RANGE_IDEMPOTENT) && ax_.holds(f, A::COM_MAX) &&
                       ax_.holds(f, A::COM_MIN);
      if (poly == hor && hor == com) return {};
      return std::string("polynomial=") + yn(poly) + ",range_idem&ND&HOR=" + yn(hor) +
             ",range_idem&COM=" + yn(com);
    }
  }
  throw std::logic_error("unknown theorem");
}

using ViolationFn = std::function<std::optional<std::string>(const DiscreteFunction&)>;

struct WorkerOut {
  std::size_t checked = 0;
  std::optional<Counterexample> best;
};

void scan_range(const Universe& u, std::size_t lo, std::size_t hi, const ViolationFn& fn,
                WorkerOut& out) {
  const Chain chain(u.m);
  if (u.mode == UniverseMode::sample) {
    for (std::size_t ord = lo; ord < hi; ++ord) {
      DiscreteFunction f = random_function(u.m, u.n, u.seed + ord);
      if (auto v = fn(f); v && !out.best) out.best = Counterexample{f, ord, *v};
      ++out.checked;
    }
    return;
  }
  const std::size_t size = table_size_for(chain, u.n);
  std::vector<int> digits(size, 0);
  std::size_t rest = lo;
  for (std::size_t i = size; i-- > 0;) {
    digits[i] = static_cast<int>(rest % static_cast<std::size_t>(u.m));
    rest /= static_cast<std::size_t>(u.m);
  }
  for (std::size_t ord = lo; ord < hi; ++ord) {
    DiscreteFunction f(chain, u.n, digits);
    if (auto v = fn(f); v && !out.best) out.best = Counterexample{std::move(f), ord, *v};
    ++out.checked;
    for (std::size_t i = size; i-- > 0;) {
      if (++digits[i] < u.m) break;
      digits[i] = 0;
    }
  }
}

void scan_nondecreasing(const Universe& u, const ViolationFn& fn, WorkerOut& out) {
  const Chain chain(u.m);
  const std::size_t size = table_size_for(chain, u.n);
  const std::vector<std::size_t> stride = strides_for(u.m, u.n);
  const std::size_t cardinality = universe_cardinality(u.m, u.n);
  std::vector<int> digits(size, 0);
  for (std::size_t raw = 0; raw < cardinality; ++raw) {
    if (table_nondecreasing(digits, u.m, u.n, stride)) {
      DiscreteFunction f(chain, u.n, digits);
      if (auto v = fn(f); v && !out.best) out.best = Counterexample{std::move(f), out.checked, *v};
      ++out.checked;
    }
    for (std::size_t i = size; i-- > 0;) {
      if (++digits[i] < u.m) break;
      digits[i] = 0;
    }
  }
}

VerificationReport run_harness(std::optional<TheoremId> t, const Universe& u, int jobs,
                               const std::function<ViolationFn()>& make_fn) {
  check_budget(u);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem = t;
  report.universe = u;

  std::vector<WorkerOut> outs;
  if (u.mode == UniverseMode::exhaustive_nondecreasing) {
    outs.resize(1);
    scan_nondecreasing(u, make_fn(), outs[0]);
  } else {
    const std::size_t total = u.mode == UniverseMode::sample ? u.sample_count
                                                             : universe_cardinality(u.m, u.n);
    const std::size_t workers =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                                std::min<std::size_t>(64, std::max<std::size_t>(total, 1)));
    outs.resize(workers);
    if (workers == 1) {
      scan_range(u, 0, total, make_fn(), outs[0]);
    } else {
      std::vector<std::thread> threads;
      const std::size_t chunk = total / workers, extra = total % workers;
      std::size_t lo = 0;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t hi = lo + chunk + (w < extra ? 1 : 0);
        ViolationFn fn = make_fn();
        threads.emplace_back([u, lo, hi, fn = std::move(fn), &slot = outs[w]] {
          scan_range(u, lo, hi, fn, slot);
        });
        lo = hi;
      }
      for (std::thread& th : threads) th.join();
    }
  }

  for (WorkerOut& out : outs) {
    report.functions_checked += out.checked;
    if (out.best && (!report.counterexample || out.best->ordinal < report.counterexample->ordinal))
      report.counterexample = std::move(out.best);
  }
  report.holds = !report.counterexample.has_value();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

std::optional<std::string> theorem_violation(TheoremId t, const DiscreteFunction& f,
                                             const AxiomChecker& ax) {
  TheoremChecker checker(t, ax);
  return checker.violation(f);
}

VerificationReport verify(TheoremId t, const Universe& u, int jobs) {
  const AxiomChecker ax(Chain(u.m), u.n);
  auto make_fn = [t, ax]() -> ViolationFn {
    auto checker = std::make_shared<TheoremChecker>(t, ax);
    return [checker](const DiscreteFunction& f) { return checker->violation(f); };
  };
  return run_harness(t, u, jobs, make_fn);
}

VerificationReport verify_predicate(
    const Universe& u,
    const std::function<std::optional<std::string>(const DiscreteFunction&)>& violation,
    int jobs) {
  return run_harness(std::nullopt, u, jobs, [&violation]() -> ViolationFn { return violation; });
}

std::size_t for_each_function(const Universe& u,
                              const std::function<bool(std::size_t, const DiscreteFunction&)>& visit) {
  check_budget(u);
  std::size_t seen = 0;
  bool keep_going = true;
  auto emit = [&](const DiscreteFunction& f) {
    keep_going = visit(seen, f);
    ++seen;
  };
  const Chain chain(u.m);
  if (u.mode == UniverseMode::sample) {
    for (std::size_t i = 0; i < u.sample_count && keep_going; ++i)
      emit(random_function(u.m, u.n, u.seed + i));
    return seen;
  }
  const std::size_t size = table_size_for(chain, u.n);
  const std::size_t cardinality = universe_cardinality(u.m, u.n);
  const std::vector<std::size_t> stride = strides_for(u.m, u.n);
  std::vector<int> digits(size, 0);
  for (std::size_t raw = 0; raw < cardinality && keep_going; ++raw) {
    if (u.mode == UniverseMode::exhaustive || table_nondecreasing(digits, u.m, u.n, stride))
      emit(DiscreteFunction(chain, u.n, digits));
    for (std::size_t i = size; i-- > 0;) {
      if (++digits[i] < u.m) break;
      digits[i] = 0;
    }
  }
  return seen;
}

ClassCounts count_classes(int m, int n, std::size_t budget, int jobs) {
  Universe u{m, n, UniverseMode::exhaustive, 0, 0, budget};
  check_budget(u);
  ClassCounts counts;
  counts.m = m;
  counts.n = n;

  const AxiomChecker ax(Chain(m), n);
  const std::size_t total = universe_cardinality(m, n);
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                              std::min<std::size_t>(64, std::max<std::size_t>(total, 1)));

  std::vector<ClassCounts> parts(workers);
  auto count_range = [m, n, &ax](std::size_t lo, std::size_t hi, ClassCounts& part) {
    const Chain chain(m);
    const std::size_t size = table_size_for(chain, n);
    std::vector<int> digits(size, 0);
    std::size_t rest = lo;
    for (std::size_t i = size; i-- > 0;) {
      digits[i] = static_cast<int>(rest % static_cast<std::size_t>(m));
      rest /= static_cast<std::size_t>(m);
    }
    for (std::size_t ord = lo; ord < hi; ++ord) {
      DiscreteFunction f(chain, n, digits);
      for (std::size_t k = 0; k < kAllAxioms.size(); ++k)
        if (ax.holds(f, kAllAxioms[k])) ++part.axiom[k];
      ClassReport rep = classify(f);
      part.polynomial += rep.polynomial;
      part.quasi_polynomial += rep.quasi_polynomial;
      part.quasi_term += rep.quasi_term;
      part.quasi_weighted_max += rep.quasi_weighted_max;
      part.quasi_weighted_min += rep.quasi_weighted_min;
      ++part.total;
      for (std::size_t i = size; i-- > 0;) {
        if (++digits[i] < m) break;
        digits[i] = 0;
      }
    }
  };

  if (workers == 1) {
    count_range(0, total, parts[0]);
  } else {
    std::vector<std::thread> threads;
    const std::size_t chunk = total / workers, extra = total % workers;
    std::size_t lo = 0;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t hi = lo + chunk + (w < extra ? 1 : 0);
      threads.emplace_back([lo, hi, &count_range, &slot = parts[w]] { count_range(lo, hi, slot); });
      lo = hi;
    }
    for (std::thread& th : threads) th.join();
  }

  for (const ClassCounts& part : parts) {
    counts.total += part.total;
    for (std::size_t k = 0; k < counts.axiom.size(); ++k) counts.axiom[k] += part.axiom[k];
    counts.polynomial += part.polynomial;
    counts.quasi_polynomial += part.quasi_polynomial;
    counts.quasi_term += part.quasi_term;
    counts.quasi_weighted_max += part.quasi_weighted_max;
    counts.quasi_weighted_min += part.quasi_weighted_min;
  }
  return counts;
}

}  // namespace qp

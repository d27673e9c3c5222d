#include "qp/poly.hpp"

#include <stdexcept>

namespace qp {

SetFunction::SetFunction(Chain chain, int arity, std::vector<int> values)
    : chain_(chain), arity_(arity) {
  if (arity < 1 || arity > 31)
    throw std::invalid_argument("SetFunction: arity out of range");
  if (values.size() != (std::size_t{1} << arity))
    throw std::invalid_argument("SetFunction: need one value per coordinate subset");
  for (int v : values)
    if (!chain_.contains(v))
      throw std::invalid_argument("SetFunction: value outside the chain");
  values_ = std::move(values);
}

bool SetFunction::is_isotone() const {
  for (std::uint32_t mask = 0; mask < subset_count(); ++mask)
    for (int i = 0; i < arity_; ++i)
      if (!(mask >> i & 1u) && values_[mask] > values_[mask | (1u << i)]) return false;
  return true;
}

bool SetFunction::is_antitone() const {
  for (std::uint32_t mask = 0; mask < subset_count(); ++mask)
    for (int i = 0; i < arity_; ++i)
      if (!(mask >> i & 1u) && values_[mask] < values_[mask | (1u << i)]) return false;
  return true;
}

Capacity::Capacity(SetFunction coefficients) : coefficients_(std::move(coefficients)) {
  const auto& c = coefficients_;
  if (c.value(0) != c.chain().bottom())
    throw std::invalid_argument("Capacity: empty set must map to bottom");
  if (c.value(c.subset_count() - 1) != c.chain().top())
    throw std::invalid_argument("Capacity: full set must map to top");
  if (!c.is_isotone())
    throw std::invalid_argument("Capacity: coefficients must be isotone");
}

int dnf_eval(const SetFunction& alpha, const Tuple& x) {
  if (x.chain() != alpha.chain() || x.arity() != alpha.arity())
    throw std::invalid_argument("dnf_eval: tuple domain mismatch");
  const Chain& chain = alpha.chain();
  int acc = chain.bottom();
  for (std::uint32_t mask = 0; mask < alpha.subset_count(); ++mask) {
    int term = alpha.value(mask);
    for (int i = 0; i < alpha.arity(); ++i)
      if (mask >> i & 1u) term = chain.meet(term, x[i]);
    acc = chain.join(acc, term);
  }
  return acc;
}

int cnf_eval(const SetFunction& beta, const Tuple& x) {
  if (x.chain() != beta.chain() || x.arity() != beta.arity())
    throw std::invalid_argument("cnf_eval: tuple domain mismatch");
  const Chain& chain = beta.chain();
  int acc = chain.top();
  for (std::uint32_t mask = 0; mask < beta.subset_count(); ++mask) {
    int term = beta.value(mask);
    for (int i = 0; i < beta.arity(); ++i)
      if (mask >> i & 1u) term = chain.join(term, x[i]);
    acc = chain.meet(acc, term);
  }
  return acc;
}

SetFunction canonical_alpha(const DiscreteFunction& f) {
  VertexFunction g = vertex_restriction(f);
  return SetFunction(f.chain(), f.arity(), g.values());
}

SetFunction canonical_beta(const DiscreteFunction& f) {
  VertexFunction g = vertex_restriction(f);
  const std::uint32_t full = (1u << f.arity()) - 1u;
  std::vector<int> values(g.values().size());
  for (std::uint32_t mask = 0; mask <= full; ++mask)
    values[mask] = g.value(full & ~mask);
  return SetFunction(f.chain(), f.arity(), std::move(values));
}

DiscreteFunction dnf_table(const SetFunction& alpha) {
  return DiscreteFunction::tabulate(alpha.chain(), alpha.arity(), [&](std::span<const int> x) {
    const Chain& chain = alpha.chain();
    int acc = chain.bottom();
    for (std::uint32_t mask = 0; mask < alpha.subset_count(); ++mask) {
      int term = alpha.value(mask);
      for (int i = 0; i < alpha.arity(); ++i)
        if (mask >> i & 1u) term = chain.meet(term, x[static_cast<std::size_t>(i)]);
      acc = chain.join(acc, term);
    }
    return acc;
  });
}

DiscreteFunction cnf_table(const SetFunction& beta) {
  return DiscreteFunction::tabulate(beta.chain(), beta.arity(), [&](std::span<const int> x) {
    const Chain& chain = beta.chain();
    int acc = chain.top();
    for (std::uint32_t mask = 0; mask < beta.subset_count(); ++mask) {
      int term = beta.value(mask);
      for (int i = 0; i < beta.arity(); ++i)
        if (mask >> i & 1u) term = chain.join(term, x[static_cast<std::size_t>(i)]);
      acc = chain.meet(acc, term);
    }
    return acc;
  });
}

VertexExtension extend_from_vertices(const VertexFunction& g) {
  if (auto bad = g.isotonicity_violation())
    return {std::nullopt, bad};
  SetFunction alpha(g.chain(), g.arity(), g.values());
  return {dnf_table(alpha), std::nullopt};
}

int simplex_eval(const SetFunction& alpha, const Tuple& x) {
  if (x.chain() != alpha.chain() || x.arity() != alpha.arity())
    throw std::invalid_argument("simplex_eval: tuple domain mismatch");
  if (!alpha.is_isotone())
    throw std::invalid_argument("simplex_eval: coefficients must be isotone");
  const Chain& chain = alpha.chain();
  const int n = alpha.arity();
  Permutation order = sorting_permutation(x);
  std::uint32_t mask = (1u << n) - 1u;  // starts with all coordinates
  int acc = chain.bottom();
  for (int i = 0; i < n; ++i) {
    acc = chain.join(acc, chain.meet(alpha.value(mask), x[order.image(i)]));
    mask &= ~(1u << order.image(i));
  }
  return chain.join(acc, alpha.value(0));  // empty set, x taken as top
}

int simplex_eval_cnf(const SetFunction& beta, const Tuple& x) {
  if (x.chain() != beta.chain() || x.arity() != beta.arity())
    throw std::invalid_argument("simplex_eval_cnf: tuple domain mismatch");
  if (!beta.is_antitone())
    throw std::invalid_argument("simplex_eval_cnf: coefficients must be antitone");
  const Chain& chain = beta.chain();
  const int n = beta.arity();
  Permutation order = sorting_permutation(x);
  int acc = beta.value(0);  // i = 0 term, x taken as bottom
  std::uint32_t mask = 0;
  for (int i = 0; i < n; ++i) {
    mask |= 1u << order.image(i);
    acc = chain.meet(acc, chain.join(beta.value(mask), x[order.image(i)]));
  }
  return acc;
}

namespace {

int median_rec(const DiscreteFunction& f, std::vector<int>& coords, int k) {
  if (k == f.arity()) return f.eval(Tuple(f.chain(), coords));
  const int saved = coords[static_cast<std::size_t>(k)];
  coords[static_cast<std::size_t>(k)] = f.chain().bottom();
  const int lo = median_rec(f, coords, k + 1);
  coords[static_cast<std::size_t>(k)] = f.chain().top();
  const int hi = median_rec(f, coords, k + 1);
  coords[static_cast<std::size_t>(k)] = saved;
  return med3(lo, saved, hi);
}

}  // namespace

int median_eval(const DiscreteFunction& f, const Tuple& x) {
  if (x.chain() != f.chain() || x.arity() != f.arity())
    throw std::invalid_argument("median_eval: tuple domain mismatch");
  std::vector<int> coords(x.components().begin(), x.components().end());
  return median_rec(f, coords, 0);
}

PolynomialCheck is_polynomial(const DiscreteFunction& f) {
  SetFunction alpha = canonical_alpha(f);
  DiscreteFunction p = dnf_table(alpha);
  for (std::size_t idx = 0; idx < f.size(); ++idx)
    if (f.value_at(idx) != p.value_at(idx))
      return {false, alpha, point_at(f.chain(), f.arity(), idx)};
  return {true, alpha, std::nullopt};
}

HomogeneityShift homogeneity_shift(const DiscreteFunction& p, const Tuple& x, int c) {
  if (!is_polynomial(p).polynomial)
    throw std::invalid_argument("homogeneity_shift: function is not a polynomial");
  const int clamped = clamp_to_range(p, c);
  return {p.eval(cut_join(x, c)), p.chain().join(p.eval(x), clamped),
          p.eval(cut_meet(x, c)), p.chain().meet(p.eval(x), clamped)};
}

DiscreteFunction sugeno_from_capacity(const Capacity& mu) {
  return dnf_table(mu.coefficients());
}

Capacity sugeno_normalize(const DiscreteFunction& p) {
  PolynomialCheck check = is_polynomial(p);
  if (!check.polynomial)
    throw std::invalid_argument("sugeno_normalize: function is not a polynomial");
  std::vector<int> values = check.alpha.values();
  values.front() = p.chain().bottom();
  values.back() = p.chain().top();
  return Capacity(SetFunction(p.chain(), p.arity(), std::move(values)));
}

std::vector<SetFunction> all_isotone_set_functions(const Chain& chain, int arity) {
  if (arity < 1 || arity > 20)
    throw std::invalid_argument("all_isotone_set_functions: arity out of range");
  const std::uint32_t masks = 1u << arity;
  std::vector<SetFunction> out;
  std::vector<int> values(masks, 0);
  auto rec = [&](auto&& self, std::uint32_t mask) -> void {
    if (mask == masks) {
      out.emplace_back(chain, arity, values);
      return;
    }
    int lo = chain.bottom();
    for (int i = 0; i < arity; ++i)
      if (mask >> i & 1u) lo = std::max(lo, values[mask & ~(1u << i)]);
    for (int v = lo; v <= chain.top(); ++v) {
      values[mask] = v;
      self(self, mask + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<DiscreteFunction> all_polynomials(const Chain& chain, int arity) {
  std::vector<DiscreteFunction> out;
  for (const SetFunction& alpha : all_isotone_set_functions(chain, arity))
    out.push_back(dnf_table(alpha));
  return out;
}

}  // namespace qp

#include "qp/classify.hpp"

#include <algorithm>

namespace qp {

DiscreteFunction canonical_polynomial(const DiscreteFunction& f) {
  VertexExtension ext = extend_from_vertices(vertex_restriction(f));
  if (!ext.function) throw NotIsotoneOnVertices();
  return std::move(*ext.function);
}

QuasiPolynomialCheck is_quasi_polynomial(const DiscreteFunction& f) {
  UnaryMap delta = diagonal(f);
  if (auto viol = delta.monotonicity_violation()) {
    QpFailure fail{QpFailStage::delta_not_nondecreasing,
                   *viol,
                   std::nullopt,
                   std::nullopt,
                   {delta(viol->first), delta(viol->second)}};
    return {false, std::move(delta), std::nullopt, std::move(fail)};
  }
  VertexFunction g = vertex_restriction(f);
  if (auto viol = g.isotonicity_violation()) {
    QpFailure fail{QpFailStage::vertices_not_isotone,
                   std::nullopt,
                   *viol,
                   std::nullopt,
                   {g.value(viol->first), g.value(viol->second)}};
    return {false, std::move(delta), std::nullopt, std::move(fail)};
  }
  DiscreteFunction p = *extend_from_vertices(g).function;
  DiscreteFunction recon = compose_unary(p, delta);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (recon.value_at(i) != f.value_at(i)) {
      QpFailure fail{QpFailStage::reconstruction_mismatch,
                     std::nullopt,
                     std::nullopt,
                     point_at(f.chain(), f.arity(), i),
                     {recon.value_at(i), f.value_at(i)}};
      return {false, std::move(delta), std::nullopt, std::move(fail)};
    }
  Factorization canon{std::move(p), delta, FactorKind::general, {}};
  return {true, std::move(delta), std::move(canon), std::nullopt};
}

namespace {

bool same_factor(const Factorization& a, const Factorization& b) {
  return a.p.table() == b.p.table() && a.phi.values() == b.phi.values();
}

}  // namespace

FactorizationSets factorization_sets(const DiscreteFunction& f) {
  QuasiPolynomialCheck qc = is_quasi_polynomial(f);
  if (!qc.quasi_polynomial) throw NotQuasiPolynomial();
  const DiscreteFunction& pf = qc.canonical->p;
  const UnaryMap& df = qc.canonical->phi;
  const int f0 = f.value_at(0);
  const int f1 = f.value_at(f.size() - 1);

  FactorizationSets out;
  for (const DiscreteFunction& p : all_polynomials(f.chain(), f.arity())) {
    bool p_matches = true;  // p_f == med(f(0), p, f(1)) pointwise
    for (std::size_t i = 0; i < p.size() && p_matches; ++i)
      p_matches = med3(f0, p.value_at(i), f1) == pf.value_at(i);
    for (const UnaryMap& phi : all_nondecreasing_unary_maps(f.chain())) {
      if (compose_unary(p, phi).table() == f.table())
        out.by_search.push_back({p, phi, FactorKind::general, {}});
      if (p_matches && clamp_to_range(p, phi).values() == df.values())
        out.by_characterization.push_back({p, phi, FactorKind::general, {}});
    }
  }

  out.equal = out.by_search.size() == out.by_characterization.size() &&
              std::equal(out.by_search.begin(), out.by_search.end(),
                         out.by_characterization.begin(), same_factor);
  out.contains_canonical =
      std::any_of(out.by_search.begin(), out.by_search.end(), [&](const Factorization& fa) {
        return fa.p.table() == pf.table() && fa.phi.values() == df.values();
      });
  return out;
}

std::vector<Factorization> factorizations(const DiscreteFunction& f) {
  FactorizationSets sets = factorization_sets(f);
  if (!sets.equal)
    throw ConstructionFailed("factorization sets disagree between search and characterization");
  if (!sets.contains_canonical)
    throw ConstructionFailed("canonical factorization missing from search");
  return std::move(sets.by_search);
}

Factorization as_quasi_sugeno(const DiscreteFunction& f) {
  QuasiPolynomialCheck qc = is_quasi_polynomial(f);
  if (!qc.quasi_polynomial) throw NotQuasiPolynomial();
  const DiscreteFunction& pf = qc.canonical->p;
  DiscreteFunction q = sugeno_from_capacity(sugeno_normalize(pf));
  UnaryMap phi = clamp_to_range(pf, qc.delta);
  if (compose_unary(q, phi).table() != f.table())
    throw ConstructionFailed("Sugeno rewrite does not reproduce the function");
  return {std::move(q), std::move(phi), FactorKind::sugeno, {}};
}

std::variant<Factorization, Refusal> as_quasi_term(const DiscreteFunction& f) {
  QuasiPolynomialCheck qc = is_quasi_polynomial(f);
  if (!qc.quasi_polynomial) throw NotQuasiPolynomial();
  AxiomResult r = check(f, AxiomId::QUASI_CONSERVATIVE);
  if (!r.holds) return Refusal{r.axiom, *r.witness};

  const Chain& chain = f.chain();
  const int f1 = f.value_at(f.size() - 1);
  DiscreteFunction t = DiscreteFunction::projection(chain, f.arity(), 0);
  UnaryMap phi = qc.delta;
  if (f.value_at(0) == f1) {
    phi = UnaryMap::constant(chain, f1);  // constant f: any projection works
  } else {
    VertexFunction g = vertex_restriction(f);
    std::vector<int> coeff(std::size_t{1} << f.arity());
    for (std::uint32_t mask = 0; mask < coeff.size(); ++mask)
      coeff[mask] = g.value(mask) == f1 ? chain.top() : chain.bottom();
    t = dnf_table(SetFunction(chain, f.arity(), std::move(coeff)));
  }
  if (compose_unary(t, phi).table() != f.table())
    throw ConstructionFailed("term rewrite does not reproduce the function");
  return Factorization{std::move(t), std::move(phi), FactorKind::term, {}};
}

std::variant<Factorization, Refusal> as_quasi_weighted_max(const DiscreteFunction& f) {
  QuasiPolynomialCheck qc = is_quasi_polynomial(f);
  if (!qc.quasi_polynomial) throw NotQuasiPolynomial();
  AxiomResult r = check(f, AxiomId::MAXITIVE);
  if (!r.holds) return Refusal{r.axiom, *r.witness};

  const Chain& chain = f.chain();
  const int n = f.arity();
  VertexFunction g = vertex_restriction(f);
  std::vector<int> weights(static_cast<std::size_t>(n) + 1);
  weights[0] = f.value_at(0);
  for (int i = 0; i < n; ++i)
    weights[static_cast<std::size_t>(i) + 1] = g.value(1u << i);
  DiscreteFunction p =
      DiscreteFunction::tabulate(chain, n, [&](std::span<const int> x) {
        int acc = weights[0];
        for (int i = 0; i < n; ++i)
          acc = std::max(acc, std::min(weights[static_cast<std::size_t>(i) + 1], x[static_cast<std::size_t>(i)]));
        return acc;
      });
  if (compose_unary(p, qc.delta).table() != f.table())
    throw ConstructionFailed("weighted maximum rewrite does not reproduce the function");
  return Factorization{std::move(p), qc.delta, FactorKind::weighted_max, std::move(weights)};
}

std::variant<Factorization, Refusal> as_quasi_weighted_min(const DiscreteFunction& f) {
  QuasiPolynomialCheck qc = is_quasi_polynomial(f);
  if (!qc.quasi_polynomial) throw NotQuasiPolynomial();
  AxiomResult r = check(f, AxiomId::MINITIVE);
  if (!r.holds) return Refusal{r.axiom, *r.witness};

  const Chain& chain = f.chain();
  const int n = f.arity();
  VertexFunction g = vertex_restriction(f);
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<int> weights(static_cast<std::size_t>(n) + 1);
  weights[0] = f.value_at(f.size() - 1);
  for (int i = 0; i < n; ++i)
    weights[static_cast<std::size_t>(i) + 1] = g.value(full & ~(1u << i));
  DiscreteFunction p =
      DiscreteFunction::tabulate(chain, n, [&](std::span<const int> x) {
        int acc = weights[0];
        for (int i = 0; i < n; ++i)
          acc = std::min(acc, std::max(weights[static_cast<std::size_t>(i) + 1], x[static_cast<std::size_t>(i)]));
        return acc;
      });
  if (compose_unary(p, qc.delta).table() != f.table())
    throw ConstructionFailed("weighted minimum rewrite does not reproduce the function");
  return Factorization{std::move(p), qc.delta, FactorKind::weighted_min, std::move(weights)};
}

std::variant<std::vector<UnaryMap>, Refusal> maxitive_decomposition(const DiscreteFunction& f) {
  AxiomResult r = check(f, AxiomId::MAXITIVE);
  if (!r.holds) return Refusal{r.axiom, *r.witness};

  const Chain& chain = f.chain();
  const int n = f.arity();
  std::vector<UnaryMap> parts;
  parts.reserve(static_cast<std::size_t>(n));
  const Tuple zero = Tuple::bottom(chain, n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> vals(static_cast<std::size_t>(chain.size()));
    for (int c = 0; c < chain.size(); ++c)
      vals[static_cast<std::size_t>(c)] = f.eval(zero.with_component(i, c));
    parts.emplace_back(chain, std::move(vals));
  }
  for (const UnaryMap& part : parts)
    if (!part.is_nondecreasing())
      throw ConstructionFailed("slotwise part of a maxitive function is not nondecreasing");
  DiscreteFunction joined =
      DiscreteFunction::tabulate(chain, n, [&](std::span<const int> x) {
        int acc = chain.bottom();
        for (int i = 0; i < n; ++i) acc = std::max(acc, parts[static_cast<std::size_t>(i)](x[static_cast<std::size_t>(i)]));
        return acc;
      });
  if (joined.table() != f.table())
    throw ConstructionFailed("slotwise join does not reproduce the maxitive function");
  return parts;
}

ClassReport classify(const DiscreteFunction& f) {
  QuasiPolynomialCheck qc = is_quasi_polynomial(f);
  ClassReport rep{is_polynomial(f).polynomial,
                  qc.quasi_polynomial,
                  qc.quasi_polynomial,
                  false,
                  false,
                  false,
                  std::move(qc.delta),
                  std::move(qc.canonical),
                  std::move(qc.failure),
                  std::nullopt,
                  std::nullopt,
                  std::nullopt};
  if (!rep.quasi_polynomial) return rep;

  AxiomChecker ax(f.chain(), f.arity());
  auto subclass = [&](AxiomId a, bool& flag, std::optional<Refusal>& refusal) {
    AxiomResult r = ax.check(f, a);
    flag = r.holds;
    if (!r.holds) refusal = Refusal{a, *r.witness};
  };
  subclass(AxiomId::QUASI_CONSERVATIVE, rep.quasi_term, rep.term_refusal);
  subclass(AxiomId::MAXITIVE, rep.quasi_weighted_max, rep.weighted_max_refusal);
  subclass(AxiomId::MINITIVE, rep.quasi_weighted_min, rep.weighted_min_refusal);
  return rep;
}

}  // namespace qp

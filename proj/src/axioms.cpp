#include "qp/axioms.hpp"

#include <algorithm>
#include <stdexcept>

namespace qp {
namespace {

struct RawViolation {
  std::array<std::size_t, 2> points{};
  std::array<int, 3> consts{};
  int n_points = 0;
  int n_consts = 0;
};

RawViolation raw(std::initializer_list<std::size_t> ps, std::initializer_list<int> cs) {
  RawViolation v;
  for (std::size_t p : ps) v.points[static_cast<std::size_t>(v.n_points++)] = p;
  for (int c : cs) v.consts[static_cast<std::size_t>(v.n_consts++)] = c;
  return v;
}

}  // namespace

std::string_view to_string(AxiomId a) {
  switch (a) {
    case AxiomId::NONDECREASING: return "NONDECREASING";
    case AxiomId::IDEMPOTENT: return "IDEMPOTENT";
    case AxiomId::RANGE_IDEMPOTENT: return "RANGE_IDEMPOTENT";
    case AxiomId::HOR_MAX: return "HOR_MAX";
    case AxiomId::HOR_MIN: return "HOR_MIN";
    case AxiomId::P1: return "P1";
    case AxiomId::D1: return "D1";
    case AxiomId::P2: return "P2";
    case AxiomId::D2: return "D2";
    case AxiomId::COM_MAX: return "COM_MAX";
    case AxiomId::COM_MIN: return "COM_MIN";
    case AxiomId::MAXITIVE: return "MAXITIVE";
    case AxiomId::MINITIVE: return "MINITIVE";
    case AxiomId::S_MAX_HOM: return "S_MAX_HOM";
    case AxiomId::S_MIN_HOM: return "S_MIN_HOM";
    case AxiomId::QUASI_MAX_HOM: return "QUASI_MAX_HOM";
    case AxiomId::QUASI_MIN_HOM: return "QUASI_MIN_HOM";
    case AxiomId::MEDIAN_DECOMP: return "MEDIAN_DECOMP";
    case AxiomId::QUASI_MEDIAN_DECOMP: return "QUASI_MEDIAN_DECOMP";
    case AxiomId::CONSERVATIVE: return "CONSERVATIVE";
    case AxiomId::QUASI_CONSERVATIVE: return "QUASI_CONSERVATIVE";
  }
  return "?";
}

std::optional<AxiomId> axiom_from_string(std::string_view name) {
  for (AxiomId a : kAllAxioms)
    if (to_string(a) == name) return a;
  return std::nullopt;
}

AxiomId dual_axiom(AxiomId a) {
  switch (a) {
    case AxiomId::HOR_MAX: return AxiomId::HOR_MIN;
    case AxiomId::HOR_MIN: return AxiomId::HOR_MAX;
    case AxiomId::P1: return AxiomId::D1;
    case AxiomId::D1: return AxiomId::P1;
    case AxiomId::P2: return AxiomId::D2;
    case AxiomId::D2: return AxiomId::P2;
    case AxiomId::COM_MAX: return AxiomId::COM_MIN;
    case AxiomId::COM_MIN: return AxiomId::COM_MAX;
    case AxiomId::MAXITIVE: return AxiomId::MINITIVE;
    case AxiomId::MINITIVE: return AxiomId::MAXITIVE;
    case AxiomId::S_MAX_HOM: return AxiomId::S_MIN_HOM;
    case AxiomId::S_MIN_HOM: return AxiomId::S_MAX_HOM;
    case AxiomId::QUASI_MAX_HOM: return AxiomId::QUASI_MIN_HOM;
    case AxiomId::QUASI_MIN_HOM: return AxiomId::QUASI_MAX_HOM;
    default: return a;
  }
}

bool takes_s_set(AxiomId a) {
  return a == AxiomId::S_MAX_HOM || a == AxiomId::S_MIN_HOM;
}

std::vector<int> range_hull_set(const DiscreteFunction& f) {
  auto [lo, hi] = range_hull(f);
  std::vector<int> s;
  for (int c = lo; c <= hi; ++c) s.push_back(c);
  return s;
}

struct AxiomChecker::Geometry {
  Chain chain;
  int arity;
  int m;
  std::size_t size = 0;
  std::vector<std::size_t> stride;
  std::vector<int> coords;  // [idx * arity + i]
  std::size_t diag = 0;     // index of (c,...,c) is c * diag
  std::vector<std::size_t> vertex;         // [mask] -> point index of e_mask
  std::vector<std::uint32_t> masks_lex;    // masks ordered by vertex point index
  // Unary transforms, flattened [c * size + idx].
  std::vector<std::uint32_t> cut_meet_idx, cut_join_idx, upper_idx, lower_idx;
  bool pair_tables = false;
  std::vector<std::uint32_t> join_pair, meet_pair;  // [ix * size + iy]
  std::vector<std::pair<std::uint32_t, std::uint32_t>> comono;  // ix <= iy

  Geometry(Chain c_, int n_) : chain(c_), arity(n_), m(c_.size()) {
    if (arity < 1 || arity > 16)
      throw std::invalid_argument("AxiomChecker: arity out of range");
    size = table_size_for(chain, arity);
    if (size > (std::size_t{1} << 20) || size * static_cast<std::size_t>(m) > (std::size_t{1} << 22))
      throw std::invalid_argument("AxiomChecker: domain too large for axiom scanning");

    stride.resize(static_cast<std::size_t>(arity));
    std::size_t p = 1;
    for (int i = arity; i-- > 0;) {
      stride[static_cast<std::size_t>(i)] = p;
      p *= static_cast<std::size_t>(m);
    }
    diag = 0;
    for (std::size_t s : stride) diag += s;

    coords.resize(size * static_cast<std::size_t>(arity));
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::size_t rest = idx;
      for (int i = arity; i-- > 0;) {
        coords[idx * static_cast<std::size_t>(arity) + static_cast<std::size_t>(i)] =
            static_cast<int>(rest % static_cast<std::size_t>(m));
        rest /= static_cast<std::size_t>(m);
      }
    }

    vertex.resize(std::size_t{1} << arity);
    for (std::uint32_t mask = 0; mask < vertex.size(); ++mask) {
      std::size_t idx = 0;
      for (int i = 0; i < arity; ++i)
        if (mask >> i & 1u) idx += static_cast<std::size_t>(m - 1) * stride[static_cast<std::size_t>(i)];
      vertex[mask] = idx;
    }
    masks_lex.resize(vertex.size());
    for (std::uint32_t mask = 0; mask < masks_lex.size(); ++mask) masks_lex[mask] = mask;
    std::sort(masks_lex.begin(), masks_lex.end(),
              [&](std::uint32_t a, std::uint32_t b) { return vertex[a] < vertex[b]; });

    const std::size_t cm = static_cast<std::size_t>(m) * size;
    cut_meet_idx.resize(cm);
    cut_join_idx.resize(cm);
    upper_idx.resize(cm);
    lower_idx.resize(cm);
    for (int c = 0; c < m; ++c)
      for (std::size_t idx = 0; idx < size; ++idx) {
        std::size_t a = 0, b = 0, u = 0, l = 0;
        for (int i = 0; i < arity; ++i) {
          const int x = coord(idx, i);
          a = a * static_cast<std::size_t>(m) + static_cast<std::size_t>(std::min(x, c));
          b = b * static_cast<std::size_t>(m) + static_cast<std::size_t>(std::max(x, c));
          u = u * static_cast<std::size_t>(m) + static_cast<std::size_t>(x <= c ? 0 : x);
          l = l * static_cast<std::size_t>(m) + static_cast<std::size_t>(x >= c ? m - 1 : x);
        }
        const std::size_t at = static_cast<std::size_t>(c) * size + idx;
        cut_meet_idx[at] = static_cast<std::uint32_t>(a);
        cut_join_idx[at] = static_cast<std::uint32_t>(b);
        upper_idx[at] = static_cast<std::uint32_t>(u);
        lower_idx[at] = static_cast<std::uint32_t>(l);
      }

    pair_tables = size <= 1024;
    if (pair_tables) {
      join_pair.resize(size * size);
      meet_pair.resize(size * size);
      for (std::size_t ix = 0; ix < size; ++ix)
        for (std::size_t iy = 0; iy < size; ++iy) {
          std::size_t j = 0, me = 0;
          for (int i = 0; i < arity; ++i) {
            const int a = coord(ix, i), b = coord(iy, i);
            j = j * static_cast<std::size_t>(m) + static_cast<std::size_t>(std::max(a, b));
            me = me * static_cast<std::size_t>(m) + static_cast<std::size_t>(std::min(a, b));
          }
          join_pair[ix * size + iy] = static_cast<std::uint32_t>(j);
          meet_pair[ix * size + iy] = static_cast<std::uint32_t>(me);
        }
      for (std::size_t ix = 0; ix < size; ++ix)
        for (std::size_t iy = ix; iy < size; ++iy)
          if (comonotonic(ix, iy))
            comono.emplace_back(static_cast<std::uint32_t>(ix), static_cast<std::uint32_t>(iy));
    }
  }

  int coord(std::size_t idx, int i) const {
    return coords[idx * static_cast<std::size_t>(arity) + static_cast<std::size_t>(i)];
  }

  std::size_t join_of(std::size_t ix, std::size_t iy) const {
    if (pair_tables) return join_pair[ix * size + iy];
    std::size_t j = 0;
    for (int i = 0; i < arity; ++i)
      j = j * static_cast<std::size_t>(m) + static_cast<std::size_t>(std::max(coord(ix, i), coord(iy, i)));
    return j;
  }

  std::size_t meet_of(std::size_t ix, std::size_t iy) const {
    if (pair_tables) return meet_pair[ix * size + iy];
    std::size_t me = 0;
    for (int i = 0; i < arity; ++i)
      me = me * static_cast<std::size_t>(m) + static_cast<std::size_t>(std::min(coord(ix, i), coord(iy, i)));
    return me;
  }

  bool comonotonic(std::size_t ix, std::size_t iy) const {
    for (int i = 0; i < arity; ++i)
      for (int j = 0; j < arity; ++j)
        if (coord(ix, i) < coord(ix, j) && coord(iy, i) > coord(iy, j)) return false;
    return true;
  }
};

namespace {

using Geometry = AxiomChecker::Geometry;
using Table = std::vector<int>;
using Raw = std::optional<RawViolation>;

Raw scan_nondecreasing(const Geometry& g, const Table& t) {
  for (std::size_t idx = 0; idx < g.size; ++idx)
    for (int i = 0; i < g.arity; ++i) {
      if (g.coord(idx, i) + 1 >= g.m) continue;
      const std::size_t up = idx + g.stride[static_cast<std::size_t>(i)];
      if (t[idx] > t[up]) return raw({idx, up}, {});
    }
  return {};
}

Raw scan_idempotent(const Geometry& g, const Table& t, bool range_only) {
  int lo = 0, hi = g.m - 1;
  if (range_only) {
    lo = hi = t[0];
    for (int v : t) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  for (int c = lo; c <= hi; ++c)
    if (t[static_cast<std::size_t>(c) * g.diag] != c) return raw({}, {c});
  return {};
}

Raw scan_hor_max(const Geometry& g, const Table& t) {
  for (std::size_t idx = 0; idx < g.size; ++idx)
    for (int c = 0; c < g.m; ++c) {
      const std::size_t at = static_cast<std::size_t>(c) * g.size + idx;
      if (t[idx] != std::max(t[g.cut_meet_idx[at]], t[g.upper_idx[at]]))
        return raw({idx}, {c});
    }
  return {};
}

Raw scan_hor_min(const Geometry& g, const Table& t) {
  for (std::size_t idx = 0; idx < g.size; ++idx)
    for (int c = 0; c < g.m; ++c) {
      const std::size_t at = static_cast<std::size_t>(c) * g.size + idx;
      if (t[idx] != std::min(t[g.cut_join_idx[at]], t[g.lower_idx[at]]))
        return raw({idx}, {c});
    }
  return {};
}

Raw scan_p1d1(const Geometry& g, const Table& t, bool meet_side) {
  const auto& tr = meet_side ? g.cut_meet_idx : g.cut_join_idx;
  for (std::uint32_t a : g.masks_lex)
    for (std::uint32_t b : g.masks_lex) {
      if (a == b || (a & b) != a) continue;  // need a proper subset of b
      for (int c = 0; c < g.m; ++c) {
        const std::size_t off = static_cast<std::size_t>(c) * g.size;
        if (t[tr[off + g.vertex[a]]] > t[tr[off + g.vertex[b]]])
          return raw({g.vertex[a], g.vertex[b]}, {c});
      }
    }
  return {};
}

Raw scan_p2d2(const Geometry& g, const Table& t, bool meet_side) {
  const auto& tr = meet_side ? g.cut_meet_idx : g.cut_join_idx;
  for (std::uint32_t mask : g.masks_lex) {
    const std::size_t v = g.vertex[mask];
    for (int c = 0; c < g.m; ++c)
      for (int c2 = c + 1; c2 < g.m; ++c2)
        if (t[tr[static_cast<std::size_t>(c) * g.size + v]] >
            t[tr[static_cast<std::size_t>(c2) * g.size + v]])
          return raw({v}, {c, c2});
  }
  return {};
}

Raw scan_pairwise(const Geometry& g, const Table& t, bool join_side, bool comono_only) {
  auto bad = [&](std::size_t ix, std::size_t iy) {
    return join_side ? t[g.join_of(ix, iy)] != std::max(t[ix], t[iy])
                     : t[g.meet_of(ix, iy)] != std::min(t[ix], t[iy]);
  };
  if (comono_only && g.pair_tables) {
    for (auto [ix, iy] : g.comono)
      if (bad(ix, iy)) return raw({ix, iy}, {});
    return {};
  }
  for (std::size_t ix = 0; ix < g.size; ++ix)
    for (std::size_t iy = ix; iy < g.size; ++iy) {
      if (comono_only && !g.comonotonic(ix, iy)) continue;
      if (bad(ix, iy)) return raw({ix, iy}, {});
    }
  return {};
}

Raw scan_hom(const Geometry& g, const Table& t, std::span<const int> s, bool join_side,
             bool quasi) {
  const auto& tr = join_side ? g.cut_join_idx : g.cut_meet_idx;
  for (std::size_t idx = 0; idx < g.size; ++idx)
    for (int c : s) {
      const int shift = quasi ? t[static_cast<std::size_t>(c) * g.diag] : c;
      const int got = t[tr[static_cast<std::size_t>(c) * g.size + idx]];
      const int want = join_side ? std::max(t[idx], shift) : std::min(t[idx], shift);
      if (got != want) return raw({idx}, {c});
    }
  return {};
}

Raw scan_median(const Geometry& g, const Table& t, bool quasi) {
  for (std::size_t idx = 0; idx < g.size; ++idx)
    for (int k = 0; k < g.arity; ++k) {
      const int xk = g.coord(idx, k);
      const std::size_t base = idx - static_cast<std::size_t>(xk) * g.stride[static_cast<std::size_t>(k)];
      const int lo = t[base];
      const int hi = t[base + static_cast<std::size_t>(g.m - 1) * g.stride[static_cast<std::size_t>(k)]];
      const int mid = quasi ? t[static_cast<std::size_t>(xk) * g.diag] : xk;
      if (med3(lo, mid, hi) != t[idx]) return raw({idx}, {k});
    }
  return {};
}

Raw scan_conservative(const Geometry& g, const Table& t, bool quasi) {
  for (std::size_t idx = 0; idx < g.size; ++idx) {
    const int v = t[idx];
    bool found = false;
    for (int i = 0; i < g.arity && !found; ++i) {
      const int xi = g.coord(idx, i);
      found = v == (quasi ? t[static_cast<std::size_t>(xi) * g.diag] : xi);
    }
    if (!found) return raw({idx}, {});
  }
  return {};
}

Raw scan(const Geometry& g, const Table& t, AxiomId a, std::span<const int> s) {
  switch (a) {
    case AxiomId::NONDECREASING: return scan_nondecreasing(g, t);
    case AxiomId::IDEMPOTENT: return scan_idempotent(g, t, false);
    case AxiomId::RANGE_IDEMPOTENT: return scan_idempotent(g, t, true);
    case AxiomId::HOR_MAX: return scan_hor_max(g, t);
    case AxiomId::HOR_MIN: return scan_hor_min(g, t);
    case AxiomId::P1: return scan_p1d1(g, t, true);
    case AxiomId::D1: return scan_p1d1(g, t, false);
    case AxiomId::P2: return scan_p2d2(g, t, true);
    case AxiomId::D2: return scan_p2d2(g, t, false);
    case AxiomId::COM_MAX: return scan_pairwise(g, t, true, true);
    case AxiomId::COM_MIN: return scan_pairwise(g, t, false, true);
    case AxiomId::MAXITIVE: return scan_pairwise(g, t, true, false);
    case AxiomId::MINITIVE: return scan_pairwise(g, t, false, false);
    case AxiomId::S_MAX_HOM: return scan_hom(g, t, s, true, false);
    case AxiomId::S_MIN_HOM: return scan_hom(g, t, s, false, false);
    case AxiomId::QUASI_MAX_HOM: return scan_hom(g, t, s, true, true);
    case AxiomId::QUASI_MIN_HOM: return scan_hom(g, t, s, false, true);
    case AxiomId::MEDIAN_DECOMP: return scan_median(g, t, false);
    case AxiomId::QUASI_MEDIAN_DECOMP: return scan_median(g, t, true);
    case AxiomId::CONSERVATIVE: return scan_conservative(g, t, false);
    case AxiomId::QUASI_CONSERVATIVE: return scan_conservative(g, t, true);
  }
  throw std::logic_error("unknown axiom");
}

std::vector<int> full_chain_set(const Chain& chain) {
  std::vector<int> s(static_cast<std::size_t>(chain.size()));
  for (int c = 0; c < chain.size(); ++c) s[static_cast<std::size_t>(c)] = c;
  return s;
}

std::vector<int> validated_s(const Chain& chain, std::span<const int> s) {
  std::vector<int> out(s.begin(), s.end());
  for (int c : out)
    if (!chain.contains(c)) throw std::invalid_argument("invalid S: element outside the chain");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

AxiomChecker::AxiomChecker(Chain chain, int arity)
    : geo_(std::make_shared<const Geometry>(chain, arity)) {}

const Chain& AxiomChecker::chain() const noexcept { return geo_->chain; }
int AxiomChecker::arity() const noexcept { return geo_->arity; }

namespace {

void require_domain(const Geometry& g, const DiscreteFunction& f) {
  if (f.chain() != g.chain || f.arity() != g.arity)
    throw std::invalid_argument("AxiomChecker: function domain mismatch");
}

Raw scan_with_default_s(const Geometry& g, const DiscreteFunction& f, AxiomId a) {
  if (takes_s_set(a)) {
    std::vector<int> s = range_hull_set(f);
    return scan(g, f.table(), a, s);
  }
  // Quasi-homogeneity quantifies c over the whole chain.
  std::vector<int> all = full_chain_set(g.chain);
  return scan(g, f.table(), a, all);
}

Witness make_witness(const Geometry& g, const RawViolation& v) {
  Witness w;
  for (int k = 0; k < v.n_points; ++k)
    w.tuples.push_back(point_at(g.chain, g.arity, v.points[static_cast<std::size_t>(k)]));
  for (int k = 0; k < v.n_consts; ++k)
    w.constants.push_back(v.consts[static_cast<std::size_t>(k)]);
  return w;
}

}  // namespace

bool AxiomChecker::holds(const DiscreteFunction& f, AxiomId a) const {
  require_domain(*geo_, f);
  return !scan_with_default_s(*geo_, f, a).has_value();
}

bool AxiomChecker::holds(const DiscreteFunction& f, AxiomId a, std::span<const int> s) const {
  require_domain(*geo_, f);
  if (!takes_s_set(a)) throw std::invalid_argument("axiom does not take an S parameter");
  std::vector<int> sv = validated_s(geo_->chain, s);
  return !scan(*geo_, f.table(), a, sv).has_value();
}

AxiomResult AxiomChecker::check(const DiscreteFunction& f, AxiomId a) const {
  require_domain(*geo_, f);
  Raw v = scan_with_default_s(*geo_, f, a);
  if (!v) return {a, true, std::nullopt};
  return {a, false, make_witness(*geo_, *v)};
}

AxiomResult AxiomChecker::check(const DiscreteFunction& f, AxiomId a,
                                std::span<const int> s) const {
  require_domain(*geo_, f);
  if (!takes_s_set(a)) throw std::invalid_argument("axiom does not take an S parameter");
  std::vector<int> sv = validated_s(geo_->chain, s);
  Raw v = scan(*geo_, f.table(), a, sv);
  if (!v) return {a, true, std::nullopt};
  return {a, false, make_witness(*geo_, *v)};
}

std::vector<AxiomResult> AxiomChecker::check_all(const DiscreteFunction& f) const {
  std::vector<AxiomResult> out;
  out.reserve(kAllAxioms.size());
  for (AxiomId a : kAllAxioms) out.push_back(check(f, a));
  return out;
}

AxiomResult check(const DiscreteFunction& f, AxiomId a) {
  return AxiomChecker(f.chain(), f.arity()).check(f, a);
}

AxiomResult check(const DiscreteFunction& f, AxiomId a, std::span<const int> s) {
  return AxiomChecker(f.chain(), f.arity()).check(f, a, s);
}

std::vector<AxiomResult> check_all(const DiscreteFunction& f) {
  return AxiomChecker(f.chain(), f.arity()).check_all(f);
}

namespace {

bool is_vertex_tuple(const Tuple& e) {
  for (int i = 0; i < e.arity(); ++i)
    if (e[i] != e.chain().bottom() && e[i] != e.chain().top()) return false;
  return true;
}

}  // namespace

bool witness_violates(const DiscreteFunction& f, AxiomId a, const Witness& w,
                      std::span<const int> s_in) {
  const Chain& chain = f.chain();
  const auto need = [&](std::size_t tuples, std::size_t consts) {
    if (w.tuples.size() != tuples || w.constants.size() != consts)
      throw std::invalid_argument("witness shape does not match the axiom");
    for (const Tuple& x : w.tuples)
      if (x.chain() != chain || x.arity() != f.arity())
        throw std::invalid_argument("witness domain mismatch");
  };
  UnaryMap delta = diagonal(f);
  switch (a) {
    case AxiomId::NONDECREASING: {
      need(2, 0);
      return tuple_leq(w.tuples[0], w.tuples[1]) && f.eval(w.tuples[0]) > f.eval(w.tuples[1]);
    }
    case AxiomId::IDEMPOTENT: {
      need(0, 1);
      const int c = w.constants[0];
      return chain.contains(c) && delta(c) != c;
    }
    case AxiomId::RANGE_IDEMPOTENT: {
      need(0, 1);
      const int c = w.constants[0];
      auto [lo, hi] = range_hull(f);
      return c >= lo && c <= hi && delta(c) != c;
    }
    case AxiomId::HOR_MAX: {
      need(1, 1);
      const Tuple& x = w.tuples[0];
      const int c = w.constants[0];
      if (!chain.contains(c)) return false;
      return f.eval(x) != chain.join(f.eval(cut_meet(x, c)), f.eval(upper_part(x, c)));
    }
    case AxiomId::HOR_MIN: {
      need(1, 1);
      const Tuple& x = w.tuples[0];
      const int c = w.constants[0];
      if (!chain.contains(c)) return false;
      return f.eval(x) != chain.meet(f.eval(cut_join(x, c)), f.eval(lower_part(x, c)));
    }
    case AxiomId::P1:
    case AxiomId::D1: {
      need(2, 1);
      const Tuple &e = w.tuples[0], &e2 = w.tuples[1];
      const int c = w.constants[0];
      if (!chain.contains(c) || !is_vertex_tuple(e) || !is_vertex_tuple(e2)) return false;
      if (!tuple_leq(e, e2)) return false;
      if (a == AxiomId::P1) return f.eval(cut_meet(e, c)) > f.eval(cut_meet(e2, c));
      return f.eval(cut_join(e, c)) > f.eval(cut_join(e2, c));
    }
    case AxiomId::P2:
    case AxiomId::D2: {
      need(1, 2);
      const Tuple& e = w.tuples[0];
      const int c = w.constants[0], c2 = w.constants[1];
      if (!chain.contains(c) || !chain.contains(c2) || c > c2 || !is_vertex_tuple(e)) return false;
      if (a == AxiomId::P2) return f.eval(cut_meet(e, c)) > f.eval(cut_meet(e, c2));
      return f.eval(cut_join(e, c)) > f.eval(cut_join(e, c2));
    }
    case AxiomId::COM_MAX:
    case AxiomId::COM_MIN:
    case AxiomId::MAXITIVE:
    case AxiomId::MINITIVE: {
      need(2, 0);
      const Tuple &x = w.tuples[0], &y = w.tuples[1];
      if ((a == AxiomId::COM_MAX || a == AxiomId::COM_MIN) && !is_comonotonic(x, y))
        return false;
      if (a == AxiomId::COM_MAX || a == AxiomId::MAXITIVE)
        return f.eval(tuple_join(x, y)) != chain.join(f.eval(x), f.eval(y));
      return f.eval(tuple_meet(x, y)) != chain.meet(f.eval(x), f.eval(y));
    }
    case AxiomId::S_MAX_HOM:
    case AxiomId::S_MIN_HOM: {
      need(1, 1);
      const Tuple& x = w.tuples[0];
      const int c = w.constants[0];
      if (!chain.contains(c)) return false;
      std::vector<int> s = s_in.empty() ? range_hull_set(f) : validated_s(chain, s_in);
      if (std::find(s.begin(), s.end(), c) == s.end()) return false;
      if (a == AxiomId::S_MAX_HOM)
        return f.eval(cut_join(x, c)) != chain.join(f.eval(x), c);
      return f.eval(cut_meet(x, c)) != chain.meet(f.eval(x), c);
    }
    case AxiomId::QUASI_MAX_HOM: {
      need(1, 1);
      const Tuple& x = w.tuples[0];
      const int c = w.constants[0];
      if (!chain.contains(c)) return false;
      return f.eval(cut_join(x, c)) != chain.join(f.eval(x), delta(c));
    }
    case AxiomId::QUASI_MIN_HOM: {
      need(1, 1);
      const Tuple& x = w.tuples[0];
      const int c = w.constants[0];
      if (!chain.contains(c)) return false;
      return f.eval(cut_meet(x, c)) != chain.meet(f.eval(x), delta(c));
    }
    case AxiomId::MEDIAN_DECOMP:
    case AxiomId::QUASI_MEDIAN_DECOMP: {
      need(1, 1);
      const Tuple& x = w.tuples[0];
      const int k = w.constants[0];
      if (k < 0 || k >= f.arity()) return false;
      const int lo = f.eval(x.with_component(k, chain.bottom()));
      const int hi = f.eval(x.with_component(k, chain.top()));
      const int mid = a == AxiomId::MEDIAN_DECOMP ? x[k] : delta(x[k]);
      return med3(lo, mid, hi) != f.eval(x);
    }
    case AxiomId::CONSERVATIVE:
    case AxiomId::QUASI_CONSERVATIVE: {
      need(1, 0);
      const Tuple& x = w.tuples[0];
      const int v = f.eval(x);
      for (int i = 0; i < f.arity(); ++i) {
        const int cand = a == AxiomId::CONSERVATIVE ? x[i] : delta(x[i]);
        if (cand == v) return false;
      }
      return true;
    }
  }
  throw std::logic_error("unknown axiom");
}

bool witness_violates(const DiscreteFunction& f, AxiomId a, const Witness& w) {
  return witness_violates(f, a, w, std::span<const int>{});
}

Witness dual_witness(const Chain& chain, AxiomId a, const Witness& w) {
  Witness out;
  auto dual_all_tuples = [&] {
    for (const Tuple& x : w.tuples) out.tuples.push_back(dual_tuple(x));
  };
  switch (a) {
    case AxiomId::NONDECREASING:
      out.tuples.push_back(dual_tuple(w.tuples[1]));
      out.tuples.push_back(dual_tuple(w.tuples[0]));
      return out;
    case AxiomId::IDEMPOTENT:
    case AxiomId::RANGE_IDEMPOTENT:
      out.constants.push_back(chain.dual(w.constants[0]));
      return out;
    case AxiomId::P1:
    case AxiomId::D1:
      out.tuples.push_back(dual_tuple(w.tuples[1]));
      out.tuples.push_back(dual_tuple(w.tuples[0]));
      out.constants.push_back(chain.dual(w.constants[0]));
      return out;
    case AxiomId::P2:
    case AxiomId::D2:
      dual_all_tuples();
      out.constants.push_back(chain.dual(w.constants[1]));
      out.constants.push_back(chain.dual(w.constants[0]));
      return out;
    case AxiomId::HOR_MAX:
    case AxiomId::HOR_MIN:
    case AxiomId::S_MAX_HOM:
    case AxiomId::S_MIN_HOM:
    case AxiomId::QUASI_MAX_HOM:
    case AxiomId::QUASI_MIN_HOM:
      dual_all_tuples();
      out.constants.push_back(chain.dual(w.constants[0]));
      return out;
    case AxiomId::MEDIAN_DECOMP:
    case AxiomId::QUASI_MEDIAN_DECOMP:
      dual_all_tuples();
      out.constants = w.constants;  // the coordinate k is order-invariant
      return out;
    default:
      dual_all_tuples();
      out.constants = w.constants;
      return out;
  }
}

namespace {

std::string show(int v) { return std::to_string(v); }

}  // namespace

std::string describe(const DiscreteFunction& f, AxiomId a, const Witness& w, bool compact) {
  const Chain& chain = f.chain();
  UnaryMap delta = diagonal(f);
  std::string s;
  switch (a) {
    case AxiomId::NONDECREASING: {
      const Tuple &x = w.tuples[0], &y = w.tuples[1];
      s = "x=" + x.to_string() + ", x'=" + y.to_string() + ": f(x)=" + show(f.eval(x)) +
          " > f(x')=" + show(f.eval(y));
      break;
    }
    case AxiomId::IDEMPOTENT:
    case AxiomId::RANGE_IDEMPOTENT: {
      const int c = w.constants[0];
      s = "c=" + show(c) + ": δ_f(" + show(c) + ")=" + show(delta(c)) + " ≠ " + show(c);
      break;
    }
    case AxiomId::HOR_MAX: {
      const Tuple& x = w.tuples[0];
      const int c = w.constants[0];
      s = "x=" + x.to_string() + ", c=" + show(c) + ": f(x∧c)∨f([x]_c)=" +
          show(chain.join(f.eval(cut_meet(x, c)), f.eval(upper_part(x, c)))) +
          " ≠ f(x)=" + show(f.eval(x));
      break;
    }
    case AxiomId::HOR_MIN: {
      const Tuple& x = w.tuples[0];
      const int c = w.constants[0];
      s = "x=" + x.to_string() + ", c=" + show(c) + ": f(x∨c)∧f([x]^c)=" +
          show(chain.meet(f.eval(cut_join(x, c)), f.eval(lower_part(x, c)))) +
          " ≠ f(x)=" + show(f.eval(x));
      break;
    }
    case AxiomId::P1: {
      const Tuple &e = w.tuples[0], &e2 = w.tuples[1];
      const int c = w.constants[0];
      s = "e=" + e.to_string() + ", e'=" + e2.to_string() + ", c=" + show(c) +
          ": f(e∧c)=" + show(f.eval(cut_meet(e, c))) + " > f(e'∧c)=" +
          show(f.eval(cut_meet(e2, c)));
      break;
    }
    case AxiomId::D1: {
      const Tuple &e = w.tuples[0], &e2 = w.tuples[1];
      const int c = w.constants[0];
      s = "e=" + e.to_string() + ", e'=" + e2.to_string() + ", c=" + show(c) +
          ": f(e∨c)=" + show(f.eval(cut_join(e, c))) + " > f(e'∨c)=" +
          show(f.eval(cut_join(e2, c)));
      break;
    }
    case AxiomId::P2: {
      const Tuple& e = w.tuples[0];
      const int c = w.constants[0], c2 = w.constants[1];
      s = "e=" + e.to_string() + ", c=" + show(c) + ", c'=" + show(c2) + ": f(e∧c)=" +
          show(f.eval(cut_meet(e, c))) + " > f(e∧c')=" + show(f.eval(cut_meet(e, c2)));
      break;
    }
    case AxiomId::D2: {
      const Tuple& e = w.tuples[0];
      const int c = w.constants[0], c2 = w.constants[1];
      s = "e=" + e.to_string() + ", c=" + show(c) + ", c'=" + show(c2) + ": f(e∨c)=" +
          show(f.eval(cut_join(e, c))) + " > f(e∨c')=" + show(f.eval(cut_join(e, c2)));
      break;
    }
    case AxiomId::COM_MAX:
    case AxiomId::MAXITIVE: {
      const Tuple &x = w.tuples[0], &y = w.tuples[1];
      s = "x=" + x.to_string() + ", x'=" + y.to_string() + ": f(x∨x')=" +
          show(f.eval(tuple_join(x, y))) + " ≠ f(x)∨f(x')=" +
          show(chain.join(f.eval(x), f.eval(y)));
      break;
    }
    case AxiomId::COM_MIN:
    case AxiomId::MINITIVE: {
      const Tuple &x = w.tuples[0], &y = w.tuples[1];
      s = "x=" + x.to_string() + ", x'=" + y.to_string() + ": f(x∧x')=" +
          show(f.eval(tuple_meet(x, y))) + " ≠ f(x)∧f(x')=" +
          show(chain.meet(f.eval(x), f.eval(y)));
      break;
    }
    case AxiomId::S_MAX_HOM: {
      const Tuple& x = w.tuples[0];
      const int c = w.constants[0];
      s = "x=" + x.to_string() + ", c=" + show(c) + ": f(x∨c)=" +
          show(f.eval(cut_join(x, c))) + " ≠ f(x)∨c=" + show(chain.join(f.eval(x), c));
      break;
    }
    case AxiomId::S_MIN_HOM: {
      const Tuple& x = w.tuples[0];
      const int c = w.constants[0];
      s = "x=" + x.to_string() + ", c=" + show(c) + ": f(x∧c)=" +
          show(f.eval(cut_meet(x, c))) + " ≠ f(x)∧c=" + show(chain.meet(f.eval(x), c));
      break;
    }
    case AxiomId::QUASI_MAX_HOM: {
      const Tuple& x = w.tuples[0];
      const int c = w.constants[0];
      s = "x=" + x.to_string() + ", c=" + show(c) + ": f(x∨c)=" +
          show(f.eval(cut_join(x, c))) + " ≠ f(x)∨δ_f(" + show(c) + ")=" +
          show(chain.join(f.eval(x), delta(c)));
      break;
    }
    case AxiomId::QUASI_MIN_HOM: {
      const Tuple& x = w.tuples[0];
      const int c = w.constants[0];
      s = "x=" + x.to_string() + ", c=" + show(c) + ": f(x∧c)=" +
          show(f.eval(cut_meet(x, c))) + " ≠ f(x)∧δ_f(" + show(c) + ")=" +
          show(chain.meet(f.eval(x), delta(c)));
      break;
    }
    case AxiomId::MEDIAN_DECOMP:
    case AxiomId::QUASI_MEDIAN_DECOMP: {
      const Tuple& x = w.tuples[0];
      const int k = w.constants[0];
      const Tuple lo = x.with_component(k, chain.bottom());
      const Tuple hi = x.with_component(k, chain.top());
      const bool quasi = a == AxiomId::QUASI_MEDIAN_DECOMP;
      const int mid = quasi ? delta(x[k]) : x[k];
      const std::string mid_text =
          quasi ? "δ_f(" + show(x[k]) + ")" : show(x[k]);
      s = "x=" + x.to_string() + ", k=" + show(k + 1) + ": med(f" + lo.to_string() + ", " +
          mid_text + ", f" + hi.to_string() + ")=" +
          show(med3(f.eval(lo), mid, f.eval(hi))) + " ≠ f(x)=" + show(f.eval(x));
      break;
    }
    case AxiomId::CONSERVATIVE:
    case AxiomId::QUASI_CONSERVATIVE: {
      const Tuple& x = w.tuples[0];
      const bool quasi = a == AxiomId::QUASI_CONSERVATIVE;
      std::vector<int> pool;
      for (int i = 0; i < x.arity(); ++i) pool.push_back(quasi ? delta(x[i]) : x[i]);
      std::sort(pool.begin(), pool.end());
      pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
      std::string set = "{";
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (i) set += ',';
        set += show(pool[i]);
      }
      set += '}';
      s = "x=" + x.to_string() + ": f(x)=" + show(f.eval(x)) + " ∉ " +
          (quasi ? "{δ_f(x_i)}=" + set : set);
      break;
    }
  }
  if (compact) s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

}  // namespace qp

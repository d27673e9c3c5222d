#include "qp/function.hpp"

#include <limits>
#include <stdexcept>

namespace qp {
namespace {

constexpr std::size_t kMaxTableEntries = 100'000'000;

void require_value(const Chain& chain, int v, const char* what) {
  if (!chain.contains(v)) throw std::invalid_argument(std::string(what) + ": value outside the chain");
}

// Odometer step over L^n with the last coordinate fastest. Returns false
// after the last point.
bool advance(std::vector<int>& coords, int m) {
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (++coords[i] < m) return true;
    coords[i] = 0;
  }
  return false;
}

}  // namespace

UnaryMap::UnaryMap(Chain chain, std::vector<int> values)
    : chain_(chain), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != chain_.size())
    throw std::invalid_argument("UnaryMap: need exactly one value per chain element");
  for (int v : values_) require_value(chain_, v, "UnaryMap");
}

UnaryMap UnaryMap::identity(const Chain& chain) {
  std::vector<int> values(static_cast<std::size_t>(chain.size()));
  for (int a = 0; a < chain.size(); ++a) values[static_cast<std::size_t>(a)] = a;
  return UnaryMap(chain, std::move(values));
}

UnaryMap UnaryMap::constant(const Chain& chain, int c) {
  require_value(chain, c, "UnaryMap");
  return UnaryMap(chain, std::vector<int>(static_cast<std::size_t>(chain.size()), c));
}

bool UnaryMap::is_nondecreasing() const { return !monotonicity_violation(); }

std::optional<std::pair<int, int>> UnaryMap::monotonicity_violation() const {
  for (int a = 0; a + 1 < chain_.size(); ++a)
    if ((*this)(a) > (*this)(a + 1)) return std::pair{a, a + 1};
  return std::nullopt;
}

UnaryMap UnaryMap::compose(const UnaryMap& inner) const {
  if (chain_ != inner.chain_)
    throw std::invalid_argument("UnaryMap: compose across different chains");
  std::vector<int> values(values_.size());
  for (int a = 0; a < chain_.size(); ++a)
    values[static_cast<std::size_t>(a)] = (*this)(inner(a));
  return UnaryMap(chain_, std::move(values));
}

UnaryMap UnaryMap::dual() const {
  std::vector<int> values(values_.size());
  for (int a = 0; a < chain_.size(); ++a)
    values[static_cast<std::size_t>(a)] = chain_.dual((*this)(chain_.dual(a)));
  return UnaryMap(chain_, std::move(values));
}

std::size_t table_size_for(const Chain& chain, int arity) {
  if (arity < 1) throw std::invalid_argument("arity must be at least 1");
  std::size_t size = 1;
  for (int i = 0; i < arity; ++i) {
    if (size > kMaxTableEntries / static_cast<std::size_t>(chain.size()))
      throw std::invalid_argument("table would exceed the entry limit");
    size *= static_cast<std::size_t>(chain.size());
  }
  return size;
}

std::size_t point_index(const Tuple& x) {
  std::size_t idx = 0;
  for (int i = 0; i < x.arity(); ++i)
    idx = idx * static_cast<std::size_t>(x.chain().size()) + static_cast<std::size_t>(x[i]);
  return idx;
}

Tuple point_at(const Chain& chain, int arity, std::size_t index) {
  if (index >= table_size_for(chain, arity))
    throw std::invalid_argument("point index out of range");
  std::vector<int> comps(static_cast<std::size_t>(arity));
  for (int i = arity; i-- > 0;) {
    comps[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(chain.size()));
    index /= static_cast<std::size_t>(chain.size());
  }
  return Tuple(chain, std::move(comps));
}

VertexFunction::VertexFunction(Chain chain, int arity, std::vector<int> values)
    : chain_(chain), arity_(arity) {
  if (arity < 1 || arity > 31)
    throw std::invalid_argument("VertexFunction: arity out of range");
  if (values.size() != (std::size_t{1} << arity))
    throw std::invalid_argument("VertexFunction: need one value per coordinate subset");
  for (int v : values) require_value(chain_, v, "VertexFunction");
  values_ = std::move(values);
}

bool VertexFunction::is_isotone() const { return !isotonicity_violation(); }

std::optional<std::pair<std::uint32_t, std::uint32_t>> VertexFunction::isotonicity_violation() const {
  const std::uint32_t count = 1u << arity_;
  for (std::uint32_t mask = 0; mask < count; ++mask)
    for (int i = 0; i < arity_; ++i) {
      if (mask >> i & 1u) continue;
      const std::uint32_t up = mask | (1u << i);
      if (values_[mask] > values_[up]) return std::pair{mask, up};
    }
  return std::nullopt;
}

DiscreteFunction::DiscreteFunction(Chain chain, int arity, std::vector<int> table)
    : chain_(chain), arity_(arity) {
  if (table.size() != table_size_for(chain_, arity))
    throw std::invalid_argument("DiscreteFunction: table length must be size^arity");
  for (int v : table) require_value(chain_, v, "DiscreteFunction");
  table_ = std::move(table);
}

DiscreteFunction DiscreteFunction::constant(const Chain& chain, int arity, int value) {
  require_value(chain, value, "DiscreteFunction");
  return DiscreteFunction(chain, arity,
                          std::vector<int>(table_size_for(chain, arity), value));
}

DiscreteFunction DiscreteFunction::projection(const Chain& chain, int arity, int coordinate) {
  if (coordinate < 0 || coordinate >= arity)
    throw std::invalid_argument("projection: coordinate out of range");
  return tabulate(chain, arity,
                  [&](std::span<const int> x) { return x[static_cast<std::size_t>(coordinate)]; });
}

DiscreteFunction DiscreteFunction::join_of_all(const Chain& chain, int arity) {
  return tabulate(chain, arity, [&](std::span<const int> x) {
    int acc = chain.bottom();
    for (int v : x) acc = chain.join(acc, v);
    return acc;
  });
}

DiscreteFunction DiscreteFunction::meet_of_all(const Chain& chain, int arity) {
  return tabulate(chain, arity, [&](std::span<const int> x) {
    int acc = chain.top();
    for (int v : x) acc = chain.meet(acc, v);
    return acc;
  });
}

DiscreteFunction DiscreteFunction::tabulate(const Chain& chain, int arity,
                                            const std::function<int(std::span<const int>)>& fn) {
  std::vector<int> table;
  table.reserve(table_size_for(chain, arity));
  std::vector<int> coords(static_cast<std::size_t>(arity), 0);
  do {
    table.push_back(fn(coords));
  } while (advance(coords, chain.size()));
  return DiscreteFunction(chain, arity, std::move(table));
}

int DiscreteFunction::eval(const Tuple& x) const {
  if (x.chain() != chain_ || x.arity() != arity_)
    throw std::invalid_argument("eval: tuple domain does not match the function");
  return table_[point_index(x)];
}

int DiscreteFunction::operator()(std::initializer_list<int> coords) const {
  return eval(Tuple(chain_, std::vector<int>(coords)));
}

UnaryMap diagonal(const DiscreteFunction& f) {
  // Index of (c,...,c) is c * (m^(n-1) + ... + 1).
  std::size_t stride = 0, p = 1;
  for (int i = 0; i < f.arity(); ++i) {
    stride += p;
    p *= static_cast<std::size_t>(f.chain().size());
  }
  std::vector<int> values(static_cast<std::size_t>(f.chain().size()));
  for (int c = 0; c < f.chain().size(); ++c)
    values[static_cast<std::size_t>(c)] = f.value_at(static_cast<std::size_t>(c) * stride);
  return UnaryMap(f.chain(), std::move(values));
}

VertexFunction vertex_restriction(const DiscreteFunction& f) {
  if (f.arity() > 31) throw std::invalid_argument("vertex_restriction: arity out of range");
  const std::uint32_t count = 1u << f.arity();
  std::vector<int> values(count);
  for (std::uint32_t mask = 0; mask < count; ++mask)
    values[mask] = f.eval(Tuple::vertex(f.chain(), f.arity(), mask));
  return VertexFunction(f.chain(), f.arity(), std::move(values));
}

MonotonicityCheck check_nondecreasing(const DiscreteFunction& f) {
  const int m = f.chain().size();
  std::vector<int> coords(static_cast<std::size_t>(f.arity()), 0);
  std::size_t idx = 0;
  // Strides for bumping one coordinate: last coordinate has stride 1.
  std::vector<std::size_t> stride(static_cast<std::size_t>(f.arity()));
  std::size_t p = 1;
  for (int i = f.arity(); i-- > 0;) {
    stride[static_cast<std::size_t>(i)] = p;
    p *= static_cast<std::size_t>(m);
  }
  do {
    for (int i = 0; i < f.arity(); ++i) {
      if (coords[static_cast<std::size_t>(i)] + 1 >= m) continue;
      if (f.value_at(idx) > f.value_at(idx + stride[static_cast<std::size_t>(i)])) {
        Tuple x(f.chain(), coords);
        return {false, std::pair{x, x.with_component(i, x[i] + 1)}};
      }
    }
    ++idx;
  } while (advance(coords, m));
  return {true, std::nullopt};
}

std::pair<int, int> range_hull(const DiscreteFunction& f) {
  int lo = f.value_at(0), hi = f.value_at(0);
  for (int v : f.table()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

int clamp_to_range(const DiscreteFunction& f, int value) {
  return med3(f.value_at(0), value, f.value_at(f.size() - 1));
}

Tuple clamp_to_range(const DiscreteFunction& f, const Tuple& x) {
  std::vector<int> comps(static_cast<std::size_t>(x.arity()));
  for (int i = 0; i < x.arity(); ++i)
    comps[static_cast<std::size_t>(i)] = clamp_to_range(f, x[i]);
  return Tuple(x.chain(), std::move(comps));
}

UnaryMap clamp_to_range(const DiscreteFunction& f, const UnaryMap& phi) {
  std::vector<int> values(phi.values().size());
  for (std::size_t a = 0; a < values.size(); ++a)
    values[a] = clamp_to_range(f, phi.values()[a]);
  return UnaryMap(phi.chain(), std::move(values));
}

DiscreteFunction compose_unary(const DiscreteFunction& p, const UnaryMap& phi) {
  if (p.chain() != phi.chain())
    throw std::invalid_argument("compose_unary: chain mismatch");
  return DiscreteFunction::tabulate(p.chain(), p.arity(), [&](std::span<const int> x) {
    std::size_t idx = 0;
    for (int v : x) idx = idx * static_cast<std::size_t>(p.chain().size()) + static_cast<std::size_t>(phi(v));
    return p.value_at(idx);
  });
}

DiscreteFunction dualize(const DiscreteFunction& f) {
  const int m = f.chain().size();
  std::vector<int> table(f.size());
  std::vector<int> coords(static_cast<std::size_t>(f.arity()), 0);
  std::size_t idx = 0;
  do {
    // Index of the dual point: every digit d becomes m-1-d.
    std::size_t dual_idx = 0;
    for (int v : coords)
      dual_idx = dual_idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(m - 1 - v);
    table[idx] = f.chain().dual(f.value_at(dual_idx));
    ++idx;
  } while (advance(coords, m));
  return DiscreteFunction(f.chain(), f.arity(), std::move(table));
}

std::vector<UnaryMap> all_nondecreasing_unary_maps(const Chain& chain) {
  const int m = chain.size();
  if (m > 12)
    throw std::invalid_argument("all_nondecreasing_unary_maps: chain too large");
  std::vector<UnaryMap> out;
  std::vector<int> values(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == m) {
      out.emplace_back(chain, values);
      return;
    }
    for (int v = lo; v < m; ++v) {
      values[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace qp

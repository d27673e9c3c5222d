#include "qp/chain.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qp {
namespace {

void require_same_domain(const Tuple& x, const Tuple& y) {
  if (x.chain() != y.chain() || x.arity() != y.arity())
    throw std::invalid_argument("tuples live on different domains");
}

void require_element(const Chain& chain, int c) {
  if (!chain.contains(c))
    throw std::invalid_argument("constant outside the chain");
}

}  // namespace

Chain::Chain(int size) : size_(size) {
  if (size < 2) throw std::invalid_argument("Chain: size must be at least 2");
}

int med3(int a, int b, int c) noexcept {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int arity) {
  std::vector<int> images(static_cast<std::size_t>(arity));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Tuple::Tuple(Chain chain, std::vector<int> components)
    : chain_(chain), components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("Tuple: arity must be at least 1");
  for (int v : components_) require_element(chain_, v);
}

Tuple Tuple::filled(const Chain& chain, int arity, int value) {
  require_element(chain, value);
  if (arity < 1) throw std::invalid_argument("Tuple: arity must be at least 1");
  return Tuple(chain, std::vector<int>(static_cast<std::size_t>(arity), value));
}

Tuple Tuple::bottom(const Chain& chain, int arity) {
  return filled(chain, arity, chain.bottom());
}

Tuple Tuple::top(const Chain& chain, int arity) {
  return filled(chain, arity, chain.top());
}

Tuple Tuple::vertex(const Chain& chain, int arity, std::uint32_t mask) {
  if (arity < 1 || arity > 31)
    throw std::invalid_argument("Tuple: vertex arity out of range");
  if (mask >> arity)
    throw std::invalid_argument("Tuple: vertex mask has bits beyond arity");
  std::vector<int> comps(static_cast<std::size_t>(arity), chain.bottom());
  for (int i = 0; i < arity; ++i)
    if (mask >> i & 1u) comps[static_cast<std::size_t>(i)] = chain.top();
  return Tuple(chain, std::move(comps));
}

Tuple Tuple::with_component(int i, int value) const {
  if (i < 0 || i >= arity()) throw std::invalid_argument("Tuple: index out of range");
  require_element(chain_, value);
  std::vector<int> comps = components_;
  comps[static_cast<std::size_t>(i)] = value;
  return Tuple(chain_, std::move(comps));
}

std::string Tuple::to_string() const {
  std::string out = "(";
  for (int i = 0; i < arity(); ++i) {
    if (i) out += ',';
    out += std::to_string((*this)[i]);
  }
  out += ')';
  return out;
}

Tuple tuple_meet(const Tuple& x, const Tuple& y) {
  require_same_domain(x, y);
  std::vector<int> comps(static_cast<std::size_t>(x.arity()));
  for (int i = 0; i < x.arity(); ++i)
    comps[static_cast<std::size_t>(i)] = x.chain().meet(x[i], y[i]);
  return Tuple(x.chain(), std::move(comps));
}

Tuple tuple_join(const Tuple& x, const Tuple& y) {
  require_same_domain(x, y);
  std::vector<int> comps(static_cast<std::size_t>(x.arity()));
  for (int i = 0; i < x.arity(); ++i)
    comps[static_cast<std::size_t>(i)] = x.chain().join(x[i], y[i]);
  return Tuple(x.chain(), std::move(comps));
}

bool tuple_leq(const Tuple& x, const Tuple& y) {
  require_same_domain(x, y);
  for (int i = 0; i < x.arity(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

Tuple cut_meet(const Tuple& x, int c) {
  require_element(x.chain(), c);
  std::vector<int> comps(static_cast<std::size_t>(x.arity()));
  for (int i = 0; i < x.arity(); ++i)
    comps[static_cast<std::size_t>(i)] = x.chain().meet(x[i], c);
  return Tuple(x.chain(), std::move(comps));
}

Tuple cut_join(const Tuple& x, int c) {
  require_element(x.chain(), c);
  std::vector<int> comps(static_cast<std::size_t>(x.arity()));
  for (int i = 0; i < x.arity(); ++i)
    comps[static_cast<std::size_t>(i)] = x.chain().join(x[i], c);
  return Tuple(x.chain(), std::move(comps));
}

Tuple upper_part(const Tuple& x, int c) {
  require_element(x.chain(), c);
  std::vector<int> comps(static_cast<std::size_t>(x.arity()));
  for (int i = 0; i < x.arity(); ++i)
    comps[static_cast<std::size_t>(i)] = x[i] <= c ? x.chain().bottom() : x[i];
  return Tuple(x.chain(), std::move(comps));
}

Tuple lower_part(const Tuple& x, int c) {
  require_element(x.chain(), c);
  std::vector<int> comps(static_cast<std::size_t>(x.arity()));
  for (int i = 0; i < x.arity(); ++i)
    comps[static_cast<std::size_t>(i)] = x[i] >= c ? x.chain().top() : x[i];
  return Tuple(x.chain(), std::move(comps));
}

Tuple dual_tuple(const Tuple& x) {
  std::vector<int> comps(static_cast<std::size_t>(x.arity()));
  for (int i = 0; i < x.arity(); ++i)
    comps[static_cast<std::size_t>(i)] = x.chain().dual(x[i]);
  return Tuple(x.chain(), std::move(comps));
}

bool is_comonotonic(const Tuple& x, const Tuple& y) {
  require_same_domain(x, y);
  const int n = x.arity();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x[i] < x[j] && y[i] > y[j]) return false;
  return true;
}

bool is_comonotonic_by_search(const Tuple& x, const Tuple& y) {
  require_same_domain(x, y);
  std::vector<int> order(static_cast<std::size_t>(x.arity()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end());
  do {
    bool ok = true;
    for (std::size_t k = 1; k < order.size() && ok; ++k) {
      if (x[order[k - 1]] > x[order[k]]) ok = false;
      if (y[order[k - 1]] > y[order[k]]) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

Permutation sorting_permutation(const Tuple& x) {
  std::vector<int> images(static_cast<std::size_t>(x.arity()));
  std::iota(images.begin(), images.end(), 0);
  std::stable_sort(images.begin(), images.end(),
                   [&](int a, int b) { return x[a] < x[b]; });
  return Permutation(std::move(images));
}

}  // namespace qp

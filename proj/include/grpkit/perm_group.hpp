#pragma once

#include <any>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "limits.hpp"
#include "perm.hpp"
#include "stab_chain.hpp"

namespace grpkit {

struct SplitInfo;  // affine.hpp

/// A permutation group given by generators, with its base and strong
/// generating set computed at construction.
///
/// Values are immutable and cheap to copy; copies share the chain and a lazy
/// cache for expensive derived data (maximal subgroups, Frattini subgroup, ...).
class PermGroup {
 public:
  PermGroup() : PermGroup(1, {}) {}

  PermGroup(std::size_t degree, std::vector<Perm> generators) {
    if (degree < 1) throw InvalidInput("degree must be at least 1");
    auto st = std::make_shared<State>();
    st->degree = degree;
    st->chain = StabChain(degree);
    for (const auto& g : generators) {
      if (g.degree() != degree)
        throw InvalidInput("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " + std::to_string(degree));
      st->chain.add_generator(g);
    }
    st->chain.freeze();
    st->generators = std::move(generators);
    state_ = std::move(st);
  }

  /// Trivial group on `degree` points.
  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return state_->degree; }
  const std::vector<Perm>& generators() const noexcept { return state_->generators; }
  const StabChain& chain() const noexcept { return state_->chain; }
  std::vector<Point> base() const { return state_->chain.base(); }
  std::vector<Perm> strong_generators() const { return state_->chain.strong_generators(); }
  std::uint64_t order() const { return state_->chain.order(); }
  bool is_trivial() const { return state_->chain.levels().empty(); }

  bool contains(const Perm& g) const {
    if (g.degree() != degree())
      throw InvalidInput("degree mismatch: element of degree " + std::to_string(g.degree()) +
                         " tested against group of degree " + std::to_string(degree()));
    return state_->chain.contains(g);
  }

  /// Base images; unique per element of this group.
  std::vector<Point> key(const Perm& g) const { return state_->chain.key(g); }

  /// Visits every element once. Throws BoundExceeded above limits().enum_bound.
  template <class F>
  void for_each_element(F&& f) const {
    check_bound("element enumeration", order(), limits().enum_bound);
    state_->chain.for_each_element(std::forward<F>(f));
  }

  std::vector<Perm> elements() const {
    std::vector<Perm> out;
    out.reserve(static_cast<std::size_t>(order()));
    for_each_element([&](const Perm& g) { out.push_back(g); });
    return out;
  }

  bool is_subgroup_of(const PermGroup& other) const {
    if (other.degree() != degree()) return false;
    if (other.order() % order() != 0) return false;
    for (const auto& g : generators())
      if (!other.contains(g)) return false;
    return true;
  }

  /// Element-set equality, decided by order and generator membership.
  bool same_elements(const PermGroup& other) const {
    return other.degree() == degree() && other.order() == order() && is_subgroup_of(other);
  }

  const SplitInfo* split_info() const noexcept { return state_->split.get(); }
  std::shared_ptr<const SplitInfo> split_info_ptr() const noexcept { return state_->split; }

  /// Same group, tagged with affine split-extension metadata.
  PermGroup with_split_info(std::shared_ptr<const SplitInfo> info) const {
    auto st = std::make_shared<State>();
    st->degree = state_->degree;
    st->generators = state_->generators;
    st->chain = state_->chain;
    st->split = std::move(info);
    PermGroup g;
    g.state_ = std::move(st);
    return g;
  }

  /// Memoized derived data. `compute` runs outside the lock, so it may consult
  /// other cached entries of the same group.
  template <class T, class F>
  T cached(const std::string& name, F&& compute) const {
    {
      std::lock_guard lock(state_->cache_mutex);
      auto it = state_->cache.find(name);
      if (it != state_->cache.end()) return std::any_cast<T>(it->second);
    }
    T value = compute();
    std::lock_guard lock(state_->cache_mutex);
    state_->cache.emplace(name, value);
    return value;
  }

  /// True when both handles share one underlying state object.
  bool identical(const PermGroup& other) const noexcept { return state_ == other.state_; }

 private:
  struct State {
    std::size_t degree = 1;
    std::vector<Perm> generators;
    StabChain chain;
    std::shared_ptr<const SplitInfo> split;
    mutable std::mutex cache_mutex;
    mutable std::map<std::string, std::any> cache;
  };
  std::shared_ptr<const State> state_;
};

/// Group generated by `elements`, keeping only those that enlarge it.
inline PermGroup generated_by(std::size_t degree, const std::vector<Perm>& elements) {
  StabChain chain(degree);
  std::vector<Perm> gens;
  for (const auto& e : elements)
    if (chain.add_generator(e)) gens.push_back(e);
  return PermGroup(degree, std::move(gens));
}

/// A subgroup together with the group it lives in.
struct SubgroupHandle {
  PermGroup parent;
  PermGroup group;

  /// Throws InvalidInput unless every generator lies in `parent`.
  static SubgroupHandle make(const PermGroup& parent, std::vector<Perm> gens) {
    for (const auto& g : gens)
      if (!parent.contains(g))
        throw InvalidInput("subgroup generator " + g.to_cycle_string() + " not in parent group");
    return SubgroupHandle{parent, PermGroup(parent.degree(), std::move(gens))};
  }

  static SubgroupHandle of(const PermGroup& parent, const PermGroup& sub) {
    if (!sub.is_subgroup_of(parent)) throw InvalidInput("not a subgroup of the parent");
    return SubgroupHandle{parent, sub};
  }

  static SubgroupHandle whole(const PermGroup& parent) { return SubgroupHandle{parent, parent}; }
  static SubgroupHandle trivial(const PermGroup& parent) {
    return SubgroupHandle{parent, PermGroup::trivial(parent.degree())};
  }

  std::uint64_t order() const { return group.order(); }
  std::uint64_t index() const { return parent.order() / group.order(); }
  bool contains(const Perm& g) const { return group.contains(g); }
  bool same_elements(const SubgroupHandle& o) const { return group.same_elements(o.group); }
  bool is_subgroup_of(const SubgroupHandle& o) const { return group.is_subgroup_of(o.group); }
};

/// <a, b> inside the common parent of the two handles.
inline SubgroupHandle join(const SubgroupHandle& a, const SubgroupHandle& b) {
  std::vector<Perm> gens = a.group.generators();
  gens.insert(gens.end(), b.group.generators().begin(), b.group.generators().end());
  return SubgroupHandle{a.parent, generated_by(a.parent.degree(), gens)};
}

inline SubgroupHandle join_all(const PermGroup& parent, const std::vector<SubgroupHandle>& subs) {
  std::vector<Perm> gens;
  for (const auto& s : subs)
    gens.insert(gens.end(), s.group.generators().begin(), s.group.generators().end());
  return SubgroupHandle{parent, generated_by(parent.degree(), gens)};
}

/// Places `g` on points [offset, offset + g.degree()) of a degree-`total` permutation.
inline Perm shift_perm(const Perm& g, std::size_t offset, std::size_t total) {
  std::vector<Point> img(total);
  for (std::size_t i = 0; i < total; ++i) img[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < g.degree(); ++i)
    img[offset + i] = static_cast<Point>(offset + g[static_cast<Point>(i)]);
  return Perm(std::move(img));
}

struct DirectProduct {
  PermGroup group;
  SubgroupHandle left;
  SubgroupHandle right;
  std::size_t left_degree = 0;
  std::size_t right_degree = 0;

  Perm embed_left(const Perm& a) const {
    return shift_perm(a, 0, left_degree + right_degree);
  }
  Perm embed_right(const Perm& b) const {
    return shift_perm(b, left_degree, left_degree + right_degree);
  }
};

/// A x B acting on deg A + deg B points, A on the first block.
inline DirectProduct direct_product(const PermGroup& a, const PermGroup& b) {
  std::size_t n = a.degree() + b.degree();
  std::vector<Perm> gens, lg, rg;
  for (const auto& g : a.generators()) lg.push_back(shift_perm(g, 0, n));
  for (const auto& g : b.generators()) rg.push_back(shift_perm(g, a.degree(), n));
  gens = lg;
  gens.insert(gens.end(), rg.begin(), rg.end());
  PermGroup g(n, gens);
  return DirectProduct{g, SubgroupHandle{g, PermGroup(n, lg)}, SubgroupHandle{g, PermGroup(n, rg)},
                       a.degree(), b.degree()};
}

}  // namespace grpkit

#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "fischer_lab/error.hpp"

namespace fischer_lab::groups {

inline constexpr std::size_t default_enumeration_cap = 2'000'000;

template <typename E>
concept GroupElement = std::totally_ordered<E> && requires(const E& a, std::size_t cap) {
  { compose(a, a) } -> std::same_as<E>;
  { inverse(a) } -> std::same_as<E>;
  { identity_like(a) } -> std::same_as<E>;
  { is_identity(a) } -> std::same_as<bool>;
  { element_order(a, cap) } -> std::same_as<std::size_t>;
  { std::hash<E>{}(a) } -> std::convertible_to<std::size_t>;
};

/// g x g^-1. This is the action x^i -> x^{g i g^-1} used for the algebra
/// automorphisms; for an involution g it coincides with g^-1 x g.
template <GroupElement E>
E conjugate(const E& x, const E& g) {
  return compose(compose(g, x), inverse(g));
}

template <GroupElement E>
E power(const E& g, std::size_t k) {
  E out = identity_like(g);
  for (std::size_t i = 0; i < k; ++i) out = compose(out, g);
  return out;
}

namespace detail {

// Hash set of positions into an element vector; lookups accept elements
// directly so no copy is stored.
template <GroupElement E>
class ElementIndex {
 public:
  explicit ElementIndex(const std::vector<E>* elements)
      : set_(16, Hash{elements}, Equal{elements}) {}

  void insert(std::uint32_t position) { set_.insert(position); }
  void reserve(std::size_t n) { set_.reserve(n); }

  std::optional<std::uint32_t> find(const E& e) const {
    auto it = set_.find(e);
    if (it == set_.end()) return std::nullopt;
    return *it;
  }
  bool contains(const E& e) const { return set_.find(e) != set_.end(); }

 private:
  struct Hash {
    using is_transparent = void;
    const std::vector<E>* elements;
    std::size_t operator()(std::uint32_t i) const { return std::hash<E>{}((*elements)[i]); }
    std::size_t operator()(const E& e) const { return std::hash<E>{}(e); }
  };
  struct Equal {
    using is_transparent = void;
    const std::vector<E>* elements;
    bool operator()(std::uint32_t a, std::uint32_t b) const { return a == b; }
    bool operator()(std::uint32_t a, const E& e) const { return (*elements)[a] == e; }
    bool operator()(const E& e, std::uint32_t a) const { return (*elements)[a] == e; }
  };

  absl::flat_hash_set<std::uint32_t, Hash, Equal> set_;
};

template <GroupElement E>
struct GroupStorage {
  std::vector<E> generators;
  std::vector<E> elements;
  std::vector<std::size_t> layer_starts;
  ElementIndex<E> index{&elements};
};

template <typename Fn>
void run_chunked(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    fn(0u, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(count, t * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    pool.emplace_back([&fn, t, begin, end] { fn(t, begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

template <GroupElement E>
class GeneratedGroup;

/// Breadth-first closure of `generators` under left multiplication.
/// Throws EnumerationCapError once more than `max_order` elements are found.
template <GroupElement F>
GeneratedGroup<F> generate(std::span<const F> generators, std::size_t max_order = default_enumeration_cap,
                           unsigned threads = 1);

template <GroupElement F>
GeneratedGroup<F> generate(const std::vector<F>& generators, std::size_t max_order = default_enumeration_cap,
                           unsigned threads = 1) {
  return generate(std::span<const F>(generators), max_order, threads);
}

/// A finite group enumerated from its generators. Immutable and cheap to
/// copy (shared storage).
///
/// Elements are listed in breadth-first layers from the identity; within a
/// layer they are sorted by canonical element order. This order does not
/// depend on the thread count used to build it.
template <GroupElement E>
class GeneratedGroup {
 public:
  const std::vector<E>& generators() const noexcept { return store_->generators; }
  const std::vector<E>& elements() const noexcept { return store_->elements; }
  std::size_t order() const noexcept { return store_->elements.size(); }

  /// Offsets where each BFS layer starts (layer 0 is the identity).
  const std::vector<std::size_t>& layer_starts() const noexcept { return store_->layer_starts; }

  bool contains(const E& e) const { return store_->index.contains(e); }
  std::optional<std::size_t> index_of(const E& e) const {
    auto i = store_->index.find(e);
    if (!i) return std::nullopt;
    return *i;
  }

  const E& identity() const { return store_->elements.front(); }

  /// Adopt an element list produced by a previous enumeration (e.g. a cache
  /// file). Checks identity-first, no duplicates and that every generator is
  /// present; closure itself is not re-verified.
  static GeneratedGroup from_elements(std::vector<E> generators, std::vector<E> elements,
                                      std::vector<std::size_t> layer_starts);

 private:
  template <GroupElement F>
  friend GeneratedGroup<F> generate(std::span<const F>, std::size_t, unsigned);

  std::shared_ptr<detail::GroupStorage<E>> store_ = std::make_shared<detail::GroupStorage<E>>();
};

template <GroupElement F>
GeneratedGroup<F> generate(std::span<const F> generators, std::size_t max_order, unsigned threads) {
  if (generators.empty()) throw Error(ErrorKind::structural, "generate: no generators");
  for (const auto& g : generators) (void)compose(generators.front(), g);

  GeneratedGroup<F> group;
  auto& st = *group.store_;
  st.generators.assign(generators.begin(), generators.end());
  st.elements.push_back(identity_like(generators.front()));
  st.index.insert(0);
  st.layer_starts.push_back(0);
  if (max_order < 1) throw EnumerationCapError(max_order, 1);

  std::size_t layer_begin = 0;
  std::size_t layer_end = 1;
  while (layer_begin < layer_end) {
    const std::size_t layer_size = layer_end - layer_begin;
    const unsigned nthreads = std::max(1u, threads);
    std::vector<std::vector<F>> found(nthreads);
    detail::run_chunked(layer_size, nthreads, [&](unsigned t, std::size_t begin, std::size_t end) {
      absl::flat_hash_set<F, std::hash<F>> local;
      for (std::size_t k = begin; k < end; ++k) {
        const F& x = st.elements[layer_begin + k];
        for (const F& g : st.generators) {
          F y = compose(g, x);
          if (!st.index.contains(y)) local.insert(std::move(y));
        }
      }
      found[t].assign(local.begin(), local.end());
    });

    std::vector<F> next;
    for (auto& part : found) {
      next.insert(next.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      part.clear();
      part.shrink_to_fit();
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (st.elements.size() + next.size() > max_order) {
      throw EnumerationCapError(max_order, st.elements.size() + next.size());
    }
    if (next.empty()) break;

    layer_begin = st.elements.size();
    st.layer_starts.push_back(layer_begin);
    st.index.reserve(layer_begin + next.size());
    for (auto& y : next) {
      st.elements.push_back(std::move(y));
      st.index.insert(static_cast<std::uint32_t>(st.elements.size() - 1));
    }
    layer_end = st.elements.size();
  }
  return group;
}

template <GroupElement E>
GeneratedGroup<E> GeneratedGroup<E>::from_elements(std::vector<E> generators, std::vector<E> elements,
                                                   std::vector<std::size_t> layer_starts) {
  GeneratedGroup<E> group;
  auto& st = *group.store_;
  if (elements.empty() || !is_identity(elements.front())) {
    throw Error(ErrorKind::structural, "group element list must start with the identity");
  }
  st.generators = std::move(generators);
  st.elements = std::move(elements);
  st.layer_starts = std::move(layer_starts);
  st.index.reserve(st.elements.size());
  for (std::size_t i = 0; i < st.elements.size(); ++i) {
    if (st.index.contains(st.elements[i])) {
      throw Error(ErrorKind::structural, "group element list contains duplicates");
    }
    st.index.insert(static_cast<std::uint32_t>(i));
  }
  for (const auto& g : st.generators) {
    if (!st.index.contains(g)) throw Error(ErrorKind::structural, "group element list misses a generator");
  }
  return group;
}

/// Smallest set containing `seed` and closed under conjugation by
/// `generators`, sorted in canonical element order.
template <GroupElement E>
std::vector<E> conjugacy_closure(std::span<const E> seed, std::span<const E> generators,
                                 std::size_t cap = default_enumeration_cap) {
  for (const auto& s : seed) {
    if (is_identity(s) || !is_identity(compose(s, s))) {
      throw Error(ErrorKind::domain, "conjugacy_closure: seed element is not an involution");
    }
  }
  std::vector<E> inverses;
  for (const auto& g : generators) inverses.push_back(inverse(g));

  std::vector<E> out;
  std::unordered_set<E> seen;
  for (const auto& s : seed) {
    if (seen.insert(s).second) out.push_back(s);
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      E y = compose(compose(generators[g], out[k]), inverses[g]);
      if (seen.insert(y).second) {
        out.push_back(std::move(y));
        if (out.size() > cap) throw EnumerationCapError(cap, out.size());
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Elements of G commuting with every generator.
template <GroupElement E>
std::vector<E> center(const GeneratedGroup<E>& group) {
  std::vector<E> out;
  for (const auto& z : group.elements()) {
    bool central = true;
    for (const auto& g : group.generators()) {
      if (compose(z, g) != compose(g, z)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(z);
  }
  return out;
}

/// Deterministic generating subset of a conjugation-closed involution set:
/// greedily adds the first class member missing from the conjugacy closure of
/// the chosen subset under itself. The result generates the same group as the
/// whole class, since the whole class lies in the closure.
template <GroupElement E>
std::vector<E> reduce_generators(std::span<const E> klass) {
  std::vector<E> gens;
  if (klass.empty()) return gens;
  std::unordered_set<E> covered;
  while (covered.size() < klass.size()) {
    auto missing = std::find_if(klass.begin(), klass.end(),
                                [&](const E& t) { return !covered.contains(t); });
    gens.push_back(*missing);
    auto closure = conjugacy_closure<E>(gens, gens, klass.size() + 1);
    covered.clear();
    covered.insert(closure.begin(), closure.end());
    for (const auto& t : closure) {
      if (std::find(klass.begin(), klass.end(), t) == klass.end()) {
        throw Error(ErrorKind::structural, "reduce_generators: input is not conjugation-closed");
      }
    }
  }
  return gens;
}

}  // namespace fischer_lab::groups

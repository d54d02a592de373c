#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fischer_lab/error.hpp"
#include "fischer_lab/groups/closure.hpp"

namespace fischer_lab::fischer {

/// Combinatorial shadow of a 3-transposition group (G, I): product orders,
/// the Fischer graph (i ~ j iff ij has order 3) and the map (i, j) -> i o j
/// for adjacent pairs. Indices refer to I in canonical element order.
/// Immutable once built.
class TranspositionSystem {
 public:
  static constexpr std::uint32_t no_index = 0xffffffffu;

  TranspositionSystem() = default;

  /// `orders` is the |I| x |I| row-major order matrix; `circ` holds i o j for
  /// adjacent pairs and no_index elsewhere. `generator_action[g][i]` is the
  /// index of g I[i] g^-1.
  TranspositionSystem(std::size_t size, std::vector<std::uint8_t> orders, std::vector<std::uint32_t> circ,
                      std::vector<std::vector<std::uint32_t>> generator_action,
                      std::vector<std::string> labels);

  std::size_t size() const noexcept { return size_; }

  /// Order of the product I[i] I[j]: 1 on the diagonal, else 2 or 3.
  unsigned order(std::size_t i, std::size_t j) const { return orders_[i * size_ + j]; }
  bool adjacent(std::size_t i, std::size_t j) const { return order(i, j) == 3; }

  /// i o j = I[j] I[i] I[j] = I[i] I[j] I[i]; requires adjacent(i, j).
  std::size_t circ(std::size_t i, std::size_t j) const;

  std::span<const std::uint32_t> neighbors(std::size_t i) const { return neighbors_[i]; }

  /// Adjacency row of i as packed 64-bit words.
  std::span<const std::uint64_t> adjacency_row(std::size_t i) const {
    return {adjacency_.data() + i * words_, words_};
  }

  /// j -> i o j if j ~ i, else j: conjugation by I[i] acting on indices.
  std::vector<std::uint32_t> transposition_action(std::size_t i) const;

  const std::vector<std::vector<std::uint32_t>>& generator_action() const noexcept { return generator_action_; }

  /// Printable form of each I[i] (cycle notation or residue rows).
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint8_t> orders_;
  std::vector<std::uint32_t> circ_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::vector<std::uint32_t>> neighbors_;
  std::vector<std::vector<std::uint32_t>> generator_action_;
  std::vector<std::string> labels_;
};

struct SystemCaps {
  std::size_t max_transpositions = groups::default_enumeration_cap;
  // Order search cap for products of two transpositions.
  std::size_t product_order_cap = 64;
};

/// A transposition system together with the concrete elements behind it.
template <groups::GroupElement E>
struct ConcreteSystem {
  std::vector<E> generators;
  std::vector<E> transpositions;
  TranspositionSystem system;

  std::optional<std::size_t> index_of(const E& t) const {
    auto it = std::lower_bound(transpositions.begin(), transpositions.end(), t);
    if (it == transpositions.end() || *it != t) return std::nullopt;
    return static_cast<std::size_t>(it - transpositions.begin());
  }
};

template <groups::GroupElement E>
std::string element_label(const E& e) {
  return e.to_string();
}

/// Conjugacy-closes the seed under the generators, then fills the order
/// matrix, adjacency and circ tables. Throws NotThreeTranspositionError for
/// the first pair (in index order) whose product has order above 3.
template <groups::GroupElement E>
ConcreteSystem<E> build_system(const std::vector<E>& generators, const std::vector<E>& seed,
                               const SystemCaps& caps = {}) {
  ConcreteSystem<E> out;
  out.generators = generators;
  out.transpositions = groups::conjugacy_closure<E>(seed, generators, caps.max_transpositions);
  const auto& I = out.transpositions;
  const std::size_t n = I.size();

  std::vector<std::uint8_t> orders(n * n, 1);
  std::vector<std::uint32_t> circ(n * n, TranspositionSystem::no_index);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const E product = compose(I[i], I[j]);
      std::size_t ord = 0;
      try {
        ord = element_order(product, caps.product_order_cap);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::order_overflow) throw;
        throw NotThreeTranspositionError(i, j, 0);
      }
      if (ord > 3) throw NotThreeTranspositionError(i, j, ord);
      orders[i * n + j] = orders[j * n + i] = static_cast<std::uint8_t>(ord);
      if (ord == 3) {
        const E ij = compose(compose(I[j], I[i]), I[j]);
        if (ij != compose(compose(I[i], I[j]), I[i])) {
          throw Error(ErrorKind::internal, "build_system: i^j != j^i for an adjacent pair");
        }
        const auto k = out.index_of(ij);
        if (!k) throw Error(ErrorKind::internal, "build_system: transposition set not conjugation-closed");
        circ[i * n + j] = circ[j * n + i] = static_cast<std::uint32_t>(*k);
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> action;
  for (const auto& g : generators) {
    std::vector<std::uint32_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = out.index_of(groups::conjugate(I[i], g));
      if (!k) throw Error(ErrorKind::internal, "build_system: generator does not normalize I");
      perm[i] = static_cast<std::uint32_t>(*k);
    }
    action.push_back(std::move(perm));
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& t : I) labels.push_back(element_label(t));
  out.system = TranspositionSystem(n, std::move(orders), std::move(circ), std::move(action), std::move(labels));
  return out;
}

/// Connected components of the Fischer graph, each sorted, ordered by their
/// least index. Cross-checked against the orbits of conjugation by I;
/// a mismatch throws Error(internal).
std::vector<std::vector<std::size_t>> components(const TranspositionSystem& sys);

/// Common neighbour count of a component; throws Error(irregular_component)
/// if it varies.
std::size_t valency(const TranspositionSystem& sys, std::span<const std::size_t> component);

/// Checks that conjugation by every transposition permutes I and preserves
/// adjacency. Returns false on the first violation.
bool conjugation_preserves_graph(const TranspositionSystem& sys);

/// Graphviz export: one vertex per transposition index, one edge per
/// adjacent pair.
void write_dot(const TranspositionSystem& sys, std::ostream& out);

}  // namespace fischer_lab::fischer

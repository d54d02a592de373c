#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fischer_lab/fischer/transposition_system.hpp"
#include "fischer_lab/groups/closure.hpp"

namespace fischer_lab::fischer {

/// Pairwise adjacent transpositions a, b, c.
struct Triple {
  std::size_t a = 0, b = 0, c = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// What <a, b, c> collapses to, read off the order of abac = (a o b) c.
enum class TripleKind { s3_collapse = 1, s4_type = 2, h_type = 3 };

TripleKind classify(const TranspositionSystem& sys, const Triple& t);

/// The lexicographically first ordered triple of H-type, if any. Absence
/// means no I-subgroup satisfies the relations of H: symplectic type.
/// The search may be split across threads; the result does not depend on it.
std::optional<Triple> detect_h_triple(const TranspositionSystem& sys, unsigned threads = 1);

struct TripleCensus {
  std::size_t s3_collapse = 0;
  std::size_t s4_type = 0;
  std::size_t h_type = 0;
};

/// Counts of ordered pairwise-adjacent triples by kind.
TripleCensus triple_census(const TranspositionSystem& sys);

template <groups::GroupElement E>
struct HSubgroup {
  groups::GeneratedGroup<E> group;
  std::vector<E> center;
  E center_generator;  // (abc)^2
};

/// Generates <a, b, c> for an H-type witness and verifies |H| = 54 and
/// Z(H) = <(abc)^2> of order 3. Throws UnexpectedSubgroupError otherwise.
template <groups::GroupElement E>
HSubgroup<E> extract_h(const ConcreteSystem<E>& cs, const Triple& w) {
  const auto& I = cs.transpositions;
  const std::vector<E> gens = {I[w.a], I[w.b], I[w.c]};
  // 54 is the target; anything larger is reported with its true order when
  // it fits under the cap.
  auto group = groups::generate(gens, 100000);
  if (group.order() != 54) throw UnexpectedSubgroupError(group.order());
  auto z = groups::center(group);
  const E abc = compose(compose(gens[0], gens[1]), gens[2]);
  const E z_gen = compose(abc, abc);
  const bool ok = z.size() == 3 && element_order(z_gen, 3) == 3 &&
                  std::find(z.begin(), z.end(), z_gen) != z.end();
  if (!ok) {
    throw UnexpectedSubgroupError(group.order(), "order-54 subgroup whose center is not <(abc)^2> of order 3");
  }
  return HSubgroup<E>{std::move(group), std::move(z), z_gen};
}

}  // namespace fischer_lab::fischer

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "fischer_lab/catalog/catalog.hpp"
#include "fischer_lab/fischer/transposition_system.hpp"

namespace fischer_lab::testing {

// Catalog instances with |I| <= 100, smallest first.
inline const std::vector<std::string>& small_instances() {
  static const std::vector<std::string> list = {
      "symmetric:n=3",          "symmetric:n=4",          "symmetric:n=5",
      "symmetric:n=6",          "symmetric:n=7",          "symmetric:n=8",
      "symmetric:n=9",          "symmetric:n=10",         "symmetric:n=11",
      "symmetric:n=12",         "symplectic-f2:n=1",      "symplectic-f2:n=2",
      "symplectic-f2:n=3",      "orthogonal-f2:dim=4,eps=+", "orthogonal-f2:dim=4,eps=-",
      "orthogonal-f2:dim=6,eps=+", "orthogonal-f2:dim=6,eps=-", "orthogonal-f3:dim=3",
      "orthogonal-f3:dim=3,class=-", "orthogonal-f3:dim=4",  "orthogonal-f3:dim=4,class=-",
      "orthogonal-f3:dim=5",    "orthogonal-f3:dim=5,class=-", "weyl:type=A,rank=2",
      "weyl:type=A,rank=3",     "weyl:type=D,rank=4",     "weyl:type=D,rank=5",
      "weyl:type=D,rank=6",     "weyl:type=E,rank=6",     "weyl:type=E,rank=7",
  };
  return list;
}

/// Calls f(instance) with the concrete Instance<E> behind a descriptor.
template <typename F>
decltype(auto) with_instance(std::string_view descriptor, F&& f) {
  const auto inst = catalog::build(catalog::parse_descriptor(descriptor));
  return std::visit(std::forward<F>(f), inst);
}

/// Calls f(concrete_system) for a descriptor.
template <typename F>
decltype(auto) with_system(std::string_view descriptor, F&& f) {
  return with_instance(descriptor, [&](const auto& inst) {
    return f(fischer::build_system(inst.generators, inst.seed));
  });
}

inline fischer::ConcreteSystem<groups::Permutation> symmetric_system(int n) {
  const auto inst = catalog::symmetric(n);
  return fischer::build_system(inst.generators, inst.seed);
}

inline fischer::TranspositionSystem system_of(std::string_view descriptor) {
  return with_system(descriptor, [](const auto& cs) { return cs.system; });
}

/// Plain Gauss-Jordan rank over Q with GMP rationals.
inline std::size_t rank_oracle(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace fischer_lab::testing

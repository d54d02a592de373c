#include "fischer_lab/fischer/transposition_system.hpp"

#include <algorithm>
#include <numeric>

namespace fischer_lab::fischer {

TranspositionSystem::TranspositionSystem(std::size_t size, std::vector<std::uint8_t> orders,
                                         std::vector<std::uint32_t> circ,
                                         std::vector<std::vector<std::uint32_t>> generator_action,
                                         std::vector<std::string> labels)
    : size_(size),
      words_((size + 63) / 64),
      orders_(std::move(orders)),
      circ_(std::move(circ)),
      adjacency_(size * ((size + 63) / 64), 0),
      neighbors_(size),
      generator_action_(std::move(generator_action)),
      labels_(std::move(labels)) {
  if (orders_.size() != size * size || circ_.size() != size * size) {
    throw Error(ErrorKind::structural, "TranspositionSystem: table sizes do not match |I|");
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const unsigned o = order(i, j);
      if ((i == j) != (o == 1) || o > 3 || o != order(j, i)) {
        throw Error(ErrorKind::structural, "TranspositionSystem: invalid order matrix");
      }
      if (o == 3) {
        adjacency_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        neighbors_[i].push_back(static_cast<std::uint32_t>(j));
      }
    }
  }
}

std::size_t TranspositionSystem::circ(std::size_t i, std::size_t j) const {
  const auto k = circ_[i * size_ + j];
  if (k == no_index) throw Error(ErrorKind::domain, "circ: transpositions are not adjacent");
  return k;
}

std::vector<std::uint32_t> TranspositionSystem::transposition_action(std::size_t i) const {
  std::vector<std::uint32_t> perm(size_);
  for (std::size_t j = 0; j < size_; ++j) {
    perm[j] = adjacent(i, j) ? circ_[i * size_ + j] : static_cast<std::uint32_t>(j);
  }
  return perm;
}

std::vector<std::vector<std::size_t>> components(const TranspositionSystem& sys) {
  const std::size_t n = sys.size();
  std::vector<std::size_t> label(n, n);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (label[start] != n) continue;
    std::vector<std::size_t> comp{start};
    label[start] = out.size();
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (auto j : sys.neighbors(comp[k])) {
        if (label[j] == n) {
          label[j] = out.size();
          comp.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }

  // Orbits under conjugation by the transpositions themselves (union-find).
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t t = 0; t < n; ++t) {
    const auto perm = sys.transposition_action(t);
    for (std::size_t j = 0; j < n; ++j) parent[find(j)] = find(perm[j]);
  }
  for (const auto& comp : out) {
    const auto root = find(comp.front());
    for (auto j : comp) {
      if (find(j) != root) throw Error(ErrorKind::internal, "components: graph component splits a class");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (find(j) != find(out[label[j]].front())) {
      throw Error(ErrorKind::internal, "components: class meets two graph components");
    }
  }
  std::size_t roots = 0;
  for (std::size_t j = 0; j < n; ++j) roots += find(j) == j;
  if (roots != out.size()) throw Error(ErrorKind::internal, "components: class count mismatch");
  return out;
}

std::size_t valency(const TranspositionSystem& sys, std::span<const std::size_t> component) {
  if (component.empty()) throw Error(ErrorKind::domain, "valency: empty component");
  const std::size_t k = sys.neighbors(component.front()).size();
  for (auto i : component) {
    if (sys.neighbors(i).size() != k) {
      throw Error(ErrorKind::irregular_component,
                  "irregular-component: transposition " + std::to_string(i) + " has " +
                      std::to_string(sys.neighbors(i).size()) + " neighbours, expected " + std::to_string(k));
    }
  }
  return k;
}

bool conjugation_preserves_graph(const TranspositionSystem& sys) {
  const std::size_t n = sys.size();
  for (std::size_t t = 0; t < n; ++t) {
    const auto perm = sys.transposition_action(t);
    std::vector<bool> hit(n, false);
    for (auto p : perm) {
      if (p >= n || hit[p]) return false;
      hit[p] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (sys.order(i, j) != sys.order(perm[i], perm[j])) return false;
      }
    }
  }
  return true;
}

void write_dot(const TranspositionSystem& sys, std::ostream& out) {
  out << "graph fischer {\n";
  for (std::size_t i = 0; i < sys.size(); ++i) out << "  " << i << ";\n";
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (auto j : sys.neighbors(i)) {
      if (i < j) out << "  " << i << " -- " << j << ";\n";
    }
  }
  out << "}\n";
}

}  // namespace fischer_lab::fischer

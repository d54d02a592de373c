#include "fischer_lab/fischer/h_triple.hpp"

#include <bit>
#include <thread>

namespace fischer_lab::fischer {

namespace {

// Calls fn(c) for each c adjacent to both a and b, in increasing order, until
// fn returns true.
template <typename Fn>
bool for_common_neighbors(const TranspositionSystem& sys, std::size_t a, std::size_t b, Fn&& fn) {
  const auto ra = sys.adjacency_row(a);
  const auto rb = sys.adjacency_row(b);
  for (std::size_t w = 0; w < ra.size(); ++w) {
    std::uint64_t bits = ra[w] & rb[w];
    while (bits) {
      const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      if (fn(c)) return true;
    }
  }
  return false;
}

std::optional<Triple> first_in_range(const TranspositionSystem& sys, std::size_t begin, std::size_t end) {
  for (std::size_t a = begin; a < end; ++a) {
    for (auto b : sys.neighbors(a)) {
      std::optional<Triple> hit;
      for_common_neighbors(sys, a, b, [&](std::size_t c) {
        Triple t{a, b, c};
        if (classify(sys, t) == TripleKind::h_type) {
          hit = t;
          return true;
        }
        return false;
      });
      if (hit) return hit;
    }
  }
  return std::nullopt;
}

}  // namespace

TripleKind classify(const TranspositionSystem& sys, const Triple& t) {
  if (!sys.adjacent(t.a, t.b) || !sys.adjacent(t.a, t.c) || !sys.adjacent(t.b, t.c)) {
    throw Error(ErrorKind::domain, "classify: triple is not pairwise adjacent");
  }
  // aba = a o b, so abac = (a o b) c.
  return static_cast<TripleKind>(sys.order(sys.circ(t.a, t.b), t.c));
}

std::optional<Triple> detect_h_triple(const TranspositionSystem& sys, unsigned threads) {
  const std::size_t n = sys.size();
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2 * threads) return first_in_range(sys, 0, n);

  std::vector<std::optional<Triple>> found(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(n, t * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&, t, begin, end] { found[t] = first_in_range(sys, begin, end); });
  }
  for (auto& th : pool) th.join();
  // Ranges are ordered, so the first chunk with a hit holds the global minimum.
  for (const auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

TripleCensus triple_census(const TranspositionSystem& sys) {
  TripleCensus census;
  for (std::size_t a = 0; a < sys.size(); ++a) {
    for (auto b : sys.neighbors(a)) {
      for_common_neighbors(sys, a, b, [&](std::size_t c) {
        switch (classify(sys, Triple{a, b, c})) {
          case TripleKind::s3_collapse: ++census.s3_collapse; break;
          case TripleKind::s4_type: ++census.s4_type; break;
          case TripleKind::h_type: ++census.h_type; break;
        }
        return false;
      });
    }
  }
  return census;
}

}  // namespace fischer_lab::fischer

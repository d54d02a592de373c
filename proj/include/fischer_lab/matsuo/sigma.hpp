#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fischer_lab/error.hpp"
#include "fischer_lab/fischer/transposition_system.hpp"
#include "fischer_lab/groups/closure.hpp"
#include "fischer_lab/matsuo/algebra.hpp"
#include "fischer_lab/matsuo/spectrum.hpp"

namespace fischer_lab::matsuo {

/// Basis permutation x^i -> x^{g i g^-1}.
template <groups::GroupElement E>
std::vector<std::uint32_t> sigma_image(const fischer::ConcreteSystem<E>& cs, const E& g) {
  const E g_inv = inverse(g);
  std::vector<std::uint32_t> perm(cs.transpositions.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const auto k = cs.index_of(compose(compose(g, cs.transpositions[i]), g_inv));
    if (!k) throw Error(ErrorKind::internal, "sigma: conjugate of a transposition left I");
    perm[i] = static_cast<std::uint32_t>(*k);
  }
  return perm;
}

struct SigmaReport {
  std::vector<std::vector<std::uint32_t>> generator_images;
  std::vector<std::size_t> kernel;  // element indices in the group
  std::vector<std::size_t> center;
};

/// σ : G -> Aut B. Checks that every generator image preserves product and
/// form, that σ(gh) = σ(g)σ(h) on generator pairs, and that ker σ (elements
/// fixing every x^i) equals Z(G) (elements commuting with the generators).
/// A failure throws Error(internal).
template <groups::GroupElement E>
SigmaReport sigma_homomorphism(const MatsuoAlgebra& a, const fischer::ConcreteSystem<E>& cs,
                               const groups::GeneratedGroup<E>& group) {
  if (cs.transpositions.size() != a.dimension()) {
    throw Error(ErrorKind::domain, "sigma: algebra and transposition system differ in size");
  }
  SigmaReport out;
  const auto& gens = group.generators();
  for (const auto& g : gens) {
    auto perm = sigma_image(cs, g);
    if (!is_automorphism(a, perm) || !is_isometry(a, perm)) {
      throw Error(ErrorKind::internal, "sigma: generator image is not a form-preserving automorphism");
    }
    out.generator_images.push_back(std::move(perm));
  }
  for (std::size_t x = 0; x < gens.size(); ++x) {
    for (std::size_t y = 0; y < gens.size(); ++y) {
      const auto gh = sigma_image(cs, compose(gens[x], gens[y]));
      const auto& px = out.generator_images[x];
      const auto& py = out.generator_images[y];
      for (std::size_t i = 0; i < gh.size(); ++i) {
        if (gh[i] != px[py[i]]) throw Error(ErrorKind::internal, "sigma: not a homomorphism on a generator pair");
      }
    }
  }

  const auto& elements = group.elements();
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const E& z = elements[e];
    const bool fixes_all = std::all_of(cs.transpositions.begin(), cs.transpositions.end(),
                                       [&](const E& t) { return compose(z, t) == compose(t, z); });
    if (fixes_all) out.kernel.push_back(e);
  }
  for (const auto& z : groups::center(group)) out.center.push_back(*group.index_of(z));
  std::sort(out.center.begin(), out.center.end());
  if (out.kernel != out.center) throw Error(ErrorKind::internal, "sigma: kernel differs from the center");
  return out;
}

enum class PairType { type_1A, type_2A, type_2B };

std::string_view to_string(PairType t);

/// Dihedral type of (e, f) read off (e|f) in B_{1/2,1/2}: 1A if e = f, 2B if
/// (e|f) = 0, 2A if (e|f) = 2^{-5}, checked against the table row.
/// Error(domain) unless α = β = 1/2; Error(not_sigma_configuration) for any
/// other form value.
PairType pair_type(const MatsuoAlgebra& a, const AlgebraVector& e, const AlgebraVector& f);
PairType pair_type(const MatsuoAlgebra& a, std::size_t i, std::size_t j);

}  // namespace fischer_lab::matsuo

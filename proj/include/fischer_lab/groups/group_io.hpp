#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fischer_lab/groups/closure.hpp"
#include "fischer_lab/groups/fp_matrix.hpp"
#include "fischer_lab/groups/permutation.hpp"

// JSON layout for enumerated groups, used by the on-disk closure cache.
//
//   {
//     "format": "fischer-lab-group/1",
//     "element_type": "permutation" | "fp-matrix",
//     "shape": {"degree": n} | {"modulus": p, "dim": d},
//     "key": "<16 hex digits>",          content hash of the generators
//     "generators": [<element>, ...],
//     "order": N,
//     "layer_starts": [0, 1, ...],
//     "elements": [<element>, ...]        enumeration order, identity first
//   }
//
// A permutation is its image array; a matrix is its row-major residue
// string ("0110" for [[0,1],[1,0]]).
namespace fischer_lab::groups {

inline constexpr const char* group_format_tag = "fischer-lab-group/1";

template <typename E>
struct ElementCodec;

template <>
struct ElementCodec<Permutation> {
  static constexpr const char* type_name = "permutation";
  static nlohmann::json shape(const Permutation& sample);
  static nlohmann::json encode(const Permutation& g);
  static Permutation decode(const nlohmann::json& shape, const nlohmann::json& j);
};

template <>
struct ElementCodec<FpMatrix> {
  static constexpr const char* type_name = "fp-matrix";
  static nlohmann::json shape(const FpMatrix& sample);
  static nlohmann::json encode(const FpMatrix& g);
  static FpMatrix decode(const nlohmann::json& shape, const nlohmann::json& j);
};

/// FNV-1a over the canonical generator encodings, as 16 hex digits.
std::string content_hash(const std::string& canonical);

template <GroupElement E>
std::string generators_key(std::span<const E> generators) {
  std::string canonical = ElementCodec<E>::type_name;
  for (const auto& g : generators) canonical += "|" + ElementCodec<E>::encode(g).dump();
  return content_hash(canonical);
}

template <GroupElement E>
nlohmann::json group_to_json(const GeneratedGroup<E>& group) {
  using Codec = ElementCodec<E>;
  nlohmann::json j;
  j["format"] = group_format_tag;
  j["element_type"] = Codec::type_name;
  j["shape"] = Codec::shape(group.identity());
  j["key"] = generators_key<E>(group.generators());
  j["order"] = group.order();
  j["layer_starts"] = group.layer_starts();
  auto& gens = j["generators"] = nlohmann::json::array();
  for (const auto& g : group.generators()) gens.push_back(Codec::encode(g));
  auto& els = j["elements"] = nlohmann::json::array();
  for (const auto& e : group.elements()) els.push_back(Codec::encode(e));
  return j;
}

template <GroupElement E>
GeneratedGroup<E> group_from_json(const nlohmann::json& j) {
  using Codec = ElementCodec<E>;
  if (j.at("format") != group_format_tag || j.at("element_type") != Codec::type_name) {
    throw Error(ErrorKind::parse, "group JSON: unexpected format or element type");
  }
  const auto& shape = j.at("shape");
  std::vector<E> gens, elements;
  for (const auto& g : j.at("generators")) gens.push_back(Codec::decode(shape, g));
  for (const auto& e : j.at("elements")) elements.push_back(Codec::decode(shape, e));
  if (elements.size() != j.at("order").get<std::size_t>()) {
    throw Error(ErrorKind::parse, "group JSON: order does not match element count");
  }
  return GeneratedGroup<E>::from_elements(std::move(gens), std::move(elements),
                                          j.at("layer_starts").get<std::vector<std::size_t>>());
}

std::optional<nlohmann::json> read_cache_file(const std::filesystem::path& path);
void write_cache_file(const std::filesystem::path& path, const nlohmann::json& j);

/// `generate` backed by an optional cache directory: a file named after the
/// generator key is reused when its generators match exactly.
template <GroupElement E>
GeneratedGroup<E> generate_cached(const std::vector<E>& generators, std::size_t max_order, unsigned threads,
                                  const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return generate(generators, max_order, threads);
  const auto path = *cache_dir / (generators_key<E>(generators) + ".json");
  if (auto cached = read_cache_file(path)) {
    try {
      auto group = group_from_json<E>(*cached);
      if (group.generators() == generators) {
        if (group.order() > max_order) throw EnumerationCapError(max_order, group.order());
        return group;
      }
    } catch (const EnumerationCapError&) {
      throw;
    } catch (const std::exception&) {
      // Unreadable or stale entry: fall through and regenerate.
    }
  }
  auto group = generate(generators, max_order, threads);
  write_cache_file(path, group_to_json(group));
  return group;
}

}  // namespace fischer_lab::groups

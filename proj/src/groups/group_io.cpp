#include "fischer_lab/groups/group_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

namespace fischer_lab::groups {

nlohmann::json ElementCodec<Permutation>::shape(const Permutation& sample) {
  return {{"degree", sample.degree()}};
}

nlohmann::json ElementCodec<Permutation>::encode(const Permutation& g) {
  return nlohmann::json(std::vector<Point>(g.images().begin(), g.images().end()));
}

Permutation ElementCodec<Permutation>::decode(const nlohmann::json& shape, const nlohmann::json& j) {
  auto images = j.get<std::vector<Point>>();
  if (images.size() != shape.at("degree").get<std::size_t>()) {
    throw Error(ErrorKind::parse, "group JSON: permutation degree mismatch");
  }
  return Permutation(std::move(images));
}

nlohmann::json ElementCodec<FpMatrix>::shape(const FpMatrix& sample) {
  return {{"modulus", sample.modulus()}, {"dim", sample.dim()}};
}

nlohmann::json ElementCodec<FpMatrix>::encode(const FpMatrix& g) {
  std::string s;
  for (Residue r : g.residues()) s += static_cast<char>('0' + r);
  return s;
}

FpMatrix ElementCodec<FpMatrix>::decode(const nlohmann::json& shape, const nlohmann::json& j) {
  const auto p = shape.at("modulus").get<unsigned>();
  const auto dim = shape.at("dim").get<std::size_t>();
  const auto s = j.get<std::string>();
  if (s.size() != dim * dim) throw Error(ErrorKind::parse, "group JSON: matrix size mismatch");
  std::vector<int> entries;
  for (char c : s) {
    if (c < '0' || static_cast<unsigned>(c - '0') >= p) {
      throw Error(ErrorKind::parse, "group JSON: residue out of range");
    }
    entries.push_back(c - '0');
  }
  return FpMatrix(p, dim, entries);
}

std::string content_hash(const std::string& canonical) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<nlohmann::json> read_cache_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void write_cache_file(const std::filesystem::path& path, const nlohmann::json& j) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;  // cache is best effort
    out << j.dump();
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace fischer_lab::groups

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "fischer_lab/groups/closure.hpp"
#include "fischer_lab/matsuo/rational.hpp"

namespace fischer_lab::cli {

inline constexpr std::size_t default_max_axes = 512;
// Largest group for which σ and its kernel are computed element by element.
inline constexpr std::size_t sigma_group_limit = 100'000;
// Largest |I| for the exhaustive triple check of the form invariance.
inline constexpr std::size_t exhaustive_axiom_limit = 100;

inline constexpr const char* report_format_tag = "fischer-lab-report/1";

struct AnalyzeOptions {
  std::string descriptor;
  Rational alpha{1, 2};
  Rational beta{1, 2};
  std::size_t max_order = groups::default_enumeration_cap;
  std::size_t max_axes = default_max_axes;
  unsigned threads = 1;
  bool timing = false;
  std::optional<std::filesystem::path> cache_dir;
  std::optional<std::filesystem::path> dot_path;
  std::optional<std::filesystem::path> gram_path;
  std::optional<std::filesystem::path> structure_path;
};

struct AnalyzeResult {
  nlohmann::json report;
  int exit_code = 0;  // 0 pass, 1 verdict failure, 3 resource cap
};

/// Runs the full pipeline. Descriptor problems propagate as Error(parse) or
/// Error(domain); everything else is recorded in the report.
AnalyzeResult analyze(const AnalyzeOptions& options);

/// Human-readable summary of a report.
std::string render_text(const nlohmann::json& report);

}  // namespace fischer_lab::cli

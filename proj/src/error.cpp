#include "fischer_lab/error.hpp"

namespace fischer_lab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::structural: return "structural";
    case ErrorKind::order_overflow: return "order-overflow";
    case ErrorKind::enumeration_cap: return "enumeration-cap";
    case ErrorKind::not_3_transposition: return "not-3-transposition";
    case ErrorKind::irregular_component: return "irregular-component";
    case ErrorKind::unexpected_subgroup: return "unexpected-subgroup";
    case ErrorKind::degenerate_alpha: return "degenerate-alpha";
    case ErrorKind::radical_not_ideal: return "radical-not-ideal";
    case ErrorKind::not_sigma_configuration: return "not-sigma-configuration";
    case ErrorKind::not_in_table: return "not-in-table";
    case ErrorKind::domain: return "domain";
    case ErrorKind::parse: return "parse";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

EnumerationCapError::EnumerationCapError(std::size_t cap, std::size_t reached)
    : Error(ErrorKind::enumeration_cap,
            "enumeration-cap: closure exceeded cap " + std::to_string(cap) +
                " (reached " + std::to_string(reached) + " elements)"),
      cap_(cap),
      reached_(reached) {}

NotThreeTranspositionError::NotThreeTranspositionError(std::size_t first,
                                                       std::size_t second,
                                                       std::size_t order)
    : Error(ErrorKind::not_3_transposition,
            "not-3-transposition: product of transpositions " +
                std::to_string(first) + " and " + std::to_string(second) +
                " has order " +
                (order == 0 ? std::string("above cap") : std::to_string(order))),
      first_(first),
      second_(second),
      order_(order) {}

UnexpectedSubgroupError::UnexpectedSubgroupError(std::size_t order, const std::string& detail)
    : Error(ErrorKind::unexpected_subgroup,
            detail.empty() ? "unexpected-subgroup: triple generates a group of order " +
                                 std::to_string(order) + " instead of 54"
                           : "unexpected-subgroup: " + detail),
      order_(order) {}

}  // namespace fischer_lab

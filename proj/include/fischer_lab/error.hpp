#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fischer_lab {

enum class ErrorKind {
  structural,
  order_overflow,
  enumeration_cap,
  not_3_transposition,
  irregular_component,
  unexpected_subgroup,
  degenerate_alpha,
  radical_not_ideal,
  not_sigma_configuration,
  not_in_table,
  domain,
  parse,
  internal,
};

std::string_view to_string(ErrorKind kind);

// Base of every library error; `kind()` is the machine-readable reason.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class EnumerationCapError : public Error {
 public:
  EnumerationCapError(std::size_t cap, std::size_t reached);

  std::size_t cap() const noexcept { return cap_; }
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t cap_;
  std::size_t reached_;
};

class NotThreeTranspositionError : public Error {
 public:
  // `order` is 0 when the product order exceeded the search cap.
  NotThreeTranspositionError(std::size_t first, std::size_t second,
                             std::size_t order);

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }
  std::size_t order() const noexcept { return order_; }

 private:
  std::size_t first_;
  std::size_t second_;
  std::size_t order_;
};

class UnexpectedSubgroupError : public Error {
 public:
  explicit UnexpectedSubgroupError(std::size_t order, const std::string& detail = {});

  std::size_t order() const noexcept { return order_; }

 private:
  std::size_t order_;
};

}  // namespace fischer_lab

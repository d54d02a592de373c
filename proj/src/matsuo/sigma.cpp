#include "fischer_lab/matsuo/sigma.hpp"

#include "fischer_lab/virasoro/virasoro.hpp"

namespace fischer_lab::matsuo {

std::string_view to_string(PairType t) {
  switch (t) {
    case PairType::type_1A:
      return "1A";
    case PairType::type_2A:
      return "2A";
    case PairType::type_2B:
      return "2B";
  }
  return "?";
}

PairType pair_type(const MatsuoAlgebra& a, const AlgebraVector& e, const AlgebraVector& f) {
  const Rational half(1, 2);
  if (a.alpha() != half || a.beta() != half) {
    throw Error(ErrorKind::domain, "pair_type needs alpha = beta = 1/2");
  }
  const Rational value = form(a, e, f);
  PairType type;
  if (e == f) {
    type = PairType::type_1A;
  } else if (value.is_zero()) {
    type = PairType::type_2B;
  } else if (value == Rational(1, 32)) {
    type = PairType::type_2A;
  } else {
    throw Error(ErrorKind::not_sigma_configuration,
                "not-sigma-configuration: (e|f) = " + value.to_string() + " is not 0 or 1/32");
  }
  const auto& row = virasoro::sakuma_lookup(to_string(type));
  if (row.inner_product() != value) {
    throw Error(ErrorKind::internal, "pair_type: (e|f) = " + value.to_string() + " disagrees with the " +
                                         std::string(row.type) + " table row");
  }
  return type;
}

PairType pair_type(const MatsuoAlgebra& a, std::size_t i, std::size_t j) {
  const std::size_t n = a.dimension();
  if (i >= n || j >= n) throw Error(ErrorKind::domain, "pair_type: axis index out of range");
  return pair_type(a, AlgebraVector::basis(n, i), AlgebraVector::basis(n, j));
}

}  // namespace fischer_lab::matsuo

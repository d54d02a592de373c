#pragma once

#include <ostream>

#include <nlohmann/json.hpp>

#include "fischer_lab/matsuo/algebra.hpp"

namespace fischer_lab::matsuo {

/// Dense Gram matrix: one line per row, entries "p/q" separated by commas.
void write_gram_csv(const MatsuoAlgebra& a, std::ostream& out);

/// Header "i,j,k,coefficient", then one line per term of x^i x^j with i <= j.
void write_structure_csv(const MatsuoAlgebra& a, std::ostream& out);

/// {"alpha", "beta", "dimension", "gram": [[...]], "products": [[i, j, [[k, c], ...]], ...]}
/// with rationals as "p/q" strings; products list i <= j with a nonzero result.
nlohmann::json algebra_to_json(const MatsuoAlgebra& a);

}  // namespace fischer_lab::matsuo

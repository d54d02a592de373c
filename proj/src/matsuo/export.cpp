#include "fischer_lab/matsuo/export.hpp"

namespace fischer_lab::matsuo {

void write_gram_csv(const MatsuoAlgebra& a, std::ostream& out) {
  const std::size_t n = a.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ',';
      out << a.form(i, j).to_string();
    }
    out << '\n';
  }
}

void write_structure_csv(const MatsuoAlgebra& a, std::ostream& out) {
  out << "i,j,k,coefficient\n";
  const std::size_t n = a.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (const auto& t : a.product(i, j)) {
        out << i << ',' << j << ',' << t.index << ',' << t.coefficient.to_string() << '\n';
      }
    }
  }
}

nlohmann::json algebra_to_json(const MatsuoAlgebra& a) {
  const std::size_t n = a.dimension();
  nlohmann::json gram = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(a.form(i, j).to_string());
    gram.push_back(std::move(row));
  }
  nlohmann::json products = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto terms = a.product(i, j);
      if (terms.empty()) continue;
      nlohmann::json t = nlohmann::json::array();
      for (const auto& term : terms) t.push_back({term.index, term.coefficient.to_string()});
      products.push_back({i, j, std::move(t)});
    }
  }
  return {{"alpha", a.alpha().to_string()},
          {"beta", a.beta().to_string()},
          {"dimension", n},
          {"gram", std::move(gram)},
          {"products", std::move(products)}};
}

}  // namespace fischer_lab::matsuo

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fischer_lab/groups/fp_matrix.hpp"
#include "fischer_lab/groups/permutation.hpp"

namespace fischer_lab::catalog {

using groups::FpMatrix;
using groups::Permutation;

// Descriptor parameters, one struct per family. Ranges are checked by the
// constructors and by parse_descriptor.
struct Symmetric {
  int n = 3;

  friend bool operator==(const Symmetric&, const Symmetric&) = default;
};
struct Weyl {
  char type = 'A';
  int rank = 2;

  friend bool operator==(const Weyl&, const Weyl&) = default;
};
struct SymplecticF2 {
  int n = 1;

  friend bool operator==(const SymplecticF2&, const SymplecticF2&) = default;
};
struct OrthogonalF2 {
  int dim = 4;
  int eps = +1;

  friend bool operator==(const OrthogonalF2&, const OrthogonalF2&) = default;
};
struct OrthogonalF3 {
  int dim = 3;
  std::vector<int> form;  // diagonal entries in {1, 2}; empty means all ones
  int reflection_class = 1;  // value of q(v) selecting the reflection class

  friend bool operator==(const OrthogonalF3&, const OrthogonalF3&) = default;
};

using Descriptor = std::variant<Symmetric, Weyl, SymplecticF2, OrthogonalF2, OrthogonalF3>;

/// Parses "family:key=value,..." (e.g. "weyl:type=E,rank=6"). Throws
/// Error(parse) for unknown families, keys or out-of-range values.
Descriptor parse_descriptor(std::string_view text);

/// Canonical descriptor string; parse_descriptor(to_string(d)) == d.
std::string to_string(const Descriptor& d);

struct FamilyInfo {
  std::string name;
  std::string example;
  std::string parameters;
};

const std::vector<FamilyInfo>& families();

/// Generators of the group plus the involutions whose conjugacy closure is
/// the designated transposition set.
template <typename E>
struct Instance {
  std::string descriptor;
  std::vector<E> generators;
  std::vector<E> seed;
};

using AnyInstance = std::variant<Instance<Permutation>, Instance<FpMatrix>>;

AnyInstance build(const Descriptor& d);

/// Adjacent transpositions (i i+1); seed (0 1). 2 <= n <= 12.
Instance<Permutation> symmetric(int n);

/// Transvections x -> x + B(x,v) v of F_2^{2n} for v != 0. 1 <= n <= 3.
Instance<FpMatrix> symplectic_f2(int n);

/// Transvections for the non-singular vectors (q(v) = 1) of the quadratic
/// form of type eps on F_2^dim. dim in {4, 6, 8}.
Instance<FpMatrix> orthogonal_f2(int dim, int eps);

/// Reflections x -> x - 2 B(x,v)/q(v) v over F_3 for the vectors with
/// q(v) = reflection_class. 3 <= dim <= 5; `form` holds the diagonal.
Instance<FpMatrix> orthogonal_f3(int dim, std::span<const int> form, int reflection_class = 1);

/// Simple reflections of W(type_rank) acting on its root set.
Instance<Permutation> weyl(char type, int rank);

// Building blocks, exposed for verification.

/// Alternating form on F_2^{2n} with hyperbolic pairs (x_0,x_1), (x_2,x_3), ...
int symplectic_form_f2(std::span<const int> x, std::span<const int> y);

/// q_+ = x0x1 + x2x3 + ...; q_- replaces the first pair by x0^2 + x0x1 + x1^2.
int quadratic_form_f2(int eps, std::span<const int> x);

FpMatrix transvection_f2(std::span<const int> v);

/// Throws Error(domain) if q(v) = 0.
FpMatrix reflection_f3(std::span<const int> form, std::span<const int> v);

int quadratic_form_f3(std::span<const int> form, std::span<const int> x);

/// Integer root vectors, sorted lexicographically. E-type roots are scaled
/// by 2 so every coordinate is an integer.
std::vector<std::vector<int>> root_system(char type, int rank);

}  // namespace fischer_lab::catalog

#include "fischer_lab/catalog/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "fischer_lab/error.hpp"
#include "fischer_lab/groups/closure.hpp"

namespace fischer_lab::catalog {

namespace {

[[noreturn]] void parse_fail(const std::string& message) {
  throw Error(ErrorKind::parse, "descriptor: " + message);
}

[[noreturn]] void range_fail(const std::string& message) {
  throw Error(ErrorKind::domain, message);
}

// All vectors of F_p^dim, first coordinate most significant.
std::vector<std::vector<int>> all_vectors(int p, int dim) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(dim, 0);
  while (true) {
    out.push_back(v);
    int k = dim - 1;
    while (k >= 0 && v[k] == p - 1) v[k--] = 0;
    if (k < 0) break;
    ++v[k];
  }
  return out;
}

bool is_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

template <typename E>
Instance<E> class_instance(std::string descriptor, std::vector<E> klass) {
  std::sort(klass.begin(), klass.end());
  klass.erase(std::unique(klass.begin(), klass.end()), klass.end());
  Instance<E> inst;
  inst.descriptor = std::move(descriptor);
  inst.generators = groups::reduce_generators<E>(klass);
  inst.seed = inst.generators;
  return inst;
}

int parse_int(std::string_view key, std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    parse_fail("'" + std::string(key) + "' expects an integer, got '" + std::string(text) + "'");
  }
  return value;
}

int parse_sign(std::string_view key, std::string_view text) {
  if (text == "+" || text == "+1" || text == "plus") return +1;
  if (text == "-" || text == "-1" || text == "minus") return -1;
  parse_fail("'" + std::string(key) + "' expects + or -, got '" + std::string(text) + "'");
}

void check_symmetric(int n) {
  if (n < 2 || n > 12) range_fail("symmetric: n must be in [2, 12]");
}
void check_symplectic(int n) {
  if (n < 1 || n > 3) range_fail("symplectic-f2: n must be in [1, 3]");
}
void check_orthogonal_f2(int dim, int eps) {
  if (dim != 4 && dim != 6 && dim != 8) range_fail("orthogonal-f2: dim must be 4, 6 or 8");
  if (eps != 1 && eps != -1) range_fail("orthogonal-f2: eps must be + or -");
}
void check_orthogonal_f3(int dim, std::span<const int> form, int cls) {
  if (dim < 3 || dim > 5) range_fail("orthogonal-f3: dim must be in [3, 5]");
  if (!form.empty() && static_cast<int>(form.size()) != dim) {
    range_fail("orthogonal-f3: form needs one diagonal entry per coordinate");
  }
  for (int d : form) {
    if (((d % 3) + 3) % 3 == 0) range_fail("orthogonal-f3: degenerate form (zero diagonal entry)");
  }
  if (cls != 1 && cls != 2) range_fail("orthogonal-f3: reflection class must be q(v) = 1 or 2");
}
void check_weyl(char type, int rank) {
  switch (type) {
    case 'A':
      if (rank >= 1 && rank <= 7) return;
      break;
    case 'D':
      if (rank >= 4 && rank <= 6) return;
      break;
    case 'E':
      if (rank >= 6 && rank <= 8) return;
      break;
    default:
      range_fail("weyl: type must be A, D or E");
  }
  range_fail(std::string("weyl: unsupported rank for type ") + type +
             " (A: 1..7, D: 4..6, E: 6..8)");
}

std::string sign_string(int eps) { return eps > 0 ? "+" : "-"; }

}  // namespace

Descriptor parse_descriptor(std::string_view text) {
  const auto colon = text.find(':');
  const std::string family(text.substr(0, colon));
  std::map<std::string, std::string, std::less<>> kv;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) parse_fail("expected key=value, got '" + std::string(item) + "'");
      if (!kv.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1))).second) {
        parse_fail("duplicate key '" + std::string(item.substr(0, eq)) + "'");
      }
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  auto take = [&](const char* key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    auto v = it->second;
    kv.erase(it);
    return v;
  };
  auto require = [&](const char* key) {
    auto v = take(key);
    if (!v) parse_fail(family + " requires '" + key + "'");
    return *v;
  };
  auto finish = [&](Descriptor d) {
    if (!kv.empty()) parse_fail("unknown key '" + kv.begin()->first + "' for " + family);
    return d;
  };

  if (family == "symmetric") {
    Symmetric d{parse_int("n", require("n"))};
    check_symmetric(d.n);
    return finish(d);
  }
  if (family == "symplectic-f2") {
    SymplecticF2 d{parse_int("n", require("n"))};
    check_symplectic(d.n);
    return finish(d);
  }
  if (family == "orthogonal-f2") {
    OrthogonalF2 d{parse_int("dim", require("dim")), parse_sign("eps", require("eps"))};
    check_orthogonal_f2(d.dim, d.eps);
    return finish(d);
  }
  if (family == "orthogonal-f3") {
    OrthogonalF3 d;
    d.dim = parse_int("dim", require("dim"));
    if (auto form = take("form")) {
      for (char c : *form) {
        if (c < '0' || c > '2') parse_fail("form digits must be 0, 1 or 2");
        d.form.push_back(c - '0');
      }
    }
    if (auto cls = take("class")) d.reflection_class = parse_sign("class", *cls) > 0 ? 1 : 2;
    check_orthogonal_f3(d.dim, d.form, d.reflection_class);
    if (d.form.empty()) d.form.assign(d.dim, 1);
    return finish(d);
  }
  if (family == "weyl") {
    const auto type = require("type");
    if (type.size() != 1) parse_fail("weyl type must be a single letter");
    Weyl d{type[0], parse_int("rank", require("rank"))};
    check_weyl(d.type, d.rank);
    return finish(d);
  }
  parse_fail("unknown family '" + family + "'");
}

std::string to_string(const Descriptor& d) {
  struct Printer {
    std::string operator()(const Symmetric& s) const { return "symmetric:n=" + std::to_string(s.n); }
    std::string operator()(const SymplecticF2& s) const { return "symplectic-f2:n=" + std::to_string(s.n); }
    std::string operator()(const OrthogonalF2& s) const {
      return "orthogonal-f2:dim=" + std::to_string(s.dim) + ",eps=" + sign_string(s.eps);
    }
    std::string operator()(const OrthogonalF3& s) const {
      std::string form;
      for (int i = 0; i < s.dim; ++i) {
        form += static_cast<char>('0' + (s.form.empty() ? 1 : ((s.form[i] % 3) + 3) % 3));
      }
      return "orthogonal-f3:dim=" + std::to_string(s.dim) + ",form=" + form +
             ",class=" + sign_string(s.reflection_class == 1 ? 1 : -1);
    }
    std::string operator()(const Weyl& s) const {
      return std::string("weyl:type=") + s.type + ",rank=" + std::to_string(s.rank);
    }
  };
  return std::visit(Printer{}, d);
}

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> list = {
      {"symmetric", "symmetric:n=5", "n in [2, 12]"},
      {"symplectic-f2", "symplectic-f2:n=3", "n in [1, 3] (dimension 2n)"},
      {"orthogonal-f2", "orthogonal-f2:dim=6,eps=+", "dim in {4, 6, 8}; eps in {+, -}"},
      {"orthogonal-f3", "orthogonal-f3:dim=5",
       "dim in [3, 5]; optional form=<digits in {1,2}>, class=<+|-> selecting q(v) = 1 or -1"},
      {"weyl", "weyl:type=E,rank=6", "type A (rank 1..7), D (rank 4..6), E (rank 6..8)"},
  };
  return list;
}

AnyInstance build(const Descriptor& d) {
  struct Builder {
    AnyInstance operator()(const Symmetric& s) const { return symmetric(s.n); }
    AnyInstance operator()(const SymplecticF2& s) const { return symplectic_f2(s.n); }
    AnyInstance operator()(const OrthogonalF2& s) const { return orthogonal_f2(s.dim, s.eps); }
    AnyInstance operator()(const OrthogonalF3& s) const {
      return orthogonal_f3(s.dim, s.form, s.reflection_class);
    }
    AnyInstance operator()(const Weyl& s) const { return weyl(s.type, s.rank); }
  };
  auto inst = std::visit(Builder{}, d);
  std::visit([&](auto& i) { i.descriptor = to_string(d); }, inst);
  return inst;
}

Instance<Permutation> symmetric(int n) {
  check_symmetric(n);
  Instance<Permutation> inst;
  inst.descriptor = to_string(Symmetric{n});
  const auto degree = static_cast<std::size_t>(n);
  for (int i = 0; i + 1 < n; ++i) {
    inst.generators.push_back(Permutation::transposition(degree, i, i + 1));
  }
  inst.seed = {Permutation::transposition(degree, 0, 1)};
  return inst;
}

int symplectic_form_f2(std::span<const int> x, std::span<const int> y) {
  int acc = 0;
  for (std::size_t k = 0; k + 1 < x.size(); k += 2) acc += x[k] * y[k + 1] + x[k + 1] * y[k];
  return acc & 1;
}

int quadratic_form_f2(int eps, std::span<const int> x) {
  int acc = 0;
  for (std::size_t k = 0; k + 1 < x.size(); k += 2) acc += x[k] * x[k + 1];
  if (eps < 0) acc += x[0] + x[1];  // x0^2 + x1^2 over F_2
  return acc & 1;
}

FpMatrix transvection_f2(std::span<const int> v) {
  const std::size_t dim = v.size();
  std::vector<int> e(dim * dim, 0);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      // B(e_c, v) picks the partner coordinate of c.
      const int bcv = v[c ^ 1];
      e[r * dim + c] = (r == c ? 1 : 0) + v[r] * bcv;
    }
  }
  return FpMatrix(2, dim, e);
}

Instance<FpMatrix> symplectic_f2(int n) {
  check_symplectic(n);
  const int dim = 2 * n;
  std::vector<FpMatrix> klass;
  for (const auto& v : all_vectors(2, dim)) {
    if (!is_zero(v)) klass.push_back(transvection_f2(v));
  }
  auto inst = class_instance(to_string(SymplecticF2{n}), std::move(klass));
  std::vector<int> e0(dim, 0);
  e0[0] = 1;
  inst.seed = {transvection_f2(e0)};
  return inst;
}

Instance<FpMatrix> orthogonal_f2(int dim, int eps) {
  check_orthogonal_f2(dim, eps);
  std::vector<FpMatrix> klass;
  for (const auto& v : all_vectors(2, dim)) {
    if (quadratic_form_f2(eps, v) == 1) klass.push_back(transvection_f2(v));
  }
  return class_instance(to_string(OrthogonalF2{dim, eps}), std::move(klass));
}

int quadratic_form_f3(std::span<const int> form, std::span<const int> x) {
  int acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += form[i] * x[i] * x[i];
  return ((acc % 3) + 3) % 3;
}

FpMatrix reflection_f3(std::span<const int> form, std::span<const int> v) {
  const int q = quadratic_form_f3(form, v);
  if (q == 0) throw Error(ErrorKind::domain, "reflection_f3: isotropic vector");
  const int q_inv = q;  // 1*1 = 2*2 = 1 mod 3
  const std::size_t dim = v.size();
  std::vector<int> e(dim * dim, 0);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      e[r * dim + c] = (r == c ? 1 : 0) - 2 * q_inv * v[r] * form[c] * v[c];
    }
  }
  return FpMatrix(3, dim, e);
}

Instance<FpMatrix> orthogonal_f3(int dim, std::span<const int> form, int reflection_class) {
  check_orthogonal_f3(dim, form, reflection_class);
  std::vector<int> diag(form.begin(), form.end());
  if (diag.empty()) diag.assign(dim, 1);
  for (int& d : diag) d = ((d % 3) + 3) % 3;
  std::vector<FpMatrix> klass;
  for (const auto& v : all_vectors(3, dim)) {
    if (quadratic_form_f3(diag, v) == reflection_class) klass.push_back(reflection_f3(diag, v));
  }
  if (klass.empty()) range_fail("orthogonal-f3: no vectors with the requested q(v)");
  return class_instance(to_string(OrthogonalF3{dim, diag, reflection_class}), std::move(klass));
}

std::vector<std::vector<int>> root_system(char type, int rank) {
  check_weyl(type, rank);
  std::set<std::vector<int>> roots;
  auto add_d_type = [&](int n, int scale) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int si : {-1, 1})
          for (int sj : {-1, 1}) {
            std::vector<int> r(n, 0);
            r[i] = si * scale;
            r[j] = sj * scale;
            roots.insert(r);
          }
  };
  if (type == 'A') {
    const int n = rank + 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) {
          std::vector<int> r(n, 0);
          r[i] = 1;
          r[j] = -1;
          roots.insert(r);
        }
  } else if (type == 'D') {
    add_d_type(rank, 1);
  } else {
    add_d_type(8, 2);
    for (int mask = 0; mask < 256; ++mask) {
      if (__builtin_popcount(mask) % 2 != 0) continue;
      std::vector<int> r(8);
      for (int i = 0; i < 8; ++i) r[i] = (mask >> i) & 1 ? -1 : 1;
      roots.insert(r);
    }
    auto dot = [](const std::vector<int>& a, const std::vector<int>& b) {
      int s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
      return s;
    };
    // E7 and E6 are the centralizers of an A1 and an A2 subsystem of E8.
    std::vector<std::vector<int>> fixed;
    if (rank <= 7) fixed.push_back(*roots.begin());
    if (rank == 6) {
      for (const auto& r : roots) {
        if (dot(r, fixed[0]) == -4) {
          fixed.push_back(r);
          break;
        }
      }
    }
    std::set<std::vector<int>> kept;
    for (const auto& r : roots) {
      if (std::all_of(fixed.begin(), fixed.end(), [&](const auto& f) { return dot(r, f) == 0; })) {
        kept.insert(r);
      }
    }
    roots = std::move(kept);
  }
  return {roots.begin(), roots.end()};
}

Instance<Permutation> weyl(char type, int rank) {
  const auto roots = root_system(type, rank);
  std::map<std::vector<int>, groups::Point> index;
  for (std::size_t i = 0; i < roots.size(); ++i) index.emplace(roots[i], static_cast<groups::Point>(i));
  auto dot = [](const std::vector<int>& a, const std::vector<int>& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += long{a[i]} * b[i];
    return s;
  };
  auto reflection = [&](const std::vector<int>& alpha) {
    const long norm = dot(alpha, alpha);
    std::vector<groups::Point> images(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const long coeff = 2 * dot(roots[i], alpha) / norm;
      std::vector<int> image = roots[i];
      for (std::size_t k = 0; k < image.size(); ++k) image[k] -= static_cast<int>(coeff * alpha[k]);
      images[i] = index.at(image);
    }
    return Permutation(std::move(images));
  };

  // Positive roots for the functional f(x) = sum 3^k x_k, which is nonzero on
  // every root; simple roots are the positive roots that are not a sum of two.
  auto height = [](const std::vector<int>& r) {
    long h = 0, w = 1;
    for (int x : r) {
      h += w * x;
      w *= 3;
    }
    return h;
  };
  std::vector<std::vector<int>> positive;
  for (const auto& r : roots)
    if (height(r) > 0) positive.push_back(r);
  std::set<std::vector<int>> positive_set(positive.begin(), positive.end());
  std::vector<std::vector<int>> simple;
  for (const auto& r : positive) {
    bool decomposable = false;
    for (const auto& a : positive) {
      std::vector<int> b(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) b[k] = r[k] - a[k];
      if (positive_set.contains(b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  if (static_cast<int>(simple.size()) != rank) {
    throw Error(ErrorKind::internal, "weyl: simple root count does not match rank");
  }

  Instance<Permutation> inst;
  inst.descriptor = to_string(Weyl{type, rank});
  for (const auto& a : simple) inst.generators.push_back(reflection(a));
  inst.seed = {inst.generators.front()};
  return inst;
}

}  // namespace fischer_lab::catalog

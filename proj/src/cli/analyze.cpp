#include "fischer_lab/cli/analyze.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "fischer_lab/catalog/catalog.hpp"
#include "fischer_lab/error.hpp"
#include "fischer_lab/fischer/h_triple.hpp"
#include "fischer_lab/fischer/transposition_system.hpp"
#include "fischer_lab/groups/group_io.hpp"
#include "fischer_lab/matsuo/algebra.hpp"
#include "fischer_lab/matsuo/export.hpp"
#include "fischer_lab/matsuo/radical.hpp"
#include "fischer_lab/matsuo/sigma.hpp"
#include "fischer_lab/matsuo/spectrum.hpp"

namespace fischer_lab::cli {

namespace {

using nlohmann::json;

json verdict(std::string_view status, std::string_view reason, const std::string& detail = {}) {
  json v{{"status", status}, {"reason", reason}};
  if (!detail.empty()) v["detail"] = detail;
  return v;
}

json pass(std::string_view reason) { return verdict("pass", reason); }
json not_run(std::string_view reason, const std::string& detail = {}) { return verdict("not-run", reason, detail); }

// Collects the exit status while sections are filled in.
struct Outcome {
  bool failed = false;
  bool capped = false;

  json fail(std::string_view reason, const std::string& detail = {}) {
    failed = true;
    return verdict("fail", reason, detail);
  }
  json capped_at(std::string_view reason, const std::string& detail) {
    capped = true;
    return not_run(reason, detail);
  }
  int exit_code() const { return capped ? 3 : failed ? 1 : 0; }
};

class Stopwatch {
 public:
  void lap(const char* name) {
    const auto now = std::chrono::steady_clock::now();
    laps_[name] = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
    last_ = now;
  }
  const json& laps() const { return laps_; }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  json laps_ = json::object();
};

template <typename Fn>
void open_and_write(const std::filesystem::path& path, Fn&& fn) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::domain, "cannot open " + path.string() + " for writing");
  fn(out);
  if (!out) throw Error(ErrorKind::domain, "failed writing " + path.string());
}

std::string kind_reason(const Error& e) { return std::string(to_string(e.kind())); }

json matsuo_section(const matsuo::MatsuoAlgebra& a, const std::vector<std::vector<std::size_t>>& comps,
                    const std::vector<std::size_t>& valencies, Outcome& outcome) {
  const auto& alpha = a.alpha();
  const auto& beta = a.beta();
  const std::size_t n = a.dimension();
  json m;
  m["alpha"] = alpha.to_string();
  m["beta"] = beta.to_string();
  m["dimension"] = n;
  m["form_values"] = {{"diagonal", (beta / Rational(2)).to_string()},
                      {"adjacent", (alpha * beta / Rational(8)).to_string()},
                      {"orthogonal", Rational(0).to_string()}};
  const bool degenerate = alpha == Rational(0) || alpha == Rational(2);
  m["degenerate_alpha"] = degenerate;

  if (n <= exhaustive_axiom_limit) {
    const auto check = matsuo::verify_axioms(a);
    json ax{{"triples_checked", check.triples_checked}};
    if (check.ok()) {
      ax["verdict"] = pass("exhaustive");
    } else {
      const auto& f = *check.first_failure;
      ax["verdict"] = outcome.fail(!check.commutative ? "not-commutative"
                                   : !check.symmetric_form ? "form-not-symmetric"
                                                           : "form-not-invariant",
                                   "first failing triple (" + std::to_string(f[0]) + "," + std::to_string(f[1]) +
                                       "," + std::to_string(f[2]) + ")");
    }
    m["axioms"] = std::move(ax);
  } else {
    m["axioms"] = {{"triples_checked", 0},
                   {"verdict", not_run("size-limit", "exhaustive check limited to |I| <= " +
                                                         std::to_string(exhaustive_axiom_limit))}};
  }

  json unity = json::array();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    json u{{"component", c}, {"size", comps[c].size()}, {"valency", valencies[c]}};
    try {
      const auto omega = matsuo::unity(a, comps[c]);
      if (omega) {
        u["coefficient"] = (*omega)[comps[c].front()].to_string();
        u["verdict"] = pass("verified");
      } else {
        u["coefficient"] = nullptr;
        u["verdict"] = not_run("k-alpha-plus-4-is-zero");
      }
    } catch (const Error& e) {
      u["coefficient"] = nullptr;
      u["verdict"] = outcome.fail(kind_reason(e), e.what());
    }
    unity.push_back(std::move(u));
  }
  m["unity"] = std::move(unity);

  try {
    auto radical = matsuo::gram_radical(a);
    const std::size_t rad_dim = radical.dimension();
    m["radical"] = {{"dimension", rad_dim}, {"verdict", pass("computed")}};
    try {
      const auto q = matsuo::quotient(a, std::move(radical));
      m["quotient"] = {{"dimension", q.dimension()}, {"verdict", pass("ideal-and-nondegenerate")}};
    } catch (const Error& e) {
      m["quotient"] = {{"dimension", nullptr}, {"verdict", outcome.fail(kind_reason(e), e.what())}};
    }
  } catch (const Error& e) {
    m["radical"] = {{"dimension", nullptr}, {"verdict", outcome.fail(kind_reason(e), e.what())}};
    m["quotient"] = {{"dimension", nullptr}, {"verdict", not_run("radical-unavailable")}};
  }

  json spectrum;
  if (degenerate) {
    spectrum["verdict"] = not_run("degenerate-alpha", "eigenvalues 0, 2 and alpha are not distinct");
    spectrum["components"] = json::array();
  } else {
    spectrum["eigenvalues"] = {"2/1", "0/1", alpha.to_string()};
    json per_comp = json::array();
    json overall = pass("explicit-bases-verified");
    try {
      for (std::size_t i = 0; i < n; ++i) (void)matsuo::adjoint_spectrum(a, i);
      for (std::size_t c = 0; c < comps.size(); ++c) {
        const std::size_t axis = comps[c].front();
        const auto s = matsuo::adjoint_spectrum(a, axis);
        json entry{{"component", c},
                   {"axis", axis},
                   {"dim_2", s.eigen_two.size()},
                   {"dim_0", s.eigen_zero.size()},
                   {"dim_alpha", s.eigen_alpha.size()}};
        const bool ranks_agree = matsuo::eigenspace_dimension(a, axis, Rational(2)) == s.eigen_two.size() &&
                                 matsuo::eigenspace_dimension(a, axis, Rational(0)) == s.eigen_zero.size() &&
                                 matsuo::eigenspace_dimension(a, axis, alpha) == s.eigen_alpha.size();
        entry["rank_check"] = ranks_agree ? pass("exact-rank") : outcome.fail("rank-mismatch");
        if (!ranks_agree) overall = verdict("fail", "rank-mismatch");
        per_comp.push_back(std::move(entry));
      }
    } catch (const Error& e) {
      overall = outcome.fail(kind_reason(e), e.what());
    }
    spectrum["components"] = std::move(per_comp);
    spectrum["verdict"] = std::move(overall);
  }
  m["spectrum"] = std::move(spectrum);

  json miyamoto{{"axes_checked", 0}};
  try {
    for (std::size_t i = 0; i < n; ++i) {
      const auto map = matsuo::miyamoto(a, i);
      miyamoto["axes_checked"] = i + 1;
      if (std::find_if(comps.begin(), comps.end(), [&](const auto& c) { return c.front() == i; }) != comps.end()) {
        (void)matsuo::verify_fixed_subalgebra(a, map);
      }
    }
    miyamoto["verdict"] = pass("automorphism-isometry-signs");
  } catch (const Error& e) {
    miyamoto["verdict"] = outcome.fail(kind_reason(e), e.what());
  }
  m["miyamoto"] = std::move(miyamoto);

  const auto definiteness = matsuo::form_definiteness(a);
  m["form"] = {{"positive_definite", definiteness.positive_definite},
               {"leading_minors_computed", definiteness.leading_minors.size()}};

  if (alpha == Rational(1, 2) && beta == Rational(1, 2)) {
    std::size_t counts[3] = {0, 0, 0};
    json pt;
    try {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) ++counts[static_cast<int>(matsuo::pair_type(a, i, j))];
      }
      pt = {{"1A", counts[0]}, {"2A", counts[1]}, {"2B", counts[2]}, {"verdict", pass("sakuma-table-consistent")}};
    } catch (const Error& e) {
      pt = {{"verdict", outcome.fail(kind_reason(e), e.what())}};
    }
    m["pair_types"] = std::move(pt);
  } else {
    m["pair_types"] = {{"verdict", not_run("needs-alpha-beta-one-half")}};
  }
  return m;
}

template <groups::GroupElement E>
void analyze_instance(const catalog::Instance<E>& inst, const AnalyzeOptions& opt, json& report, Outcome& outcome,
                      Stopwatch& clock) {
  std::optional<groups::GeneratedGroup<E>> group;
  try {
    group = groups::generate_cached(inst.generators, opt.max_order, opt.threads, opt.cache_dir);
    report["group"] = {{"order", group->order()}, {"generators", inst.generators.size()},
                       {"verdict", pass("enumerated")}};
  } catch (const EnumerationCapError& e) {
    report["group"] = {{"order", nullptr}, {"generators", inst.generators.size()},
                       {"verdict", outcome.capped_at("enumeration-cap", e.what())}};
  }
  clock.lap("group");

  fischer::ConcreteSystem<E> cs;
  try {
    cs = fischer::build_system(inst.generators, inst.seed, fischer::SystemCaps{opt.max_order, 64});
  } catch (const NotThreeTranspositionError& e) {
    const auto closure = groups::conjugacy_closure<E>(inst.seed, inst.generators, opt.max_order);
    json t{{"count", closure.size()},
           {"offending_pair", {e.first(), e.second()}},
           {"offending_labels", {closure[e.first()].to_string(), closure[e.second()].to_string()}},
           {"product_order", e.order() == 0 ? json(nullptr) : json(e.order())},
           {"verdict", outcome.fail("not-3-transposition", e.what())}};
    report["transpositions"] = std::move(t);
    return;
  } catch (const EnumerationCapError& e) {
    report["transpositions"] = {{"count", nullptr}, {"verdict", outcome.capped_at("enumeration-cap", e.what())}};
    return;
  }
  const auto& sys = cs.system;
  const std::size_t n = sys.size();
  std::size_t edges = 0;
  unsigned max_order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    edges += sys.neighbors(i).size();
    for (std::size_t j = i + 1; j < n; ++j) max_order = std::max(max_order, sys.order(i, j));
  }
  report["transpositions"] = {{"count", n},
                              {"adjacent_pairs", edges / 2},
                              {"max_product_order", max_order},
                              {"verdict", pass("all-products-order-at-most-3")}};
  clock.lap("transpositions");

  if (opt.dot_path) open_and_write(*opt.dot_path, [&](std::ostream& out) { fischer::write_dot(sys, out); });

  const auto comps = fischer::components(sys);
  std::vector<std::size_t> valencies;
  json comp_json = json::array();
  for (const auto& c : comps) {
    json entry{{"size", c.size()}, {"least_index", c.front()}};
    try {
      valencies.push_back(fischer::valency(sys, c));
      entry["valency"] = valencies.back();
    } catch (const Error& e) {
      valencies.push_back(0);
      entry["valency"] = nullptr;
      entry["verdict"] = outcome.fail(kind_reason(e), e.what());
    }
    comp_json.push_back(std::move(entry));
  }
  report["components"] = std::move(comp_json);
  report["graph_invariant"] = fischer::conjugation_preserves_graph(sys)
                                  ? pass("conjugation-preserves-adjacency")
                                  : outcome.fail("conjugation-breaks-adjacency");

  json h;
  const auto witness = fischer::detect_h_triple(sys, opt.threads);
  if (!witness) {
    h["symplectic_type"] = true;
    h["witness"] = nullptr;
    h["verdict"] = pass("no-h-triple");
  } else {
    h["symplectic_type"] = false;
    json w{{"indices", {witness->a, witness->b, witness->c}},
           {"labels",
            {cs.transpositions[witness->a].to_string(), cs.transpositions[witness->b].to_string(),
             cs.transpositions[witness->c].to_string()}}};
    try {
      const auto sub = fischer::extract_h(cs, *witness);
      w["subgroup_order"] = sub.group.order();
      w["center_order"] = sub.center.size();
      w["center_generator"] = sub.center_generator.to_string();
      h["verdict"] = pass("h-subgroup-verified");
    } catch (const UnexpectedSubgroupError& e) {
      w["subgroup_order"] = e.order();
      h["verdict"] = outcome.fail("unexpected-subgroup", e.what());
    }
    h["witness"] = std::move(w);
  }
  report["h_triple"] = std::move(h);
  clock.lap("fischer");

  if (n > opt.max_axes) {
    report["matsuo"] = {{"verdict", outcome.capped_at("max-axes", "|I| = " + std::to_string(n) +
                                                                   " exceeds --max-axes " +
                                                                   std::to_string(opt.max_axes))}};
    return;
  }
  const auto algebra = matsuo::build_algebra(sys, opt.alpha, opt.beta, opt.threads);
  if (opt.gram_path) {
    open_and_write(*opt.gram_path, [&](std::ostream& out) { matsuo::write_gram_csv(algebra, out); });
  }
  if (opt.structure_path) {
    open_and_write(*opt.structure_path, [&](std::ostream& out) { matsuo::write_structure_csv(algebra, out); });
  }
  json m = matsuo_section(algebra, comps, valencies, outcome);
  clock.lap("matsuo");

  if (!group) {
    m["sigma"] = {{"verdict", not_run("group-not-enumerated")}};
  } else if (group->order() > sigma_group_limit) {
    m["sigma"] = {{"verdict", not_run("size-limit", "sigma is computed for |G| <= " +
                                                        std::to_string(sigma_group_limit))}};
  } else {
    try {
      const auto s = matsuo::sigma_homomorphism(algebra, cs, *group);
      m["sigma"] = {{"kernel_order", s.kernel.size()},
                    {"center_order", s.center.size()},
                    {"verdict", pass("kernel-equals-center")}};
    } catch (const Error& e) {
      m["sigma"] = {{"verdict", outcome.fail(kind_reason(e), e.what())}};
    }
  }
  clock.lap("sigma");
  report["matsuo"] = std::move(m);
}

}  // namespace

AnalyzeResult analyze(const AnalyzeOptions& opt) {
  const auto descriptor = catalog::parse_descriptor(opt.descriptor);
  const auto instance = catalog::build(descriptor);

  Outcome outcome;
  Stopwatch clock;
  json report;
  report["format"] = report_format_tag;
  report["descriptor"] = catalog::to_string(descriptor);
  std::visit([&](const auto& inst) { analyze_instance(inst, opt, report, outcome, clock); }, instance);
  if (opt.timing) report["timing_ms"] = clock.laps();
  report["exit_code"] = outcome.exit_code();
  return {std::move(report), outcome.exit_code()};
}

namespace {

std::string status_of(const json& section) {
  if (!section.is_object() || !section.contains("verdict")) return "not-run";
  const auto& v = section["verdict"];
  std::string s = v["status"].get<std::string>() + " (" + v["reason"].get<std::string>() + ")";
  if (v.contains("detail")) s += ": " + v["detail"].get<std::string>();
  return s;
}

std::string value_or_dash(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || j[key].is_null()) return "-";
  return j[key].is_string() ? j[key].get<std::string>() : j[key].dump();
}

}  // namespace

std::string render_text(const json& r) {
  std::ostringstream out;
  out << "descriptor: " << r.value("descriptor", "") << '\n';
  if (r.contains("group")) {
    out << "group order: " << value_or_dash(r["group"], "order") << "  [" << status_of(r["group"]) << "]\n";
  }
  if (r.contains("transpositions")) {
    const auto& t = r["transpositions"];
    out << "transpositions: " << value_or_dash(t, "count") << "  3-transposition: " << status_of(t) << '\n';
    if (t.contains("offending_labels")) {
      out << "  offending pair: " << t["offending_labels"][0].get<std::string>() << " and "
          << t["offending_labels"][1].get<std::string>() << ", product order "
          << value_or_dash(t, "product_order") << '\n';
    }
  }
  if (r.contains("components")) {
    out << "components: " << r["components"].size() << '\n';
    for (const auto& c : r["components"]) {
      out << "  size " << c["size"].dump() << ", valency " << value_or_dash(c, "valency") << '\n';
    }
  }
  if (r.contains("h_triple")) {
    const auto& h = r["h_triple"];
    if (h["witness"].is_null()) {
      out << "H-triple: none (symplectic type)  [" << status_of(h) << "]\n";
    } else {
      const auto& w = h["witness"];
      out << "H-triple: " << w["labels"][0].get<std::string>() << ", " << w["labels"][1].get<std::string>() << ", "
          << w["labels"][2].get<std::string>() << "  subgroup order " << value_or_dash(w, "subgroup_order")
          << ", center order " << value_or_dash(w, "center_order") << "  [" << status_of(h) << "]\n";
    }
  }
  if (r.contains("matsuo")) {
    const auto& m = r["matsuo"];
    if (!m.contains("alpha")) {
      out << "Matsuo algebra: " << status_of(m) << '\n';
    } else {
      out << "Matsuo algebra B_{" << m["alpha"].get<std::string>() << "," << m["beta"].get<std::string>()
          << "}: form diagonal " << m["form_values"]["diagonal"].get<std::string>() << ", adjacent "
          << m["form_values"]["adjacent"].get<std::string>() << '\n';
      out << "  axioms: " << status_of(m["axioms"]) << ", " << m["axioms"]["triples_checked"].dump()
          << " triples\n";
      for (const auto& u : m["unity"]) {
        out << "  unity (component " << u["component"].dump() << ", k = " << u["valency"].dump()
            << "): omega = " << value_or_dash(u, "coefficient") << " * sum x^i  [" << status_of(u) << "]\n";
      }
      out << "  radical dimension: " << value_or_dash(m["radical"], "dimension")
          << ", quotient dimension: " << value_or_dash(m["quotient"], "dimension") << "  ["
          << status_of(m["quotient"]) << "]\n";
      out << "  spectrum: " << status_of(m["spectrum"]) << '\n';
      for (const auto& c : m["spectrum"]["components"]) {
        out << "    axis " << c["axis"].dump() << ": dim(2) " << c["dim_2"].dump() << ", dim(0) "
            << c["dim_0"].dump() << ", dim(alpha) " << c["dim_alpha"].dump() << '\n';
      }
      out << "  miyamoto: " << status_of(m["miyamoto"]) << '\n';
      out << "  sigma: " << status_of(m["sigma"]);
      if (m["sigma"].contains("kernel_order")) {
        out << ", kernel " << m["sigma"]["kernel_order"].dump() << ", center " << m["sigma"]["center_order"].dump();
      }
      out << '\n';
      out << "  form positive definite: " << (m["form"]["positive_definite"].get<bool>() ? "yes" : "no") << '\n';
      const auto& pt = m["pair_types"];
      if (pt.contains("1A")) {
        out << "  pair types: 1A " << pt["1A"].dump() << ", 2A " << pt["2A"].dump() << ", 2B " << pt["2B"].dump()
            << '\n';
      }
    }
  }
  if (r.contains("timing_ms")) {
    out << "timing (ms):";
    for (const auto& [k, v] : r["timing_ms"].items()) out << ' ' << k << '=' << v.dump();
    out << '\n';
  }
  return out.str();
}

}  // namespace fischer_lab::cli

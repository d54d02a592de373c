#include "fischer_lab/cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "fischer_lab/catalog/catalog.hpp"
#include "fischer_lab/cli/analyze.hpp"
#include "fischer_lab/error.hpp"
#include "fischer_lab/virasoro/virasoro.hpp"

namespace fischer_lab::cli {

namespace {

using nlohmann::json;

// Thrown for bad arguments detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit_json(const json& j, const std::string& target, std::ostream& out) {
  if (target.empty() || target == "-") {
    out << canonical_dump(j);
    return;
  }
  std::ofstream file(target, std::ios::binary);
  if (!file) throw UsageError("cannot open " + target + " for writing");
  file << canonical_dump(j);
}

// ---- catalog ----

int cmd_catalog_list(bool as_json, std::ostream& out) {
  if (as_json) {
    json arr = json::array();
    for (const auto& f : catalog::families()) {
      arr.push_back({{"name", f.name}, {"example", f.example}, {"parameters", f.parameters}});
    }
    out << canonical_dump(arr);
    return exit_ok;
  }
  for (const auto& f : catalog::families()) {
    out << f.name << "\n  example: " << f.example << "\n  parameters: " << f.parameters << '\n';
  }
  return exit_ok;
}

// ---- fusion ----

virasoro::Label parse_label(int m, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("label must be r,s: '" + text + "'");
  try {
    std::size_t used_r = 0, used_s = 0;
    const std::string rs = text.substr(0, comma), ss = text.substr(comma + 1);
    const int r = std::stoi(rs, &used_r);
    const int s = std::stoi(ss, &used_s);
    if (used_r != rs.size() || used_s != ss.size()) throw UsageError("label must be r,s: '" + text + "'");
    return virasoro::canonical(m, r, s);
  } catch (const std::logic_error&) {
    throw UsageError("label must be r,s: '" + text + "'");
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

json label_json(const virasoro::Label& l) {
  const bool in_p = virasoro::in_sigma_sector(l);
  return {{"label", l.to_string()},
          {"r", l.r},
          {"s", l.s},
          {"weight", virasoro::weight(l).to_string()},
          {"tau", virasoro::tau_sign(l)},
          {"in_sigma_sector", in_p},
          {"sigma", in_p ? json(virasoro::sigma_sign(l)) : json(nullptr)}};
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

std::string label_text(const json& l) {
  std::string t = l["label"].get<std::string>() + "  h = " + l["weight"].get<std::string>() +
                  "  tau " + sign_char(l["tau"].get<int>());
  if (l["in_sigma_sector"].get<bool>()) t += "  P_m, sigma " + sign_char(l["sigma"].get<int>());
  return t;
}

struct FusionArgs {
  int m = 0;
  std::string left, right;
  bool grid = false, sector = false, table = false;
  std::optional<std::string> has_weight;
};

int cmd_fusion(const FusionArgs& a, bool as_json, std::ostream& out) {
  if (a.m < 1) throw UsageError("--m must be >= 1");
  if (a.left.empty() != a.right.empty()) throw UsageError("--left and --right must be given together");
  const int m = a.m;
  json j{{"m", m}, {"central_charge", virasoro::central_charge(m).to_string()}};
  std::ostringstream text;
  text << "m = " << m << ", c = " << j["central_charge"].get<std::string>() << '\n';
  const bool any = !a.left.empty() || a.grid || a.sector || a.table || a.has_weight;

  if (!a.left.empty()) {
    const auto l = parse_label(m, a.left);
    const auto r = parse_label(m, a.right);
    json result = json::array();
    for (const auto& c : virasoro::fuse(l, r)) result.push_back(label_json(c));
    text << label_json(l)["label"].get<std::string>() << " x " << label_json(r)["label"].get<std::string>()
         << " =\n";
    for (const auto& c : result) text << "  " << label_text(c) << '\n';
    j["product"] = {{"left", label_json(l)}, {"right", label_json(r)}, {"result", std::move(result)}};
  }
  if (a.grid || !any) {
    json grid = json::array();
    text << "irreducibles:\n";
    for (const auto& l : virasoro::irreducibles(m)) {
      grid.push_back(label_json(l));
      text << "  " << label_text(grid.back()) << '\n';
    }
    const bool c_is_weight = virasoro::weight_exists(m, virasoro::central_charge(m));
    text << "c = " << j["central_charge"].get<std::string>() << (c_is_weight ? " is" : " is not")
         << " a weight of the series\n";
    j["grid"] = std::move(grid);
    j["central_charge_is_weight"] = c_is_weight;
  }
  if (a.has_weight) {
    Rational h;
    try {
      h = Rational::parse(*a.has_weight);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    const bool exists = virasoro::weight_exists(m, h);
    j["weight_query"] = {{"weight", h.to_string()}, {"exists", exists}};
    text << "h = " << h.to_string() << (exists ? " occurs" : " does not occur") << '\n';
  }
  if (a.sector) {
    const auto p = virasoro::sigma_sector(m);
    json labels = json::array();
    bool closed = true, multiplicative = true;
    for (const auto& x : p) {
      labels.push_back(label_json(x));
      for (const auto& y : p) {
        for (const auto& z : virasoro::fuse(x, y)) {
          if (!virasoro::in_sigma_sector(z)) {
            closed = false;
          } else if (virasoro::sigma_sign(z) != virasoro::sigma_sign(x) * virasoro::sigma_sign(y)) {
            multiplicative = false;
          }
        }
      }
    }
    text << "P_" << m << ":\n";
    for (const auto& l : labels) text << "  " << label_text(l) << '\n';
    text << "fusion closed: " << (closed ? "yes" : "no") << ", sigma multiplicative: "
         << (multiplicative ? "yes" : "no") << '\n';
    j["sector"] = {{"labels", std::move(labels)}, {"fusion_closed", closed}, {"sigma_multiplicative", multiplicative}};
  }
  if (a.table) {
    json table = json::array();
    text << "fusion table:\n";
    const auto labels = virasoro::irreducibles(m);
    for (const auto& x : labels) {
      for (const auto& y : labels) {
        if (y < x) continue;
        json prod = json::array();
        std::string line = "  " + x.to_string() + " x " + y.to_string() + " =";
        for (const auto& z : virasoro::fuse(x, y)) {
          prod.push_back(z.to_string());
          line += " " + z.to_string();
        }
        text << line << '\n';
        table.push_back({{"left", x.to_string()}, {"right", y.to_string()}, {"result", std::move(prod)}});
      }
    }
    j["table"] = std::move(table);
  }
  if (as_json) {
    out << canonical_dump(j);
  } else {
    out << text.str();
  }
  return exit_ok;
}

// ---- sakuma ----

json record_json(const virasoro::SakumaRecord& r) {
  return {{"type", r.type},
          {"max_tau_order", r.max_tau_order},
          {"inner_product", r.inner_product().to_string()},
          {"inner_product_times_1024", r.inner_product_times_1024},
          {"griess_dim", r.griess_dim},
          {"ising_count", r.ising_count},
          {"miyamoto_kind", virasoro::to_string(r.miyamoto_kind)}};
}

std::string record_text(const virasoro::SakumaRecord& r) {
  std::ostringstream s;
  s << r.type << ": (e|f) = " << r.inner_product_times_1024 << "/1024, max |tau_e tau_f| = " << r.max_tau_order
    << ", dim " << r.griess_dim << ", Ising vectors " << r.ising_count << ", Miyamoto type "
    << virasoro::to_string(r.miyamoto_kind);
  return s.str();
}

int cmd_sakuma(const std::string& tag, const std::optional<std::string>& inner, bool as_json, std::ostream& out) {
  if (!tag.empty() && inner) throw UsageError("give either a type tag or --inner, not both");
  try {
    if (!tag.empty()) {
      const auto& r = virasoro::sakuma_lookup(tag);
      if (as_json) {
        out << canonical_dump(record_json(r));
      } else {
        out << record_text(r) << '\n';
      }
      return exit_ok;
    }
    if (inner) {
      Rational value;
      try {
        value = Rational::parse(*inner);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      const auto match = virasoro::sakuma_lookup(value);
      if (as_json) {
        json c = json::array();
        for (const auto* r : match.candidates) c.push_back(record_json(*r));
        out << canonical_dump({{"query", value.to_string()}, {"ambiguous", match.ambiguous()}, {"candidates", c}});
      } else {
        if (match.ambiguous()) out << "ambiguous: " << match.candidates.size() << " types share this value\n";
        for (const auto* r : match.candidates) out << record_text(*r) << '\n';
      }
      return exit_ok;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::not_in_table) throw UsageError(e.what());
    throw;
  }
  if (as_json) {
    json all = json::array();
    for (const auto& r : virasoro::sakuma_table()) all.push_back(record_json(r));
    out << canonical_dump(all);
  } else {
    for (const auto& r : virasoro::sakuma_table()) out << record_text(r) << '\n';
  }
  return exit_ok;
}

// ---- analyze ----

struct AnalyzeArgs {
  std::string descriptor;
  std::string alpha = "1/2", beta = "1/2";
  std::size_t max_order = groups::default_enumeration_cap;
  std::size_t max_axes = default_max_axes;
  unsigned threads = 1;
  std::string dot, gram, structure, json_target;
  bool json_requested = false;
  bool timing = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  AnalyzeOptions opt;
  opt.descriptor = a.descriptor;
  try {
    opt.alpha = Rational::parse(a.alpha);
    opt.beta = Rational::parse(a.beta);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (a.threads < 1) throw UsageError("--threads must be >= 1");
  opt.max_order = a.max_order;
  opt.max_axes = a.max_axes;
  opt.threads = a.threads;
  opt.timing = a.timing;
  if (const char* dir = std::getenv("FISCHER_LAB_CACHE_DIR"); dir && *dir) opt.cache_dir = dir;
  if (!a.dot.empty()) opt.dot_path = a.dot;
  if (!a.gram.empty()) opt.gram_path = a.gram;
  if (!a.structure.empty()) opt.structure_path = a.structure;

  AnalyzeResult result;
  try {
    result = analyze(opt);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse || e.kind() == ErrorKind::domain) throw UsageError(e.what());
    throw;
  }
  const bool json_to_stdout = a.json_requested && (a.json_target.empty() || a.json_target == "-");
  if (a.json_requested) emit_json(result.report, a.json_target, out);
  if (!json_to_stdout) out << render_text(result.report);
  if (result.exit_code == exit_verdict) err << "analyze: a verdict failed (see report)\n";
  if (result.exit_code == exit_cap) err << "analyze: a resource cap was reached (see report)\n";
  return result.exit_code;
}

}  // namespace

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for 3-transposition groups, Matsuo algebras and unitary Virasoro data",
               "fischer-lab"};
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "Supported group families");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List descriptor families");
  bool list_json = false;
  list_cmd->add_flag("--json", list_json, "Print a JSON array");

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a catalog instance");
  analyze_cmd->add_option("descriptor", an.descriptor, "e.g. symmetric:n=4")->required();
  analyze_cmd->add_option("--alpha", an.alpha, "Matsuo parameter alpha as p/q")->capture_default_str();
  analyze_cmd->add_option("--beta", an.beta, "Matsuo parameter beta as p/q")->capture_default_str();
  analyze_cmd->add_option("--max-order", an.max_order, "Group enumeration cap")->capture_default_str();
  analyze_cmd->add_option("--max-axes", an.max_axes, "Largest |I| for the Matsuo algebra")->capture_default_str();
  analyze_cmd->add_option("--threads", an.threads, "Worker threads")->capture_default_str();
  analyze_cmd->add_option("--dot", an.dot, "Write the Fischer graph (Graphviz) to FILE");
  analyze_cmd->add_option("--gram", an.gram, "Write the Gram matrix (CSV) to FILE");
  analyze_cmd->add_option("--structure", an.structure, "Write the structure constants (CSV) to FILE");
  auto* json_opt = analyze_cmd->add_option("--json", an.json_target, "Write the JSON report to FILE (or stdout)")
                       ->expected(0, 1);
  analyze_cmd->add_flag("--timing", an.timing, "Include stage timings in the report");

  FusionArgs fu;
  bool fusion_json = false;
  auto* fusion_cmd = app.add_subcommand("fusion", "Unitary-series fusion rules and sign gradings");
  fusion_cmd->add_option("--m", fu.m, "Series index m >= 1")->required();
  fusion_cmd->add_option("--left", fu.left, "Left label r,s");
  fusion_cmd->add_option("--right", fu.right, "Right label r,s");
  fusion_cmd->add_flag("--grid", fu.grid, "List all irreducibles with weights and signs");
  fusion_cmd->add_flag("--sector", fu.sector, "Show P_m with sigma signs");
  fusion_cmd->add_flag("--table", fu.table, "Print the full fusion table");
  fusion_cmd->add_option("--has-weight", fu.has_weight, "Check whether h (p/q) is a weight of the series");
  fusion_cmd->add_flag("--json", fusion_json, "Print JSON");

  std::string sakuma_tag;
  std::optional<std::string> sakuma_inner;
  bool sakuma_json = false;
  auto* sakuma_cmd = app.add_subcommand("sakuma", "Dihedral subalgebra table for two Ising vectors");
  sakuma_cmd->add_option("tag", sakuma_tag, "Type tag such as 3A");
  sakuma_cmd->add_option("--inner", sakuma_inner, "Look up by (e|f) as p/q");
  sakuma_cmd->add_flag("--json", sakuma_json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*list_cmd) return cmd_catalog_list(list_json, out);
    if (*analyze_cmd) {
      an.json_requested = json_opt->count() > 0;
      return cmd_analyze(an, out, err);
    }
    if (*fusion_cmd) return cmd_fusion(fu, fusion_json, out);
    if (*sakuma_cmd) return cmd_sakuma(sakuma_tag, sakuma_inner, sakuma_json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const EnumerationCapError& e) {
    err << e.what() << '\n';
    return exit_cap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_verdict;
  }
  return exit_usage;
}

}  // namespace fischer_lab::cli

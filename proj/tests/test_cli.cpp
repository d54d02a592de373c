#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fischer_lab/cli/cli.hpp"

using namespace fischer_lab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fischer-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "fischer_lab_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("catalog list") {
  const auto r = run({"catalog", "list", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 5);
  CHECK(run({"catalog", "list"}).out.find("symplectic-f2") != std::string::npos);
}

TEST_CASE("analyze symmetric:n=4") {
  const auto r = run({"analyze", "symmetric:n=4", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["transpositions"]["count"] == 6);
  CHECK(j["components"][0]["valency"] == 4);
  CHECK(j["h_triple"]["symplectic_type"] == true);
  CHECK(j["group"]["order"] == 24);
  CHECK(j["exit_code"] == 0);
  // canonical serialization round-trips byte for byte
  CHECK(cli::canonical_dump(nlohmann::json::parse(r.out)) == r.out);
  const auto text = run({"analyze", "symmetric:n=4"});
  CHECK(text.code == 0);
  CHECK(text.out.find("transpositions: 6") != std::string::npos);
}

TEST_CASE("analyze orthogonal-f3:dim=5 prints the H-triple witness") {
  const auto r = run({"analyze", "orthogonal-f3:dim=5", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["h_triple"]["symplectic_type"] == false);
  CHECK(j["h_triple"]["witness"]["subgroup_order"] == 54);
  CHECK(j["h_triple"]["witness"]["center_order"] == 3);
}

TEST_CASE("analyze exports") {
  const auto dot = scratch("s3.dot"), gram = scratch("s3.csv"), structure = scratch("s3_structure.csv"),
             report = scratch("s3.json");
  const auto r = run({"analyze", "symmetric:n=3", "--dot", dot.string(), "--gram", gram.string(), "--structure",
                      structure.string(), "--json", report.string()});
  REQUIRE(r.code == 0);
  CHECK(slurp(gram) == "1/4,1/32,1/32\n1/32,1/4,1/32\n1/32,1/32,1/4\n");
  CHECK(slurp(dot).find("0 -- 1;") != std::string::npos);
  CHECK(slurp(structure).rfind("i,j,k,coefficient\n", 0) == 0);
  CHECK(nlohmann::json::parse(slurp(report))["descriptor"] == "symmetric:n=3");
  // text summary still goes to stdout when the report goes to a file
  CHECK_FALSE(r.out.empty());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::exit_usage);
  CHECK(run({"--help"}).code == cli::exit_ok);
  CHECK(run({"bogus"}).code == cli::exit_usage);
  CHECK(run({"analyze"}).code == cli::exit_usage);
  CHECK(run({"analyze", "symmetric:n=99"}).code == cli::exit_usage);
  CHECK(run({"analyze", "nonsense"}).code == cli::exit_usage);
  CHECK(run({"analyze", "symmetric:n=4", "--alpha", "1/0"}).code == cli::exit_usage);
  CHECK(run({"analyze", "symmetric:n=4", "--threads", "0"}).code == cli::exit_usage);
  CHECK(run({"analyze", "symmetric:n=4", "--unknown"}).code == cli::exit_usage);
  CHECK(run({"fusion", "--m", "0"}).code == cli::exit_usage);
  CHECK(run({"fusion", "--m", "1", "--left", "2,2"}).code == cli::exit_usage);
  CHECK(run({"fusion", "--m", "1", "--left", "9,9", "--right", "1,1"}).code == cli::exit_usage);
  CHECK(run({"fusion", "--m", "1", "--left", "x", "--right", "1,1"}).code == cli::exit_usage);
  CHECK(run({"sakuma", "9Z"}).code == cli::exit_usage);
  CHECK(run({"sakuma", "--inner", "1/3"}).code == cli::exit_usage);
  CHECK(run({"sakuma", "3A", "--inner", "13/1024"}).code == cli::exit_usage);

  const auto capped = run({"analyze", "symmetric:n=6", "--max-order", "100", "--json"});
  CHECK(capped.code == cli::exit_cap);
  CHECK(nlohmann::json::parse(capped.out)["group"]["verdict"]["reason"] == "enumeration-cap");
  CHECK(run({"analyze", "symmetric:n=6", "--max-axes", "10"}).code == cli::exit_cap);
}

TEST_CASE("process exit status of the installed binary") {
  const std::string bin = FISCHER_LAB_BINARY;
  const auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status("sakuma 3A") == 0);
  CHECK(status("analyze nope:n=1") == 2);
  CHECK(status("analyze symmetric:n=6 --max-order 10") == 3);
}

TEST_CASE("fusion") {
  const auto r = run({"fusion", "--m", "1", "--left", "2,2", "--right", "2,2", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& res = j["product"]["result"];
  REQUIRE(res.size() == 2);
  CHECK(res[0]["weight"] == "0/1");
  CHECK(res[1]["weight"] == "1/2");
  CHECK(res[0]["tau"] == 1);
  CHECK(res[1]["tau"] == 1);

  const auto grid = nlohmann::json::parse(run({"fusion", "--m", "2", "--grid", "--json"}).out);
  CHECK(grid["grid"].size() == 6);
  CHECK(grid["central_charge_is_weight"] == false);

  const auto sector = nlohmann::json::parse(run({"fusion", "--m", "4", "--sector", "--json"}).out);
  CHECK(sector["sector"]["fusion_closed"] == true);
  CHECK(sector["sector"]["sigma_multiplicative"] == true);

  const auto table = nlohmann::json::parse(run({"fusion", "--m", "3", "--table", "--json"}).out);
  CHECK(table["table"].size() == 10 * 11 / 2);

  const auto hw = nlohmann::json::parse(run({"fusion", "--m", "3", "--has-weight", "1/15", "--json"}).out);
  CHECK(hw["weight_query"]["exists"] == true);
}

TEST_CASE("sakuma") {
  const auto all = nlohmann::json::parse(run({"sakuma", "--json"}).out);
  CHECK(all.size() == 9);
  const auto a3 = nlohmann::json::parse(run({"sakuma", "3A", "--json"}).out);
  CHECK(a3["inner_product"] == "13/1024");
  const auto amb = nlohmann::json::parse(run({"sakuma", "--inner", "1/256", "--json"}).out);
  CHECK(amb["ambiguous"] == true);
  CHECK(amb["candidates"].size() == 2);
}

TEST_CASE("reports are identical across thread counts") {
  const auto one = run({"analyze", "symplectic-f2:n=2", "--json", "--threads", "1"});
  const auto four = run({"analyze", "symplectic-f2:n=2", "--json", "--threads", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}

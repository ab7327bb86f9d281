#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "superflow/cli.hpp"
#include "superflow/serialize.hpp"

using namespace superflow;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "superflow");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("superflow_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool every_check_has_fields(const Json& j) {
  for (const auto& c : j["checks"])
    if (!c.contains("name") || !c.contains("expected") || !c.contains("got") || !c.contains("pass")) return false;
  return !j["checks"].empty();
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == exit_usage);
  auto r = run({"--bogus"});
  CHECK(r.code == exit_usage);
  CHECK(r.err.find("Subcommands") != std::string::npos);
  CHECK(run({"catalog", "show", "I", "--bogus"}).code == exit_usage);
  CHECK(run({"catalog", "show", "Q"}).code == exit_usage);
  CHECK(run({"verify"}).code == exit_usage);
  CHECK(run({"orbit", "--start", "1,2"}).code == exit_usage);
  CHECK(run({"orbit", "--start", "1,0,0", "--stepper", "euler"}).code == exit_usage);
  CHECK(run({"solve-invariant", "--group", "nonsense", "--max-denom-degree", "2"}).code == exit_usage);
  CHECK(run({"classify", "--xi", "abc"}).code == exit_usage);
  CHECK(run({"curves", "verify", "--xi", "1"}).code == exit_usage);
  CHECK(run({"project", "--grid", "1"}).code == exit_usage);
  CHECK(run({"project", "--superflow", "T_hat", "--kind", "scaled"}).code == exit_usage);
  CHECK(run({"--help"}).code == exit_pass);
}

TEST_CASE("catalog show I reports order 60 and both integrals") {
  auto r = run({"catalog", "show", "I"});
  REQUIRE(r.code == exit_pass);
  auto j = r.json();
  CHECK(j["group_order"] == 60);
  REQUIRE(j["integrals"].size() == 2);
  CHECK(j["integrals"][0]["label"] == "W");
  CHECK(j["integrals"][1]["label"] == "V");
  CHECK(every_check_has_fields(j));
}

TEST_CASE("catalog list and group dump") {
  auto j = run({"catalog", "list"}).json();
  CHECK(j["pass"] == true);
  CHECK(j["superflows"].size() == 5);
  auto g = run({"catalog", "group", "O"}).json();
  CHECK(g["group"]["order"] == 24);
  CHECK(g["group"]["elements"].size() == 24);
}

TEST_CASE("solve-invariant and verdict") {
  auto r = run({"solve-invariant", "--group", "I", "--max-denom-degree", "4", "--expect-dimension", "1"});
  CHECK(r.code == exit_pass);
  auto j = r.json();
  CHECK(j["first_nonzero_degree"] == 4);
  CHECK(j["first_nonzero_dimension"] == 1);
  CHECK(run({"solve-invariant", "--group", "I", "--max-denom-degree", "4", "--expect-dimension", "2"}).code ==
        exit_verification_failure);
  auto v = run({"verdict", "--group", "antiprism:4", "--max-k", "2", "--expect-reason", "unique_field"});
  CHECK(v.code == exit_pass);
  CHECK(v.json()["verdict"]["exists"] == true);
  auto m = run({"verdict", "--group", "I_pm", "--max-k", "4"}).json();
  CHECK(m["verdict"]["reason"] == "contains_minus_I");
}

TEST_CASE("orbit writes the drift CSV") {
  const auto path = temp_path("trace.csv");
  auto r = run({"orbit", "--superflow", "I", "--start", "0.6,0,0.8", "--t", "1.0", "--tol", "1e-10", "--out", path});
  REQUIRE(r.code == exit_pass);
  const auto csv = slurp(path);
  CHECK(csv.rfind("t,x,y,z,W_drift,V_drift\n", 0) == 0);
  CHECK(r.json()["pass"] == true);
  // Without --out the CSV goes to standard output.
  auto s = run({"orbit", "--start", "0.6,0,0.8", "--t", "1.0"});
  CHECK(s.out == csv);
  CHECK(run({"orbit", "--start", "1,1,1"}).code == exit_usage);  // not on the sphere
  CHECK(run({"orbit", "--start", "1,1,1", "--normalize", "--t", "0.5"}).code == exit_pass);
  CHECK(run({"orbit", "--superflow", "A4", "--start", "0.2,0.1,1", "--t", "0.3", "--direction", "forward",
             "--stepper", "rk4"})
            .code == exit_pass);
  std::remove(path.c_str());
}

TEST_CASE("identical invocations give identical bytes") {
  auto a = run({"flowcheck", "--superflow", "O", "--cases", "4", "--seed", "7"});
  auto b = run({"flowcheck", "--superflow", "O", "--cases", "4", "--seed", "7"});
  CHECK(a.code == exit_pass);
  CHECK(a.out == b.out);
  auto c = run({"flowcheck", "--superflow", "O", "--cases", "4", "--seed", "8"});
  CHECK(c.out != a.out);
}

TEST_CASE("curves subcommands") {
  auto v = run({"curves", "verify", "--xi", "-0.05", "--t", "1.0"});
  CHECK(v.code == exit_pass);
  CHECK(every_check_has_fields(v.json()));
  auto rational = run({"curves", "verify", "--xi", "-phi^3/6", "--t", "1.0"});
  CHECK(rational.code == exit_verification_failure);  // the printed factor 4 does not hold
  bool corrected = false;
  const auto report = rational.json();
  for (const auto& c : report["checks"])
    if (c["name"] == "rational curve without the factor 4") corrected = c["pass"].get<bool>();
  CHECK(corrected);
  CHECK(run({"curves", "identities", "--xi", "symbolic"}).code == exit_pass);
  CHECK(run({"curves", "identities", "--xi", "-1/20"}).code == exit_pass);
}

TEST_CASE("classify prints the level set class") {
  auto r = run({"classify", "--xi", "-1/20", "--resolution", "256"});
  CHECK(r.code == exit_pass);
  auto j = r.json();
  CHECK(j["component_count"] == 12);
  CHECK(run({"classify", "--xi", "1/20", "--resolution", "256"}).json()["component_count"] == 20);
  CHECK(run({"classify", "--xi", "-2", "--resolution", "64"}).json()["component_kind"] == "empty");
}

TEST_CASE("project and figures") {
  const auto svg = temp_path("fig2.svg"), csv = temp_path("fig2.csv");
  auto r = run({"project", "--superflow", "I", "--kind", "scaled", "--window", "7", "--out", svg, "--csv", csv});
  REQUIRE(r.code == exit_pass);
  CHECK(r.json()["boundary_curves"] == 6);
  CHECK(slurp(svg).find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
  CHECK(slurp(csv).rfind("alpha,beta,Pi,Theta\n", 0) == 0);
  CHECK(run({"project", "--figure", "fig4", "--out", svg}).code == exit_pass);
  auto d = run({"project", "--figure", "quadratic-deformation", "--out", svg});
  CHECK(d.code == exit_pass);
  CHECK(d.json()["closed_curves"] == 7);
  CHECK(run({"project", "--figure", "fig2", "--out", "/nonexistent/dir/x.svg"}).code == exit_usage);
  std::remove(svg.c_str());
  std::remove(csv.c_str());
}

TEST_CASE("prop-ext and verify --all") {
  CHECK(run({"prop-ext", "--n", "3"}).code == exit_pass);
  CHECK(run({"prop-ext", "--n", "4"}).code == exit_pass);
  auto v = run({"verify", "--all"});
  CHECK(v.code == exit_pass);
  auto j = v.json();
  CHECK(j["checks"].size() >= 25);
  CHECK(every_check_has_fields(j));
}

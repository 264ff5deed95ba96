#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "runo/algebra_json.hpp"
#include "runo/builtin.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RUNO_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& rel) { return std::string(RUNO_TEST_DATA) + "/" + rel; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("runo_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("documented examples") {
  Run r = run("eval -a A1 -t \"0 -> 1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  r = run("check-id -a A2 -e \"(0 -> 1) -> 1 = 1\"");
  CHECK(r.code == 1);
  CHECK(r.out.find("closed: LHS=2") != std::string::npos);
  r = run("variety verify");
  CHECK(r.code == 0);
  CHECK(r.out.find("30/30") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("check-id -a A1 -e \"x -> x = 1\"").code == 0);
  CHECK(run("eval -a A1 -t \"0 ->\"").code == 2);
  CHECK(run("eval -a A1 -t \"x\"").code == 2);
  CHECK(run("eval -a A1 -t \"x\" -v x=2").out == "2\n");
  CHECK(run("eval -a A1 -t \"x\" -v x=9").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("structure simple -a A3").code == 0);
  CHECK(run("structure primal -a A5").code == 0);
  CHECK(run("logic decide \"p \\/ ~p\"").code == 1);
  CHECK(run("logic decide -S 1 \"@alpha -> top\"").code == 0);
  CHECK(run("logic decide -S 7 top").code == 2);
  CHECK(run("logic prove-check " + data("proofs/smp.json")).code == 0);
  CHECK(run("logic prove-check " + data("proofs/contraposition.json")).code == 0);
  const Run bad = run("logic prove-check " + data("proofs/bad_smp.json"));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("step 3") != std::string::npos);
  CHECK(run("logic prove-check " + data("proofs/malformed.json")).code == 3);
  CHECK(run("logic prove-check /nonexistent/proof.json").code == 3);
  CHECK(run("algebra show /nonexistent/alg.json").code == 3);
  CHECK(run("algebra validate A4").code == 0);
  CHECK(run("--help").code == 0);
}

TEST_CASE("malformed and non-member algebras") {
  const fs::path dir = scratch("algebras");
  fs::create_directories(dir);
  std::ofstream(dir / "broken.json") << R"J({"name": "x", "labels": ["0"]})J";
  CHECK(run("algebra validate " + (dir / "broken.json").string()).code == 3);

  runo::RawTables h = runo::builtin(1).raw();
  h.name = "H3";
  h.imp = {{1, 1, 1}, {0, 1, 2}, {0, 1, 1}};
  runo::save_algebra(runo::validate(h), dir / "heyting.json");
  CHECK(run("algebra validate " + (dir / "heyting.json").string()).code == 1);
  CHECK(run("classify " + (dir / "heyting.json").string()).code == 1);
  CHECK(run("decompose " + (dir / "heyting.json").string()).code == 1);
  fs::remove_all(dir);
}

TEST_CASE("json output") {
  const Run show = run("--json algebra show A5");
  CHECK(show.code == 0);
  CHECK(runo::algebra_from_json(show.out).same_tables(runo::builtin(5)));
  CHECK(show.out == runo::algebra_to_json(runo::builtin(5)));

  const auto id = nlohmann::json::parse(run("check-id --json -a A1 -e \"x \\/ x' = 1\"").out);
  CHECK(id["holds"] == false);
  CHECK(id["counterexample"]["x"] == "2");

  const auto prof = nlohmann::json::parse(run("--json profile -e \"(0->1)* = 0\" -e \"0 -> (0->1) = 1\"").out);
  CHECK(prof["profile"] == "12");

  const auto dec = nlohmann::json::parse(run("--json logic decide -S 2 \"@alpha -> top\"").out);
  CHECK(dec["valid"] == false);
  CHECK(dec["algebra"] == "A2");

  const auto en = nlohmann::json::parse(run("--json enumerate --max-size 4").out);
  CHECK(en["models"].size() == 6);

  const auto lat = nlohmann::json::parse(run("--json variety lattice").out);
  CHECK(lat["subvarieties"].size() == 32);

  const auto pr = nlohmann::json::parse(run("--json logic prove-check " + data("proofs/bad_smp.json")).out);
  CHECK(pr["ok"] == false);
  CHECK(pr["first_bad_step"] == 3);
}

TEST_CASE("products, decomposition and classification from files") {
  const fs::path dir = scratch("product");
  fs::create_directories(dir);
  const std::string file = (dir / "p.json").string();
  CHECK(run("product A1 A5 A3 -o " + file).code == 0);
  const Run d = run("decompose " + file);
  CHECK(d.code == 0);
  CHECK(d.out.find("A1 x A3 x A5") != std::string::npos);
  CHECK(run("classify " + file).out == "135\n");
  CHECK(run("product A5 A5 A5 A5 A5 A5 A5").code == 2);
  fs::remove_all(dir);
}

TEST_CASE("translations and listings") {
  CHECK(run("logic translate \"bot -> top\"").out == "0 -> 1 = 1\n");
  CHECK(run("logic translate --equation \"x = y\"").out == "x ->h y\ny ->h x\n");
  const Run ax = run("logic axioms");
  CHECK(ax.code == 0);
  CHECK(ax.out.find("18. ") != std::string::npos);
  CHECK(run("variety base 4").out == "((0 -> 1) -> 1)' = 0 -> 0 -> 1\n");
  CHECK(run("variety lattice --dot").out.rfind("digraph", 0) == 0);
}

TEST_CASE("report is deterministic") {
  const fs::path a = scratch("report_a"), b = scratch("report_b");
  REQUIRE(run("report --out " + a.string()).code == 0);
  REQUIRE(run("--serial report --out " + b.string()).code == 0);
  std::size_t files = 0;
  for (const auto& e : fs::recursive_directory_iterator(a)) {
    if (!e.is_regular_file()) continue;
    const fs::path rel = fs::relative(e.path(), a);
    CAPTURE(rel.string());
    CHECK(slurp(e.path()) == slurp(b / rel));
    ++files;
  }
  CHECK(files >= 15);
  CHECK(slurp(a / "summary.txt").find("bases exact: 30/30") != std::string::npos);
  fs::remove_all(a);
  fs::remove_all(b);
}

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "c5t/io.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const std::string& binary_path() {
  static const std::string path = [] {
    const char* env = std::getenv("C5T_BIN");
    REQUIRE(env != nullptr);
    return std::string(env);
  }();
  return path;
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("c5t-cli-tests-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  REQUIRE(out.good());
  out << content;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const fs::path out_file = scratch_dir() / "stdout.txt";
  const fs::path err_file = scratch_dir() / "stderr.txt";
  const std::string cmd = env_prefix + "\"" + binary_path() + "\" " + args +
                          " >\"" + out_file.string() + "\" 2>\"" +
                          err_file.string() + "\"";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

json parse_report(const std::string& text) {
  json j = json::parse(text);
  REQUIRE(j["schema"] == "c5t/1");
  REQUIRE(j.contains("runtime"));
  REQUIRE(j["tool"]["name"] == "c5t");
  return j;
}

std::string without_runtime(const std::string& text) {
  json j = json::parse(text);
  j.erase("runtime");
  return j.dump(2);
}

fs::path fixture(const std::string& name, const std::string& content) {
  const fs::path p = scratch_dir() / name;
  spit(p, content);
  return p;
}

}  // namespace

TEST_CASE("analyze reports the book fixture") {
  const auto input =
      fixture("book3.el", "n 5\n0 1\n0 2\n1 2\n0 3\n1 3\n0 4\n1 4\n");
  const auto r = run_cli("analyze \"" + input.string() + "\" --json");
  REQUIRE(r.exit_code == 0);
  const json j = parse_report(r.out);
  CHECK(j["command"] == "analyze");
  CHECK(j["input"]["order"] == 5);
  CHECK(j["input"]["digest"].get<std::string>().substr(0, 8) == "fnv1a64:");
  CHECK(j["result"]["triangles"] == 3);
  CHECK(j["result"]["c5"]["free"] == true);
  CHECK(j["result"]["blocks"]["crown"] == 1);
  CHECK(j["result"]["blocks"]["k4"] == 0);
  CHECK(j["result"]["blocks"]["invalid"] == 0);
}

TEST_CASE("analyze human output mentions the core facts") {
  const auto input = fixture("c5.el", "0 1\n1 2\n2 3\n3 4\n4 0\n");
  const auto r = run_cli("analyze \"" + input.string() + "\"");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("triangles: 0") != std::string::npos);
  CHECK(r.out.find("c5: witness 0 1 2 3 4") != std::string::npos);
  CHECK(r.out.find("girth: 5") != std::string::npos);
}

TEST_CASE("analyze json output is byte-deterministic") {
  const auto input = fixture("det.el", "n 6\n0 1\n0 2\n1 2\n3 4\n");
  const auto a = run_cli("analyze \"" + input.string() + "\" --json");
  const auto b = run_cli("analyze \"" + input.string() + "\" --json");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(without_runtime(a.out) == without_runtime(b.out));
}

TEST_CASE("analyze accepts graph6 input") {
  const auto input = fixture("k4.g6", "C~\n");
  const auto r = run_cli("analyze \"" + input.string() + "\" --format graph6 --json");
  REQUIRE(r.exit_code == 0);
  const json j = parse_report(r.out);
  CHECK(j["result"]["triangles"] == 4);
  CHECK(j["result"]["blocks"]["k4"] == 1);
}

TEST_CASE("parse failures name the line and exit 2") {
  const auto input = fixture("bad.el", "n 5\n0 1\n0 x\n");
  const auto r = run_cli("analyze \"" + input.string() + "\" --json");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  const auto missing = run_cli("analyze /nonexistent/definitely.el --json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("analyze").exit_code == 2);
  CHECK(run_cli("search --n 3 --range 3 4").exit_code == 2);
  CHECK(run_cli("search").exit_code == 2);
  CHECK(run_cli("construct").exit_code == 2);
}

TEST_CASE("reduce writes g0 and its verification report") {
  const auto input = fixture("k4.el", "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  const fs::path g0 = scratch_dir() / "k4.g0.el";
  const auto r = run_cli("reduce \"" + input.string() + "\" --out \"" +
                         g0.string() + "\" --json");
  REQUIRE(r.exit_code == 0);
  const json j = parse_report(r.out);
  CHECK(j["result"]["triangles"] == 4);
  CHECK(j["result"]["g0_edges"] == 4);
  CHECK(j["result"]["verification"]["pass"] == true);
  CHECK(slurp(g0) == "n 4\n0 1\n0 2\n0 3\n1 2\n");
}

TEST_CASE("reduce rejects a graph with a 5-cycle") {
  const auto input = fixture("c5b.el", "0 1\n1 2\n2 3\n3 4\n4 0\n");
  const auto r = run_cli("reduce \"" + input.string() + "\" --json");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("5-cycle") != std::string::npos);
  CHECK(r.err.find("0 1 2 3 4") != std::string::npos);
}

TEST_CASE("construct pp emits the incidence graph and stats") {
  const auto r = run_cli("construct pp --q 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("n=14 m=21 t=0") == 0);

  const fs::path out = scratch_dir() / "pp2.el";
  const auto rj = run_cli("construct --out \"" + out.string() + "\" --json pp --q 2");
  REQUIRE(rj.exit_code == 0);
  const json j = parse_report(rj.out);
  CHECK(j["params"]["kind"] == "pp");
  CHECK(j["result"]["order"] == 14);
  CHECK(j["result"]["edges"] == 21);
  CHECK(j["result"]["girth"] == 6);
  std::ifstream in(out);
  const auto lg = c5t::parse_edge_list(in);
  CHECK(lg.graph.order() == 14);
  CHECK(lg.graph.edge_count() == 21);
}

TEST_CASE("construct bg emits the doubled graph") {
  const auto r = run_cli("construct bg --q 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("n=21 m=49 t=21") == 0);
  const auto rj = run_cli("construct --json bg --q 2 --side A");
  REQUIRE(rj.exit_code == 0);
  const json j = parse_report(rj.out);
  CHECK(j["params"]["side"] == "A");
  CHECK(j["result"]["triangles"] == 21);
  CHECK(j["result"]["c5_free"] == true);
}

TEST_CASE("construct rejects a non-prime order") {
  const auto r = run_cli("construct pp --q 6");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("prime") != std::string::npos);
}

TEST_CASE("construct named round-trips through a file") {
  const fs::path out = scratch_dir() / "book3.out.el";
  const auto r =
      run_cli("construct --out \"" + out.string() + "\" named --name \"book 3\"");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("n=5 m=7 t=3") == 0);
  CHECK(slurp(out) == "n 5\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
  const auto bad = run_cli("construct named --name \"petersen 1\"");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("construct graph6 output decodes to the same graph") {
  const fs::path out = scratch_dir() / "k4.out.g6";
  const auto r = run_cli("construct --format graph6 --out \"" + out.string() +
                         "\" named --name \"complete 4\"");
  REQUIRE(r.exit_code == 0);
  CHECK(slurp(out) == "C~\n");
}

TEST_CASE("search emits records and respects the cap") {
  const auto r = run_cli("search --n 4 --json");
  REQUIRE(r.exit_code == 0);
  const json j = parse_report(r.out);
  REQUIRE(j["result"]["records"].size() == 1);
  CHECK(j["result"]["records"][0]["n"] == 4);
  CHECK(j["result"]["records"][0]["max_triangles"] == 4);
  CHECK(j["result"]["records"][0]["witness"].size() == 6);

  const auto over = run_cli("search --n 9 --json");
  CHECK(over.exit_code == 2);
  CHECK(over.err.find("cap") != std::string::npos);
}

TEST_CASE("search range output is monotone") {
  const auto r = run_cli("search --range 3 5 --json");
  REQUIRE(r.exit_code == 0);
  const json j = parse_report(r.out);
  const auto& rows = j["result"]["records"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["max_triangles"] == 1);
  CHECK(rows[1]["max_triangles"] == 4);
  CHECK(rows[2]["max_triangles"] == 4);
}

TEST_CASE("search tables persist idempotently") {
  const fs::path table = scratch_dir() / "table.jsonl";
  fs::remove(table);
  const auto a = run_cli("search --range 0 5 --out \"" + table.string() + "\"");
  REQUIRE(a.exit_code == 0);
  const std::string first = slurp(table);
  const auto b = run_cli("search --range 0 5 --out \"" + table.string() + "\"");
  REQUIRE(b.exit_code == 0);
  CHECK(slurp(table) == first);
  const auto c = run_cli("search --n 6 --out \"" + table.string() + "\"");
  REQUIRE(c.exit_code == 0);
  const std::string merged = slurp(table);
  CHECK(merged.find(first) == 0);  // old lines intact, new line appended
  CHECK(merged.find("\"n\":6") != std::string::npos);

  int lines = 0;
  std::istringstream in(merged);
  std::string line;
  int last_n = -1;
  while (std::getline(in, line)) {
    ++lines;
    const json rec = json::parse(line);
    CHECK(rec["n"].get<int>() > last_n);
    last_n = rec["n"].get<int>();
  }
  CHECK(lines == 7);
}

TEST_CASE("search respects the thread cap from the environment") {
  const auto seq = run_cli("search --n 6 --json");
  const auto par = run_cli("search --n 6 --threads 4 --json");
  const auto capped = run_cli("search --n 6 --threads 4 --json",
                              "C5T_THREADS=1 ");
  REQUIRE(seq.exit_code == 0);
  REQUIRE(par.exit_code == 0);
  REQUIRE(capped.exit_code == 0);
  const json js = parse_report(seq.out);
  const json jp = parse_report(par.out);
  const json jc = parse_report(capped.out);
  CHECK(js["result"]["records"][0]["max_triangles"] ==
        jp["result"]["records"][0]["max_triangles"]);
  CHECK(js["result"]["records"][0]["witness"] ==
        jp["result"]["records"][0]["witness"]);
  CHECK(jc["params"]["threads"] == 1);
  CHECK(jp["params"]["threads"] == 4);
  const auto bad = run_cli("search --n 4", "C5T_THREADS=zero ");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("bounds evaluates the constants") {
  const auto r = run_cli("bounds --n 8 --json");
  REQUIRE(r.exit_code == 0);
  const json j = parse_report(r.out);
  CHECK(j["result"]["constants"]["main_theorem"].get<double>() ==
        0.35355339059327373);
  CHECK(j["result"]["eval"]["main_theorem"].get<double>() == 8.0);
  CHECK(j["result"]["note"].get<std::string>().find("asymptotic") !=
        std::string::npos);
}

TEST_CASE("bounds reports a graph ratio") {
  const auto input = fixture("k4b.el", "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  const auto r = run_cli("bounds \"" + input.string() + "\" --json");
  REQUIRE(r.exit_code == 0);
  const json j = parse_report(r.out);
  CHECK(j["result"]["report"]["n"] == 4);
  CHECK(j["result"]["report"]["triangles"] == 4);
  CHECK(j["result"]["report"]["ratio"].get<double>() == 0.5);
}

TEST_CASE("every command is byte-deterministic modulo runtime") {
  const auto input = fixture("det2.el", "n 7\n0 1\n0 2\n1 2\n0 3\n1 3\n5 6\n");
  const std::vector<std::string> cmds = {
      "analyze \"" + input.string() + "\" --json",
      "reduce \"" + input.string() + "\" --json",
      "construct --json bg --q 2",
      "search --range 0 4 --json",
      "bounds --n 5 --json",
  };
  for (const std::string& cmd : cmds) {
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(without_runtime(a.out) == without_runtime(b.out));
  }
}

#include <doctest.h>

#include <cstdio>
#include <unistd.h>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

const std::string kCli = CLUSTERWALK_CLI_PATH;
const std::string kFixtures = CLUSTERWALK_FIXTURE_DIR;

struct RunResult {
  int exit_code = 0;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string tmp_path(const std::string& suffix) {
  static int counter = 0;
  return "/tmp/clusterwalk_cli_test_" + std::to_string(getpid()) + "_" +
         std::to_string(counter++) + suffix;
}

RunResult run(const std::string& args) {
  std::string out_file = tmp_path(".cli");
  std::string cmd = kCli + " " + args + " > " + out_file + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out_file);
  std::remove(out_file.c_str());
  return r;
}

std::string fix(const std::string& name) { return kFixtures + "/" + name; }

}  // namespace

TEST_CASE("cli: plan then validate round trip on figure 3") {
  std::string plan_file = tmp_path(".plan.json");
  RunResult p = run("plan " + fix("fig3.a.json") + " " + fix("fig3.b.json") +
                    " -o " + plan_file);
  REQUIRE(p.exit_code == 0);
  json plan = json::parse(slurp(plan_file));
  CHECK(plan.at("moves").size() == 2);

  RunResult v = run("validate " + fix("fig3.a.json") + " " +
                    fix("fig3.b.json") + " " + plan_file);
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("ok") == 0);
  std::remove(plan_file.c_str());
}

TEST_CASE("cli: validate flags a corrupted plan with exit 1") {
  std::string plan_file = tmp_path(".plan.json");
  REQUIRE(run("plan " + fix("fig3.a.json") + " " + fix("fig3.b.json") + " -o " +
              plan_file)
              .exit_code == 0);
  json plan = json::parse(slurp(plan_file));
  SUBCASE("a dropped move leaves the replay short of the target") {
    plan["moves"].erase(1);
  }
  SUBCASE("swapped items break a transfer's source cluster") {
    auto& ts = plan["moves"][0]["transfers"];
    std::swap(ts[0]["item"], ts[1]["item"]);
  }
  {
    std::ofstream out(plan_file);
    out << plan.dump(2) << "\n";
  }
  RunResult v = run("validate " + fix("fig3.a.json") + " " + fix("fig3.b.json") +
                    " " + plan_file);
  CHECK(v.exit_code == 1);
  CHECK(v.out.find("invalid") != std::string::npos);
  std::remove(plan_file.c_str());
}

TEST_CASE("cli: cdg of identical inputs is empty; dot export written") {
  std::string dot_file = tmp_path(".dot");
  RunResult r = run("cdg " + fix("fig2a.a.json") + " " + fix("fig2a.a.json") +
                    " --dot " + dot_file);
  REQUIRE(r.exit_code == 0);
  json cdg = json::parse(r.out);
  CHECK(cdg.at("arcs").empty());
  std::string dot = slurp(dot_file);
  CHECK(dot.find("digraph") == 0);
  std::remove(dot_file.c_str());
}

TEST_CASE("cli: cdg output feeds decompose-equivalent rebuild") {
  RunResult r = run("cdg " + fix("fig7.a.json") + " " + fix("fig7.b.json"));
  REQUIRE(r.exit_code == 0);
  json cdg = json::parse(r.out);
  CHECK(cdg.at("arcs").size() == 5);
  CHECK(cdg.at("k").get<int>() == 4);
}

TEST_CASE("cli: bound and decompose run on figures") {
  RunResult b = run("bound " + fix("fig2b.a.json") + " " + fix("fig2b.b.json"));
  REQUIRE(b.exit_code == 0);
  json rep = json::parse(b.out);
  CHECK(rep.at("lower") == 1);
  CHECK(rep.at("improved_upper") == 2);

  for (std::string strat : {"greedy-paths", "greedy-cycles", "max-cycle-edges"}) {
    RunResult d = run("decompose " + fix("fig5.a.json") + " " +
                      fix("fig5.b.json") + " --strategy " + strat);
    REQUIRE(d.exit_code == 0);
    json dec = json::parse(d.out);
    CHECK(dec.at("paths").size() == 1);
    CHECK(dec.at("cycles").size() == 2);
  }
}

TEST_CASE("cli: oracle and distance agree on figure 7") {
  RunResult o = run("oracle " + fix("fig7.a.json") + " " + fix("fig7.b.json"));
  REQUIRE(o.exit_code == 0);
  CHECK(json::parse(o.out).at("distance") == 2);

  RunResult bounded = run("oracle " + fix("fig7.a.json") + " " +
                          fix("fig7.b.json") + " --bounds " +
                          fix("fig7.bounds_tight.json"));
  REQUIRE(bounded.exit_code == 0);
  CHECK(json::parse(bounded.out).at("distance") == 3);

  RunResult d = run("distance " + fix("fig7.a.json") + " " + fix("fig7.b.json"));
  REQUIRE(d.exit_code == 0);
  CHECK(json::parse(d.out).at("exact") == 2);
}

TEST_CASE("cli: bounded plan on figure 7 emits the 3-move walk") {
  RunResult r = run("plan " + fix("fig7.a.json") + " " + fix("fig7.b.json") +
                    " --bounded " + fix("fig7.bounds_tight.json"));
  REQUIRE(r.exit_code == 0);
  // Warnings land on stderr, JSON on stdout; both are captured here, so
  // parse from the first brace.
  json plan = json::parse(r.out.substr(r.out.find('{')));
  CHECK(plan.at("moves").size() == 3);
}

TEST_CASE("cli: diameter-bound evaluates the formulas") {
  std::string bounds_file = tmp_path(".bounds.json");
  {
    std::ofstream out(bounds_file);
    out << R"({"upper": [3, 3, 3], "lower": [1, 1, 1]})";
  }
  RunResult r = run("diameter-bound " + bounds_file + " --n 6");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep.at("lemma5_bound") == 7);
  CHECK(rep.at("theorem4_applicable") == true);
  CHECK(rep.at("theorem4_bound") == 8);
  std::remove(bounds_file.c_str());
}

TEST_CASE("cli: gen is deterministic and feeds the other commands") {
  std::string a1 = tmp_path(".a.json"), b1 = tmp_path(".b.json");
  std::string a2 = tmp_path(".a.json"), b2 = tmp_path(".b.json");
  REQUIRE(run("gen --n 12 --k 4 --seed 5 --out-a " + a1 + " --out-b " + b1)
              .exit_code == 0);
  REQUIRE(run("gen --n 12 --k 4 --seed 5 --out-a " + a2 + " --out-b " + b2)
              .exit_code == 0);
  CHECK(slurp(a1) == slurp(a2));
  CHECK(slurp(b1) == slurp(b2));

  std::string plan_file = tmp_path(".plan.json");
  REQUIRE(run("plan " + a1 + " " + b1 + " -o " + plan_file).exit_code == 0);
  CHECK(run("validate " + a1 + " " + b1 + " " + plan_file).exit_code == 0);
  // Same seed, same plan bytes.
  std::string plan_file2 = tmp_path(".plan.json");
  REQUIRE(run("plan " + a2 + " " + b2 + " -o " + plan_file2).exit_code == 0);
  CHECK(slurp(plan_file) == slurp(plan_file2));
  for (const std::string& f : {a1, b1, a2, b2, plan_file, plan_file2})
    std::remove(f.c_str());
}

TEST_CASE("cli: infeasible bounded endpoints exit with a validation failure") {
  std::string bounds_file = tmp_path(".bounds.json");
  {
    std::ofstream out(bounds_file);
    out << R"({"upper": [1, 1, 1, 1], "lower": [0, 0, 0, 0]})";
  }
  RunResult r = run("plan " + fix("fig7.a.json") + " " + fix("fig7.b.json") +
                    " --bounded " + bounds_file);
  CHECK(r.exit_code == 1);
  std::remove(bounds_file.c_str());
}

TEST_CASE("cli: usage and input errors") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("plan only-one-arg.json").exit_code == 2);
  CHECK(run("plan /nonexistent.json /nonexistent2.json").exit_code == 2);
  std::string bad = tmp_path(".bad.json");
  {
    std::ofstream out(bad);
    out << "{ not json";
  }
  RunResult r = run("cdg " + bad + " " + bad);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find(bad) != std::string::npos);  // file context in the message
  std::remove(bad.c_str());
}

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "scc/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  const int code = scc::cli::execute(args, out, err, in);
  return {code, out.str(), err.str()};
}

// RAII fixture file so tests do not depend on the working directory.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("scc_cli_fixture_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++) + ".txt");
    std::ofstream(path) << text;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

constexpr const char* kParadox = "3 3\n0 1 2\n1 2 0\n2 0 1\n";

}  // namespace

TEST_CASE("eval prints the choice set and rule scores") {
  TempFile profile(kParadox);
  const Run r = run({"eval", "--rule", "copeland", "--profile", profile.str()});
  CHECK(r.code == 0);
  CHECK(r.out == "choice: {0,1,2}\nscores: (1,1,1)\n");
  CHECK(r.err.empty());

  const Run plu = run({"eval", "--rule", "plurality", "--profile", profile.str()});
  CHECK(plu.code == 0);
  CHECK(plu.out == "choice: {0,1,2}\ncounts: (1,1,1)\nplurality_number: 1\n");

  const Run tops = run({"eval", "--rule", "tops", "--profile", profile.str()});
  CHECK(tops.code == 0);
  CHECK(tops.out == "choice: {0,1,2}\n");
}

TEST_CASE("eval reads a profile from stdin") {
  const Run r = run({"eval", "--rule", "borda", "--profile", "-"}, kParadox);
  CHECK(r.code == 0);
  CHECK(r.out == "choice: {0,1,2}\nscores: (6,6,6)\n");
}

TEST_CASE("eval emits json with rule-specific fields") {
  TempFile profile(kParadox);
  const Run r = run({"eval", "--rule", "copeland", "--profile", profile.str(),
                     "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rule"] == "copeland");
  CHECK(j["m"] == 3);
  CHECK(j["n"] == 3);
  CHECK(j["choice"] == std::vector<int>{0, 1, 2});
  CHECK(j["scores"] == std::vector<int>{1, 1, 1});
}

TEST_CASE("eval approval requires ballots and uses them") {
  TempFile profile(kParadox);
  const Run missing = run({"eval", "--rule", "approval", "--profile", profile.str()});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("ballots") != std::string::npos);

  const Run ok = run({"eval", "--rule", "approval", "--profile", profile.str(),
                      "--ballots", "1,2,1"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "choice: {2}\nscores: (1,1,2)\n");

  const Run stray = run({"eval", "--rule", "borda", "--profile", profile.str(),
                         "--ballots", "1,1,1"});
  CHECK(stray.code == 2);
}

TEST_CASE("eval rejects unknown rules, bad files, and malformed profiles") {
  TempFile profile(kParadox);
  CHECK(run({"eval", "--rule", "nope", "--profile", profile.str()}).code == 2);
  CHECK(run({"eval", "--rule", "borda", "--profile", "/no/such/file"}).code == 2);

  TempFile bad("3 2\n0 1 2\n0 0 2\n");
  const Run r = run({"eval", "--rule", "borda", "--profile", bad.str()});
  CHECK(r.code == 2);
  CHECK(r.err.find("permutation") != std::string::npos);
}

TEST_CASE("construct emits the expected witness text") {
  const Run r = run({"construct", "--rule", "copeland", "-m", "4", "-n", "3",
                     "--size", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "4 3\n3 0 1 2\n1 2 0 3\n2 0 3 1\n");
}

TEST_CASE("construct relabels size-parameterized witnesses onto a target set") {
  const Run r = run({"construct", "--rule", "copeland", "-m", "4", "-n", "3",
                     "--set", "1,3"});
  REQUIRE(r.code == 0);
  const scc::Profile u = scc::codec_parse(r.out);
  CHECK(scc::copeland_choice(u) == scc::AltSet::of({1, 3}));
}

TEST_CASE("construct reports infeasible targets with exit 3") {
  const Run r = run({"construct", "--rule", "copeland", "-m", "4", "-n", "3",
                     "--size", "4"});
  CHECK(r.code == 3);
  CHECK(r.err.find("m even: size m infeasible") != std::string::npos);

  CHECK(run({"construct", "--rule", "borda", "-m", "3", "-n", "3", "--size", "2"})
            .code == 3);
  CHECK(run({"construct", "--rule", "plurality", "-m", "3", "-n", "4", "--size", "3"})
            .code == 3);
}

TEST_CASE("construct usage errors exit 2") {
  // --set and --size are mutually exclusive; exactly one is needed
  CHECK(run({"construct", "--rule", "pareto", "-m", "3", "-n", "2"}).code == 2);
  CHECK(run({"construct", "--rule", "pareto", "-m", "3", "-n", "2", "--set", "0",
             "--size", "1"})
            .code == 2);
  CHECK(run({"construct", "--rule", "tops", "-m", "3", "-n", "2", "--size", "1"})
            .code == 2);
  CHECK(run({"construct", "--rule", "pareto", "-m", "3", "-n", "2", "--set", "0,0"})
            .code == 2);
  CHECK(run({"construct", "--rule", "pareto", "-m", "3", "-n", "2", "--size", "9"})
            .code == 2);
}

TEST_CASE("construct approval prints the ballot line and json ballots") {
  const Run r = run({"construct", "--rule", "approval", "-m", "4", "-n", "2",
                     "--set", "0,1,2"});
  REQUIRE(r.code == 0);
  const auto split = r.out.find("ballots: ");
  REQUIRE(split != std::string::npos);
  const scc::Profile u = scc::codec_parse(r.out.substr(0, split));
  CHECK(r.out.substr(split) == "ballots: 2,1\n");
  CHECK(scc::approval_choice(u, {2, 1}) == scc::AltSet::of({0, 1, 2}));

  const Run j = run({"construct", "--rule", "approval", "-m", "4", "-n", "2",
                     "--set", "0,1,2", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["ballots"] == std::vector<int>{2, 1});
  CHECK(doc["set"] == std::vector<int>{0, 1, 2});
  CHECK(doc["choice"] == std::vector<int>{0, 1, 2});
}

TEST_CASE("range emits the achievable family") {
  const Run r = run({"range", "--rule", "copeland", "-m", "3", "-n", "3",
                     "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rule"] == "copeland");
  CHECK(j["sizes"] == std::vector<int>{1, 3});
  CHECK(j["witnesses"].size() == 4);

  const Run text = run({"range", "--rule", "copeland", "-m", "3", "-n", "3"});
  CHECK(text.code == 0);
  CHECK(text.out.find("sizes: 1 3\n") != std::string::npos);
  CHECK(text.out.find("achievable sets: 4\n") != std::string::npos);
}

TEST_CASE("range rejects approval and guards huge spaces") {
  CHECK(run({"range", "--rule", "approval", "-m", "3", "-n", "2"}).code == 2);
  const Run guarded = run({"range", "--rule", "borda", "-m", "7", "-n", "2"});
  CHECK(guarded.code == 2);
  CHECK(guarded.err.find("guard") != std::string::npos);
}

TEST_CASE("range output is identical across invocations") {
  const std::vector<std::string> args = {"range", "--rule", "top_cycle", "-m", "4",
                                         "-n", "3", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("verify runs the claim checklist") {
  const Run r = run({"verify", "--m-max", "3", "--n-max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("claims pass") != std::string::npos);

  const Run j = run({"verify", "--m-max", "3", "--n-max", "3", "--format", "json"});
  REQUIRE(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["all_pass"] == true);
}

TEST_CASE("min-gauge reports the brute-force minimum") {
  const Run r = run({"min-gauge", "-m", "4", "-n", "2", "--set", "0,1,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "min gauge: 2\n");

  const Run j = run({"min-gauge", "-m", "3", "-n", "3", "--size", "1",
                     "--format", "json"});
  REQUIRE(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["min_gauge"] == 1);

  CHECK(run({"min-gauge", "-m", "5", "-n", "2", "--set", "0"}).code == 2);
}

TEST_CASE("top-level usage is friendly") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("eval") != std::string::npos);
  CHECK(run({"eval", "--rule", "borda"}).code == 2);  // missing --profile
  TempFile profile(kParadox);
  CHECK(run({"eval", "--rule", "borda", "--profile", profile.str(), "--format",
             "yaml"})
            .code == 2);
}

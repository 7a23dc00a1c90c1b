#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = tccs::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string program_file() {
  static const std::string path = [] {
    const auto p = std::filesystem::temp_directory_path() / "tccs_cli_test.tccs";
    std::ofstream f(p);
    f << "P = a.0 | Omega;\n"
         "Q = Omega;\n"
         "Z = 0;\n"
         "S = (a.0 + b.0) | 'a.Omega;\n"
         "B(x) = x.(B(x) | B(x));\n"
         "G = B(a);\n";
    return p.string();
  }();
  return path;
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("check exit codes") {
  const auto rel = run({"check", "--rel", "conv", "-p", "P", "-q", "Q", program_file()});
  CHECK(rel.code == 0);
  CHECK(rel.out == "related\n");

  const auto no = run({"check", "--rel", "usual", "-p", "Z", "-q", "Q", program_file()});
  CHECK(no.code == 1);
  CHECK(contains(no.out, "not related"));
  CHECK(contains(no.out, "has no weak tick answer"));
}

TEST_CASE("check accepts expressions and falsifies") {
  const auto r = run({"check", "-p", "a.(b.0 + c.0)", "-q", "a.b.0 + a.c.0", "--falsify",
                      "--depth", "2", program_file()});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "distinguishing context: "));
  const auto j = run({"check", "-p", "Z", "-q", "Q", "--falsify", "--format", "json", program_file()});
  const auto v = nlohmann::json::parse(j.out);
  CHECK(v["related"] == false);
  CHECK(v["tester"] == "[]");
  CHECK(v["mode"] == "conv");
  CHECK(v["certificate"].size() >= 1);
}

TEST_CASE("analyze") {
  const auto r = run({"analyze", "-p", "S", program_file()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "converge=false ctxconv=true diverge=true"));
  const auto all = run({"analyze", "-p", "S", "--all", "--format", "json", program_file()});
  CHECK(nlohmann::json::parse(all.out).size() > 1);
}

TEST_CASE("lts formats") {
  const auto j = run({"lts", "-p", "S", "--format", "json", program_file()});
  REQUIRE(j.code == 0);
  const auto v = nlohmann::json::parse(j.out);
  CHECK(v["truncated"] == false);
  CHECK(v["roots"] == nlohmann::json::array({0}));
  for (const auto& s : v["states"]) {
    CHECK(s.contains("id"));
    CHECK(s.contains("term"));
    CHECK(s.contains("stable"));
    CHECK((s["commit"].is_null() || s["commit"].is_array()));
  }
  for (const auto& e : v["edges"]) CHECK(e.size() == 3);

  const auto d = run({"lts", "-p", "S", "--format", "dot", program_file()});
  CHECK(d.out.rfind("digraph", 0) == 0);
  CHECK(contains(d.out, "peripheries=2"));
}

TEST_CASE("bound exceeded") {
  CHECK(run({"lts", "-p", "G", "--bound", "20", program_file()}).code == 3);
  CHECK(run({"check", "-p", "G", "-q", "Z", "--bound", "20", program_file()}).code == 3);
}

TEST_CASE("usage and parse errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"check", "-p", "P", program_file()}).code == 2);
  CHECK(run({"check", "-p", "P", "-q", "Q", "--rel", "strong", program_file()}).code == 2);
  CHECK(run({"check", "-p", "P", "-q", "Nope", program_file()}).code == 2);
  CHECK(run({"parse", "/nonexistent/file"}).code == 2);
  const auto bad = run({"parse", "-"}, "P = a.0;\nQ = a.;\n");
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "2:7:"));
  CHECK(run({"check", "-p", "tick.0", "-q", "0", "--rel", "usual-untimed", program_file()}).code == 2);
}

TEST_CASE("parse output") {
  const auto r = run({"parse", "-"}, "P = a.0 + b.0;\nE = emit(a);\n");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "P = a.0 + b.0;  // ccs"));
  CHECK(contains(r.out, "E = emit(a);  // sl"));
  const auto j = run({"parse", "--format", "json", "-"}, "P = a.0;\n");
  CHECK(nlohmann::json::parse(j.out)["processes"][0]["name"] == "P");
}

TEST_CASE("stepper") {
  const auto r = run({"step", "-p", "{a.0} else b.0", program_file()}, "x\n0\n");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[instant 0] {a.0} else b.0"));
  CHECK(contains(r.out, "enter a transition index or q"));
  CHECK(contains(r.out, "[instant 0] 0"));
  const auto t = run({"step", "-p", "{a.0} else b.0", program_file()}, "1\n1\nq\n");
  CHECK(contains(t.out, "[instant 1] b.0"));
  CHECK(contains(t.out, "[instant 2] b.0"));
}

TEST_CASE("identical invocations give identical reports") {
  const std::vector<std::string> args{"check", "--rel", "conv-div", "-p", "S", "-q", "P",
                                      "--format", "json", program_file()};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("paper suite") {
  const auto r = run({"paper-suite"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, " passed"));
  CHECK_FALSE(contains(r.out, "FAIL"));
}

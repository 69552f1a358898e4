#include <algorithm>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "levelplan/cli.hpp"
#include "levelplan/formats.hpp"
#include "levelplan/lab.hpp"

using namespace levelplan;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory under the build tree, recreated per test case.
struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& name) : dir(fs::current_path() / "cli_test_scratch" / name) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = (dir / name).string();
    write_text_file(p, content);
    return p;
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

const char* kEdge = "LGF 1\nv a 1\nv b 2\ne a b\n";
const char* kK22 = "LGF 1\nv u1 1\nv u2 1\nv v1 2\nv v2 2\ne u1 v1\ne u1 v2\ne u2 v1\ne u2 v2\n";

}  // namespace

TEST_CASE("cli: check") {
  Scratch s("check");
  const auto edge = s.file("edge.lgf", kEdge);
  const auto k22 = s.file("k22.lgf", kK22);
  for (const std::string algo : {"oracle", "satcheck", "vegraph-test"}) {
    auto r = run({"check", edge, "--algo", algo});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "planar\n");
    r = run({"check", k22, "--algo", algo});
    CHECK(r.code == kExitFailure);
    CHECK(r.out == "not planar\n");
  }
  CHECK(run({"check", k22, "--budget", "1"}).code == kExitBudget);
  CHECK(run({"check", edge, "--algo", "randerath"}).code == kExitUsage);
  CHECK(run({"check", edge, "--algo", "nope"}).code == kExitUsage);
}

TEST_CASE("cli: usage and malformed input") {
  Scratch s("errors");
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"check"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"check", s.path("missing.lgf")}).code == kExitMalformed);
  const auto flat = s.file("flat.lgf", "LGF 1\nv a 1\nv b 1\ne a b\n");
  const auto r = run({"check", flat});
  CHECK(r.code == kExitMalformed);
  CHECK(r.err.find("invalid level graph") != std::string::npos);
  CHECK(run({"check", s.file("junk.lgf", "hello\n")}).code == kExitMalformed);
}

TEST_CASE("cli: bundled instance end to end") {
  Scratch s("bundled");
  const auto dir = s.path("b");
  REQUIRE(run({"bundled", dir}).code == kExitOk);
  const auto graph = dir + "/graph.lgf";
  CHECK(run({"check", graph}).out == "planar\n");
  CHECK(run({"check", graph, "--algo", "satcheck"}).out == "planar\n");

  auto r = run({"embed", graph, "--algo", "randerath", "--replay", dir + "/randerath.rpf"});
  CHECK(r.code == kExitFailure);
  CHECK(r.out.find("embedding failed") != std::string::npos);
  CHECK(r.out.find("conflict 2:i<g") != std::string::npos);

  const auto reports = s.path("reports");
  r = run({"embed", graph, "--algo", "healy-kuusik", "--replay", dir + "/healy-kuusik.rpf", "--report-dir", reports});
  CHECK(r.code == kExitFailure);
  const auto report = read_report(reports);
  CHECK(report.kind == FailureKind::FalseNegative);
  CHECK(reproduces(report));

  const auto drawing = s.path("hh.ldf");
  r = run({"embed", graph, "--algo", "harrigan-healy", "--replay", dir + "/harrigan-healy.rpf", "-o", drawing});
  CHECK(r.code == kExitFailure);
  CHECK(fs::exists(drawing));
  r = run({"verify", graph, drawing});
  CHECK(r.code == kExitFailure);
  CHECK(r.out == "2\n");

  const auto witness = s.path("witness.ldf");
  CHECK(run({"embed", graph, "--algo", "oracle", "-o", witness}).code == kExitOk);
  r = run({"verify", graph, witness});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "0\n");

  const auto svg = s.path("hh.svg");
  CHECK(run({"render", graph, drawing, "-o", svg}).code == kExitOk);
  CHECK(read_text_file(svg).find("class=\"crossing\"") != std::string::npos);

  CHECK(run({"embed", graph, "--algo", "healy-kuusik", "--replay", dir + "/randerath.rpf"}).code == kExitMalformed);
  CHECK(run({"embed", graph, "--algo", "satcheck"}).code == kExitUsage);
}

TEST_CASE("cli: embed succeeds on a path and on K22 reports not planar") {
  Scratch s("embed");
  const auto path = s.file("path.lgf", "LGF 1\nv a 1\nv b 2\nv c 3\ne a b\ne b c\n");
  for (const std::string algo : {"randerath", "healy-kuusik", "harrigan-healy"}) {
    const auto r = run({"embed", path, "--algo", algo});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("LDF 1\n", 0) == 0);
  }
  const auto k22 = s.file("k22.lgf", kK22);
  const auto r = run({"embed", k22, "--algo", "randerath", "--policy", "random", "--seed", "3"});
  CHECK(r.code == kExitFailure);
  CHECK(r.out == "not planar\n");
}

TEST_CASE("cli: verify K22") {
  Scratch s("verify");
  const auto k22 = s.file("k22.lgf", kK22);
  const auto d = s.file("d.ldf", "LDF 1\nl 1 u1 u2\nl 2 v1 v2\n");
  const auto r = run({"verify", k22, d});
  CHECK(r.code == kExitFailure);
  CHECK(r.out == "1\n");
  const auto bad = s.file("bad.ldf", "LDF 1\nl 1 u1\nl 2 v1 v2\n");
  CHECK(run({"verify", k22, bad}).code == kExitMalformed);
}

TEST_CASE("cli: properize") {
  Scratch s("properize");
  const auto long_edge = s.file("long.lgf", "LGF 1\nv a 1\nv b 4\ne a b\n");
  const auto out = s.path("proper.lgf");
  REQUIRE(run({"properize", long_edge, "-o", out}).code == kExitOk);
  const auto g = parse_lgf(read_text_file(out));
  CHECK(g.vertices().size() == 4);
  CHECK(g.edges().size() == 3);
  CHECK(g.level_of("a__b__1") == 2);
  // already proper input comes back unchanged
  CHECK(run({"properize", out}).out == read_text_file(out));
}

TEST_CASE("cli: fuzz and shrink") {
  Scratch s("fuzz");
  const auto dir = s.path("reports");
  const auto r = run({"fuzz", "--seed", "1", "--iterations", "300", "--targets", "randerath,healy-kuusik", "-o", dir});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("iterations 300") != std::string::npos);
  std::vector<fs::path> found;
  for (const auto& entry : fs::directory_iterator(dir)) {
    found.push_back(entry.path());
  }
  REQUIRE(!found.empty());
  std::sort(found.begin(), found.end());
  const auto first = read_report(found.front().string());
  CHECK(reproduces(first));
  CHECK(found.front().filename().string() == report_name(first));

  const auto small = s.path("small");
  CHECK(run({"shrink", found.front().string(), "-o", small}).code == kExitOk);
  const auto shrunk = read_report(small);
  CHECK(shrunk.kind == first.kind);
  CHECK(reproduces(shrunk));
  CHECK(shrunk.graph.graph().vertices().size() <= first.graph.graph().vertices().size());

  const auto again = run({"fuzz", "--seed", "1", "--iterations", "300", "--targets", "randerath,healy-kuusik", "-o",
                          s.path("again")});
  // same stats line; report lines differ only in the directory
  CHECK(again.out.substr(again.out.rfind("iterations")) == r.out.substr(r.out.rfind("iterations")));
  CHECK(again.out.find("000129-randerath") != std::string::npos);
  CHECK(run({"fuzz", "--targets", "bogus"}).code == kExitUsage);
}

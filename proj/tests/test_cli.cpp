// Command-line front end: exit codes, record formats, determinism, and the
// selftest gate against a corrupted fixture set.
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "satake/catalog.hpp"
#include "satake/cli.hpp"
#include "satake/fixtures.hpp"
#include "satake/types.hpp"

using namespace satake;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

std::vector<std::string> tab_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

}  // namespace

TEST_CASE("argument errors exit 1, help exits 0") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"show"}).code == 1);             // missing pair
  CHECK(run_cli({"show", "ZZ(n=1)"}).code == 1);  // unparseable pair
  CHECK(run_cli({"show", "(A_3,B_2)"}).code == 1);  // inconsistent display
  CHECK(run_cli({"list", "--max-rank", "99"}).code == 1);
  CHECK(run_cli({"tables", "--which", "bogus"}).code == 1);
  CHECK(run_cli({"list", "--format", "xml"}).code == 1);

  const RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("descendants") != std::string::npos);
  CHECK(help.out.find("selftest") != std::string::npos);

  const RunResult bad = run_cli({"show", "ZZ(n=1)"});
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("list records round-trip through the pair grammar") {
  const RunResult r = run_cli({"list", "--format", "records"});
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  CHECK(lines.size() == 194);
  for (const std::string& line : lines) {
    CAPTURE(line);
    const auto fields = tab_fields(line);
    REQUIRE(fields.size() == 3);
    const PairId p = canonicalize(parse_pair_name(fields[0]));
    CHECK(pair_name(p) == fields[0]);
    CHECK(display_name(p) == fields[1]);
    CHECK(catalog_rank(p) == std::stoi(fields[2]));
  }
}

TEST_CASE("show prints the classification summary") {
  const RunResult r = run_cli({"show", "EIV"});
  REQUIRE(r.code == 0);
  for (const char* needle :
       {"pair:", "EIV", "(E_6,F_4)", "center:", "Z3", "pleasant:",
        "satake diagram:", "extended satake diagram:", "gamma: g"}) {
    CAPTURE(needle);
    CHECK(r.out.find(needle) != std::string::npos);
  }
  // The diagonal ambient is displayed specially and must not throw.
  CHECK(run_cli({"show", "DIAG(A2)"}).code == 0);
}

TEST_CASE("descendants records parse back") {
  const RunResult r = run_cli({"descendants", "EVIII", "--format", "records"});
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  CHECK(lines.size() >= 26);
  for (const std::string& line : lines) {
    CAPTURE(line);
    const auto fields = tab_fields(line);
    REQUIRE(fields.size() == 4);
    CHECK(fields[0] == "EVIII");
    if (fields[1] != "EVIII") {  // factor list of a proper descendant
      std::istringstream factors(fields[1]);
      std::string id;
      while (std::getline(factors, id, ';')) {
        CAPTURE(id);
        CHECK_NOTHROW(parse_pair_name(id));
      }
    }
    CHECK(std::stoi(fields[2]) >= 0);
    CHECK(std::stoi(fields[3]) >= 1);
  }
}

TEST_CASE("witness listing marks every erasure verified") {
  const RunResult r = run_cli({"descendants", "AII(n=2)", "--witness"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("witness verified") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);

  // Diagonal ambients carry structural witnesses.
  const RunResult diag = run_cli({"descendants", "DIAG(A2)", "--witness"});
  REQUIRE(diag.code == 0);
  CHECK(diag.out.find("structural") != std::string::npos);
  CHECK(diag.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("gelfand verb reports verdicts and accepts hypotheses") {
  const RunResult cert = run_cli({"gelfand", "EIV", "--format", "records"});
  REQUIRE(cert.code == 0);
  CHECK(cert.out.find("EIV gelfand-certified blocking:[]") == 0);

  const RunResult cond = run_cli({"gelfand", "EVII", "--format", "records"});
  REQUIRE(cond.code == 0);
  CHECK(cond.out.find("conditional") != std::string::npos);
  CHECK(cond.out.find("blocking:[DIa(r=5,s=1);EVII]") != std::string::npos);

  const RunResult assumed = run_cli({"gelfand", "EVII", "--assume-regular",
                                     "DIa(r=5,s=1),EVII", "--format",
                                     "records"});
  REQUIRE(assumed.code == 0);
  CHECK(assumed.out.find("gelfand-certified") != std::string::npos);

  const RunResult all = run_cli({"gelfand"});
  REQUIRE(all.code == 0);
  CHECK(all.out.find("certified") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"tables", "--which", "descendants",
                                 "--max-rank", "5"},
        std::vector<std::string>{"tables", "--which", "pleasant"},
        std::vector<std::string>{"tables", "--which", "nice"},
        std::vector<std::string>{"list"},
        std::vector<std::string>{"gelfand"}}) {
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("selftest passes on the shipped fixtures and gates on corruption") {
  const RunResult good = run_cli({"selftest"});
  CHECK(good.code == 0);
  CHECK(good.out.find("selftest: PASS") != std::string::npos);

  // Copy the fixtures, drop the first entry of the first descendant block,
  // and point the fixture override at the broken copy: the engine then finds
  // a descendant the fixture misses, and the gate must fire.
  const std::string original = fixture_dir();
  const fs::path broken = fs::path("/tmp") / "satake-broken-fixtures";
  fs::remove_all(broken);
  fs::create_directories(broken);
  for (const auto& entry : fs::directory_iterator(original))
    fs::copy_file(entry.path(), broken / entry.path().filename());

  {
    std::ifstream in(broken / "descendants-exceptional.txt");
    REQUIRE(in.good());
    std::vector<std::string> kept;
    std::string line;
    bool in_first_block = false;
    bool dropped = false;
    while (std::getline(in, line)) {
      if (!dropped) {
        if (line.rfind("family ", 0) == 0) {
          in_first_block = true;
        } else if (in_first_block && !line.empty() && line[0] != '#') {
          dropped = true;
          continue;  // drop this entry
        }
      }
      kept.push_back(line);
    }
    REQUIRE(dropped);
    std::ofstream out(broken / "descendants-exceptional.txt",
                      std::ios::trunc);
    for (const std::string& l : kept) out << l << "\n";
  }

  REQUIRE(setenv("SATAKE_FIXTURES", broken.c_str(), 1) == 0);
  const RunResult bad = run_cli({"selftest"});
  REQUIRE(setenv("SATAKE_FIXTURES", original.c_str(), 1) == 0);
  fs::remove_all(broken);

  CHECK(bad.code == 2);
  CHECK(bad.out.find("selftest: FAIL") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "cli.hpp"
#include "zc/eval_cache.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "zc");
  std::ostringstream out, err;
  std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
  std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
  int status = zc::run_cli(args);
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dual subcommand") {
  CliResult r = run({"dual", "--index", "3"});
  CHECK(r.status == 0);
  CHECK(r.out == "1,2\n");
  CHECK(run({"dual", "--word", "100"}).out == "110\n");

  CliResult j = run({"dual", "--index", "3", "--json"});
  json doc = json::parse(j.out);
  CHECK(doc["dual_index"] == json({1, 2}));
  CHECK(doc["word"] == "100");

  CHECK(run({"dual"}).status == 2);
  CHECK(run({"dual", "--index", "3", "--word", "100"}).status == 2);
  CHECK(run({"dual", "--index", "1"}).status == 2);
}

TEST_CASE("eval subcommand") {
  CliResult r = run({"eval", "--index", "1,2", "--c", "0", "--digits", "40"});
  CHECK(r.status == 0);
  CHECK(r.out.substr(0, 12) == "1.2020569031");

  CHECK(run({"eval", "--index", "2", "--c", "0.5"}).status == 2);
  CHECK(run({"eval", "--index", "2", "--c", "3/2"}).status == 2);
  CHECK(run({"eval", "--index", "2", "--c", "0", "--digits", "10"}).status == 2);
  CHECK(run({"eval", "--c", "0"}).status == 2);
  CHECK(run({"eval", "--index", "1,1", "--c", "0"}).status == 2);
  CHECK(run({"eval", "--index", "2", "--c", "0", "--cut", "7/5"}).status == 2);
  CHECK(run({"eval", "--index", "2", "--c", "0", "--bogus"}).status == 2);

  // Explicit generic cut agrees with the fixed point.
  CliResult generic = run({"eval", "--index", "3", "--c", "1/3", "--cut", "2/5"});
  CliResult fixed = run({"eval", "--index", "3", "--c", "1/3"});
  CHECK(generic.out.substr(0, 30) == fixed.out.substr(0, 30));
}

TEST_CASE("eval cache round trip") {
  std::string path = "test_cli_cache.json";
  std::remove(path.c_str());
  CliResult first =
      run({"eval", "--index", "2", "--c", "-1/2", "--digits", "45", "--cache", path, "--json"});
  CHECK(first.status == 0);
  json doc1 = json::parse(first.out);
  CHECK(doc1["cached"] == false);

  CliResult second =
      run({"eval", "--index", "2", "--c", "-1/2", "--digits", "45", "--cache", path, "--json"});
  json doc2 = json::parse(second.out);
  CHECK(doc2["cached"] == true);
  CHECK(doc1["value"] == doc2["value"]);

  std::ifstream in(path);
  json stored;
  in >> stored;
  CHECK(stored["format"] == zc::EvalCache::kFormatTag);

  // A stale schema version is ignored.
  {
    std::ofstream out(path);
    out << R"({"format":"zc-eval-cache/0","entries":{"10|-1/2|45":"9.9"}})";
  }
  CliResult third =
      run({"eval", "--index", "2", "--c", "-1/2", "--digits", "45", "--cache", path, "--json"});
  CHECK(json::parse(third.out)["cached"] == false);
  CHECK(json::parse(third.out)["value"] == doc1["value"]);
  std::remove(path.c_str());
}

TEST_CASE("shuffle subcommand") {
  CliResult r = run({"shuffle", "--left", "2", "--right", "3"});
  CHECK(r.status == 0);
  CHECK(r.out == "6*Z(1,4) + 3*Z(2,3) + Z(3,2)\n");

  CliResult j = run({"shuffle", "--left-word", "1", "--right-word", "0", "--json"});
  json doc = json::parse(j.out);
  CHECK(doc["terms"].size() == 2);
  CHECK(run({"shuffle", "--left", "2"}).status == 2);
}

TEST_CASE("bdim subcommand") {
  CliResult r = run({"bdim", "--max-weight", "9"});
  CHECK(r.status == 0);
  CHECK(r.out == "1 0 1 1 3 4 9 15 31 55\n");
  CHECK(run({"bdim", "--max-weight", "11"}).status == 2);  // long run needs --long

  CliResult j = run({"bdim", "--max-weight", "6", "--json"});
  json doc = json::parse(j.out);
  CHECK(doc["dims"] == json({1, 0, 1, 1, 3, 4, 9}));
  CHECK(doc["ranks"][6] == 7);
}

TEST_CASE("mtv-guess subcommand") {
  CliResult r = run({"mtv-guess", "--terms", "16"});
  CHECK(r.status == 0);
  CHECK(r.out.find("1 0 1 1 2 2 4 5 9 10 19 23 42 49 91 110") != std::string::npos);
  CHECK(r.out.find("consistency: pass") != std::string::npos);

  CliResult seeded = run({"mtv-guess", "--terms", "16", "--seed", "1,0,1,1", "--json"});
  json doc = json::parse(seeded.out);
  CHECK(doc["A"].size() == 16);
  CHECK(doc["A"][15] == "110");
  CHECK(doc["consistent"] == true);
  CHECK(run({"mtv-guess", "--terms", "2"}).status == 2);
}

TEST_CASE("genfun subcommand") {
  CliResult r = run({"genfun", "--c", "1/2", "--order", "2", "--digits", "40"});
  CHECK(r.status == 0);
  CHECK(r.out.find("pass") != std::string::npos);
  CliResult j = run({"genfun", "--c", "0", "--order", "2", "--digits", "40", "--json"});
  json doc = json::parse(j.out);
  CHECK(doc["pass"] == true);
  CHECK(run({"genfun", "--order", "2"}).status == 2);
}

TEST_CASE("tables subcommand") {
  CliResult r = run({"tables", "--max-weight", "6"});
  CHECK(r.status == 0);
  CHECK(r.out.find("1 0 1 1 1 2 2 3 4 5 7 9 12 16") != std::string::npos);    // MZV row
  CHECK(r.out.find("1 0 1 1 3 4 9 13 28 40") != std::string::npos);           // family row
  CHECK(r.out.find("1 0 1 1 3 4 9 15 31 55 109 203 397 754") != std::string::npos);
  CliResult j = run({"tables", "--max-weight", "4", "--json"});
  json doc = json::parse(j.out);
  CHECK(doc["duality_quotient_computed"] == json({1, 0, 1, 1, 3}));
}

TEST_CASE("json output round-trips") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"bdim", "--max-weight", "5", "--json"},
           {"dual", "--index", "1,3", "--json"},
           {"eval", "--index", "2", "--c", "1/3", "--digits", "30", "--json"},
           {"mtv-guess", "--terms", "10", "--json"}}) {
    CliResult r = run(args);
    REQUIRE(r.status == 0);
    json parsed = json::parse(r.out);
    CHECK(json::parse(parsed.dump()) == parsed);
  }
}

TEST_CASE("unknown subcommand fails validation") {
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({}).status == 2);
}

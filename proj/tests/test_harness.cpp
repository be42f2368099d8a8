#include <catch2/catch_amalgamated.hpp>

#include "ordcal/exporters.hpp"
#include "ordcal/suites.hpp"

using namespace ordcal;

TEST_CASE("suite registry") {
  CHECK(suite_registry().size() == 22);
  SuiteParams p;
  CHECK_THROWS_AS(run_suite("no-such-suite", p), std::invalid_argument);
}

TEST_CASE("every suite passes at small bounds") {
  SuiteParams p;
  p.n = 2;
  p.h = 2;
  p.x = 2;
  p.len = 3;
  p.count = 50;
  p.seed = 7;
  for (const auto& [name, fn] : suite_registry()) {
    CAPTURE(name);
    SuiteReport rep = run_suite(name, p);
    CHECK(rep.pass());
    CHECK(rep.pairs > 0);
  }
}

TEST_CASE("suite reports are deterministic and well-formed") {
  SuiteParams p;
  p.count = 100;
  p.seed = 42;
  SuiteReport a = run_suite("collapse-axioms", p);
  SuiteReport b = run_suite("collapse-axioms", p);
  CHECK(a.pairs == b.pairs);
  CHECK(a.seed == 42);
  std::string json = a.to_json();
  for (const char* key :
       {"\"suite\"", "\"params\"", "\"seed\"", "\"pairs\"", "\"violations\"",
        "\"millis\""})
    CHECK(json.find(key) != std::string::npos);
  SECTION("different seeds draw different samples but still pass") {
    p.seed = 43;
    CHECK(run_suite("collapse-axioms", p).pass());
  }
}

TEST_CASE("hasse export") {
  // a diamond: 0 < 1,2 < 3
  std::vector<std::vector<bool>> rel = {{1, 1, 1, 1},
                                        {0, 1, 0, 1},
                                        {0, 0, 1, 1},
                                        {0, 0, 0, 1}};
  auto leq = [&](std::size_t i, std::size_t j) { return rel[i][j]; };
  auto cov = covers(4, leq);
  REQUIRE(cov.size() == 4);  // transitive edge 0->3 reduced away
  std::string dot = dot_hasse({"a", "b", "c", "d"}, leq);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(parse_dot_edges(dot).size() == 4);
  SECTION("csv matrix") {
    std::string csv = csv_matrix({"a", "b"}, [](std::size_t i, std::size_t j) {
      return i == j ? std::string("EQ") : std::string("LT");
    });
    CHECK(csv.find("\"a\"") != std::string::npos);
    CHECK(csv.find("EQ") != std::string::npos);
  }
}

TEST_CASE("jsonl export") {
  std::string out = jsonl_terms({"[0]", "th(0,b \"1\")"});
  CHECK(out == "{\"term\": \"[0]\"}\n{\"term\": \"th(0,b \\\"1\\\")\"}\n");
}

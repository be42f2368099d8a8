#include <catch2/catch_amalgamated.hpp>

#include "ordcal/enumerate.hpp"
#include "ordcal/grammar.hpp"
#include "ordcal/seq_term.hpp"

using namespace ordcal;

TEST_CASE("base terms") {
  SeqTerm x = seq_base(std::uint64_t{0});
  CHECK(is_leaf(x));
  CHECK(deg(x) == -1);
  CHECK(height(x) == 0);
}

TEST_CASE("index constraint on term formation") {
  SeqTerm x = seq_base(std::uint64_t{0});
  SeqTerm t2 = seq_theta(2, x);
  CHECK(deg(t2) == 2);
  CHECK(height(t2) == 1);
  // the outer index must be at least the inner degree minus one
  CHECK_NOTHROW(seq_theta(1, t2));
  CHECK_THROWS_AS(seq_theta(0, t2), TermConstraintError);
  CHECK_THROWS_AS(seq_theta(-1, x), TermConstraintError);
}

TEST_CASE("collapsing maps strip outer indices") {
  SeqTerm s = from_sequence({2, 1, 0});
  CHECK(seq_eq(k(0, s), from_sequence({0})));
  CHECK(seq_eq(k(1, s), from_sequence({1, 0})));
  CHECK(seq_eq(k(2, s), s));
  SECTION("idempotence and composition") {
    for (int i = 0; i <= 3; ++i) {
      CHECK(seq_eq(k(i, k(i, s)), k(i, s)));
      for (int j = 0; j <= 3; ++j)
        CHECK(seq_eq(k(i, k(j, s)), k(std::min(i, j), s)));
    }
  }
  SECTION("full collapse reaches the leaf") {
    CHECK(k_base(s).is_key());
    CHECK(k_base(s).key() == 0);
  }
}

TEST_CASE("system membership") {
  SystemId t2{Family::T, 2, BaseOrderDescriptor::one()};
  SystemId t3{Family::T, 3, BaseOrderDescriptor::one()};
  SystemId s2_0{Family::S0, 2, BaseOrderDescriptor::one()};
  SeqTerm a = from_sequence({1, 0});
  SeqTerm b = from_sequence({0, 1, 0});
  CHECK(validate(a, t2));
  CHECK(validate(a, t3));  // membership is monotone in the index bound
  CHECK_FALSE(validate(from_sequence({2, 0}), t2));
  CHECK_FALSE(validate(a, s2_0));  // outer degree 1 is outside the zero class
  CHECK(validate(b, s2_0));
  SECTION("chain bases bound the leaf") {
    SystemId c{Family::T, 1, BaseOrderDescriptor::chain(2)};
    CHECK(validate(seq_base(std::uint64_t{1}), c));
    CHECK_FALSE(validate(seq_base(std::uint64_t{2}), c));
  }
}

TEST_CASE("sequence round trip") {
  std::vector<int> is{1, 2, 2, 0, 1};
  CHECK(to_sequence(from_sequence(is)) == is);
  CHECK(to_sequence(from_sequence({})) == std::vector<int>{});
  // from_sequence enforces the step constraint
  CHECK_THROWS_AS(from_sequence({0, 2}), TermConstraintError);
}

TEST_CASE("grammar: parse and print") {
  CHECK(print_seq(parse_seq("[1,0,1,1]")) == "[1,0,1,1]");
  CHECK(print_seq(parse_seq("<1,0,1,1>")) == "[1,0,1,1]");
  CHECK(print_seq(parse_seq("[]")) == "[]");
  CHECK(print_seq(parse_seq("th(0,b 1)")) == "th(0,b 1)");
  CHECK(print_seq(parse_seq("{[0]}")) == "{[0]}");
  CHECK(print_seq(parse_seq("th(1,{[0,0]})")) == "th(1,{[0,0]})");
  CHECK(print_ot(parse_ot("(t 0 z (t 0 z z))")) == "(t 0 z (t 0 z z))");
  SECTION("errors carry a position") {
    CHECK_THROWS_AS(parse_seq("[2,0"), ParseError);
    CHECK_THROWS_AS(parse_seq("[0,2]"), ParseError);  // step constraint
    CHECK_THROWS_AS(parse_seq("(t 0 z z)"), ParseError);
    CHECK_THROWS_AS(parse_ot("[0]"), ParseError);
    CHECK_THROWS_AS(parse_seq(""), ParseError);
    CHECK_THROWS_AS(parse_seq("[0] junk"), ParseError);
  }
}

TEST_CASE("enumeration is exhaustive and duplicate-free") {
  SystemId sys{Family::T, 1, BaseOrderDescriptor::one()};
  auto ts = enum_seq(sys, 2);
  REQUIRE(ts.size() == 3);
  CHECK(print_seq(ts[0]) == "[]");
  CHECK(print_seq(ts[1]) == "[0]");
  CHECK(print_seq(ts[2]) == "[0,0]");
  SECTION("counts match the degree/height recurrence") {
    for (int n = 1; n <= 3; ++n)
      for (int h = 0; h <= 4; ++h)
        for (bool zero : {false, true}) {
          SystemId id{zero ? Family::T0 : Family::T, n,
                      BaseOrderDescriptor::chain(2)};
          CHECK(static_cast<long long>(enum_seq(id, h).size()) ==
                count_seq_formula(n, 2, h, zero));
        }
  }
  SECTION("budget guard") {
    SystemId big{Family::T, 8, BaseOrderDescriptor::chain(8)};
    CHECK_THROWS_AS(enum_seq(big, 12), std::runtime_error);
  }
}

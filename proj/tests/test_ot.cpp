#include <catch2/catch_amalgamated.hpp>

#include "ordcal/enumerate.hpp"
#include "ordcal/grammar.hpp"
#include "ordcal/ot.hpp"

using namespace ordcal;

TEST_CASE("binary term formation") {
  OtTerm z = ot_zero();
  CHECK(ot_is_zero(z));
  CHECK(ot_height(z) == 0);
  OtTerm a0 = ot_th(0, z, z);
  OtTerm a1 = ot_th(1, z, z);
  // the first argument must have an empty collapse set at the outer index
  CHECK_THROWS_AS(ot_th(0, a0, z), TermConstraintError);
  CHECK_NOTHROW(ot_th(0, a1, z));
  CHECK_THROWS_AS(ot_th(1, a1, z), TermConstraintError);
  // the index must dominate both degrees
  CHECK_THROWS_AS(ot_th(0, z, a1), TermConstraintError);
  CHECK_NOTHROW(ot_th(1, z, a1));
}

TEST_CASE("collapse sets") {
  OtTerm a1 = parse_ot("(t 1 z z)");
  CHECK(ot_K(-1, a1).empty());
  CHECK(ot_K(0, a1).empty());
  REQUIRE(ot_K(1, a1).size() == 1);
  CHECK(ot_eq(ot_K(1, a1)[0], a1));
  OtTerm b = parse_ot("(t 0 (t 1 z z) z)");
  CHECK(ot_K(1, b).size() == 1);  // the whole term, index 0 <= 1
  CHECK(ot_eq(ot_K(1, b)[0], b));
}

TEST_CASE("binary comparison") {
  CHECK(ot_cmp(parse_ot("z"), parse_ot("(t 0 z z)"), 1) == Cmp::LT);
  CHECK(ot_cmp(parse_ot("(t 0 z z)"), parse_ot("(t 0 z (t 0 z z))"), 1) ==
        Cmp::LT);
  CHECK(ot_cmp(parse_ot("(t 0 z z)"), parse_ot("(t 1 z z)"), 2) == Cmp::LT);
  SECTION("the second argument is a strict subterm bound") {
    for (const OtTerm& s : enum_ot(2, 3, false)) {
      if (ot_is_zero(s)) continue;
      CAPTURE(print_ot(s));
      CHECK(ot_cmp_raw(s->t, s) == Cmp::LT);
    }
  }
  SECTION("totality on a small fragment") {
    auto ts = enum_ot(2, 3, false);
    for (const OtTerm& a : ts)
      for (const OtTerm& b : ts) {
        Cmp c = ot_cmp_raw(a, b);
        CHECK(flip(ot_cmp_raw(b, a)) == c);
        CHECK((c == Cmp::EQ) == ot_eq(a, b));
      }
  }
}

TEST_CASE("index shifts on binary terms") {
  OtTerm s = parse_ot("(t 0 (t 1 z z) z)");
  OtTerm up = ot_plus(s);
  CHECK(print_ot(up) == "(t 1 (t 2 z z) z)");
  CHECK(ot_eq(ot_minus(up), s));
  CHECK_THROWS_AS(ot_minus(s), std::invalid_argument);
}

TEST_CASE("binary collapse and its inverse") {
  for (const OtTerm& s : enum_ot(1, 3, true)) {
    OtTerm u = theta_ot(1, s, ot_zero());
    CHECK(ot_validate(u, 2, true));
    OtTerm s2, t2;
    REQUIRE(theta_ot_inv(u, s2, t2));
    CHECK(ot_eq(s2, s));
    CHECK(ot_is_zero(t2));
  }
  CHECK(ot_is_zero(theta_ot_bottom()));
}

TEST_CASE("pairs over a binary system") {
  std::function<Cmp(const BaseElem&, const BaseElem&)> xcmp =
      [](const BaseElem& a, const BaseElem& b) {
        return cmp_values(a.key(), b.key());
      };
  DnElem bot = DnElem::bot();
  DnElem p = DnElem::pair(ot_zero(), BaseElem{std::uint64_t{0}});
  DnElem q = DnElem::pair(ot_zero(), BaseElem{std::uint64_t{1}});
  DnElem r = DnElem::pair(parse_ot("(t 0 z z)"), BaseElem{std::uint64_t{0}});
  CHECK(dn_cmp(bot, bot, xcmp) == Cmp::EQ);
  CHECK(dn_cmp(bot, p, xcmp) == Cmp::LT);  // bottom is least
  CHECK(dn_cmp(p, q, xcmp) == Cmp::LT);    // lexicographic in the pair
  CHECK(dn_cmp(q, r, xcmp) == Cmp::LT);    // first component dominates
  CHECK(dn_cmp(r, p, xcmp) == Cmp::GT);
  // pairs carry a degree constraint on the first component
  CHECK_THROWS_AS(DnElem::pair(parse_ot("(t 1 z z)"), BaseElem{std::uint64_t{0}}),
                  TermConstraintError);
}

TEST_CASE("linearization of binary terms") {
  CHECK(print_seq(f_lin(1, parse_ot("z"))) == "[]");
  CHECK(print_seq(f_lin(1, parse_ot("(t 0 z z)"))) == "[0]");
  CHECK(print_seq(f_lin(1, parse_ot("(t 0 z (t 0 z z))"))) == "[0,0]");
  SECTION("height is preserved") {
    for (const OtTerm& s : enum_ot(2, 4, true))
      CHECK(height(f_lin(2, s)) == ot_height(s));
  }
}

TEST_CASE("binary enumeration matches the shape filter") {
  for (int n = 1; n <= 2; ++n)
    for (int h = 0; h <= 3; ++h)
      for (bool zero : {false, true}) {
        CAPTURE(n, h, zero);
        CHECK(static_cast<long long>(enum_ot(n, h, zero).size()) ==
              count_ot_filter(n, h, zero));
      }
  // frozen: the level-1 zero-class terms of height <= 2 form a chain
  auto ts = enum_ot(1, 2, true);
  REQUIRE(ts.size() == 3);
  CHECK(print_ot(ts[0]) == "z");
  CHECK(print_ot(ts[1]) == "(t 0 z z)");
  CHECK(print_ot(ts[2]) == "(t 0 z (t 0 z z))");
}

#include <catch2/catch_amalgamated.hpp>

#include "ordcal/enumerate.hpp"
#include "ordcal/grammar.hpp"
#include "ordcal/linear.hpp"

using namespace ordcal;

namespace {

LinCmpContext ctx_one(int n) {
  return lin_context(SystemId{Family::T, n, BaseOrderDescriptor::one()});
}

}  // namespace

TEST_CASE("comparison of unary terms") {
  auto ctx = ctx_one(2);
  CHECK(lin_cmp(parse_seq("[1,0,1,1]"), parse_seq("[1,1]"), ctx) == Cmp::LT);
  CHECK(lin_cmp(parse_seq("[]"), parse_seq("[0]"), ctx) == Cmp::LT);
  CHECK(lin_cmp(parse_seq("[0,0]"), parse_seq("[0,0]"), ctx) == Cmp::EQ);
  CHECK(lin_cmp(parse_seq("[1]"), parse_seq("[0,1]"), ctx) == Cmp::GT);
}

TEST_CASE("collapsed subterm bound") {
  auto ctx = ctx_one(3);
  SystemId sys{Family::T, 3, BaseOrderDescriptor::one()};
  for (const SeqTerm& s : enum_seq(sys, 4)) {
    if (is_leaf(s)) continue;
    CAPTURE(print_seq(s));
    CHECK(lin_cmp(k(s->index, s->sub), s, ctx) == Cmp::LT);
  }
}

TEST_CASE("linearity on a small fragment") {
  SystemId sys{Family::T, 2, BaseOrderDescriptor::chain(2)};
  auto ctx = lin_context(sys);
  auto ts = enum_seq(sys, 3);
  for (const SeqTerm& a : ts)
    for (const SeqTerm& b : ts) {
      Cmp c = lin_cmp(a, b, ctx);
      CHECK(flip(lin_cmp(b, a, ctx)) == c);
      CHECK((c == Cmp::EQ) == seq_eq(a, b));
      for (const SeqTerm& m : ts)  // transitivity
        if (c != Cmp::GT && lin_cmp(b, m, ctx) != Cmp::GT)
          CHECK(lin_cmp(a, m, ctx) != Cmp::GT);
    }
}

TEST_CASE("comparison over a nested term order") {
  SystemId inner{Family::T0, 2, BaseOrderDescriptor::one()};
  SystemId outer{Family::T, 1, BaseOrderDescriptor::term_order(inner)};
  auto ctx = lin_context(outer);
  SeqTerm a = seq_base(BaseElem{parse_seq("[0]")});
  SeqTerm b = seq_base(BaseElem{parse_seq("[0,1,0]")});
  CHECK(lin_cmp(a, b, ctx) == Cmp::LT);
  CHECK(lin_cmp(seq_theta(0, a), seq_theta(0, b), ctx) == Cmp::LT);
  // posets do not admit a three-way comparison
  SystemId po{Family::T, 1,
              BaseOrderDescriptor::poset({{true, false}, {false, true}})};
  CHECK_THROWS_AS(lin_context(po), std::invalid_argument);
}

TEST_CASE("index shift") {
  SystemId inner{Family::T0, 3, BaseOrderDescriptor::one()};
  SystemId outer{Family::T, 2, BaseOrderDescriptor::term_order(inner)};
  SECTION("round trips") {
    for (const SeqTerm& s : enum_seq(outer, 2, 2)) {
      SeqTerm u = sigma_lin(2, s);
      CHECK(validate(u, SystemId{Family::T, 3, BaseOrderDescriptor::one()}));
      CHECK(seq_eq(sigma_lin_inv(2, u), s));
    }
  }
  SECTION("frozen image") {
    SeqTerm s = seq_theta(1, seq_base(BaseElem{parse_seq("[0,0]")}));
    CHECK(print_seq(sigma_lin(2, s)) == "[2,0,0]");
  }
}

TEST_CASE("collapse into the next system") {
  SeqTerm s = seq_theta(0, seq_base(BaseElem{parse_seq("[0]")}));
  CHECK(print_seq(theta_lin(1, s)) == "[0,1,0]");
  // only terms of degree <= 0 collapse
  SeqTerm d1 = seq_theta(1, seq_base(BaseElem{parse_seq("[]")}));
  CHECK_THROWS_AS(theta_lin(1, d1), std::invalid_argument);
}

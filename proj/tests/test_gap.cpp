#include <catch2/catch_amalgamated.hpp>

#include "ordcal/enumerate.hpp"
#include "ordcal/gap.hpp"
#include "ordcal/grammar.hpp"

using namespace ordcal;

namespace {

GapCmpContext ctx_one(int n) {
  return gap_context(SystemId{Family::S, n, BaseOrderDescriptor::one()});
}

}  // namespace

TEST_CASE("gap comparison of unary terms") {
  auto ctx = ctx_one(2);
  CHECK(gap_leq(parse_seq("<0>"), parse_seq("<0,1,0>"), ctx));
  CHECK_FALSE(gap_leq(parse_seq("<0,0>"), parse_seq("<0,1>"), ctx));
  CHECK_FALSE(gap_leq(parse_seq("<0,1>"), parse_seq("<0,0>"), ctx));
  CHECK(gap_leq(parse_seq("<>"), parse_seq("<1,1>"), ctx));
  CHECK_FALSE(gap_leq(parse_seq("<1>"), parse_seq("<0,1>"), ctx));
}

TEST_CASE("embedding oracle") {
  CHECK(gap_embed_oracle({0}, {1, 0}));
  CHECK_FALSE(gap_embed_oracle({1}, {0, 1}));
  CHECK(gap_embed_oracle({}, {2, 1, 0}));
  CHECK(gap_embed_oracle({1, 0}, {1, 1, 0}));
  CHECK(gap_embed_oracle({1, 0}, {1, 0, 0}));
  CHECK_FALSE(gap_embed_oracle({0, 0}, {0, 1}));
}

TEST_CASE("comparator agrees with the oracle") {
  auto ctx = ctx_one(3);
  std::vector<std::vector<int>> seqs{{}};
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (seqs[i].size() == 4) continue;
    for (int v = 0; v < 3; ++v) {
      if (!seqs[i].empty() && v > seqs[i].back() + 1) continue;
      auto s = seqs[i];
      s.push_back(v);
      seqs.push_back(std::move(s));
    }
  }
  for (const auto& a : seqs)
    for (const auto& b : seqs) {
      CAPTURE(a, b);
      CHECK(gap_leq(from_sequence(a), from_sequence(b), ctx) ==
            gap_embed_oracle(a, b));
    }
}

TEST_CASE("gap order is a partial order with monotone collapses") {
  SystemId sys{Family::S, 2, BaseOrderDescriptor::chain(2)};
  auto ctx = gap_context(sys);
  auto ts = enum_seq(sys, 3);
  for (const SeqTerm& a : ts) {
    CHECK(gap_leq(a, a, ctx));
    for (const SeqTerm& b : ts) {
      if (!gap_leq(a, b, ctx)) continue;
      CHECK(height(a) <= height(b));
      CHECK(deg(a) <= deg(b));
      for (int i = 0; i <= 2; ++i) CHECK(gap_leq(k(i, a), k(i, b), ctx));
      if (gap_leq(b, a, ctx)) CHECK(seq_eq(a, b));
      for (const SeqTerm& c : ts)
        if (gap_leq(b, c, ctx)) CHECK(gap_leq(a, c, ctx));
    }
  }
}

TEST_CASE("pairs with a bottom element") {
  auto one = [](const BaseElem& x, const BaseElem& y) {
    return x.key() <= y.key();
  };
  WnElem bot = WnElem::bot();
  WnElem p = WnElem::pair(parse_seq("<0>"), BaseElem{std::uint64_t{0}});
  CHECK(wn_leq(bot, bot, one));
  CHECK_FALSE(wn_leq(bot, p, one));  // bottom compares only to itself
  CHECK_FALSE(wn_leq(p, bot, one));
  CHECK(wn_leq(p, p, one));
  CHECK_THROWS_AS(WnElem::pair(parse_seq("<1>"), BaseElem{std::uint64_t{0}}),
                  TermConstraintError);
}

TEST_CASE("prefix construction and its collapse") {
  SECTION("frozen values") {
    CHECK(print_seq(pi_n(1, parse_seq("<0>"), parse_seq("<0,0>"))) ==
          "[1,0,0]");
    CHECK(print_seq(kappa_n(1, parse_seq("<0>"), parse_seq("<0,0>"))) ==
          "[0,1,0,0]");
    CHECK(print_seq(kappa_n_bottom()) == "[]");
  }
  SECTION("inverse round trip") {
    SystemId carrier{Family::S0, 2, BaseOrderDescriptor::one()};
    for (const SeqTerm& u : enum_seq(carrier, 4)) {
      SeqTerm s, t;
      if (!kappa_n_inv(u, s, t)) {
        CHECK(is_leaf(u));
        continue;
      }
      CHECK(seq_eq(kappa_n(1, s, t), u));
    }
  }
}

TEST_CASE("gap index shift") {
  SystemId inner{Family::S0, 2, BaseOrderDescriptor::one()};
  SystemId outer{Family::S, 1, BaseOrderDescriptor::term_order(inner)};
  for (const SeqTerm& s : enum_seq(outer, 2, 2)) {
    SeqTerm u = sigma_gap(1, s);
    CHECK(validate(u, SystemId{Family::S, 2, BaseOrderDescriptor::one()}));
    CHECK(seq_eq(sigma_gap_inv(1, u), s));
  }
}

#include <catch2/catch_amalgamated.hpp>

#include "ordcal/btree.hpp"
#include "ordcal/cnf.hpp"
#include "ordcal/enumerate.hpp"
#include "ordcal/grammar.hpp"

using namespace ordcal;

TEST_CASE("ordinal notations below epsilon_0") {
  Cnf w = cnf_omega_pow(cnf_nat(1));
  CHECK(cnf_to_string(cnf_zero()) == "0");
  CHECK(cnf_to_string(cnf_nat(3)) == "3");
  CHECK(cnf_to_string(w) == "w");
  CHECK(cnf_to_string(cnf_add(cnf_omega_pow(w), cnf_add(w, cnf_add(w, cnf_nat(3))))) ==
        "w^w + w*2 + 3");
  SECTION("addition absorbs smaller left parts") {
    CHECK(cnf_eq(cnf_add(cnf_nat(3), w), w));
    CHECK(cnf_cmp(w, cnf_add(w, cnf_nat(1))) == Cmp::LT);
  }
  SECTION("left subtraction inverts addition") {
    Cnf a = cnf_add(cnf_omega_pow(w), w);
    Cnf b = cnf_add(a, cnf_nat(2));
    CHECK(cnf_eq(cnf_add(a, cnf_lsub(a, b)), b));
    CHECK_THROWS_AS(cnf_lsub(b, a), std::invalid_argument);
  }
  SECTION("towers") {
    CHECK(cnf_eq(cnf_omega_tower(0, cnf_zero()), cnf_zero()));
    CHECK(cnf_eq(cnf_omega_tower(2, cnf_zero()),
                 cnf_omega_pow(cnf_omega_pow(cnf_zero()))));
  }
}

TEST_CASE("fiber collapse on ordinal notations") {
  Cnf alpha = cnf_omega_pow(cnf_nat(1));  // w
  SECTION("bottom and successor fibers") {
    CHECK(cnf_is_zero(collapse_alpha(alpha, CollapseArg::bot())));
    Cnf g = cnf_add(cnf_omega_pow(cnf_nat(2)), cnf_nat(1));
    CHECK(cnf_eq(collapse_alpha(alpha, CollapseArg::pair(cnf_zero(), g)),
                 cnf_succ(g)));
  }
  SECTION("frozen values") {
    // beta = 1 over gamma = 0 gives the first limit value
    CHECK(cnf_to_string(collapse_alpha(cnf_nat(1),
                                       CollapseArg::pair(cnf_nat(1), cnf_zero()))) ==
          "w");
    CHECK(cnf_to_string(collapse_alpha(
              alpha, CollapseArg::pair(cnf_nat(2), cnf_zero()))) == "w^w");
    CHECK(cnf_to_string(collapse_alpha(
              alpha, CollapseArg::pair(cnf_nat(1), cnf_omega_pow(cnf_nat(1))))) ==
          "w^2");
  }
  SECTION("inverse round trip on sampled fibers") {
    for (unsigned long b = 0; b < 4; ++b)
      for (unsigned long g = 0; g < 40; ++g) {
        CollapseArg a = CollapseArg::pair(cnf_nat(b), cnf_nat(g));
        Cnf v = collapse_alpha(alpha, a);
        CHECK(cnf_cmp(cnf_nat(g), v) == Cmp::LT);
        CollapseArg back = collapse_alpha_inv(alpha, v);
        REQUIRE_FALSE(back.bottom);
        CHECK(cnf_eq(back.beta, a.beta));
        CHECK(cnf_eq(back.gamma, a.gamma));
      }
  }
  SECTION("argument bounds are enforced") {
    CHECK_THROWS_AS(
        collapse_alpha(cnf_zero(), CollapseArg::pair(cnf_nat(1), cnf_zero())),
        std::invalid_argument);
  }
}

TEST_CASE("generic collapsing terms") {
  SeqZeroDilator d(1);
  BhCtx ctx{&d, 1};
  BhTerm x = bh_iota(0);
  CHECK(bh_height(x) == 0);
  DilElem leaf0{seq_base(std::uint64_t{0})};
  BhTerm c = bh_theta(ctx, {x}, leaf0);
  CHECK(bh_height(c) == 1);
  CHECK(bh_cmp(x, c, ctx) == Cmp::LT);
  SECTION("support lists must increase strictly") {
    BhTerm c2 = bh_theta(ctx, {x}, DilElem{seq_theta(0, seq_base(std::uint64_t{0}))});
    CHECK(bh_cmp(c, c2, ctx) == Cmp::LT);
    ChainPairDilator pd;
    BhCtx pctx{&pd, 3};
    CHECK_NOTHROW(bh_theta(pctx, {bh_iota(0), bh_iota(1)}, DilElem{PairPos{0, 1}}));
    CHECK_THROWS_AS(bh_theta(pctx, {bh_iota(1), bh_iota(0)}, DilElem{PairPos{0, 1}}),
                    std::invalid_argument);
  }
  SECTION("unused support positions are dropped") {
    ChainPairDilator pd;
    BhCtx pctx{&pd, 3};
    BhTerm wide = bh_theta(pctx, {bh_iota(0), bh_iota(1), bh_iota(2)},
                           DilElem{PairPos{0, 2}});
    BhTerm tight = bh_theta(pctx, {bh_iota(0), bh_iota(2)}, DilElem{PairPos{0, 1}});
    CHECK(wide->a.size() == 2);
    CHECK(bh_cmp(wide, tight, pctx) == Cmp::EQ);
  }
  SECTION("support outside the base is rejected") {
    CHECK_THROWS_AS(bh_theta(ctx, {}, leaf0), std::invalid_argument);
  }
}

TEST_CASE("initial embeddings hit the concrete systems") {
  SECTION("linear target") {
    SeqZeroDilator d(1);
    BhCtx ctx{&d, 1};
    auto tgt = target_linear(1);
    SystemId carrier{Family::T0, 2, BaseOrderDescriptor::one()};
    auto ctx_t = lin_context(carrier);
    for (const SeqTerm& u : enum_seq(carrier, 3)) {
      BhTerm b = to_bh_linear(1, u, ctx);
      CHECK(seq_eq(initial_embed(b, tgt), u));
      for (const SeqTerm& v : enum_seq(carrier, 3))
        CHECK(bh_cmp(b, to_bh_linear(1, v, ctx), ctx) == lin_cmp(u, v, ctx_t));
    }
  }
  SECTION("binary target") {
    DnDilator d(1);
    BhCtx ctx{&d, 0};
    auto tgt = target_ot(1);
    for (const OtTerm& u : enum_ot(2, 3, true))
      CHECK(ot_eq(initial_embed(to_bh_ot(1, u, ctx), tgt), u));
  }
  SECTION("monotonicity violations are reported") {
    ChainPairDilator d;
    BhCtx ctx{&d, 3};
    // a pair element whose image order would have to invert
    BhTerm bad = bh_theta(ctx, {bh_iota(1), bh_iota(2)}, DilElem{PairPos{0, 1}});
    auto tgt = kruskal_target_btree();
    // fine here; contract errors surface through embeddings whose target
    // cannot realize the required order (exercised via nu_plus below)
    CHECK(bt_eq(nu_plus(bad, nu_identity_pairpos(), tgt),
                bt_node(bt_leaf(1), bt_leaf(2))));
  }
}

TEST_CASE("lifted maps") {
  SECTION("the lifted identity is the identity") {
    SeqZeroDilator d(1);
    BhCtx ctx{&d, 1};
    auto tgt = kruskal_target_seq(1);
    auto nu = nu_identity_seq();
    SystemId sys{Family::T0, 2, BaseOrderDescriptor::one()};
    for (const SeqTerm& t : enum_seq(sys, 4))
      CHECK(seq_eq(nu_plus(to_bh_linear(1, t, ctx), nu, tgt), t));
  }
  SECTION("the lifted pair map agrees with the direct linearization") {
    DnDilator d(1);
    BhCtx ctx{&d, 0};
    auto tgt = kruskal_target_pair(1);
    auto nu = nu_pair(1);
    for (const OtTerm& t : enum_ot(2, 3, true))
      CHECK(seq_eq(nu_plus(to_bh_ot(1, t, ctx), nu, tgt), f_lin(2, t)));
  }
}

TEST_CASE("ranks of binary terms") {
  CHECK(cnf_is_zero(rank_ot(0, ot_zero())));
  CHECK(cnf_to_string(rank_ot(2, parse_ot("(t 0 (t 1 z z) z)"))) == "w");
  SECTION("level-1 ranks are heights") {
    for (const OtTerm& t : enum_ot(1, 6, true))
      CHECK(cnf_eq(rank_ot(1, t), cnf_nat(static_cast<unsigned long>(ot_height(t)))));
  }
  SECTION("rank bounds per level") {
    CHECK(cnf_eq(rank_alpha(0), cnf_zero()));
    CHECK(cnf_eq(rank_alpha(1), cnf_omega_pow(cnf_nat(1))));
    for (const OtTerm& t : enum_ot(2, 3, true))
      CHECK(cnf_cmp(rank_ot(2, t), cnf_omega_tower(2, rank_alpha(1))) ==
            Cmp::LT);
  }
  SECTION("strict monotonicity on a small fragment") {
    auto ts = enum_ot(2, 3, true);
    for (const OtTerm& a : ts)
      for (const OtTerm& b : ts)
        CHECK(cnf_cmp(rank_ot(2, a), rank_ot(2, b)) == ot_cmp_raw(a, b));
  }
}

TEST_CASE("trees over a partial order") {
  auto po = [](std::uint64_t a, std::uint64_t b) { return a <= b; };
  auto lc = [](std::uint64_t a, std::uint64_t b) { return cmp_values(a, b); };
  BinTree witness = bt_node(bt_node(bt_leaf(0), bt_leaf(1)), bt_leaf(2));
  CHECK(btree_in_TW(witness, po));
  CHECK_FALSE(btree_in_thetaD(witness, lc));
  BinTree inside = bt_node(bt_leaf(0), bt_node(bt_leaf(1), bt_leaf(2)));
  CHECK(btree_in_TW(inside, po));
  CHECK(btree_in_thetaD(inside, lc));
  SECTION("embeddability examples") {
    CHECK(btree_w_leq(bt_leaf(1), bt_node(bt_leaf(0), bt_leaf(1)), po));
    CHECK_FALSE(btree_w_leq(bt_node(bt_leaf(1), bt_leaf(0)),
                            bt_node(bt_leaf(0), bt_leaf(1)), po));
  }
  SECTION("the tree functor is not flat") {
    // quasi embedding of a two-point chain into a two-point antichain: the
    // inverted pair over the antichain has no preimage over the chain
    auto chain_po = [](std::uint64_t a, std::uint64_t b) { return a <= b; };
    auto anti_po = [](std::uint64_t a, std::uint64_t b) { return a == b; };
    BinTree inverted = bt_node(bt_leaf(1), bt_leaf(0));
    CHECK(btree_in_TW(inverted, anti_po));        // fine over the antichain
    CHECK_FALSE(btree_in_TW(inverted, chain_po)); // no preimage over the chain
  }
}

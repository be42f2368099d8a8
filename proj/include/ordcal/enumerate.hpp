#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordcal/bh.hpp"
#include "ordcal/btree.hpp"
#include "ordcal/grammar.hpp"
#include "ordcal/seq_term.hpp"

namespace ordcal {

inline constexpr std::size_t kEnumBudget = 2'000'000;

inline void check_budget(std::size_t count) {
  if (count > kEnumBudget)
    throw std::runtime_error("enumeration exceeds the memory budget");
}

/// Base leaves of a descriptor; TermOrder bases enumerate the inner system up
/// to inner_h.
inline std::vector<BaseElem> enum_base(const BaseOrderDescriptor& b,
                                       int inner_h);

/// Exhaustive, duplicate-free enumeration of a unary system up to the height
/// bound, in a deterministic order (height-stratified).
inline std::vector<SeqTerm> enum_seq(const SystemId& sys, int h,
                                     int inner_h = -1) {
  std::vector<std::vector<SeqTerm>> by_h(static_cast<std::size_t>(h) + 1);
  for (BaseElem& x : enum_base(sys.base, inner_h < 0 ? h : inner_h))
    by_h[0].push_back(seq_base(std::move(x)));
  std::size_t total = by_h[0].size();
  for (int hh = 1; hh <= h; ++hh) {
    for (const SeqTerm& s : by_h[static_cast<std::size_t>(hh) - 1])
      for (int i = std::max(deg(s) - 1, 0); i < sys.n; ++i)
        by_h[static_cast<std::size_t>(hh)].push_back(seq_theta(i, s));
    total += by_h[static_cast<std::size_t>(hh)].size();
    check_budget(total);
  }
  std::vector<SeqTerm> out;
  bool zero = zero_class(sys.family);
  for (auto& lvl : by_h)
    for (SeqTerm& s : lvl)
      if (!zero || deg(s) <= 0) out.push_back(std::move(s));
  return out;
}

inline std::vector<BaseElem> enum_base(const BaseOrderDescriptor& b,
                                       int inner_h) {
  std::vector<BaseElem> out;
  switch (b.kind) {
    case BaseOrderDescriptor::Kind::Empty:
      break;
    case BaseOrderDescriptor::Kind::One:
      out.emplace_back(std::uint64_t{0});
      break;
    case BaseOrderDescriptor::Kind::FiniteChain:
    case BaseOrderDescriptor::Kind::FinitePoset:
      for (std::size_t i = 0; i < b.size; ++i)
        out.emplace_back(static_cast<std::uint64_t>(i));
      break;
    case BaseOrderDescriptor::Kind::TermOrder:
      for (SeqTerm& t : enum_seq(*b.inner, inner_h))
        out.emplace_back(std::move(t));
      break;
  }
  return out;
}

inline std::vector<OtTerm> enum_ot(int n, int h, bool zero) {
  auto out = enum_ot_terms(n, h, zero);
  check_budget(out.size());
  return out;
}

/// All generic fixed-point terms over the dilator and an x_size-chain with
/// height <= h, using dilator elements of complexity <= dil_bound.
inline std::vector<BhTerm> enum_bh(const BhCtx& ctx, int h, int dil_bound) {
  std::vector<BhTerm> pool;
  for (std::uint64_t x = 0; x < ctx.x_size; ++x) pool.push_back(bh_iota(x));
  for (int round = 0; round < h; ++round) {
    std::vector<BhTerm> grown;
    std::size_t cap = ctx.d->max_support();
    // all strictly increasing tuples from the pool, sizes 0..cap
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> tuples = [&](std::size_t from) {
      std::vector<BhTerm> base;
      base.reserve(idx.size());
      for (std::size_t i : idx) base.push_back(pool[i]);
      for (const DilElem& sigma : ctx.d->enumerate(base.size(), dil_bound)) {
        auto sup = ctx.d->supp(base.size(), sigma);
        if (sup.size() != base.size()) continue;  // full support only
        BhTerm t = bh_theta(ctx, base, sigma);
        if (t->ht > h) continue;
        bool fresh = true;
        for (const BhTerm& u : pool)
          if (bh_cmp(u, t, ctx) == Cmp::EQ) { fresh = false; break; }
        for (const BhTerm& u : grown)
          if (fresh && bh_cmp(u, t, ctx) == Cmp::EQ) { fresh = false; break; }
        if (fresh) grown.push_back(t);
      }
      if (idx.size() == cap) return;
      for (std::size_t i = from; i < pool.size(); ++i) {
        // keep tuples strictly increasing in the term order
        if (!idx.empty() &&
            bh_cmp(pool[idx.back()], pool[i], ctx) != Cmp::LT)
          continue;
        idx.push_back(i);
        tuples(i + 1);
        idx.pop_back();
      }
    };
    tuples(0);
    if (grown.empty()) break;
    for (BhTerm& t : grown) pool.push_back(std::move(t));
    check_budget(pool.size());
  }
  return pool;
}

inline std::vector<BinTree> enum_btree(std::uint64_t x_size, int h) {
  std::vector<std::vector<BinTree>> by_h(static_cast<std::size_t>(h) + 1);
  for (std::uint64_t x = 0; x < x_size; ++x) by_h[0].push_back(bt_leaf(x));
  for (int hh = 1; hh <= h; ++hh) {
    auto& lvl = by_h[static_cast<std::size_t>(hh)];
    for (int hl = 0; hl < hh; ++hl)
      for (int hr = 0; hr < hh; ++hr) {
        if (std::max(hl, hr) != hh - 1) continue;
        for (const BinTree& l : by_h[static_cast<std::size_t>(hl)])
          for (const BinTree& r : by_h[static_cast<std::size_t>(hr)])
            lvl.push_back(bt_node(l, r));
      }
    check_budget(lvl.size());
  }
  std::vector<BinTree> out;
  for (auto& lvl : by_h)
    for (BinTree& t : lvl) out.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------------------
// Independent count recomputations (second traversal strategy)
// ---------------------------------------------------------------------------

/// Degree/height recurrence for the unary systems: N[h][d] counts terms of
/// exact height h and degree d over base_size leaves.
inline long long count_seq_formula(int n, std::size_t base_size, int h,
                                   bool zero) {
  // degree index shifted by one: column 0 is degree -1
  std::vector<std::vector<long long>> cnt(
      static_cast<std::size_t>(h) + 1,
      std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
  cnt[0][0] = static_cast<long long>(base_size);
  for (int hh = 1; hh <= h; ++hh)
    for (int d = -1; d < n; ++d) {
      long long c = cnt[static_cast<std::size_t>(hh - 1)]
                       [static_cast<std::size_t>(d + 1)];
      if (c == 0) continue;
      for (int i = std::max(d - 1, 0); i < n; ++i)
        cnt[static_cast<std::size_t>(hh)][static_cast<std::size_t>(i + 1)] += c;
    }
  long long total = 0;
  for (int hh = 0; hh <= h; ++hh)
    for (int d = -1; d < n; ++d)
      if (!zero || d <= 0)
        total += cnt[static_cast<std::size_t>(hh)]
                    [static_cast<std::size_t>(d + 1)];
  return total;
}

/// Generate-all-then-filter recount for the binary systems: builds every
/// unchecked binary shape over the index alphabet and filters by the
/// formation constraints afterwards.
inline long long count_ot_filter(int n, int h, bool zero) {
  struct Shape {
    int index;  // -1 for the zero leaf
    std::size_t s, t;
  };
  std::vector<Shape> shapes{{-1, 0, 0}};
  std::vector<std::vector<std::size_t>> by_h(static_cast<std::size_t>(h) + 1);
  by_h[0].push_back(0);
  for (int hh = 1; hh <= h; ++hh) {
    for (int hs = 0; hs < hh; ++hs)
      for (int ht2 = 0; ht2 < hh; ++ht2) {
        if (std::max(hs, ht2) != hh - 1) continue;
        for (std::size_t sid : by_h[static_cast<std::size_t>(hs)])
          for (std::size_t tid : by_h[static_cast<std::size_t>(ht2)])
            for (int i = 0; i < n; ++i) {
              shapes.push_back(Shape{i, sid, tid});
              by_h[static_cast<std::size_t>(hh)].push_back(shapes.size() - 1);
            }
      }
    check_budget(shapes.size());
  }
  std::vector<char> ok(shapes.size(), 0);
  std::function<bool(int, std::size_t)> kempty = [&](int j, std::size_t id) {
    if (shapes[id].index < 0) return true;
    if (shapes[id].index <= j) return false;
    return kempty(j, shapes[id].s) && kempty(j, shapes[id].t);
  };
  ok[0] = 1;
  long long total = 1;  // the zero leaf
  for (std::size_t id = 1; id < shapes.size(); ++id) {
    const Shape& sh = shapes[id];
    int ds = shapes[sh.s].index, dt = shapes[sh.t].index;
    ok[id] = ok[sh.s] && ok[sh.t] &&
             sh.index >= std::max({ds - 1, dt, 0}) && kempty(sh.index, sh.s);
    if (ok[id] && (!zero || sh.index <= 0)) ++total;
  }
  return total;
}

}  // namespace ordcal

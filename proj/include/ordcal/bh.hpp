#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ordcal/btree.hpp"
#include "ordcal/cnf.hpp"
#include "ordcal/gap.hpp"
#include "ordcal/grammar.hpp"
#include "ordcal/linear.hpp"
#include "ordcal/ot.hpp"
#include "ordcal/seq_term.hpp"

namespace ordcal {

/// Raised by generic recursions when a user-supplied target structure breaks
/// its order contract (e.g. a non-monotone image).
class TargetContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Coded dilators: behavioral action on finite chains 0 < 1 < ... < m-1
// ---------------------------------------------------------------------------

/// Pair element of 1 + OT0_n x X with a position as second component.
struct DnPos {
  bool bottom = true;
  OtTerm s;
  std::size_t pos = 0;
};

/// Strictly increasing pair of positions.
struct PairPos {
  std::size_t lo = 0, hi = 0;
};

using DilElem = std::variant<SeqTerm, DnPos, PairPos, std::size_t>;

/// Relabelling map on positions; -1 marks positions the element must not use.
using Relabel = std::vector<long>;

class CodedDilator {
 public:
  virtual ~CodedDilator() = default;
  virtual Cmp cmp(std::size_t m, const DilElem& a, const DilElem& b) const = 0;
  virtual std::vector<std::size_t> supp(std::size_t m, const DilElem& a) const = 0;
  virtual DilElem relabel(const DilElem& a, const Relabel& f) const = 0;
  /// All elements over the m-chain with internal complexity <= bound.
  virtual std::vector<DilElem> enumerate(std::size_t m, int bound) const = 0;
  virtual std::string print(std::size_t m, const DilElem& a) const = 0;
  virtual std::size_t max_support() const = 0;
  virtual std::string name() const = 0;
};

inline long relabel_at(const Relabel& f, std::size_t i) {
  if (i >= f.size() || f[i] < 0)
    throw std::invalid_argument("relabelling undefined on a used position");
  return f[i];
}

/// Normal form: the support positions together with the element rebased onto
/// the chain of exactly its support.
inline std::pair<std::vector<std::size_t>, DilElem> d_normal_form(
    const CodedDilator& d, std::size_t m, const DilElem& a) {
  std::vector<std::size_t> sup = d.supp(m, a);
  for (std::size_t p : sup)
    if (p >= m) throw std::invalid_argument("support outside the base");
  Relabel f(m, -1);
  for (std::size_t i = 0; i < sup.size(); ++i) f[sup[i]] = static_cast<long>(i);
  return {std::move(sup), d.relabel(a, f)};
}

// --- identity -------------------------------------------------------------

class IdentityDilator final : public CodedDilator {
 public:
  Cmp cmp(std::size_t, const DilElem& a, const DilElem& b) const override {
    return cmp_values(std::get<std::size_t>(a), std::get<std::size_t>(b));
  }
  std::vector<std::size_t> supp(std::size_t, const DilElem& a) const override {
    return {std::get<std::size_t>(a)};
  }
  DilElem relabel(const DilElem& a, const Relabel& f) const override {
    return static_cast<std::size_t>(relabel_at(f, std::get<std::size_t>(a)));
  }
  std::vector<DilElem> enumerate(std::size_t m, int) const override {
    std::vector<DilElem> out;
    for (std::size_t i = 0; i < m; ++i) out.emplace_back(i);
    return out;
  }
  std::string print(std::size_t, const DilElem& a) const override {
    return std::to_string(std::get<std::size_t>(a));
  }
  std::size_t max_support() const override { return 1; }
  std::string name() const override { return "identity"; }
};

// --- degree-<=0 unary terms over a chain -----------------------------------

class SeqZeroDilator final : public CodedDilator {
 public:
  explicit SeqZeroDilator(int n) : n_(n) {}

  Cmp cmp(std::size_t, const DilElem& a, const DilElem& b) const override {
    auto key_cmp = [](const BaseElem& p, const BaseElem& q) {
      return cmp_values(p.key(), q.key());
    };
    return lin_cmp_raw(std::get<SeqTerm>(a), std::get<SeqTerm>(b), key_cmp);
  }
  std::vector<std::size_t> supp(std::size_t, const DilElem& a) const override {
    return {static_cast<std::size_t>(k_base(std::get<SeqTerm>(a)).key())};
  }
  DilElem relabel(const DilElem& a, const Relabel& f) const override {
    return t_rename(
        [&](const BaseElem& x) {
          return BaseElem{static_cast<std::uint64_t>(relabel_at(f, x.key()))};
        },
        std::get<SeqTerm>(a));
  }
  std::vector<DilElem> enumerate(std::size_t m, int bound) const override;
  std::string print(std::size_t, const DilElem& a) const override {
    return print_seq(std::get<SeqTerm>(a));
  }
  std::size_t max_support() const override { return 1; }
  std::string name() const override {
    return "seq0-" + std::to_string(n_);
  }
  int n() const { return n_; }

 private:
  int n_;
};

// --- 1 + OT0_n x Id ---------------------------------------------------------

class DnDilator final : public CodedDilator {
 public:
  explicit DnDilator(int n) : n_(n) {}

  Cmp cmp(std::size_t, const DilElem& a, const DilElem& b) const override {
    const DnPos& p = std::get<DnPos>(a);
    const DnPos& q = std::get<DnPos>(b);
    if (p.bottom && q.bottom) return Cmp::EQ;
    if (p.bottom) return Cmp::LT;
    if (q.bottom) return Cmp::GT;
    Cmp c = ot_cmp_raw(p.s, q.s);
    if (c != Cmp::EQ) return c;
    return cmp_values(p.pos, q.pos);
  }
  std::vector<std::size_t> supp(std::size_t, const DilElem& a) const override {
    const DnPos& p = std::get<DnPos>(a);
    if (p.bottom) return {};
    return {p.pos};
  }
  DilElem relabel(const DilElem& a, const Relabel& f) const override {
    DnPos p = std::get<DnPos>(a);
    if (!p.bottom) p.pos = static_cast<std::size_t>(relabel_at(f, p.pos));
    return p;
  }
  std::vector<DilElem> enumerate(std::size_t m, int bound) const override;
  std::string print(std::size_t, const DilElem& a) const override {
    const DnPos& p = std::get<DnPos>(a);
    if (p.bottom) return "bot";
    return "(" + print_ot(p.s) + "," + std::to_string(p.pos) + ")";
  }
  std::size_t max_support() const override { return 1; }
  std::string name() const override { return "pair-" + std::to_string(n_); }
  int n() const { return n_; }

 private:
  int n_;
};

// --- strictly increasing position pairs -------------------------------------

class ChainPairDilator final : public CodedDilator {
 public:
  Cmp cmp(std::size_t, const DilElem& a, const DilElem& b) const override {
    const PairPos& p = std::get<PairPos>(a);
    const PairPos& q = std::get<PairPos>(b);
    Cmp c = cmp_values(p.lo, q.lo);
    if (c != Cmp::EQ) return c;
    return cmp_values(p.hi, q.hi);
  }
  std::vector<std::size_t> supp(std::size_t, const DilElem& a) const override {
    const PairPos& p = std::get<PairPos>(a);
    return {p.lo, p.hi};
  }
  DilElem relabel(const DilElem& a, const Relabel& f) const override {
    const PairPos& p = std::get<PairPos>(a);
    return PairPos{static_cast<std::size_t>(relabel_at(f, p.lo)),
                   static_cast<std::size_t>(relabel_at(f, p.hi))};
  }
  std::vector<DilElem> enumerate(std::size_t m, int) const override {
    std::vector<DilElem> out;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) out.emplace_back(PairPos{i, j});
    return out;
  }
  std::string print(std::size_t, const DilElem& a) const override {
    const PairPos& p = std::get<PairPos>(a);
    return "(" + std::to_string(p.lo) + "," + std::to_string(p.hi) + ")";
  }
  std::size_t max_support() const override { return 2; }
  std::string name() const override { return "chain-pair"; }
};

// ---------------------------------------------------------------------------
// Basic bounded term enumerations (chain bases)
// ---------------------------------------------------------------------------

/// All unary terms with indices < n over an m-chain, height <= h, stratified
/// by exact height; zero restricts the outer degree to <= 0.
inline std::vector<SeqTerm> enum_seq_terms(int n, std::size_t base_size, int h,
                                           bool zero) {
  std::vector<std::vector<SeqTerm>> by_h(static_cast<std::size_t>(h) + 1);
  for (std::size_t x = 0; x < base_size; ++x) by_h[0].push_back(seq_base(x));
  for (int hh = 1; hh <= h; ++hh)
    for (const SeqTerm& s : by_h[static_cast<std::size_t>(hh) - 1])
      for (int i = std::max(deg(s) - 1, 0); i < n; ++i)
        by_h[static_cast<std::size_t>(hh)].push_back(seq_theta(i, s));
  std::vector<SeqTerm> out;
  for (auto& lvl : by_h)
    for (SeqTerm& s : lvl)
      if (!zero || deg(s) <= 0) out.push_back(std::move(s));
  return out;
}

/// All binary terms with indices < n, height <= h, stratified by exact
/// height; zero restricts the outer degree to <= 0.
inline std::vector<OtTerm> enum_ot_terms(int n, int h, bool zero) {
  std::vector<std::vector<OtTerm>> by_h(static_cast<std::size_t>(h) + 1);
  by_h[0].push_back(ot_zero());
  for (int hh = 1; hh <= h; ++hh)
    for (int hs = 0; hs < hh; ++hs)
      for (int ht2 = 0; ht2 < hh; ++ht2) {
        if (std::max(hs, ht2) != hh - 1) continue;
        for (const OtTerm& s : by_h[static_cast<std::size_t>(hs)])
          for (const OtTerm& t : by_h[static_cast<std::size_t>(ht2)])
            for (int i = std::max({ot_deg(s) - 1, ot_deg(t), 0}); i < n; ++i)
              if (ot_k_empty(i, s))
                by_h[static_cast<std::size_t>(hh)].push_back(ot_th(i, s, t));
      }
  std::vector<OtTerm> out;
  for (auto& lvl : by_h)
    for (OtTerm& s : lvl)
      if (!zero || ot_deg(s) <= 0) out.push_back(std::move(s));
  return out;
}

inline std::vector<DilElem> SeqZeroDilator::enumerate(std::size_t m,
                                                      int bound) const {
  std::vector<DilElem> out;
  for (SeqTerm& s : enum_seq_terms(n_, m, bound, true))
    out.emplace_back(std::move(s));
  return out;
}

inline std::vector<DilElem> DnDilator::enumerate(std::size_t m,
                                                 int bound) const {
  std::vector<DilElem> out;
  out.emplace_back(DnPos{});
  for (const OtTerm& s : enum_ot_terms(n_, bound, true))
    for (std::size_t p = 0; p < m; ++p) out.emplace_back(DnPos{false, s, p});
  return out;
}

// ---------------------------------------------------------------------------
// Generic syntactic fixed-point terms
// ---------------------------------------------------------------------------

struct BhNode;
using BhTerm = std::shared_ptr<const BhNode>;

/// A base leaf over a finite chain X, or a collapsing node over a strictly
/// increasing list of terms carrying a full-support dilator element.
struct BhNode {
  bool leaf;
  std::uint64_t x;
  std::vector<BhTerm> a;
  DilElem sigma;
  int len;  // termination measure: 1 + twice the lengths in a
  int ht;   // 0 for leaves, else 1 + max(0, heights in a)
};

struct BhCtx {
  const CodedDilator* d;
  std::uint64_t x_size;
};

inline int bh_len(const BhTerm& s) { return s->len; }
inline int bh_height(const BhTerm& s) { return s->ht; }

inline BhTerm bh_iota(std::uint64_t x) {
  return std::make_shared<const BhNode>(
      BhNode{true, x, {}, std::size_t{0}, 0, 0});
}

Cmp bh_cmp(const BhTerm& s, const BhTerm& t, const BhCtx& ctx);

/// Wraps a dilator element given over an explicit term base, normalizing so
/// the stored base is exactly the support.
inline BhTerm bh_theta(const BhCtx& ctx, const std::vector<BhTerm>& base,
                       const DilElem& sigma) {
  auto [sup, sigma0] = d_normal_form(*ctx.d, base.size(), sigma);
  std::vector<BhTerm> a;
  a.reserve(sup.size());
  for (std::size_t p : sup) a.push_back(base.at(p));
  int len = 1, ht = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i + 1 < a.size() && bh_cmp(a[i], a[i + 1], ctx) != Cmp::LT)
      throw std::invalid_argument("support terms not strictly increasing");
    len += 2 * a[i]->len;
    ht = std::max(ht, a[i]->ht + 1);
  }
  if (a.empty()) ht = 1;
  return std::make_shared<const BhNode>(
      BhNode{false, 0, std::move(a), std::move(sigma0), len, ht});
}

inline Cmp bh_cmp(const BhTerm& s, const BhTerm& t, const BhCtx& ctx) {
  if (s->leaf && t->leaf) return cmp_values(s->x, t->x);
  if (s->leaf) return Cmp::LT;
  if (t->leaf) return Cmp::GT;
  // merge the two bases into a common chain
  std::vector<BhTerm> u;
  Relabel fa(s->a.size(), -1), fb(t->a.size(), -1);
  std::size_t i = 0, j = 0;
  while (i < s->a.size() || j < t->a.size()) {
    Cmp c = i == s->a.size()   ? Cmp::GT
            : j == t->a.size() ? Cmp::LT
                               : bh_cmp(s->a[i], t->a[j], ctx);
    if (c == Cmp::LT) {
      fa[i] = static_cast<long>(u.size());
      u.push_back(s->a[i++]);
    } else if (c == Cmp::GT) {
      fb[j] = static_cast<long>(u.size());
      u.push_back(t->a[j++]);
    } else {
      fa[i] = fb[j] = static_cast<long>(u.size());
      u.push_back(s->a[i++]);
      ++j;
    }
  }
  DilElem sig = ctx.d->relabel(s->sigma, fa);
  DilElem tau = ctx.d->relabel(t->sigma, fb);
  Cmp c = ctx.d->cmp(u.size(), sig, tau);
  if (c == Cmp::EQ) return Cmp::EQ;
  if (c == Cmp::LT) {
    for (const BhTerm& s1 : s->a)
      if (bh_cmp(s1, t, ctx) != Cmp::LT) return Cmp::GT;  // t <= s1 inside s
    return Cmp::LT;
  }
  for (const BhTerm& t1 : t->a)
    if (bh_cmp(t1, s, ctx) != Cmp::LT) return Cmp::LT;  // s <= t1 inside t
  return Cmp::GT;
}

inline bool bh_eq(const BhTerm& s, const BhTerm& t, const BhCtx& ctx) {
  return bh_cmp(s, t, ctx) == Cmp::EQ;
}

inline bool bh_validate(const BhTerm& s, const BhCtx& ctx) {
  if (s->leaf) return s->x < ctx.x_size;
  auto sup = ctx.d->supp(s->a.size(), s->sigma);
  if (sup.size() != s->a.size()) return false;
  for (std::size_t i = 0; i < sup.size(); ++i)
    if (sup[i] != i) return false;
  for (std::size_t i = 0; i < s->a.size(); ++i) {
    if (!bh_validate(s->a[i], ctx)) return false;
    if (i + 1 < s->a.size() && bh_cmp(s->a[i], s->a[i + 1], ctx) != Cmp::LT)
      return false;
  }
  return true;
}

inline void bh_supp_into(const BhTerm& s, std::vector<std::uint64_t>& out) {
  if (s->leaf) {
    for (auto v : out)
      if (v == s->x) return;
    out.push_back(s->x);
    return;
  }
  for (const BhTerm& t : s->a) bh_supp_into(t, out);
}

inline std::vector<std::uint64_t> bh_supp(const BhTerm& s) {
  std::vector<std::uint64_t> out;
  bh_supp_into(s, out);
  return out;
}

inline BhTerm bh_rename(const std::function<std::uint64_t(std::uint64_t)>& f,
                        const BhTerm& s, const BhCtx& ctx) {
  if (s->leaf) return bh_iota(f(s->x));
  std::vector<BhTerm> a;
  a.reserve(s->a.size());
  for (const BhTerm& t : s->a) a.push_back(bh_rename(f, t, ctx));
  return bh_theta(ctx, a, s->sigma);
}

inline std::string bh_print(const BhTerm& s, const BhCtx& ctx) {
  if (s->leaf) return "base(" + std::to_string(s->x) + ")";
  std::string out = "coll([";
  for (std::size_t i = 0; i < s->a.size(); ++i) {
    if (i) out += ",";
    out += bh_print(s->a[i], ctx);
  }
  return out + "], " + ctx.d->print(s->a.size(), s->sigma) + ")";
}

// ---------------------------------------------------------------------------
// Initiality: embedding into an arbitrary fixed-point structure
// ---------------------------------------------------------------------------

template <typename Elem>
struct BhTarget {
  std::function<Elem(std::uint64_t)> iota;
  // sigma ranges over positions into the image list
  std::function<Elem(const std::vector<Elem>&, const DilElem&)> theta;
  std::function<Cmp(const Elem&, const Elem&)> cmp;
};

template <typename Elem>
Elem initial_embed(const BhTerm& s, const BhTarget<Elem>& tgt) {
  if (s->leaf) return tgt.iota(s->x);
  std::vector<Elem> imgs;
  imgs.reserve(s->a.size());
  for (const BhTerm& t : s->a) imgs.push_back(initial_embed(t, tgt));
  for (std::size_t i = 0; i + 1 < imgs.size(); ++i)
    if (tgt.cmp(imgs[i], imgs[i + 1]) != Cmp::LT)
      throw TargetContractError("target image of the support is not monotone");
  return tgt.theta(imgs, s->sigma);
}

// ---------------------------------------------------------------------------
// Canonical preimages of the concrete systems
// ---------------------------------------------------------------------------

/// Preimage of a degree-<=0 unary term over the one-point base (indices
/// < n+1) in the syntactic fixed point of the degree-<=0 system with indices
/// < n over the one-point base.
inline BhTerm to_bh_linear(int n, const SeqTerm& t, const BhCtx& ctx) {
  if (is_leaf(t)) return bh_iota(t->leaf.key());
  if (t->index != 0) throw std::invalid_argument("degree must be <= 0");
  SeqTerm inner = sigma_lin_inv(n, t->sub);
  const BaseElem& lf = k_base(inner);
  BhTerm sub = to_bh_linear(n, lf.term(), ctx);
  SeqTerm sigma =
      t_rename([](const BaseElem&) { return BaseElem{std::uint64_t{0}}; }, inner);
  return bh_theta(ctx, {sub}, DilElem{sigma});
}

inline BhTarget<SeqTerm> target_linear(int n) {
  BhTarget<SeqTerm> tgt;
  tgt.iota = [](std::uint64_t x) { return seq_base(x); };
  tgt.theta = [n](const std::vector<SeqTerm>& imgs, const DilElem& sigma) {
    SeqTerm s = t_rename(
        [&](const BaseElem& x) { return BaseElem{imgs.at(x.key())}; },
        std::get<SeqTerm>(sigma));
    return theta_lin(n, s);
  };
  tgt.cmp = [](const SeqTerm& a, const SeqTerm& b) {
    auto one = [](const BaseElem& p, const BaseElem& q) {
      return cmp_values(p.key(), q.key());
    };
    return lin_cmp_raw(a, b, one);
  };
  return tgt;
}

/// Preimage of a degree-<=0 binary term with indices < n+1 in the syntactic
/// fixed point of 1 + OT0_n x Id over the empty base.
inline BhTerm to_bh_ot(int n, const OtTerm& t, const BhCtx& ctx) {
  if (ot_is_zero(t)) return bh_theta(ctx, {}, DilElem{DnPos{}});
  OtTerm s0, t0;
  theta_ot_inv(t, s0, t0);
  (void)n;
  BhTerm sub = to_bh_ot(n, t0, ctx);
  return bh_theta(ctx, {sub}, DilElem{DnPos{false, s0, 0}});
}

inline BhTarget<OtTerm> target_ot(int n) {
  BhTarget<OtTerm> tgt;
  tgt.iota = [](std::uint64_t) -> OtTerm {
    throw std::logic_error("no base elements over the empty order");
  };
  tgt.theta = [n](const std::vector<OtTerm>& imgs, const DilElem& sigma) {
    const DnPos& p = std::get<DnPos>(sigma);
    if (p.bottom) return theta_ot_bottom();
    return theta_ot(n, p.s, imgs.at(p.pos));
  };
  tgt.cmp = [](const OtTerm& a, const OtTerm& b) { return ot_cmp_raw(a, b); };
  return tgt;
}

// ---------------------------------------------------------------------------
// Quasi-embedding lift along a base linearization
// ---------------------------------------------------------------------------

/// Natural family: at each finite chain size m, maps a D-element to a
/// W-element over the same positions.
using NuMap = std::function<DilElem(std::size_t, const DilElem&)>;

template <typename Elem>
struct KruskalTarget {
  std::function<Elem(std::uint64_t)> iota;
  // w ranges over positions into the image list
  std::function<Elem(const DilElem& w, const std::vector<Elem>&)> kappa;
};

template <typename Elem>
Elem nu_plus(const BhTerm& s, const NuMap& nu, const KruskalTarget<Elem>& tgt) {
  if (s->leaf) return tgt.iota(s->x);
  std::vector<Elem> imgs;
  imgs.reserve(s->a.size());
  for (const BhTerm& t : s->a) imgs.push_back(nu_plus(t, nu, tgt));
  return tgt.kappa(nu(s->a.size(), s->sigma), imgs);
}

/// Lift instance for the identity linearization of the unary systems: images
/// live among degree-<=0 unary terms over the one-point base.
inline KruskalTarget<SeqTerm> kruskal_target_seq(int n) {
  KruskalTarget<SeqTerm> tgt;
  tgt.iota = [](std::uint64_t x) { return seq_base(x); };
  tgt.kappa = [n](const DilElem& w, const std::vector<SeqTerm>& imgs) {
    SeqTerm s = s_rename(
        [&](const BaseElem& x) { return BaseElem{imgs.at(x.key())}; },
        std::get<SeqTerm>(w));
    return kappa_gap(n, s);
  };
  return tgt;
}

inline NuMap nu_identity_seq() {
  return [](std::size_t, const DilElem& d) { return d; };
}

/// Lift instance for the pair systems: the base linearization applies the
/// direct sequence linearization on the first component.
inline NuMap nu_pair(int n) {
  return [n](std::size_t, const DilElem& d) -> DilElem {
    const DnPos& p = std::get<DnPos>(d);
    if (p.bottom) return DilElem{SeqTerm(nullptr)};  // marker for bottom
    return DilElem{SeqTerm(f_lin(n, p.s))};          // paired via position
  };
}

/// nu_plus target matching nu_pair: bottom marker (null first component) maps
/// to the least term, pairs go through the prefix construction.  The position
/// of the second component is tracked separately through the image list,
/// which is a singleton here because supports have at most one element.
inline KruskalTarget<SeqTerm> kruskal_target_pair(int n) {
  KruskalTarget<SeqTerm> tgt;
  tgt.iota = [](std::uint64_t) -> SeqTerm {
    throw std::logic_error("no base elements over the empty order");
  };
  tgt.kappa = [n](const DilElem& w, const std::vector<SeqTerm>& imgs) {
    const SeqTerm& s = std::get<SeqTerm>(w);
    if (!s) return kappa_n_bottom();
    return kappa_n(n, s, imgs.at(0));
  };
  return tgt;
}

/// Lift of the binary-tree example: pairs of positions map to inner nodes.
inline KruskalTarget<BinTree> kruskal_target_btree() {
  KruskalTarget<BinTree> tgt;
  tgt.iota = [](std::uint64_t x) { return bt_leaf(x); };
  tgt.kappa = [](const DilElem& w, const std::vector<BinTree>& imgs) {
    const PairPos& p = std::get<PairPos>(w);
    return bt_node(imgs.at(p.lo), imgs.at(p.hi));
  };
  return tgt;
}

inline NuMap nu_identity_pairpos() {
  return [](std::size_t, const DilElem& d) { return d; };
}

// ---------------------------------------------------------------------------
// Ordinal ranks
// ---------------------------------------------------------------------------

/// Tower for the order types of the degree-<=0 binary systems: level n sits
/// below 1 + tower(2n).
inline Cnf rank_alpha(int n) {
  return cnf_omega_tower(static_cast<unsigned>(2 * n), cnf_zero());
}

Cnf rank_ot(int n, const OtTerm& s);

inline BhTarget<Cnf> target_cnf(int n) {
  Cnf alpha = rank_alpha(n);
  BhTarget<Cnf> tgt;
  tgt.iota = [](std::uint64_t) -> Cnf {
    throw std::logic_error("no base elements over the empty order");
  };
  tgt.theta = [alpha, n](const std::vector<Cnf>& imgs, const DilElem& sigma) {
    const DnPos& p = std::get<DnPos>(sigma);
    if (p.bottom) return collapse_alpha(alpha, CollapseArg::bot());
    return collapse_alpha(
        alpha, CollapseArg::pair(rank_ot(n, p.s), imgs.at(p.pos)));
  };
  tgt.cmp = [](const Cnf& a, const Cnf& b) { return cnf_cmp(a, b); };
  return tgt;
}

/// Strictly increasing rank of degree-<=0 binary terms with indices < n into
/// the ordinals below 1 + tower(2n); level 0 is the singleton {Z} -> {0}.
inline Cnf rank_ot(int n, const OtTerm& s) {
  if (n == 0) {
    if (!ot_is_zero(s)) throw std::invalid_argument("level-0 carrier is {Z}");
    return cnf_zero();
  }
  DnDilator d(n - 1);
  BhCtx ctx{&d, 0};
  return initial_embed(to_bh_ot(n - 1, s, ctx), target_cnf(n - 1));
}

}  // namespace ordcal

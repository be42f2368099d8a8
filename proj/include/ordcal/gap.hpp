#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ordcal/seq_term.hpp"

namespace ordcal {

struct GapCmpContext {
  SystemId sys;
  std::function<bool(const BaseElem&, const BaseElem&)> base_po;  // x <= y
};

bool gap_leq_raw(const SeqTerm& s, const SeqTerm& t,
                 const std::function<bool(const BaseElem&, const BaseElem&)>& po);

inline GapCmpContext gap_context(const SystemId& sys) {
  if (linear_family(sys.family))
    throw std::invalid_argument("gap comparison needs family S or S0");
  std::function<bool(const BaseElem&, const BaseElem&)> po;
  switch (sys.base.kind) {
    case BaseOrderDescriptor::Kind::Empty:
      po = [](const BaseElem&, const BaseElem&) -> bool {
        throw std::logic_error("no elements in the empty base");
      };
      break;
    case BaseOrderDescriptor::Kind::One:
    case BaseOrderDescriptor::Kind::FiniteChain:
      po = [](const BaseElem& a, const BaseElem& b) {
        return a.key() <= b.key();
      };
      break;
    case BaseOrderDescriptor::Kind::FinitePoset: {
      auto rel = sys.base.rel;
      po = [rel](const BaseElem& a, const BaseElem& b) {
        return rel[a.key()][b.key()];
      };
      break;
    }
    case BaseOrderDescriptor::Kind::TermOrder: {
      auto inner = gap_context(*sys.base.inner);
      auto inner_po = inner.base_po;
      po = [inner_po](const BaseElem& a, const BaseElem& b) {
        return gap_leq_raw(a.term(), b.term(), inner_po);
      };
      break;
    }
  }
  return GapCmpContext{sys, std::move(po)};
}

inline bool gap_leq_raw(
    const SeqTerm& s, const SeqTerm& t,
    const std::function<bool(const BaseElem&, const BaseElem&)>& po) {
  if (is_leaf(t)) return is_leaf(s) && po(s->leaf, t->leaf);
  if (!is_leaf(s) && s->index == t->index && gap_leq_raw(s->sub, t->sub, po))
    return true;
  return gap_leq_raw(s, k(t->index, t->sub), po);
}

inline bool gap_leq(const SeqTerm& s, const SeqTerm& t,
                    const GapCmpContext& ctx) {
  if (!validate(s, ctx.sys) || !validate(t, ctx.sys))
    throw std::invalid_argument("term does not belong to the given system");
  return gap_leq_raw(s, t, ctx.base_po);
}

// Functorial action and supports coincide with the linear case.
inline SeqTerm s_rename(const std::function<BaseElem(const BaseElem&)>& f,
                        const SeqTerm& s) {
  if (is_leaf(s)) return seq_base(f(s->leaf));
  return seq_theta(s->index, s_rename(f, s->sub));
}

inline std::vector<BaseElem> s_supp(const SeqTerm& s) { return {k_base(s)}; }

// ---------------------------------------------------------------------------
// Independent strong-gap-embedding oracle on index sequences
// ---------------------------------------------------------------------------

/// True iff u embeds into v by a strictly increasing position map with equal
/// entries on embedded positions, where every entry strictly inside a gap --
/// including the initial gap before the first embedded position -- is >= the
/// next embedded value.  Exhaustive search over all position maps.
inline bool gap_embed_oracle(const std::vector<int>& u,
                             const std::vector<int>& v) {
  std::size_t m = u.size(), n = v.size();
  if (m > n) return false;
  std::vector<std::size_t> pos(m);
  // search over strictly increasing position maps
  std::function<bool(std::size_t, std::size_t)> go =
      [&](std::size_t i, std::size_t from) -> bool {
    if (i == m) return true;
    for (std::size_t p = from; p < n; ++p) {
      if (v[p] != u[i]) continue;
      // gap condition: entries strictly between the previous embedded
      // position (or the start) and p must be >= v[p]
      bool ok = true;
      for (std::size_t q = from; q < p; ++q)
        if (v[q] < v[p]) { ok = false; break; }
      if (ok && go(i + 1, p + 1)) return true;
    }
    return false;
  };
  return go(0, 0);
}

// ---------------------------------------------------------------------------
// Kruskal-style derived constructors
// ---------------------------------------------------------------------------

inline SeqTerm sigma_gap(int n, const SeqTerm& s) {
  (void)n;
  if (is_leaf(s)) {
    if (s->leaf.is_key())
      throw std::invalid_argument("leaf does not hold an inner term");
    return s->leaf.term();
  }
  return seq_theta(s->index + 1, sigma_gap(n, s->sub));
}

inline SeqTerm sigma_gap_inv(int n, const SeqTerm& t) {
  (void)n;
  if (deg(t) <= 0) return seq_base(BaseElem{t});
  return seq_theta(t->index - 1, sigma_gap_inv(n, t->sub));
}

inline SeqTerm kappa_gap(int n, const SeqTerm& s) {
  if (deg(s) > 0)
    throw TermConstraintError("fixed-point constructor needs degree <= 0");
  return seq_theta(0, sigma_gap(n, s));
}

inline SeqTerm iota_gap(BaseElem x) { return seq_base(std::move(x)); }

// ---------------------------------------------------------------------------
// The 1 + S0_n(1) x X construction and its fixed-point maps
// ---------------------------------------------------------------------------

/// Element of 1 + S0_n(1) x X: an isolated bottom or a pair.
struct WnElem {
  bool bottom = true;
  SeqTerm s;   // over the one-point base, degree <= 0
  BaseElem x;  // element of X

  static WnElem bot() { return WnElem{}; }
  static WnElem pair(SeqTerm s, BaseElem x) {
    if (deg(s) > 0)
      throw TermConstraintError("pair component needs degree <= 0");
    return WnElem{false, std::move(s), std::move(x)};
  }
};

/// Bottom is comparable only to itself; pairs compare componentwise.
inline bool wn_leq(const WnElem& a, const WnElem& b,
                   const std::function<bool(const BaseElem&, const BaseElem&)>& x_po) {
  if (a.bottom || b.bottom) return a.bottom && b.bottom;
  auto one = [](const BaseElem& p, const BaseElem& q) {
    return p.key() <= q.key();
  };
  return gap_leq_raw(a.s, b.s, one) && x_po(a.x, b.x);
}

/// pi: prefix a degree-<=0 sequence term (indices < n) onto t with all of its
/// indices shifted up by one.
inline SeqTerm pi_n(int n, const SeqTerm& s, const SeqTerm& t) {
  (void)n;
  if (is_leaf(s)) return t;
  return seq_theta(s->index + 1, pi_n(n, s->sub, t));
}

inline SeqTerm kappa_n_bottom() { return seq_base(std::uint64_t{0}); }

inline SeqTerm kappa_n(int n, const SeqTerm& s, const SeqTerm& t) {
  if (deg(s) > 0)
    throw TermConstraintError("pair component needs degree <= 0");
  return seq_theta(0, pi_n(n, s, t));
}

/// Inverse of kappa_n on terms over the one-point base: a leaf comes from
/// bottom; otherwise split off the shifted prefix and the first degree-<=0
/// tail position.
inline bool kappa_n_inv(const SeqTerm& u, SeqTerm& s_out, SeqTerm& t_out) {
  if (is_leaf(u)) return false;  // bottom
  if (u->index != 0) throw std::invalid_argument("outer index must be 0");
  SeqTerm w = u->sub;
  std::vector<int> prefix;
  while (!is_leaf(w) && w->index >= 1) {
    prefix.push_back(w->index - 1);
    w = w->sub;
  }
  t_out = w;
  s_out = from_sequence(prefix);
  return true;
}

}  // namespace ordcal

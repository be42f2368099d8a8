#pragma once

#include <functional>
#include <stdexcept>
#include <utility>

#include "ordcal/seq_term.hpp"

namespace ordcal {

struct LinCmpContext {
  SystemId sys;
  std::function<Cmp(const BaseElem&, const BaseElem&)> base_cmp;
};

Cmp lin_cmp_raw(const SeqTerm& s, const SeqTerm& t,
                const std::function<Cmp(const BaseElem&, const BaseElem&)>& bc);

inline LinCmpContext lin_context(const SystemId& sys) {
  if (!linear_family(sys.family))
    throw std::invalid_argument("linear comparison needs family T or T0");
  std::function<Cmp(const BaseElem&, const BaseElem&)> bc;
  switch (sys.base.kind) {
    case BaseOrderDescriptor::Kind::Empty:
      bc = [](const BaseElem&, const BaseElem&) -> Cmp {
        throw std::logic_error("no elements in the empty base");
      };
      break;
    case BaseOrderDescriptor::Kind::One:
    case BaseOrderDescriptor::Kind::FiniteChain:
      bc = [](const BaseElem& a, const BaseElem& b) {
        return cmp_values(a.key(), b.key());
      };
      break;
    case BaseOrderDescriptor::Kind::FinitePoset:
      throw std::invalid_argument("poset base is not a linear order");
    case BaseOrderDescriptor::Kind::TermOrder: {
      auto inner = lin_context(*sys.base.inner);
      auto inner_cmp = inner.base_cmp;
      bc = [inner_cmp](const BaseElem& a, const BaseElem& b) {
        return lin_cmp_raw(a.term(), b.term(), inner_cmp);
      };
      break;
    }
  }
  return LinCmpContext{sys, std::move(bc)};
}

inline Cmp lin_cmp_raw(
    const SeqTerm& s, const SeqTerm& t,
    const std::function<Cmp(const BaseElem&, const BaseElem&)>& bc) {
  bool ls = is_leaf(s), lt = is_leaf(t);
  if (ls && lt) return bc(s->leaf, t->leaf);
  if (ls) return Cmp::LT;
  if (lt) return Cmp::GT;
  if (s->index != t->index) return cmp_values(s->index, t->index);
  int i = s->index;
  Cmp sub = lin_cmp_raw(s->sub, t->sub, bc);
  if (sub == Cmp::EQ) return Cmp::EQ;
  if (sub == Cmp::LT)
    return lin_cmp_raw(k(i, s->sub), t, bc) == Cmp::LT ? Cmp::LT : Cmp::GT;
  return lin_cmp_raw(k(i, t->sub), s, bc) == Cmp::LT ? Cmp::GT : Cmp::LT;
}

inline Cmp lin_cmp(const SeqTerm& s, const SeqTerm& t,
                   const LinCmpContext& ctx) {
  if (!validate(s, ctx.sys) || !validate(t, ctx.sys))
    throw std::invalid_argument("term does not belong to the given system");
  return lin_cmp_raw(s, t, ctx.base_cmp);
}

// ---------------------------------------------------------------------------
// Functorial action and supports
// ---------------------------------------------------------------------------

inline SeqTerm t_rename(const std::function<BaseElem(const BaseElem&)>& f,
                        const SeqTerm& s) {
  if (is_leaf(s)) return seq_base(f(s->leaf));
  return seq_theta(s->index, t_rename(f, s->sub));
}

inline std::vector<BaseElem> t_supp(const SeqTerm& s) { return {k_base(s)}; }

// ---------------------------------------------------------------------------
// Index-shift isomorphism and the derived fixed-point constructors
// ---------------------------------------------------------------------------

/// Flattens a term whose leaves hold inner terms (indices < n outside, the
/// inner system unrestricted in degree but with indices < n+1) into a plain
/// term: leaves unwrap, every index shifts up by one.
inline SeqTerm sigma_lin(int n, const SeqTerm& s) {
  (void)n;
  if (is_leaf(s)) {
    if (s->leaf.is_key())
      throw std::invalid_argument("leaf does not hold an inner term");
    return s->leaf.term();
  }
  return seq_theta(s->index + 1, sigma_lin(n, s->sub));
}

/// Inverse of sigma_lin: strips shifted indices down to the first position of
/// degree <= 0 and wraps the remainder as a leaf.
inline SeqTerm sigma_lin_inv(int n, const SeqTerm& t) {
  (void)n;
  if (deg(t) <= 0) return seq_base(BaseElem{t});
  return seq_theta(t->index - 1, sigma_lin_inv(n, t->sub));
}

inline SeqTerm theta_lin(int n, const SeqTerm& s) {
  if (deg(s) > 0)
    throw TermConstraintError("fixed-point constructor needs degree <= 0");
  return seq_theta(0, sigma_lin(n, s));
}

inline SeqTerm iota_lin(BaseElem x) { return seq_base(std::move(x)); }

}  // namespace ordcal

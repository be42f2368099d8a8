#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordcal/gap.hpp"
#include "ordcal/seq_term.hpp"

namespace ordcal {

struct OtNode;
using OtTerm = std::shared_ptr<const OtNode>;

/// Binary collapsing term: the least term Z or Th(i, s, t).
struct OtNode {
  int index;  // -1 for Z
  OtTerm s, t;
  int ht;
};

inline bool ot_is_zero(const OtTerm& a) { return a->index < 0; }
inline int ot_deg(const OtTerm& a) { return a->index; }
inline int ot_height(const OtTerm& a) { return a->ht; }

inline OtTerm ot_zero() {
  static const OtTerm z =
      std::make_shared<const OtNode>(OtNode{-1, nullptr, nullptr, 0});
  return z;
}

/// True iff no subterm with outer index <= j survives the coefficient-set
/// recursion: terms with outer index <= j count themselves, larger indices
/// recurse into both arguments.
inline bool ot_k_empty(int j, const OtTerm& a) {
  if (ot_is_zero(a)) return true;
  if (a->index <= j) return false;
  return ot_k_empty(j, a->s) && ot_k_empty(j, a->t);
}

bool ot_eq(const OtTerm& a, const OtTerm& b);

inline void ot_collect_K(int j, const OtTerm& a, std::vector<OtTerm>& out) {
  if (ot_is_zero(a)) return;
  if (a->index <= j) {
    for (const auto& e : out)
      if (ot_eq(e, a)) return;
    out.push_back(a);
    return;
  }
  ot_collect_K(j, a->s, out);
  ot_collect_K(j, a->t, out);
}

inline std::vector<OtTerm> ot_K(int j, const OtTerm& a) {
  std::vector<OtTerm> out;
  ot_collect_K(j, a, out);
  return out;
}

inline OtTerm ot_th(int i, OtTerm s, OtTerm t) {
  int lo = std::max({ot_deg(s) - 1, ot_deg(t), 0});
  if (i < lo)
    throw TermConstraintError("collapsing index " + std::to_string(i) +
                              " below minimum " + std::to_string(lo));
  if (!ot_k_empty(i, s))
    throw TermConstraintError(
        "first argument has a nonempty coefficient set at the collapsing index");
  int h = s->ht + t->ht + 1;
  return std::make_shared<const OtNode>(OtNode{i, std::move(s), std::move(t), h});
}

inline bool ot_eq(const OtTerm& a, const OtTerm& b) {
  if (a.get() == b.get()) return true;
  if (a->index != b->index) return false;
  if (ot_is_zero(a)) return true;
  return ot_eq(a->s, b->s) && ot_eq(a->t, b->t);
}

inline bool ot_validate(const OtTerm& a, int n, bool zero_cls = false) {
  if (zero_cls && ot_deg(a) > 0) return false;
  if (ot_is_zero(a)) return true;
  if (a->index >= n) return false;
  return ot_validate(a->s, n) && ot_validate(a->t, n);
}

inline Cmp ot_cmp_raw(const OtTerm& a, const OtTerm& b) {
  bool za = ot_is_zero(a), zb = ot_is_zero(b);
  if (za && zb) return Cmp::EQ;
  if (za) return Cmp::LT;
  if (zb) return Cmp::GT;
  if (a->index != b->index) return cmp_values(a->index, b->index);
  Cmp cs = ot_cmp_raw(a->s, b->s);
  if (cs == Cmp::EQ) return ot_cmp_raw(a->t, b->t);
  if (cs == Cmp::LT)
    return ot_cmp_raw(a->t, b) == Cmp::LT ? Cmp::LT : Cmp::GT;
  return ot_cmp_raw(b->t, a) == Cmp::LT ? Cmp::GT : Cmp::LT;
}

inline Cmp ot_cmp(const OtTerm& a, const OtTerm& b, int n) {
  if (!ot_validate(a, n) || !ot_validate(b, n))
    throw std::invalid_argument("term does not belong to the given system");
  return ot_cmp_raw(a, b);
}

// ---------------------------------------------------------------------------
// Index shifts
// ---------------------------------------------------------------------------

inline OtTerm ot_plus(const OtTerm& a) {
  if (ot_is_zero(a)) return a;
  return ot_th(a->index + 1, ot_plus(a->s), ot_plus(a->t));
}

inline OtTerm ot_minus(const OtTerm& a) {
  if (ot_is_zero(a)) return a;
  if (a->index == 0)
    throw TermConstraintError("cannot shift index 0 down");
  return ot_th(a->index - 1, ot_minus(a->s), ot_minus(a->t));
}

// ---------------------------------------------------------------------------
// The 1 + OT0_n x X construction and its fixed point
// ---------------------------------------------------------------------------

/// Element of 1 + OT0_n x X with a generic second component.
struct DnElem {
  bool bottom = true;
  OtTerm s;
  BaseElem x;

  static DnElem bot() { return DnElem{}; }
  static DnElem pair(OtTerm s, BaseElem x) {
    if (ot_deg(s) > 0)
      throw TermConstraintError("pair component needs degree <= 0");
    return DnElem{false, std::move(s), std::move(x)};
  }
};

/// Bottom least; pairs lexicographically (term component first).
inline Cmp dn_cmp(const DnElem& a, const DnElem& b,
                  const std::function<Cmp(const BaseElem&, const BaseElem&)>& x_cmp) {
  if (a.bottom && b.bottom) return Cmp::EQ;
  if (a.bottom) return Cmp::LT;
  if (b.bottom) return Cmp::GT;
  Cmp c = ot_cmp_raw(a.s, b.s);
  if (c != Cmp::EQ) return c;
  return x_cmp(a.x, b.x);
}

inline OtTerm theta_ot_bottom() { return ot_zero(); }

inline OtTerm theta_ot(int n, const OtTerm& s, const OtTerm& t) {
  (void)n;
  if (ot_deg(s) > 0)
    throw TermConstraintError("pair component needs degree <= 0");
  return ot_th(0, ot_plus(s), t);
}

/// Inverse of theta_ot: Z comes from bottom; Th(0, a, t) splits into
/// (a shifted down, t), using that the coefficient-set emptiness at 0 forces
/// every index of a to be >= 1.
inline bool theta_ot_inv(const OtTerm& u, OtTerm& s_out, OtTerm& t_out) {
  if (ot_is_zero(u)) return false;
  if (u->index != 0) throw std::invalid_argument("outer index must be 0");
  s_out = ot_minus(u->s);
  t_out = u->t;
  return true;
}

// ---------------------------------------------------------------------------
// Direct linearization into sequence terms over the one-point base
// ---------------------------------------------------------------------------

inline SeqTerm f_lin(int n, const OtTerm& a) {
  if (ot_is_zero(a)) return seq_base(std::uint64_t{0});
  if (n < 1 || a->index != 0)
    throw std::invalid_argument("linearization input out of range");
  return seq_theta(0, pi_n(n - 1, f_lin(n - 1, ot_minus(a->s)), f_lin(n, a->t)));
}

}  // namespace ordcal

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordcal/compare.hpp"

namespace ordcal {

/// Ordinal below epsilon_0 in Cantor normal form: a weakly decreasing list of
/// exponents e, denoting the sum of w^e over the list; the empty list is 0.
struct Cnf {
  std::vector<Cnf> e;
};

inline Cnf cnf_zero() { return {}; }
inline bool cnf_is_zero(const Cnf& a) { return a.e.empty(); }

inline Cmp cnf_cmp(const Cnf& a, const Cnf& b) {
  std::size_t n = std::min(a.e.size(), b.e.size());
  for (std::size_t i = 0; i < n; ++i) {
    Cmp c = cnf_cmp(a.e[i], b.e[i]);
    if (c != Cmp::EQ) return c;
  }
  return cmp_values(a.e.size(), b.e.size());
}

inline bool cnf_eq(const Cnf& a, const Cnf& b) {
  return cnf_cmp(a, b) == Cmp::EQ;
}

inline bool cnf_valid(const Cnf& a) {
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    if (!cnf_valid(a.e[i])) return false;
    if (i + 1 < a.e.size() && cnf_cmp(a.e[i], a.e[i + 1]) == Cmp::LT)
      return false;
  }
  return true;
}

inline Cnf cnf_nat(unsigned long k) {
  Cnf a;
  a.e.assign(k, Cnf{});
  return a;
}

inline Cnf cnf_omega_pow(Cnf exp) {
  Cnf a;
  a.e.push_back(std::move(exp));
  return a;
}

inline Cnf cnf_add(const Cnf& a, const Cnf& b) {
  if (cnf_is_zero(b)) return a;
  Cnf out;
  for (const Cnf& t : a.e) {
    if (cnf_cmp(t, b.e.front()) == Cmp::LT) break;  // absorbed by b
    out.e.push_back(t);
  }
  for (const Cnf& t : b.e) out.e.push_back(t);
  return out;
}

inline Cnf cnf_succ(const Cnf& a) { return cnf_add(a, cnf_nat(1)); }

/// The unique x with a + x = b; requires a <= b.
inline Cnf cnf_lsub(const Cnf& a, const Cnf& b) {
  std::size_t i = 0;
  while (i < a.e.size() && i < b.e.size() &&
         cnf_cmp(a.e[i], b.e[i]) == Cmp::EQ)
    ++i;
  if (i < a.e.size()) {
    if (i >= b.e.size() || cnf_cmp(a.e[i], b.e[i]) == Cmp::GT)
      throw std::invalid_argument("left subtraction needs a <= b");
  }
  Cnf out;
  out.e.assign(b.e.begin() + static_cast<long>(i), b.e.end());
  return out;
}

inline Cnf cnf_omega_tower(unsigned k, Cnf a) {
  for (unsigned i = 0; i < k; ++i) a = cnf_omega_pow(std::move(a));
  return a;
}

/// Left multiplication by w^e: adds e to every exponent.
inline Cnf cnf_mul_omega_pow(const Cnf& e, const Cnf& a) {
  Cnf out;
  out.e.reserve(a.e.size());
  for (const Cnf& t : a.e) out.e.push_back(cnf_add(e, t));
  return out;
}

inline std::string cnf_to_string(const Cnf& a) {
  if (cnf_is_zero(a)) return "0";
  std::string out;
  std::size_t i = 0;
  while (i < a.e.size()) {
    std::size_t j = i;
    while (j < a.e.size() && cnf_cmp(a.e[i], a.e[j]) == Cmp::EQ) ++j;
    std::size_t mult = j - i;
    const Cnf& exp = a.e[i];
    std::string piece;
    if (cnf_is_zero(exp)) {
      piece = std::to_string(mult);
    } else {
      if (exp.e.size() == 1 && cnf_is_zero(exp.e[0])) {
        piece = "w";
      } else {
        std::string es = cnf_to_string(exp);
        bool atomic = es.find('+') == std::string::npos &&
                      es.find('*') == std::string::npos;
        piece = "w^" + (atomic ? es : "(" + es + ")");
      }
      if (mult > 1) piece += "*" + std::to_string(mult);
    }
    if (!out.empty()) out += " + ";
    out += piece;
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixed-point structure on the ordinals below a double omega-power
// ---------------------------------------------------------------------------

/// Argument of the collapsing map for the dilator 1 + (1+alpha) x Id.
struct CollapseArg {
  bool bottom = true;
  Cnf beta, gamma;

  static CollapseArg bot() { return CollapseArg{}; }
  static CollapseArg pair(Cnf b, Cnf g) {
    return CollapseArg{false, std::move(b), std::move(g)};
  }
};

/// Bottom least; pairs lexicographically.
inline Cmp collapse_arg_cmp(const CollapseArg& a, const CollapseArg& b) {
  if (a.bottom && b.bottom) return Cmp::EQ;
  if (a.bottom) return Cmp::LT;
  if (b.bottom) return Cmp::GT;
  Cmp c = cnf_cmp(a.beta, b.beta);
  if (c != Cmp::EQ) return c;
  return cnf_cmp(a.gamma, b.gamma);
}

/// Collapsing map onto the ordinals below w^(w^alpha): bottom goes to 0;
/// (0, g) goes to g+1 (the successors); (1+m, g) enumerates the ordinals
/// whose final CNF exponent lies in [w^m, w^(m+1)), via the Euclidean split
/// g = w^s*q + r with s = w^(m+1) and left multiplication by w^(w^m).
inline Cnf collapse_alpha(const Cnf& alpha, const CollapseArg& d) {
  if (d.bottom) return cnf_zero();
  if (cnf_cmp(d.beta, cnf_add(cnf_nat(1), alpha)) != Cmp::LT)
    throw std::invalid_argument("first component must be below 1 + alpha");
  if (cnf_cmp(d.gamma, cnf_omega_tower(2, alpha)) != Cmp::LT)
    throw std::invalid_argument("second component out of range");
  if (cnf_is_zero(d.beta)) return cnf_succ(d.gamma);
  Cnf mu = cnf_lsub(cnf_nat(1), d.beta);  // beta = 1 + mu
  Cnf ex = cnf_omega_pow(mu);
  Cnf sx = cnf_omega_pow(cnf_succ(mu));
  Cnf big, rest;
  for (const Cnf& t : d.gamma.e)
    (cnf_cmp(t, sx) != Cmp::LT ? big : rest).e.push_back(t);
  Cnf tail = cnf_add(cnf_nat(1), rest);  // 1 + r
  Cnf out = big;
  for (const Cnf& t : tail.e) out.e.push_back(cnf_add(ex, t));
  return out;
}

/// Exact inverse of collapse_alpha; witnesses exhaustion below w^(w^alpha).
inline CollapseArg collapse_alpha_inv(const Cnf& alpha, const Cnf& v) {
  if (cnf_is_zero(v)) return CollapseArg::bot();
  if (cnf_cmp(v, cnf_omega_tower(2, alpha)) != Cmp::LT)
    throw std::invalid_argument("value out of range");
  const Cnf& last = v.e.back();
  if (cnf_is_zero(last)) {  // successor: predecessor pairs with beta = 0
    Cnf g = v;
    g.e.pop_back();
    return CollapseArg::pair(cnf_zero(), std::move(g));
  }
  Cnf mu;  // leading exponent class of the final exponent
  mu = last.e.front();
  Cnf ex = cnf_omega_pow(mu);
  Cnf sx = cnf_omega_pow(cnf_succ(mu));
  Cnf big, tail;
  for (const Cnf& t : v.e) {
    Cnf shifted = cnf_lsub(ex, t);
    (cnf_cmp(shifted, sx) != Cmp::LT ? big : tail).e.push_back(shifted);
  }
  // big holds the unshifted exponents again (they absorb w^mu); tail is the
  // CNF of 1 + r, so a finite tail carries an explicit unit while an infinite
  // one absorbed it
  Cnf r = tail;
  if (!tail.e.empty() && cnf_is_zero(tail.e.front())) r.e.pop_back();
  Cnf g = big;
  for (const Cnf& t : r.e) g.e.push_back(t);
  return CollapseArg::pair(cnf_add(cnf_nat(1), mu), std::move(g));
}

}  // namespace ordcal

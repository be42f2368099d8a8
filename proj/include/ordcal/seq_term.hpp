#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ordcal/compare.hpp"

namespace ordcal {

/// Raised when a constructor argument violates a term-formation constraint
/// (as opposed to a syntax error in the textual grammar).
class TermConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SeqNode;
using SeqTerm = std::shared_ptr<const SeqNode>;

/// An element of a base order: either a key into a finite carrier or a term
/// of an inner system (for term-over-term bases).
struct BaseElem {
  std::variant<std::uint64_t, SeqTerm> v;

  BaseElem() : v(std::uint64_t{0}) {}
  explicit BaseElem(std::uint64_t k) : v(k) {}
  explicit BaseElem(SeqTerm t) : v(std::move(t)) {}

  bool is_key() const { return std::holds_alternative<std::uint64_t>(v); }
  std::uint64_t key() const { return std::get<std::uint64_t>(v); }
  const SeqTerm& term() const { return std::get<SeqTerm>(v); }
};

/// Unary collapsing term: a base leaf or a single-argument constructor
/// carrying a natural-number collapsing index.
struct SeqNode {
  int index;      // -1 for leaves
  SeqTerm sub;    // null for leaves
  BaseElem leaf;  // meaningful for leaves only
  int ht;
};

inline bool is_leaf(const SeqTerm& s) { return s->index < 0; }
inline int deg(const SeqTerm& s) { return s->index; }
inline int height(const SeqTerm& s) { return s->ht; }

inline SeqTerm seq_base(BaseElem x) {
  return std::make_shared<const SeqNode>(SeqNode{-1, nullptr, std::move(x), 0});
}
inline SeqTerm seq_base(std::uint64_t key) { return seq_base(BaseElem{key}); }

inline SeqTerm seq_theta(int i, SeqTerm s) {
  int lo = std::max(deg(s) - 1, 0);
  if (i < lo)
    throw TermConstraintError("collapsing index " + std::to_string(i) +
                              " below minimum " + std::to_string(lo));
  int h = s->ht + 1;
  return std::make_shared<const SeqNode>(SeqNode{i, std::move(s), BaseElem{}, h});
}

/// Strips constructors with index > i; stops at the first index <= i or the leaf.
inline SeqTerm k(int i, SeqTerm s) {
  while (!is_leaf(s) && s->index > i) s = s->sub;
  return s;
}

inline const BaseElem& k_base(const SeqTerm& s) {
  const SeqNode* p = s.get();
  while (p->index >= 0) p = p->sub.get();
  return p->leaf;
}

bool seq_eq(const SeqTerm& a, const SeqTerm& b);

inline bool base_eq(const BaseElem& a, const BaseElem& b) {
  if (a.is_key() != b.is_key()) return false;
  if (a.is_key()) return a.key() == b.key();
  return seq_eq(a.term(), b.term());
}

inline bool seq_eq(const SeqTerm& a, const SeqTerm& b) {
  if (a.get() == b.get()) return true;
  if (a->index != b->index) return false;
  if (is_leaf(a)) return base_eq(a->leaf, b->leaf);
  return seq_eq(a->sub, b->sub);
}

// ---------------------------------------------------------------------------
// System identifiers and base-order descriptors
// ---------------------------------------------------------------------------

enum class Family { T, T0, S, S0 };

inline bool zero_class(Family f) { return f == Family::T0 || f == Family::S0; }
inline bool linear_family(Family f) { return f == Family::T || f == Family::T0; }

struct SystemId;

struct BaseOrderDescriptor {
  enum class Kind { Empty, One, FiniteChain, FinitePoset, TermOrder };

  Kind kind = Kind::One;
  std::size_t size = 1;
  std::vector<std::vector<bool>> rel;  // FinitePoset: rel[i][j] means i <= j
  std::shared_ptr<const SystemId> inner;

  static BaseOrderDescriptor empty() { return {Kind::Empty, 0, {}, nullptr}; }
  static BaseOrderDescriptor one() { return {Kind::One, 1, {}, nullptr}; }
  static BaseOrderDescriptor chain(std::size_t n) {
    return {Kind::FiniteChain, n, {}, nullptr};
  }
  static BaseOrderDescriptor poset(std::vector<std::vector<bool>> r);
  static BaseOrderDescriptor term_order(SystemId inner);
};

struct SystemId {
  Family family;
  int n;
  BaseOrderDescriptor base;
};

inline BaseOrderDescriptor BaseOrderDescriptor::poset(
    std::vector<std::vector<bool>> r) {
  std::size_t n = r.size();
  for (auto& row : r)
    if (row.size() != n) throw std::invalid_argument("poset matrix not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (!r[i][i]) throw std::invalid_argument("poset relation not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && r[i][j] && r[j][i])
        throw std::invalid_argument("poset relation not antisymmetric");
      for (std::size_t l = 0; l < n; ++l)
        if (r[i][j] && r[j][l] && !r[i][l])
          throw std::invalid_argument("poset relation not transitive");
    }
  }
  return {Kind::FinitePoset, n, std::move(r), nullptr};
}

inline BaseOrderDescriptor BaseOrderDescriptor::term_order(SystemId inner) {
  BaseOrderDescriptor d;
  d.kind = Kind::TermOrder;
  d.size = 0;
  d.inner = std::make_shared<const SystemId>(std::move(inner));
  return d;
}

bool validate(const SeqTerm& s, const SystemId& sys);

inline bool base_contains(const BaseOrderDescriptor& b, const BaseElem& x) {
  switch (b.kind) {
    case BaseOrderDescriptor::Kind::Empty:
      return false;
    case BaseOrderDescriptor::Kind::One:
      return x.is_key() && x.key() == 0;
    case BaseOrderDescriptor::Kind::FiniteChain:
    case BaseOrderDescriptor::Kind::FinitePoset:
      return x.is_key() && x.key() < b.size;
    case BaseOrderDescriptor::Kind::TermOrder:
      return !x.is_key() && validate(x.term(), *b.inner);
  }
  return false;
}

inline bool validate(const SeqTerm& s, const SystemId& sys) {
  if (zero_class(sys.family) && deg(s) > 0) return false;
  const SeqNode* p = s.get();
  while (p->index >= 0) {
    if (p->index >= sys.n) return false;
    // the index lower bound holds by construction
    p = p->sub.get();
  }
  return base_contains(sys.base, p->leaf);
}

// ---------------------------------------------------------------------------
// Sequence view over the one-point base
// ---------------------------------------------------------------------------

inline std::vector<int> to_sequence(const SeqTerm& s) {
  std::vector<int> out;
  const SeqNode* p = s.get();
  while (p->index >= 0) {
    out.push_back(p->index);
    p = p->sub.get();
  }
  if (!p->leaf.is_key() || p->leaf.key() != 0)
    throw std::invalid_argument("term is not over the one-point base");
  return out;
}

/// Builds the term with the given index sequence over the one-point base.
/// With n >= 0, rejects indices >= n; index-step violations throw
/// TermConstraintError.
inline SeqTerm from_sequence(const std::vector<int>& is, int n = -1) {
  SeqTerm t = seq_base(std::uint64_t{0});
  for (auto it = is.rbegin(); it != is.rend(); ++it) {
    if (*it < 0) throw std::invalid_argument("negative index");
    if (n >= 0 && *it >= n)
      throw std::invalid_argument("index " + std::to_string(*it) +
                                  " not below " + std::to_string(n));
    t = seq_theta(*it, std::move(t));
  }
  return t;
}

}  // namespace ordcal

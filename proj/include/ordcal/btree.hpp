#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "ordcal/compare.hpp"

namespace ordcal {

struct BinNode;
using BinTree = std::shared_ptr<const BinNode>;

/// Structured binary tree: a labelled leaf or an inner node with two children.
struct BinNode {
  bool leaf;
  std::uint64_t x;
  BinTree l, r;
  int ht;
};

inline BinTree bt_leaf(std::uint64_t x) {
  return std::make_shared<const BinNode>(BinNode{true, x, nullptr, nullptr, 0});
}
inline BinTree bt_node(BinTree l, BinTree r) {
  int h = 1 + std::max(l->ht, r->ht);
  return std::make_shared<const BinNode>(
      BinNode{false, 0, std::move(l), std::move(r), h});
}
inline int bt_height(const BinTree& t) { return t->ht; }

inline bool bt_eq(const BinTree& a, const BinTree& b) {
  if (a.get() == b.get()) return true;
  if (a->leaf != b->leaf) return false;
  if (a->leaf) return a->x == b->x;
  return bt_eq(a->l, b->l) && bt_eq(a->r, b->r);
}

using LeafPo = std::function<bool(std::uint64_t, std::uint64_t)>;

/// Embeddability order: leaves by the label order, a tree embeds into a node
/// through either child, nodes embed componentwise.
inline bool btree_w_leq(const BinTree& a, const BinTree& b, const LeafPo& po) {
  if (b->leaf) return a->leaf && po(a->x, b->x);
  if (btree_w_leq(a, b->l, po) || btree_w_leq(a, b->r, po)) return true;
  if (a->leaf) return false;
  return btree_w_leq(a->l, b->l, po) && btree_w_leq(a->r, b->r, po);
}

using LeafCmp = std::function<Cmp(std::uint64_t, std::uint64_t)>;

/// Linear refinement of the embeddability order (labels linearly ordered):
/// leaves below nodes; embedding into a child stays strict; nodes compare by
/// first child then second against the whole right-hand side.
inline Cmp btree_d_cmp(const BinTree& a, const BinTree& b, const LeafCmp& lc) {
  if (a->leaf && b->leaf) return lc(a->x, b->x);
  if (a->leaf) return Cmp::LT;
  if (b->leaf) return Cmp::GT;
  if (btree_d_cmp(a, b->l, lc) != Cmp::GT || btree_d_cmp(a, b->r, lc) != Cmp::GT)
    return Cmp::LT;
  if (btree_d_cmp(b, a->l, lc) != Cmp::GT || btree_d_cmp(b, a->r, lc) != Cmp::GT)
    return Cmp::GT;
  Cmp cl = btree_d_cmp(a->l, b->l, lc);
  if (cl == Cmp::EQ) return btree_d_cmp(a->r, b->r, lc);
  if (cl == Cmp::LT)
    return btree_d_cmp(a->r, b, lc) == Cmp::LT ? Cmp::LT : Cmp::GT;
  return btree_d_cmp(b->r, a, lc) == Cmp::LT ? Cmp::GT : Cmp::LT;
}

/// Membership in the tree closure: children of every node must not embed
/// right-into-left.
inline bool btree_in_TW(const BinTree& t, const LeafPo& po) {
  if (t->leaf) return true;
  return btree_in_TW(t->l, po) && btree_in_TW(t->r, po) &&
         !btree_w_leq(t->r, t->l, po);
}

/// Membership in the collapsed carrier: children of every node must increase
/// strictly in the linear refinement.
inline bool btree_in_thetaD(const BinTree& t, const LeafCmp& lc) {
  if (t->leaf) return true;
  return btree_in_thetaD(t->l, lc) && btree_in_thetaD(t->r, lc) &&
         btree_d_cmp(t->l, t->r, lc) == Cmp::LT;
}

}  // namespace ordcal

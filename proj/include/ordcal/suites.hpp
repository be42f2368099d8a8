#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ordcal/bh.hpp"
#include "ordcal/btree.hpp"
#include "ordcal/cnf.hpp"
#include "ordcal/enumerate.hpp"
#include "ordcal/exporters.hpp"
#include "ordcal/gap.hpp"
#include "ordcal/grammar.hpp"
#include "ordcal/linear.hpp"
#include "ordcal/ot.hpp"

namespace ordcal {

struct Violation {
  std::string lhs, rhs, clause;
};

struct SuiteParams {
  int n = 2;
  int h = 3;
  int x = 1;        // chain sizes / poset sizes to include
  int len = 4;      // sequence length bound for the oracle suite
  std::uint64_t seed = 1;
  std::size_t count = 1000;  // sample count for randomized suites
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::uint64_t seed = 0;
  std::size_t pairs = 0;
  std::vector<Violation> violations;
  double millis = 0;

  bool pass() const { return violations.empty(); }

  std::string to_json() const {
    std::ostringstream out;
    out << "{\"suite\": \"" << json_escape(suite) << "\", \"params\": {\"n\": "
        << params.n << ", \"h\": " << params.h << ", \"x\": " << params.x
        << ", \"len\": " << params.len << ", \"count\": " << params.count
        << "}, \"seed\": " << seed << ", \"pairs\": " << pairs
        << ", \"violations\": [";
    for (std::size_t i = 0; i < violations.size(); ++i) {
      if (i) out << ", ";
      out << "{\"lhs\": \"" << json_escape(violations[i].lhs)
          << "\", \"rhs\": \"" << json_escape(violations[i].rhs)
          << "\", \"clause\": \"" << json_escape(violations[i].clause)
          << "\"}";
    }
    out << "], \"millis\": " << millis << "}";
    return out.str();
  }
};

namespace detail {

/// Collects violations, keeping the smallest reproductions (by combined
/// height, then printed form) up to a cap.
class Recorder {
 public:
  explicit Recorder(SuiteReport& rep) : rep_(rep) {}

  void pair() { ++rep_.pairs; }
  void pairs(std::size_t k) { rep_.pairs += k; }

  void violation(int weight, std::string lhs, std::string rhs,
                 std::string clause) {
    entries_.push_back({weight, {std::move(lhs), std::move(rhs), std::move(clause)}});
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const auto& a, const auto& b) {
                       if (a.first != b.first) return a.first < b.first;
                       if (a.second.lhs != b.second.lhs)
                         return a.second.lhs < b.second.lhs;
                       return a.second.rhs < b.second.rhs;
                     });
    if (entries_.size() > kCap) entries_.resize(kCap);
    rep_.violations.clear();
    for (auto& e : entries_) rep_.violations.push_back(e.second);
  }

 private:
  static constexpr std::size_t kCap = 16;
  SuiteReport& rep_;
  std::vector<std::pair<int, Violation>> entries_;
};

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(g);
  }
  bool coin(double p = 0.5) {
    return std::uniform_real_distribution<double>(0, 1)(g) < p;
  }
};

/// Checks that a three-way comparison describes a linear order on the carrier
/// by ranking every element and re-checking all pairs against the ranking.
template <typename T>
void check_linear(Recorder& rec, const std::vector<T>& elems,
                  const std::function<Cmp(const T&, const T&)>& cmp,
                  const std::function<std::string(const T&)>& show,
                  const std::function<int(const T&)>& weight,
                  const std::string& tag) {
  std::size_t n = elems.size();
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (cmp(elems[i], elems[i]) != Cmp::EQ)
      rec.violation(2 * weight(elems[i]), show(elems[i]), show(elems[i]),
                    tag + ": not reflexive-equal");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && cmp(elems[j], elems[i]) == Cmp::LT) ++rank[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rec.pair();
      Cmp c = cmp(elems[i], elems[j]);
      Cmp want = i == j ? Cmp::EQ : cmp_values(rank[i], rank[j]);
      if (i != j && rank[i] == rank[j])
        want = Cmp::EQ;  // duplicate elements would share a rank
      if (c != want)
        rec.violation(weight(elems[i]) + weight(elems[j]), show(elems[i]),
                      show(elems[j]),
                      tag + ": comparison inconsistent with a linear ranking");
      if (flip(cmp(elems[j], elems[i])) != c)
        rec.violation(weight(elems[i]) + weight(elems[j]), show(elems[i]),
                      show(elems[j]), tag + ": not antisymmetric");
    }
}

inline std::vector<std::vector<bool>> random_poset(Rng& rng, std::size_t n) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.coin(0.3)) r[i][j] = true;
  for (std::size_t m = 0; m < n; ++m)  // transitive closure
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][m] && r[m][j]) r[i][j] = true;
  return r;
}

/// Random order-reflecting injection between posets; empty on failure.
inline std::optional<std::vector<std::size_t>> random_quasi_embedding(
    Rng& rng, const std::vector<std::vector<bool>>& p,
    const std::vector<std::vector<bool>>& q) {
  std::size_t a = p.size(), b = q.size();
  if (a > b) return std::nullopt;
  std::vector<std::size_t> all(b);
  for (std::size_t i = 0; i < b; ++i) all[i] = i;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::shuffle(all.begin(), all.end(), rng.g);
    std::vector<std::size_t> f(all.begin(), all.begin() + static_cast<long>(a));
    bool ok = true;
    for (std::size_t i = 0; i < a && ok; ++i)
      for (std::size_t j = 0; j < a && ok; ++j)
        if (q[f[i]][f[j]] && !p[i][j]) ok = false;
    if (ok) return f;
  }
  return std::nullopt;
}

/// Random valid index sequence (indices < n, inner index at most outer + 1).
inline std::vector<int> random_index_seq(Rng& rng, int n, int maxlen) {
  std::size_t len = rng.below(static_cast<std::size_t>(maxlen) + 1);
  std::vector<int> out;
  int prev = -1;
  for (std::size_t i = 0; i < len; ++i) {
    int hi = prev < 0 ? n - 1 : std::min(n - 1, prev + 1);
    int v = static_cast<int>(rng.below(static_cast<std::size_t>(hi) + 1));
    out.push_back(v);
    prev = v;
  }
  return out;
}

inline OtTerm random_ot_term(Rng& rng, int n, int maxh, bool zero) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::function<OtTerm(int)> gen = [&](int fuel) -> OtTerm {
      if (fuel <= 0 || rng.coin(0.34)) return ot_zero();
      OtTerm s = gen(fuel - 1);
      OtTerm t = gen(fuel - 1);
      int lo = std::max({ot_deg(s) - 1, ot_deg(t), 0});
      if (lo >= n || !ot_k_empty(lo, s)) return ot_zero();
      int i = lo + static_cast<int>(rng.below(static_cast<std::size_t>(n - lo)));
      if (!ot_k_empty(i, s)) i = lo;
      return ot_th(i, s, t);
    };
    OtTerm t = gen(maxh);
    if (!zero || ot_deg(t) <= 0) return t;
  }
  return ot_zero();
}

/// Random ordinal strictly below a nonzero bound.
inline Cnf sample_cnf_below(Rng& rng, const Cnf& bound) {
  std::size_t i = rng.below(bound.e.size() + 1);
  if (i >= bound.e.size()) i = rng.below(bound.e.size());
  Cnf out;
  out.e.assign(bound.e.begin(), bound.e.begin() + static_cast<long>(i));
  // either stop short of the bound or go below it at position i
  if (rng.coin(0.25)) return out;
  const Cnf& at = bound.e[i];
  if (cnf_is_zero(at)) return out;
  Cnf e1 = sample_cnf_below(rng, at);
  out.e.push_back(e1);
  std::size_t extra = rng.below(3);
  for (std::size_t k = 0; k < extra; ++k) {
    Cnf nxt = rng.coin() || cnf_is_zero(out.e.back())
                  ? out.e.back()
                  : sample_cnf_below(rng, out.e.back());
    out.e.push_back(std::move(nxt));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual suites
// ---------------------------------------------------------------------------

namespace suites {

using detail::Recorder;
using detail::Rng;

inline void linear_total(Recorder& rec, const SuiteParams& p) {
  for (int xs = 1; xs <= std::max(p.x, 1); ++xs) {
    SystemId sys{Family::T, p.n,
                 xs == 1 ? BaseOrderDescriptor::one()
                         : BaseOrderDescriptor::chain(static_cast<std::size_t>(xs))};
    auto ctx = lin_context(sys);
    auto elems = enum_seq(sys, p.h);
    detail::check_linear<SeqTerm>(
        rec, elems,
        [&](const SeqTerm& a, const SeqTerm& b) { return lin_cmp(a, b, ctx); },
        [](const SeqTerm& a) { return print_seq(a); },
        [](const SeqTerm& a) { return height(a); }, "unary order");
    // lower-bound law: the collapsed part stays below the whole term
    for (const SeqTerm& s : elems) {
      if (is_leaf(s)) continue;
      rec.pair();
      if (lin_cmp_raw(k(s->index, s->sub), s, ctx.base_cmp) != Cmp::LT)
        rec.violation(height(s), print_seq(k(s->index, s->sub)), print_seq(s),
                      "collapsed subterm not below the term");
    }
  }
}

inline void ot_total(Recorder& rec, const SuiteParams& p) {
  auto elems = enum_ot(p.n, p.h, false);
  detail::check_linear<OtTerm>(
      rec, elems,
      [&](const OtTerm& a, const OtTerm& b) { return ot_cmp(a, b, p.n); },
      [](const OtTerm& a) { return print_ot(a); },
      [](const OtTerm& a) { return ot_height(a); }, "binary order");
  for (const OtTerm& s : elems) {
    if (ot_is_zero(s)) continue;
    rec.pair();
    if (ot_cmp_raw(s->t, s) != Cmp::LT)
      rec.violation(ot_height(s), print_ot(s->t), print_ot(s),
                    "second argument not below the term");
  }
}

inline void bh_total(Recorder& rec, const SuiteParams& p) {
  struct Inst {
    std::shared_ptr<CodedDilator> d;
    std::uint64_t x;
  };
  std::vector<Inst> insts;
  insts.push_back({std::make_shared<SeqZeroDilator>(p.n), 1});
  insts.push_back({std::make_shared<DnDilator>(p.n), 0});
  insts.push_back({std::make_shared<ChainPairDilator>(), 3});
  for (auto& inst : insts) {
    BhCtx ctx{inst.d.get(), inst.x};
    auto elems = enum_bh(ctx, p.h, 2);
    detail::check_linear<BhTerm>(
        rec, elems,
        [&](const BhTerm& a, const BhTerm& b) { return bh_cmp(a, b, ctx); },
        [&](const BhTerm& a) { return bh_print(a, ctx); },
        [](const BhTerm& a) { return bh_height(a); },
        "generic order (" + inst.d->name() + ")");
    // exhaustion-and-descent criterion for the syntactic construction
    for (const BhTerm& s : elems) {
      rec.pair();
      if (!bh_validate(s, ctx))
        rec.violation(bh_height(s), bh_print(s, ctx), "",
                      "term fails validation");
      if (!s->leaf)
        for (const BhTerm& t : s->a)
          if (bh_height(t) >= bh_height(s))
            rec.violation(bh_height(s), bh_print(t, ctx), bh_print(s, ctx),
                          "height does not descend through the support");
    }
  }
  // linear refinement of the tree order
  auto trees = enum_btree(3, std::min(p.h, 2));
  auto lc = [](std::uint64_t a, std::uint64_t b) { return cmp_values(a, b); };
  detail::check_linear<BinTree>(
      rec, trees,
      [&](const BinTree& a, const BinTree& b) { return btree_d_cmp(a, b, lc); },
      [](const BinTree& a) {
        std::function<std::string(const BinTree&)> pr =
            [&](const BinTree& t) -> std::string {
          if (t->leaf) return std::to_string(t->x);
          return "(" + pr(t->l) + "," + pr(t->r) + ")";
        };
        return pr(a);
      },
      [](const BinTree& a) { return bt_height(a); }, "tree linear refinement");
}

inline void gap_po(Recorder& rec, const SuiteParams& p) {
  std::vector<BaseOrderDescriptor> bases;
  bases.push_back(BaseOrderDescriptor::one());
  if (p.x >= 2) {
    bases.push_back(BaseOrderDescriptor::chain(2));
    bases.push_back(BaseOrderDescriptor::poset(
        {{true, false}, {false, true}}));  // 2-antichain
  }
  for (const auto& base : bases) {
    SystemId sys{Family::S, p.n, base};
    auto ctx = gap_context(sys);
    auto elems = enum_seq(sys, p.h);
    std::size_t n = elems.size();
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        rec.pair();
        m[i][j] = gap_leq(elems[i], elems[j], ctx);
      }
    auto show = [&](std::size_t i) { return print_seq(elems[i]); };
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i][i])
        rec.violation(2 * height(elems[i]), show(i), show(i), "not reflexive");
      for (std::size_t j = 0; j < n; ++j) {
        int w = height(elems[i]) + height(elems[j]);
        if (i != j && m[i][j] && m[j][i] && !seq_eq(elems[i], elems[j]))
          rec.violation(w, show(i), show(j), "not antisymmetric");
        if (m[i][j]) {
          if (height(elems[i]) > height(elems[j]))
            rec.violation(w, show(i), show(j), "height not monotone");
          if (deg(elems[i]) > deg(elems[j]))
            rec.violation(w, show(i), show(j), "degree not monotone");
          for (int ki = 0; ki <= p.n; ++ki)
            if (!gap_leq_raw(k(ki, elems[i]), k(ki, elems[j]), ctx.base_po)) {
              rec.violation(w, show(i), show(j),
                            "collapsing map not monotone at " +
                                std::to_string(ki));
              break;
            }
          for (std::size_t l = 0; l < n; ++l)
            if (m[j][l] && !m[i][l]) {
              rec.violation(w + height(elems[l]), show(i), show(l),
                            "not transitive via " + show(j));
              break;
            }
        }
      }
    }
  }
}

inline void gap_oracle(Recorder& rec, const SuiteParams& p) {
  std::vector<std::vector<int>> seqs{{}};
  std::size_t start = 0;
  for (int l = 1; l <= p.len; ++l) {
    std::size_t end = seqs.size();
    for (std::size_t i = start; i < end; ++i)
      for (int v = 0; v < p.n; ++v) {
        // extend at the inner end: next index at most previous + 1
        if (!seqs[i].empty() && v > seqs[i].back() + 1) continue;
        auto s = seqs[i];
        s.push_back(v);
        seqs.push_back(std::move(s));
      }
    start = end;
  }
  auto ctx = gap_context(SystemId{Family::S, p.n, BaseOrderDescriptor::one()});
  std::vector<SeqTerm> terms;
  terms.reserve(seqs.size());
  for (const auto& s : seqs) terms.push_back(from_sequence(s, p.n));
  auto show = [](const std::vector<int>& s) {
    std::string out = "<";
    for (std::size_t i = 0; i < s.size(); ++i)
      out += (i ? "," : "") + std::to_string(s[i]);
    return out + ">";
  };
  for (std::size_t i = 0; i < seqs.size(); ++i)
    for (std::size_t j = 0; j < seqs.size(); ++j) {
      rec.pair();
      bool a = gap_leq_raw(terms[i], terms[j], ctx.base_po);
      bool b = gap_embed_oracle(seqs[i], seqs[j]);
      if (a != b)
        rec.violation(static_cast<int>(seqs[i].size() + seqs[j].size()),
                      show(seqs[i]), show(seqs[j]),
                      a ? "comparator yes, oracle no" : "oracle yes, comparator no");
    }
}

inline void sigma_iso(Recorder& rec, const SuiteParams& p) {
  // linear side
  {
    SystemId inner{Family::T0, p.n + 1, BaseOrderDescriptor::one()};
    SystemId outer{Family::T, p.n, BaseOrderDescriptor::term_order(inner)};
    SystemId image{Family::T, p.n + 1, BaseOrderDescriptor::one()};
    auto octx = lin_context(outer);
    auto ictx = lin_context(image);
    auto elems = enum_seq(outer, std::min(p.h, 2), p.h);
    std::vector<SeqTerm> imgs;
    for (const SeqTerm& s : elems) {
      SeqTerm u = sigma_lin(p.n, s);
      imgs.push_back(u);
      rec.pair();
      if (!validate(u, image))
        rec.violation(height(s), print_seq(s), print_seq(u),
                      "shift image not in the target system");
      if (!seq_eq(sigma_lin(p.n, sigma_lin_inv(p.n, u)), u))
        rec.violation(height(s), print_seq(u), "",
                      "shift inverse fails the round trip");
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        rec.pair();
        if (lin_cmp(elems[i], elems[j], octx) != lin_cmp(imgs[i], imgs[j], ictx))
          rec.violation(height(elems[i]) + height(elems[j]),
                        print_seq(elems[i]), print_seq(elems[j]),
                        "shift not an order isomorphism (linear)");
      }
    // surjectivity: every target term of bounded height comes back
    for (const SeqTerm& u : enum_seq(image, p.h)) {
      rec.pair();
      SeqTerm back = sigma_lin_inv(p.n, u);
      if (!validate(back, SystemId{Family::T, p.n,
                                   BaseOrderDescriptor::term_order(inner)}) ||
          !seq_eq(sigma_lin(p.n, back), u))
        rec.violation(height(u), print_seq(u), "",
                      "target term has no shift preimage");
    }
  }
  // gap side
  {
    SystemId inner{Family::S0, p.n + 1, BaseOrderDescriptor::one()};
    SystemId outer{Family::S, p.n, BaseOrderDescriptor::term_order(inner)};
    SystemId image{Family::S, p.n + 1, BaseOrderDescriptor::one()};
    auto octx = gap_context(outer);
    auto ictx = gap_context(image);
    auto elems = enum_seq(outer, std::min(p.h, 2), p.h);
    std::vector<SeqTerm> imgs;
    for (const SeqTerm& s : elems) imgs.push_back(sigma_gap(p.n, s));
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        rec.pair();
        if (gap_leq(elems[i], elems[j], octx) != gap_leq(imgs[i], imgs[j], ictx))
          rec.violation(height(elems[i]) + height(elems[j]),
                        print_seq(elems[i]), print_seq(elems[j]),
                        "shift not an order isomorphism (gap)");
      }
  }
}

inline void fixpoint_linear(Recorder& rec, const SuiteParams& p) {
  SystemId carrier{Family::T0, p.n + 1, BaseOrderDescriptor::one()};
  SystemId arg{Family::T0, p.n, BaseOrderDescriptor::term_order(carrier)};
  auto actx = lin_context(arg);
  auto cctx = lin_context(carrier);
  auto args = enum_seq(arg, std::min(p.h, 2), p.h);
  auto base_term = [&](const SeqTerm& s) { return k_base(s).term(); };
  for (const SeqTerm& s : args) {
    SeqTerm ts = theta_lin(p.n, s);
    rec.pair();
    if (!validate(ts, carrier))
      rec.violation(height(s), print_seq(s), print_seq(ts),
                    "collapse image not in the carrier");
    // base values stay below collapses
    if (lin_cmp(seq_base(std::uint64_t{0}), ts, cctx) != Cmp::LT)
      rec.violation(height(s), "[]", print_seq(ts),
                    "base value not below a collapse value");
    // support values stay below their own collapse
    if (lin_cmp(base_term(s), ts, cctx) != Cmp::LT)
      rec.violation(height(s), print_seq(base_term(s)), print_seq(ts),
                    "support value not below its collapse");
    if (height(base_term(s)) >= height(ts))
      rec.violation(height(s), print_seq(base_term(s)), print_seq(ts),
                    "height does not descend through the support");
  }
  for (const SeqTerm& s : args)
    for (const SeqTerm& t : args) {
      rec.pair();
      if (lin_cmp(s, t, actx) == Cmp::LT &&
          lin_cmp(base_term(s), theta_lin(p.n, t), cctx) == Cmp::LT) {
        if (lin_cmp(theta_lin(p.n, s), theta_lin(p.n, t), cctx) != Cmp::LT)
          rec.violation(height(s) + height(t), print_seq(s), print_seq(t),
                        "collapsing inequality fails");
      }
    }
  // exhaustion of the carrier
  for (const SeqTerm& u : enum_seq(carrier, p.h)) {
    rec.pair();
    if (is_leaf(u)) continue;
    SeqTerm s = sigma_lin_inv(p.n, u->sub);
    if (!validate(s, arg) || !seq_eq(theta_lin(p.n, s), u))
      rec.violation(height(u), print_seq(u), "",
                    "carrier term not exhausted by base/collapse values");
  }
}

inline void fixpoint_ot(Recorder& rec, const SuiteParams& p) {
  auto carrier = enum_ot(p.n + 1, p.h, true);
  auto firsts = enum_ot(p.n, p.h, true);
  struct Arg {
    bool bottom;
    OtTerm s, z;
  };
  std::vector<Arg> args{{true, nullptr, nullptr}};
  for (const OtTerm& s : firsts)
    for (const OtTerm& z : carrier) args.push_back({false, s, z});
  auto theta = [&](const Arg& a) {
    return a.bottom ? theta_ot_bottom() : theta_ot(p.n, a.s, a.z);
  };
  auto arg_cmp = [&](const Arg& a, const Arg& b) {
    if (a.bottom && b.bottom) return Cmp::EQ;
    if (a.bottom) return Cmp::LT;
    if (b.bottom) return Cmp::GT;
    Cmp c = ot_cmp_raw(a.s, b.s);
    return c != Cmp::EQ ? c : ot_cmp_raw(a.z, b.z);
  };
  auto show = [&](const Arg& a) {
    return a.bottom ? std::string("bot")
                    : "(" + print_ot(a.s) + "," + print_ot(a.z) + ")";
  };
  for (const Arg& a : args) {
    OtTerm ta = theta(a);
    rec.pair();
    if (!ot_validate(ta, p.n + 1, true))
      rec.violation(0, show(a), print_ot(ta),
                    "collapse image not in the carrier");
    if (!a.bottom) {
      if (ot_cmp_raw(a.z, ta) != Cmp::LT)
        rec.violation(ot_height(a.z), print_ot(a.z), print_ot(ta),
                      "support value not below its collapse");
      if (ot_height(a.z) >= ot_height(ta))
        rec.violation(ot_height(a.z), print_ot(a.z), print_ot(ta),
                      "height does not descend through the support");
    }
  }
  for (const Arg& a : args)
    for (const Arg& b : args) {
      rec.pair();
      if (arg_cmp(a, b) == Cmp::LT &&
          (a.bottom || ot_cmp_raw(a.z, theta(b)) == Cmp::LT)) {
        if (ot_cmp_raw(theta(a), theta(b)) != Cmp::LT)
          rec.violation(0, show(a), show(b), "collapsing inequality fails");
      }
    }
  for (const OtTerm& u : carrier) {
    rec.pair();
    if (ot_is_zero(u)) continue;
    OtTerm s, z;
    if (!theta_ot_inv(u, s, z) || !ot_eq(theta_ot(p.n, s, z), u) ||
        !ot_validate(s, p.n, true))
      rec.violation(ot_height(u), print_ot(u), "",
                    "carrier term not exhausted by collapse values");
  }
}

inline void kruskal_pair(Recorder& rec, const SuiteParams& p) {
  SystemId zsys{Family::S0, p.n + 1, BaseOrderDescriptor::one()};
  auto zctx = gap_context(zsys);
  auto zs = enum_seq(zsys, p.h);
  SystemId ssys{Family::S0, p.n, BaseOrderDescriptor::one()};
  auto ss = enum_seq(ssys, p.h);
  auto one = [](const BaseElem& a, const BaseElem& b) {
    return a.key() <= b.key();
  };
  // componentwise law for the prefix construction
  for (const SeqTerm& s : ss)
    for (const SeqTerm& z : zs)
      for (const SeqTerm& s2 : ss)
        for (const SeqTerm& z2 : zs) {
          rec.pair();
          bool lhs = gap_leq_raw(pi_n(p.n, s, z), pi_n(p.n, s2, z2), one);
          bool rhs = gap_leq_raw(s, s2, one) && gap_leq_raw(z, z2, one);
          if (lhs != rhs)
            rec.violation(height(s) + height(z) + height(s2) + height(z2),
                          "(" + print_seq(s) + "," + print_seq(z) + ")",
                          "(" + print_seq(s2) + "," + print_seq(z2) + ")",
                          "prefix construction componentwise law fails");
        }
  // fixed-point equivalence: bottom plus all pairs
  struct W {
    bool bottom;
    SeqTerm s, z;
  };
  std::vector<W> ws{{true, nullptr, nullptr}};
  for (const SeqTerm& s : ss)
    for (const SeqTerm& z : zs) ws.push_back({false, s, z});
  auto kap = [&](const W& w) {
    return w.bottom ? kappa_n_bottom() : kappa_n(p.n, w.s, w.z);
  };
  auto wleq = [&](const W& a, const W& b) {
    if (a.bottom || b.bottom) return a.bottom && b.bottom;
    return gap_leq_raw(a.s, b.s, one) && gap_leq_raw(a.z, b.z, one);
  };
  auto show = [&](const W& w) {
    return w.bottom ? std::string("bot")
                    : "(" + print_seq(w.s) + "," + print_seq(w.z) + ")";
  };
  for (const W& a : ws)
    for (const W& b : ws) {
      rec.pair();
      bool lhs = gap_leq(kap(a), kap(b), zctx);
      bool rhs = wleq(a, b) ||
                 (!b.bottom && gap_leq_raw(kap(a), b.z, one));
      if (lhs != rhs)
        rec.violation(0, show(a), show(b),
                      lhs ? "fixed-point equivalence: kappa yes, split no"
                          : "fixed-point equivalence: split yes, kappa no");
    }
  // bijectivity onto the carrier
  for (const SeqTerm& u : zs) {
    rec.pair();
    SeqTerm s, z;
    if (!kappa_n_inv(u, s, z)) {
      if (!is_leaf(u))
        rec.violation(height(u), print_seq(u), "", "inverse missing");
      continue;
    }
    if (!seq_eq(kappa_n(p.n, s, z), u))
      rec.violation(height(u), print_seq(u), "", "inverse round trip fails");
  }
}

inline void kruskal_gap(Recorder& rec, const SuiteParams& p) {
  SystemId carrier{Family::S0, p.n + 1, BaseOrderDescriptor::one()};
  SystemId arg{Family::S0, p.n, BaseOrderDescriptor::term_order(carrier)};
  auto cctx = gap_context(carrier);
  auto args = enum_seq(arg, std::min(p.h, 2), p.h);
  auto one = [](const BaseElem& a, const BaseElem& b) {
    return a.key() <= b.key();
  };
  auto actx = gap_context(arg);
  auto base_term = [&](const SeqTerm& s) { return k_base(s).term(); };
  for (const SeqTerm& t : args) {
    SeqTerm kt = kappa_gap(p.n, t);
    rec.pair();
    if (!validate(kt, carrier))
      rec.violation(height(t), print_seq(t), print_seq(kt),
                    "collapse image not in the carrier");
    if (!gap_leq_raw(base_term(t), kt, one) || seq_eq(base_term(t), kt))
      rec.violation(height(t), print_seq(base_term(t)), print_seq(kt),
                    "support value not strictly below its collapse");
    if (height(base_term(t)) >= height(kt))
      rec.violation(height(t), print_seq(base_term(t)), print_seq(kt),
                    "height does not descend through the support");
  }
  for (const SeqTerm& s : args)
    for (const SeqTerm& t : args) {
      rec.pair();
      bool lhs = gap_leq(kappa_gap(p.n, s), kappa_gap(p.n, t), cctx);
      bool rhs = gap_leq(s, t, actx) ||
                 gap_leq_raw(kappa_gap(p.n, s), base_term(t), one);
      if (lhs != rhs)
        rec.violation(height(s) + height(t), print_seq(s), print_seq(t),
                      lhs ? "derivative equivalence: kappa yes, split no"
                          : "derivative equivalence: split yes, kappa no");
    }
}

inline void initial_linear(Recorder& rec, const SuiteParams& p) {
  SeqZeroDilator d(p.n);
  BhCtx ctx{&d, 1};
  auto tgt = target_linear(p.n);
  SystemId carrier{Family::T0, p.n + 1, BaseOrderDescriptor::one()};
  auto cctx = lin_context(carrier);
  auto us = enum_seq(carrier, p.h);
  std::vector<BhTerm> pre;
  for (const SeqTerm& u : us) {
    BhTerm b = to_bh_linear(p.n, u, ctx);
    pre.push_back(b);
    rec.pair();
    if (!bh_validate(b, ctx) || !seq_eq(initial_embed(b, tgt), u))
      rec.violation(height(u), print_seq(u), bh_print(b, ctx),
                    "canonical preimage round trip fails");
  }
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < us.size(); ++j) {
      rec.pair();
      if (bh_cmp(pre[i], pre[j], ctx) != lin_cmp(us[i], us[j], cctx))
        rec.violation(height(us[i]) + height(us[j]), print_seq(us[i]),
                      print_seq(us[j]),
                      "embedding not order-preserving (linear target)");
    }
}

inline void initial_ot(Recorder& rec, const SuiteParams& p) {
  DnDilator d(p.n);
  BhCtx ctx{&d, 0};
  auto tgt = target_ot(p.n);
  auto us = enum_ot(p.n + 1, p.h, true);
  std::vector<BhTerm> pre;
  for (const OtTerm& u : us) {
    BhTerm b = to_bh_ot(p.n, u, ctx);
    pre.push_back(b);
    rec.pair();
    if (!bh_validate(b, ctx) || !ot_eq(initial_embed(b, tgt), u))
      rec.violation(ot_height(u), print_ot(u), bh_print(b, ctx),
                    "canonical preimage round trip fails");
  }
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < us.size(); ++j) {
      rec.pair();
      if (bh_cmp(pre[i], pre[j], ctx) != ot_cmp_raw(us[i], us[j]))
        rec.violation(ot_height(us[i]) + ot_height(us[j]), print_ot(us[i]),
                      print_ot(us[j]),
                      "embedding not order-preserving (binary target)");
    }
}

inline void linearize_agree(Recorder& rec, const SuiteParams& p) {
  auto one = [](const BaseElem& a, const BaseElem& b) {
    return a.key() <= b.key();
  };
  for (int lvl = 1; lvl <= p.n; ++lvl) {
    DnDilator d(lvl - 1);
    BhCtx ctx{&d, 0};
    auto nu = nu_pair(lvl - 1);
    auto tgt = kruskal_target_pair(lvl - 1);
    auto ts = enum_ot(lvl, p.h, true);
    std::vector<SeqTerm> fs;
    for (const OtTerm& t : ts) {
      SeqTerm direct = f_lin(lvl, t);
      SeqTerm generic = nu_plus(to_bh_ot(lvl - 1, t, ctx), nu, tgt);
      fs.push_back(direct);
      rec.pair();
      if (!seq_eq(direct, generic))
        rec.violation(ot_height(t), print_ot(t), print_seq(generic),
                      "direct and generic linearizations disagree");
    }
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = 0; j < ts.size(); ++j) {
        rec.pair();
        if (gap_leq_raw(fs[i], fs[j], one) &&
            ot_cmp_raw(ts[i], ts[j]) == Cmp::GT)
          rec.violation(ot_height(ts[i]) + ot_height(ts[j]), print_ot(ts[i]),
                        print_ot(ts[j]), "linearization not order-reflecting");
      }
  }
}

inline void linearize_onto(Recorder& rec, const SuiteParams& p) {
  for (int lvl = 0; lvl <= p.n; ++lvl) {
    SystemId sys{Family::S0, lvl, BaseOrderDescriptor::one()};
    auto targets = enum_seq(sys, p.h);
    auto sources = enum_ot(lvl, p.h, true);
    std::vector<SeqTerm> images;
    for (const OtTerm& t : sources) images.push_back(f_lin(lvl, t));
    for (const SeqTerm& u : targets) {
      rec.pair();
      bool hit = false;
      for (const SeqTerm& v : images)
        if (seq_eq(u, v)) { hit = true; break; }
      if (!hit)
        rec.violation(height(u), print_seq(u), "",
                      "no linearization preimage at level " +
                          std::to_string(lvl));
    }
  }
}

inline void linearize_identity(Recorder& rec, const SuiteParams& p) {
  for (int lvl = 1; lvl <= p.n; ++lvl) {
    SeqZeroDilator d(lvl - 1);
    BhCtx ctx{&d, 1};
    auto nu = nu_identity_seq();
    auto tgt = kruskal_target_seq(lvl - 1);
    SystemId sys{Family::T0, lvl, BaseOrderDescriptor::one()};
    for (const SeqTerm& t : enum_seq(sys, p.h)) {
      rec.pair();
      SeqTerm img = nu_plus(to_bh_linear(lvl - 1, t, ctx), nu, tgt);
      if (!seq_eq(img, t))
        rec.violation(height(t), print_seq(t), print_seq(img),
                      "lifted identity is not the identity at level " +
                          std::to_string(lvl));
    }
  }
}

inline void tree_witness(Recorder& rec, const SuiteParams& p) {
  auto po = [](std::uint64_t a, std::uint64_t b) { return a <= b; };
  auto lc = [](std::uint64_t a, std::uint64_t b) { return cmp_values(a, b); };
  BinTree witness = bt_node(bt_node(bt_leaf(0), bt_leaf(1)), bt_leaf(2));
  rec.pair();
  if (!btree_in_TW(witness, po))
    rec.violation(0, "((0,1),2)", "", "witness not in the tree closure");
  rec.pair();
  if (btree_in_thetaD(witness, lc))
    rec.violation(0, "((0,1),2)", "", "witness wrongly in the collapsed carrier");
  // the witness must be missing from the range of the lift
  ChainPairDilator d;
  BhCtx ctx{&d, 3};
  auto nu = nu_identity_pairpos();
  auto tgt = kruskal_target_btree();
  std::vector<BinTree> images;
  for (const BhTerm& s : enum_bh(ctx, std::max(p.h, 3), 2))
    images.push_back(nu_plus(s, nu, tgt));
  bool found = false;
  for (const BinTree& t : images) {
    rec.pair();
    if (bt_eq(t, witness)) found = true;
  }
  if (found)
    rec.violation(0, "((0,1),2)", "", "witness wrongly in the lift's range");
  // cross-check: the range at bounded height is exactly the collapsed carrier
  for (const BinTree& t : enum_btree(3, 2)) {
    rec.pair();
    bool member = btree_in_thetaD(t, lc);
    bool hit = false;
    for (const BinTree& u : images)
      if (bt_eq(t, u)) { hit = true; break; }
    if (member != hit)
      rec.violation(bt_height(t), member ? "member without image" : "image outside carrier", "", "lift range mismatch");
  }
}

inline void flatness(Recorder& rec, const SuiteParams& p) {
  Rng rng(p.seed);
  auto one = [](const BaseElem& a, const BaseElem& b) {
    return a.key() <= b.key();
  };
  (void)one;
  for (std::size_t it = 0; it < p.count; ++it) {
    std::size_t asize = 1 + rng.below(6), bsize = asize + rng.below(7 - asize);
    auto P = detail::random_poset(rng, asize);
    auto Q = detail::random_poset(rng, bsize);
    auto f = detail::random_quasi_embedding(rng, P, Q);
    if (!f) continue;
    std::vector<long> back(bsize, -1);
    for (std::size_t i = 0; i < asize; ++i) back[(*f)[i]] = static_cast<long>(i);
    // unary-system instance: element over Q with support inside the range
    std::vector<int> idx = detail::random_index_seq(rng, p.n, p.h);
    while (!idx.empty() && idx.front() != 0) idx.erase(idx.begin());
    std::uint64_t leaf = (*f)[rng.below(asize)];
    SeqTerm s = seq_base(leaf);
    for (auto iter = idx.rbegin(); iter != idx.rend(); ++iter)
      s = seq_theta(*iter, s);
    rec.pair();
    SeqTerm pre = s_rename(
        [&](const BaseElem& x) {
          return BaseElem{static_cast<std::uint64_t>(back[x.key()])};
        },
        s);
    SeqTerm again = s_rename(
        [&](const BaseElem& x) { return BaseElem{(*f)[x.key()]}; }, pre);
    if (!seq_eq(again, s))
      rec.violation(height(s), print_seq(s), print_seq(pre),
                    "support condition fails for the unary instance");
    // pair instance: bottom or (term over the one-point base, range point)
    rec.pair();
    if (rng.coin(0.2)) {
      // bottom always has the bottom preimage; nothing to check
    } else {
      std::vector<int> idx2 = detail::random_index_seq(rng, p.n, p.h);
      while (!idx2.empty() && idx2.front() != 0) idx2.erase(idx2.begin());
      SeqTerm s2 = from_sequence(idx2);
      std::size_t xpre = rng.below(asize);
      WnElem w = WnElem::pair(s2, BaseElem{(*f)[xpre]});
      WnElem wpre = WnElem::pair(s2, BaseElem{static_cast<std::uint64_t>(xpre)});
      if (!(seq_eq(wpre.s, w.s) && (*f)[wpre.x.key()] == w.x.key()))
        rec.violation(height(s2), print_seq(s2), "",
                      "support condition fails for the pair instance");
    }
  }
}

inline void collapse_axioms(Recorder& rec, const SuiteParams& p) {
  Rng rng(p.seed);
  std::vector<Cnf> alphas{cnf_zero(), cnf_nat(1),
                          cnf_omega_pow(cnf_nat(1))};  // 0, 1, w
  for (const Cnf& alpha : alphas) {
    Cnf bound = cnf_omega_tower(2, alpha);
    Cnf beta_bound = cnf_add(cnf_nat(1), alpha);
    auto sample_arg = [&]() {
      if (rng.coin(0.1)) return CollapseArg::bot();
      Cnf beta = detail::sample_cnf_below(rng, beta_bound);
      Cnf gamma = rng.coin(0.15) ? cnf_zero() : detail::sample_cnf_below(rng, bound);
      return CollapseArg::pair(std::move(beta), std::move(gamma));
    };
    auto show = [&](const CollapseArg& a) {
      return a.bottom ? std::string("bot")
                      : "(" + cnf_to_string(a.beta) + ";" +
                            cnf_to_string(a.gamma) + ")";
    };
    for (std::size_t it = 0; it < p.count; ++it) {
      CollapseArg a = sample_arg(), b = sample_arg();
      Cnf va = collapse_alpha(alpha, a), vb = collapse_alpha(alpha, b);
      rec.pair();
      if (cnf_cmp(va, bound) != Cmp::LT)
        rec.violation(0, show(a), cnf_to_string(va), "value out of range");
      if (!a.bottom && cnf_cmp(a.gamma, va) != Cmp::LT)
        rec.violation(0, show(a), cnf_to_string(va),
                      "support value not below its collapse");
      if (collapse_arg_cmp(a, b) == Cmp::LT &&
          (a.bottom || cnf_cmp(a.gamma, vb) == Cmp::LT) &&
          cnf_cmp(va, vb) != Cmp::LT)
        rec.violation(0, show(a), show(b), "collapsing inequality fails");
      // exact inverse round trips witness injectivity and exhaustion
      CollapseArg back = collapse_alpha_inv(alpha, va);
      if (back.bottom != a.bottom ||
          (!a.bottom && (!cnf_eq(back.beta, a.beta) || !cnf_eq(back.gamma, a.gamma))))
        rec.violation(0, show(a), show(back), "inverse round trip fails");
      Cnf v = detail::sample_cnf_below(rng, bound);
      rec.pair();
      if (!cnf_eq(collapse_alpha(alpha, collapse_alpha_inv(alpha, v)), v))
        rec.violation(0, cnf_to_string(v), "", "exhaustion round trip fails");
    }
    rec.pair();
    if (!cnf_is_zero(collapse_alpha(alpha, CollapseArg::bot())))
      rec.violation(0, "bot", "", "bottom does not collapse to the least value");
  }
}

inline void rank_monotone(Recorder& rec, const SuiteParams& p) {
  // the level-1 systems are copies of the naturals via height
  {
    auto elems = enum_ot(1, std::min(p.h, 8), true);
    for (const OtTerm& t : elems) {
      rec.pair();
      if (!cnf_eq(rank_ot(1, t), cnf_nat(static_cast<unsigned long>(ot_height(t)))))
        rec.violation(ot_height(t), print_ot(t), "", "level-1 rank is not the height");
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        rec.pair();
        if (ot_cmp_raw(elems[i], elems[j]) !=
            cmp_values(ot_height(elems[i]), ot_height(elems[j])))
          rec.violation(0, print_ot(elems[i]), print_ot(elems[j]),
                        "level-1 binary order is not the height order");
      }
    SystemId sys{Family::T0, 1, BaseOrderDescriptor::one()};
    auto ctx = lin_context(sys);
    auto seqs = enum_seq(sys, std::min(p.h, 8));
    for (std::size_t i = 0; i < seqs.size(); ++i)
      for (std::size_t j = 0; j < seqs.size(); ++j) {
        rec.pair();
        if (lin_cmp(seqs[i], seqs[j], ctx) !=
            cmp_values(height(seqs[i]), height(seqs[j])))
          rec.violation(0, print_seq(seqs[i]), print_seq(seqs[j]),
                        "level-1 unary order is not the height order");
      }
  }
  Rng rng(p.seed);
  for (std::size_t it = 0; it < p.count; ++it) {
    OtTerm a = detail::random_ot_term(rng, 2, p.h, true);
    OtTerm b = detail::random_ot_term(rng, 2, p.h, true);
    rec.pair();
    if (cnf_cmp(rank_ot(2, a), rank_ot(2, b)) != ot_cmp_raw(a, b))
      rec.violation(ot_height(a) + ot_height(b), print_ot(a), print_ot(b),
                    "rank not strictly monotone");
  }
}

inline void enum_counts(Recorder& rec, const SuiteParams& p) {
  for (int n = 1; n <= p.n; ++n)
    for (int xs = 1; xs <= std::max(p.x, 1); ++xs)
      for (int h = 0; h <= p.h; ++h)
        for (bool zero : {false, true}) {
          rec.pair();
          SystemId sys{zero ? Family::S0 : Family::S, n,
                       xs == 1 ? BaseOrderDescriptor::one()
                               : BaseOrderDescriptor::chain(
                                     static_cast<std::size_t>(xs))};
          auto direct = enum_seq(sys, h).size();
          auto formula = count_seq_formula(n, static_cast<std::size_t>(xs), h, zero);
          if (static_cast<long long>(direct) != formula)
            rec.violation(h, "unary n=" + std::to_string(n) +
                                 " x=" + std::to_string(xs) +
                                 " h=" + std::to_string(h),
                          std::to_string(direct) + " vs " + std::to_string(formula),
                          "enumeration count mismatch");
        }
  for (int n = 1; n <= std::min(p.n, 2); ++n)
    for (int h = 0; h <= std::min(p.h, 3); ++h)
      for (bool zero : {false, true}) {
        rec.pair();
        auto direct = enum_ot(n, h, zero).size();
        auto formula = count_ot_filter(n, h, zero);
        if (static_cast<long long>(direct) != formula)
          rec.violation(h, "binary n=" + std::to_string(n) +
                               " h=" + std::to_string(h),
                        std::to_string(direct) + " vs " + std::to_string(formula),
                        "enumeration count mismatch");
      }
}

inline void grammar_roundtrip(Recorder& rec, const SuiteParams& p) {
  Rng rng(p.seed);
  for (std::size_t it = 0; it < p.count; ++it) {
    rec.pair();
    if (rng.coin(0.4)) {  // binary terms
      OtTerm t = detail::random_ot_term(rng, p.n, p.h, false);
      OtTerm back = parse_ot(print_ot(t));
      if (!ot_eq(t, back))
        rec.violation(ot_height(t), print_ot(t), print_ot(back),
                      "binary round trip fails");
      continue;
    }
    // unary, possibly with a chain leaf or a nested inner-term leaf
    std::vector<int> idx = detail::random_index_seq(rng, p.n, p.h);
    SeqTerm leafed;
    if (rng.coin(0.2)) {
      std::vector<int> in = detail::random_index_seq(rng, p.n, p.h);
      leafed = seq_base(BaseElem{from_sequence(in)});
    } else {
      leafed = seq_base(rng.below(3));
    }
    SeqTerm t = leafed;
    for (auto iter = idx.rbegin(); iter != idx.rend(); ++iter)
      t = seq_theta(*iter, t);
    SeqTerm back = parse_seq(print_seq(t));
    if (!seq_eq(t, back))
      rec.violation(height(t), print_seq(t), print_seq(back),
                    "unary round trip fails");
  }
}

inline void dot_roundtrip(Recorder& rec, const SuiteParams& p) {
  SystemId sys{Family::S, p.n, BaseOrderDescriptor::one()};
  auto ctx = gap_context(sys);
  auto elems = enum_seq(sys, p.h);
  std::size_t n = elems.size();
  std::vector<std::string> labels;
  for (const SeqTerm& s : elems) labels.push_back(print_seq(s));
  auto leq = [&](std::size_t i, std::size_t j) {
    return gap_leq_raw(elems[i], elems[j], ctx.base_po);
  };
  std::string dot = dot_hasse(labels, leq);
  auto edges = parse_dot_edges(dot);
  // transitive-reflexive closure of the parsed covers
  std::vector<std::vector<bool>> closed(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) closed[i][i] = true;
  for (auto [a, b] : edges) closed[a][b] = true;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (closed[i][m] && closed[m][j]) closed[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rec.pair();
      if (closed[i][j] != leq(i, j))
        rec.violation(height(elems[i]) + height(elems[j]), labels[i],
                      labels[j], "diagram closure disagrees with the order");
    }
}

}  // namespace suites

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

using SuiteFn = std::function<void(detail::Recorder&, const SuiteParams&)>;

inline const std::map<std::string, SuiteFn>& suite_registry() {
  static const std::map<std::string, SuiteFn> reg = {
      {"linear-total", suites::linear_total},
      {"ot-total", suites::ot_total},
      {"bh-total", suites::bh_total},
      {"gap-po", suites::gap_po},
      {"gap-oracle", suites::gap_oracle},
      {"sigma-iso", suites::sigma_iso},
      {"fixpoint-linear", suites::fixpoint_linear},
      {"fixpoint-ot", suites::fixpoint_ot},
      {"kruskal-pair", suites::kruskal_pair},
      {"kruskal-gap", suites::kruskal_gap},
      {"initial-linear", suites::initial_linear},
      {"initial-ot", suites::initial_ot},
      {"linearize-agree", suites::linearize_agree},
      {"linearize-onto", suites::linearize_onto},
      {"linearize-identity", suites::linearize_identity},
      {"tree-witness", suites::tree_witness},
      {"flatness", suites::flatness},
      {"collapse-axioms", suites::collapse_axioms},
      {"rank-monotone", suites::rank_monotone},
      {"enum-counts", suites::enum_counts},
      {"grammar-roundtrip", suites::grammar_roundtrip},
      {"dot-roundtrip", suites::dot_roundtrip},
  };
  return reg;
}

inline SuiteReport run_suite(const std::string& name, const SuiteParams& p) {
  auto it = suite_registry().find(name);
  if (it == suite_registry().end())
    throw std::invalid_argument("unknown suite: " + name);
  SuiteReport rep;
  rep.suite = name;
  rep.params = p;
  rep.seed = p.seed;
  detail::Recorder rec(rep);
  auto t0 = std::chrono::steady_clock::now();
  it->second(rec, p);
  auto t1 = std::chrono::steady_clock::now();
  rep.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

}  // namespace ordcal

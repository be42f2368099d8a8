#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "ordcal/ot.hpp"
#include "ordcal/seq_term.hpp"

namespace ordcal {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(pos) + ": " + msg),
        pos(pos) {}
  std::size_t pos;
};

using ParsedTerm = std::variant<SeqTerm, OtTerm>;

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedTerm term() {
    skip();
    if (at_end()) throw ParseError(i_, "unexpected end of input");
    char c = text_[i_];
    if (c == '[' || c == '<') return seq_list(c == '[' ? ']' : '>');
    if (c == 'b') return base_leaf();
    if (c == 't') return theta_term();
    if (c == '{') return inner_leaf();
    if (c == 'z') { ++i_; return OtTerm(ot_zero()); }
    if (c == '(') return binary_term();
    throw ParseError(i_, std::string("unexpected character '") + c + "'");
  }

  void expect_end() {
    skip();
    if (!at_end()) throw ParseError(i_, "trailing input");
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }
  char peek() {
    skip();
    if (at_end()) throw ParseError(i_, "unexpected end of input");
    return text_[i_];
  }
  void eat(char c) {
    if (peek() != c)
      throw ParseError(i_, std::string("expected '") + c + "'");
    ++i_;
  }
  unsigned long number() {
    skip();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
      throw ParseError(i_, "expected a number");
    unsigned long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[i_] - '0');
      ++i_;
    }
    return v;
  }

  SeqTerm seq_from(const ParsedTerm& p, std::size_t at) {
    if (!std::holds_alternative<SeqTerm>(p))
      throw ParseError(at, "expected a unary term");
    return std::get<SeqTerm>(p);
  }
  OtTerm ot_from(const ParsedTerm& p, std::size_t at) {
    if (!std::holds_alternative<OtTerm>(p))
      throw ParseError(at, "expected a binary term");
    return std::get<OtTerm>(p);
  }

  ParsedTerm seq_list(char close) {
    std::size_t start = i_;
    ++i_;  // opening bracket
    std::vector<int> idx;
    if (peek() != close) {
      idx.push_back(static_cast<int>(number()));
      while (peek() == ',') {
        ++i_;
        idx.push_back(static_cast<int>(number()));
      }
    }
    eat(close);
    try {
      return from_sequence(idx);
    } catch (const TermConstraintError& e) {
      throw ParseError(start, std::string("ill-formed index sequence: ") + e.what());
    }
  }

  ParsedTerm base_leaf() {
    ++i_;  // 'b'
    return seq_base(static_cast<std::uint64_t>(number()));
  }

  ParsedTerm inner_leaf() {
    std::size_t start = i_;
    ++i_;  // '{'
    SeqTerm inner = seq_from(term(), start);
    eat('}');
    return seq_base(BaseElem{inner});
  }

  ParsedTerm theta_term() {
    std::size_t start = i_;
    ++i_;  // 't'
    if (at_end() || text_[i_] != 'h') throw ParseError(start, "expected 'th'");
    ++i_;
    eat('(');
    int idx = static_cast<int>(number());
    eat(',');
    SeqTerm sub = seq_from(term(), i_);
    eat(')');
    try {
      return seq_theta(idx, std::move(sub));
    } catch (const TermConstraintError& e) {
      throw ParseError(start, std::string("ill-formed term: ") + e.what());
    }
  }

  ParsedTerm binary_term() {
    std::size_t start = i_;
    ++i_;  // '('
    if (peek() != 't') throw ParseError(i_, "expected 't'");
    ++i_;
    int idx = static_cast<int>(number());
    OtTerm s = ot_from(term(), i_);
    OtTerm t = ot_from(term(), i_);
    eat(')');
    try {
      return ot_th(idx, std::move(s), std::move(t));
    } catch (const TermConstraintError& e) {
      throw ParseError(start, std::string("ill-formed term: ") + e.what());
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline ParsedTerm parse_any(std::string_view text) {
  detail::Parser p(text);
  ParsedTerm t = p.term();
  p.expect_end();
  return t;
}

inline SeqTerm parse_seq(std::string_view text) {
  ParsedTerm t = parse_any(text);
  if (!std::holds_alternative<SeqTerm>(t))
    throw ParseError(0, "expected a unary term");
  return std::get<SeqTerm>(t);
}

inline OtTerm parse_ot(std::string_view text) {
  ParsedTerm t = parse_any(text);
  if (!std::holds_alternative<OtTerm>(t))
    throw ParseError(0, "expected a binary term");
  return std::get<OtTerm>(t);
}

// ---------------------------------------------------------------------------
// Printing (canonical forms; parse . print = identity)
// ---------------------------------------------------------------------------

std::string print_seq(const SeqTerm& s);

inline std::string print_base(const BaseElem& x) {
  if (x.is_key()) return "b " + std::to_string(x.key());
  return "{" + print_seq(x.term()) + "}";
}

inline std::string print_seq(const SeqTerm& s) {
  const BaseElem& leaf = k_base(s);
  if (leaf.is_key() && leaf.key() == 0) {
    std::string out = "[";
    const SeqNode* p = s.get();
    bool first = true;
    while (p->index >= 0) {
      if (!first) out += ",";
      out += std::to_string(p->index);
      first = false;
      p = p->sub.get();
    }
    return out + "]";
  }
  if (is_leaf(s)) return print_base(s->leaf);
  return "th(" + std::to_string(s->index) + "," + print_seq(s->sub) + ")";
}

inline std::string print_ot(const OtTerm& a) {
  if (ot_is_zero(a)) return "z";
  return "(t " + std::to_string(a->index) + " " + print_ot(a->s) + " " +
         print_ot(a->t) + ")";
}

}  // namespace ordcal

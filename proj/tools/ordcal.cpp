// Command-line front end: compare terms, enumerate systems, apply the named
// maps, run the property suites, and query the gap-embedding oracle.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ordcal/suites.hpp"

namespace {

using namespace ordcal;

BaseOrderDescriptor base_from_spec(const std::string& spec) {
  if (spec == "one") return BaseOrderDescriptor::one();
  if (spec == "empty") return BaseOrderDescriptor::empty();
  if (spec.rfind("chain:", 0) == 0)
    return BaseOrderDescriptor::chain(std::stoul(spec.substr(6)));
  throw CLI::ValidationError("--x", "expected one, empty, or chain:k");
}

std::vector<int> parse_sequence_arg(const std::string& text) {
  std::string body = text;
  if (!body.empty() && (body.front() == '<' || body.front() == '[')) {
    if (body.size() < 2) throw ParseError(0, "unterminated sequence");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && (body[pos] == ',' || body[pos] == ' ')) ++pos;
    if (pos >= body.size()) break;
    std::size_t used = 0;
    out.push_back(std::stoi(body.substr(pos), &used));
    pos += used;
  }
  return out;
}

int cmd_cmp(const std::string& sys, int n, const std::string& xspec,
            const std::string& lhs, const std::string& rhs) {
  if (sys == "OT") {
    OtTerm a = parse_ot(lhs), b = parse_ot(rhs);
    if (!ot_validate(a, n) || !ot_validate(b, n))
      throw TermConstraintError("term does not belong to the given system");
    std::cout << cmp_name(ot_cmp(a, b, n)) << "\n";
    return 0;
  }
  if (sys == "BH") {
    // terms of the collapsed linear system at level n+1; comparison goes
    // through their canonical generic preimages
    SeqZeroDilator d(n);
    BhCtx ctx{&d, 1};
    SystemId carrier{Family::T0, n + 1, BaseOrderDescriptor::one()};
    SeqTerm a = parse_seq(lhs), b = parse_seq(rhs);
    if (!validate(a, carrier) || !validate(b, carrier))
      throw TermConstraintError("term does not belong to the given system");
    std::cout << cmp_name(bh_cmp(to_bh_linear(n, a, ctx),
                                 to_bh_linear(n, b, ctx), ctx))
              << "\n";
    return 0;
  }
  Family fam = sys == "T" ? Family::T
               : sys == "T0" ? Family::T0
               : sys == "S" ? Family::S
                            : Family::S0;
  SystemId id{fam, n, base_from_spec(xspec)};
  SeqTerm a = parse_seq(lhs), b = parse_seq(rhs);
  if (linear_family(fam)) {
    std::cout << cmp_name(lin_cmp(a, b, lin_context(id))) << "\n";
  } else {
    auto ctx = gap_context(id);
    bool le = gap_leq(a, b, ctx), ge = gap_leq(b, a, ctx);
    std::cout << (le && ge ? "EQ" : le ? "LEQ" : ge ? "GEQ" : "INCOMPARABLE")
              << "\n";
  }
  return 0;
}

int cmd_enum(const std::string& sys, int n, const std::string& xspec, int h,
             const std::string& format) {
  std::vector<std::string> labels;
  std::function<bool(std::size_t, std::size_t)> leq;
  if (sys == "OT") {
    auto elems = enum_ot(n, h, false);
    for (const OtTerm& t : elems) labels.push_back(print_ot(t));
    leq = [elems](std::size_t i, std::size_t j) {
      return ot_cmp_raw(elems[i], elems[j]) != Cmp::GT;
    };
  } else if (sys == "BH") {
    SystemId id{Family::T0, n + 1, BaseOrderDescriptor::one()};
    auto ctx = lin_context(id);
    auto elems = enum_seq(id, h);
    for (const SeqTerm& t : elems) labels.push_back(print_seq(t));
    leq = [elems, ctx](std::size_t i, std::size_t j) {
      return lin_cmp(elems[i], elems[j], ctx) != Cmp::GT;
    };
  } else {
    Family fam = sys == "T" ? Family::T
                 : sys == "T0" ? Family::T0
                 : sys == "S" ? Family::S
                              : Family::S0;
    SystemId id{fam, n, base_from_spec(xspec)};
    auto elems = enum_seq(id, h);
    for (const SeqTerm& t : elems) labels.push_back(print_seq(t));
    if (linear_family(fam)) {
      auto ctx = lin_context(id);
      leq = [elems, ctx](std::size_t i, std::size_t j) {
        return lin_cmp(elems[i], elems[j], ctx) != Cmp::GT;
      };
    } else {
      auto ctx = gap_context(id);
      leq = [elems, ctx](std::size_t i, std::size_t j) {
        return gap_leq(elems[i], elems[j], ctx);
      };
    }
  }
  if (format == "dot")
    std::cout << dot_hasse(labels, leq);
  else
    std::cout << jsonl_terms(labels);
  return 0;
}

int cmd_map(const std::string& name, int n,
            const std::vector<std::string>& terms) {
  auto need = [&](std::size_t k) {
    if (terms.size() != k)
      throw CLI::ValidationError("map", "expected " + std::to_string(k) +
                                            " term argument(s)");
  };
  if (name == "sigma") {
    need(1);
    std::cout << print_seq(sigma_lin(n, parse_seq(terms[0]))) << "\n";
  } else if (name == "theta") {
    need(1);
    std::cout << print_seq(theta_lin(n, parse_seq(terms[0]))) << "\n";
  } else if (name == "kappa") {
    need(1);
    std::cout << print_seq(kappa_gap(n, parse_seq(terms[0]))) << "\n";
  } else if (name == "pi") {
    need(2);
    std::cout << print_seq(pi_n(n, parse_seq(terms[0]), parse_seq(terms[1])))
              << "\n";
  } else if (name == "plus") {
    need(1);
    std::cout << print_ot(ot_plus(parse_ot(terms[0]))) << "\n";
  } else if (name == "flin") {
    need(1);
    OtTerm t = parse_ot(terms[0]);
    if (!ot_validate(t, n, true))
      throw TermConstraintError("term does not belong to the given system");
    std::cout << print_seq(f_lin(n, t)) << "\n";
  } else if (name == "nu") {
    need(1);
    SeqTerm t = parse_seq(terms[0]);
    if (n == 0) {
      std::cout << print_seq(t) << "\n";
    } else {
      SeqZeroDilator d(n - 1);
      BhCtx ctx{&d, 1};
      std::cout << print_seq(nu_plus(to_bh_linear(n - 1, t, ctx),
                                     nu_identity_seq(),
                                     kruskal_target_seq(n - 1)))
                << "\n";
    }
  } else if (name == "rank") {
    need(1);
    OtTerm t = parse_ot(terms[0]);
    if (!ot_validate(t, n, true))
      throw TermConstraintError("term does not belong to the given system");
    std::cout << cnf_to_string(rank_ot(n, t)) << "\n";
  } else {
    throw CLI::ValidationError("--name", "unknown map: " + name);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"term systems for collapsing-based well orders"};
  app.require_subcommand(1);

  std::string sys = "T", xspec = "one", format = "jsonl", map_name, suite;
  int n = 1, height = 3;
  std::string lhs, rhs;
  std::vector<std::string> map_terms;
  SuiteParams params;
  bool have_seed = false;

  auto add_sys = [&](CLI::App* c) {
    c->add_option("--sys", sys, "term system family")
        ->check(CLI::IsMember({"T", "T0", "S", "S0", "OT", "BH"}))
        ->required();
    c->add_option("--n", n, "index bound")->required();
    c->add_option("--x", xspec, "base order: one, empty, or chain:k");
  };

  CLI::App* ccmp = app.add_subcommand("cmp", "compare two terms");
  add_sys(ccmp);
  ccmp->add_option("lhs", lhs)->required();
  ccmp->add_option("rhs", rhs)->required();

  CLI::App* cenum = app.add_subcommand("enum", "enumerate terms by height");
  add_sys(cenum);
  cenum->add_option("--height", height, "height bound")->required();
  cenum->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"jsonl", "dot"}));

  CLI::App* cmap = app.add_subcommand("map", "apply one of the named maps");
  cmap->add_option("--name", map_name, "map to apply")
      ->check(CLI::IsMember(
          {"sigma", "theta", "kappa", "pi", "plus", "flin", "nu", "rank"}))
      ->required();
  cmap->add_option("--n", n, "index bound")->required();
  cmap->add_option("terms", map_terms, "term argument(s)")->required();

  CLI::App* ccheck = app.add_subcommand("check", "run a property suite");
  ccheck->set_help_flag("--help", "print help");
  ccheck->add_option("suite", suite, "suite name")->required();
  ccheck->add_option("--seed", params.seed, "random seed")
      ->each([&](const std::string&) { have_seed = true; });
  ccheck->add_option("--n", params.n, "index bound");
  ccheck->add_option("--h", params.h, "height bound");
  ccheck->add_option("--x", params.x, "largest base size");
  ccheck->add_option("--len", params.len, "sequence length bound");
  ccheck->add_option("--count", params.count, "sample count");

  std::string seq_l, seq_r;
  CLI::App* coracle =
      app.add_subcommand("oracle-gap", "gap embedding between index sequences");
  coracle->add_option("lhs", seq_l)->required();
  coracle->add_option("rhs", seq_r)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ccmp->parsed()) return cmd_cmp(sys, n, xspec, lhs, rhs);
    if (cenum->parsed()) return cmd_enum(sys, n, xspec, height, format);
    if (cmap->parsed()) return cmd_map(map_name, n, map_terms);
    if (ccheck->parsed()) {
      (void)have_seed;
      SuiteReport rep = run_suite(suite, params);
      std::cout << rep.to_json() << "\n";
      return rep.pass() ? 0 : 1;
    }
    if (coracle->parsed()) {
      bool ok =
          gap_embed_oracle(parse_sequence_arg(seq_l), parse_sequence_arg(seq_r));
      std::cout << (ok ? "true" : "false") << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const TermConstraintError& e) {
    std::cerr << "invalid term: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

/* Copyright 2026 The mullsem Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mull/errors.hpp"
#include "mull/godelt.hpp"
#include "mull/interp.hpp"
#include "mull/showcase.hpp"

using namespace mull;

namespace {

enum Exit { kOk = 0, kParse = 1, kCheck = 2, kBudget = 3 };

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Tokens of Nat are printed as numerals.
std::string show(Token t, bool numerals) {
  if (auto n = nat_value(t); n && numerals) return std::to_string(*n);
  return t.str();
}

std::string show_clique(const FinSpace& e, std::uint64_t mask, bool numerals) {
  std::string out = "{";
  bool first = true;
  for (Token t : mask_tokens(e, mask)) {
    out += first ? "" : ",";
    out += show(t, numerals);
    first = false;
  }
  return out + "}";
}

std::string show_family(const FinSpace& e, const CliqueSet& s, bool numerals) {
  if (s.empty()) return "∅";
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + show_clique(e, s[i], numerals);
  return out + "}";
}

void print_tokens(std::ostream& os, const std::vector<Token>& ts) {
  for (Token t : ts) os << t.str() << "\n";
}

struct Options {
  std::string file;
  std::string out;
  std::size_t budget = 64;
  std::size_t nu_depth = 0;
  std::size_t fuel = kDefaultFuel;
  std::string mode = "all";
  std::size_t depth = 0;
  std::string binder;
  std::size_t steps = 1;
  std::string demo;
};

InterpOptions interp_options(const Options& o) {
  InterpOptions io;
  io.nu_depth = o.nu_depth;
  return io;
}

int cmd_check(const Options& o) {
  Proof p = parse_proof(read_file(o.file));
  std::cout << print_sequent(check(p)) << "\n";
  return kOk;
}

int cmd_interp(const Options& o) {
  Proof p = parse_proof(read_file(o.file));
  check(p);
  std::vector<Token> ts = interpret(p, interp_options(o)).enumerate(o.budget);
  if (o.out.empty()) {
    print_tokens(std::cout, ts);
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.out);
    print_tokens(f, ts);
  }
  return kOk;
}

int cmd_eval_nat(const Options& o) {
  Proof p = parse_proof(read_file(o.file));
  check(p);
  std::cout << eval_nat_ex(p, o.budget, interp_options(o)).value << "\n";
  return kOk;
}

int cmd_eval_t(const Options& o) {
  TTerm s = parse_term(read_file(o.file));
  TType ty = typecheck({}, s);
  const bool nat = type_eq(ty, t_nat());
  if (!nat) {
    if (o.mode != "op") throw TypeError("mode " + o.mode + " needs a closed term of type nat");
    std::cout << print_term(eval(s, o.fuel).value) << "\n";
    return kOk;
  }
  std::vector<std::pair<std::string, std::size_t>> got;
  if (o.mode == "op" || o.mode == "all") got.emplace_back("op", eval_nat_term(s, o.fuel));
  if (o.mode == "den" || o.mode == "all") got.emplace_back("den", eval_nat_denote(s, o.budget));
  if (o.mode == "translated" || o.mode == "all")
    got.emplace_back("translated", eval_nat(translate({}, s), o.budget));
  for (const auto& [m, v] : got) std::cout << v << "\n";
  for (const auto& [m, v] : got)
    if (v != got.front().second) {
      std::cerr << "modes disagree: " << got.front().first << " gives " << got.front().second
                << ", " << m << " gives " << v << "\n";
      return kCheck;
    }
  return kOk;
}

BinderPolicy policy_of(const std::string& binder) {
  BinderPolicy pol;
  if (binder == "mu") pol.nu_as_gfp = false;
  if (binder == "nu") pol.mu_as_lfp = false;
  return pol;
}

int cmd_totality(const Options& o) {
  Formula a = parse_formula(read_file(o.file));
  if (!is_closed(a)) throw CheckError("formula is not closed");
  BinderPolicy pol = policy_of(o.binder);
  const bool num = a == nat_formula() || a == negate(nat_formula());
  FinTotality t = formula_totality(a, o.depth, pol);
  std::cout << "formula " << print(a) << "\n";
  std::cout << "depth " << o.depth << "\n";
  std::cout << "web " << t.space.size() << "\n";
  for (Token w : t.space.web) std::cout << "  " << show(w, num) << "\n";
  const FKind k = a.kind();
  if (k == FKind::Mu || k == FKind::Nu) {
    LatticeResult r = binder_chain(a, o.depth, pol);
    std::cout << "chain " << r.chain.size() << " stages, stable at " << r.stabilized_at << "\n";
    for (std::size_t n = 0; n < r.chain.size(); ++n)
      std::cout << "  T" << n << " = " << show_family(r.fixed.space, r.chain[n], num) << "\n";
  }
  std::cout << "candidate " << t.members.size() << (t.closed ? " cliques, closed" : " cliques")
            << "\n";
  for (std::uint64_t m : t.members) std::cout << "  " << show_clique(t.space, m, num) << "\n";
  return kOk;
}

int cmd_reduce(const Options& o) {
  Proof p = parse_proof(read_file(o.file));
  Sequent before = check(p);
  Proof q = p;
  std::vector<std::string> log;
  for (std::size_t i = 0; i < o.steps; ++i) {
    RedexKind kind;
    auto r = reduce(q, &kind);
    if (!r) break;
    q = *r;
    log.push_back(to_string(kind));
  }
  if (!same_sequent(check(q), before)) throw CheckError("reduct changed the conclusion");
  std::vector<Token> lhs = interpret(p, interp_options(o)).enumerate(o.budget);
  std::vector<Token> rhs = interpret(q, interp_options(o)).enumerate(o.budget);
  if (o.out.empty()) {
    std::cout << print_proof(q) << "\n";
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.out);
    f << print_proof(q) << "\n";
  }
  std::cout << "steps " << log.size() << "\n";
  for (std::size_t i = 0; i < log.size(); ++i) std::cout << "  " << i + 1 << " " << log[i] << "\n";
  std::cout << "budget " << o.budget << ": " << lhs.size() << " tokens before, " << rhs.size()
            << " after, " << (lhs == rhs ? "invariant" : "DIFFERENT") << "\n";
  return lhs == rhs ? kOk : kCheck;
}

int demo_seely(std::size_t depth) {
  std::vector<Token> xs{Token::unit()}, ys{Token::unit()};
  for (std::size_t d = 0; d <= depth; ++d) {
    SeelyFailure f = seely_failure(xs, ys, d);
    std::cout << "depth " << d << ": !(X&Y) " << f.web_with << " trees, !X*!Y " << f.web_tensor
              << " pairs\n";
    std::cout << "  seely functional " << f.seely_functional << ", injective "
              << f.seely_injective << ", image " << f.seely_image << "\n";
    std::cout << "  seelyinv injective " << f.seelyinv_injective << ", image "
              << f.seelyinv_image << "\n";
    if (f.seelyinv_witness)
      std::cout << "  not in the image of seelyinv: " << tree_str(*f.seelyinv_witness) << "\n";
    if (f.seely_witness)
      std::cout << "  not in the image of seely: (" << tree_str(f.seely_witness->left()) << ", "
                << tree_str(f.seely_witness->right()) << ")\n";
  }
  return kOk;
}

int demo_lazy_iszero() {
  Clique z = interpret(is_zero_proof());
  std::cout << "is_zero\n";
  print_tokens(std::cout, z.enumerate(16));
  std::cout << "expected " << (z.enumerate(16) == is_zero_clique().enumerate(16) ? "yes" : "no")
            << "\n";
  auto row = [&](const std::string& name, const Clique& x) {
    std::cout << name << " = {";
    auto xt = x.enumerate(64);
    for (std::size_t i = 0; i < xt.size(); ++i) std::cout << (i ? "," : "") << xt[i].str();
    std::cout << "} -> {";
    auto r = apply(is_zero_clique(), x).enumerate(16);
    for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << r[i].str();
    std::cout << "}\n";
  };
  row("x(0)", lazy_int(0));
  row("x(1)", lazy_int(1));
  row("x(2)", lazy_int(2));
  row("partial", partial_int());
  return kOk;
}

int demo_streams(std::size_t depth) {
  for (std::size_t d = 0; d <= depth; ++d) {
    StreamFacts f = stream_facts(d);
    std::cout << "depth " << d << ": " << f.tokens << " tokens (expected " << f.expected_tokens
              << "), prefix coherence " << f.prefix_coherence << ", longest chain " << f.max_chain
              << ", " << (f.ok() ? "ok" : "FAILED") << "\n";
  }
  FinSpace e = stream_space(std::min<std::size_t>(depth, 2));
  std::cout << "words:";
  for (Token t : e.web) std::cout << " '" << stream_word(t) << "'";
  std::cout << "\n";
  for (std::size_t d = 0; d <= depth; ++d) {
    FinTotality t = formula_totality(empty_stream_formula(), d + 1);
    std::cout << "empty stream depth " << d << ": web " << t.space.size() << ", totality "
              << show_family(t.space, t.members, false) << "\n";
  }
  return kOk;
}

int demo_theta(std::size_t depth) {
  LatticeResult r = binder_chain(nat_formula(), depth);
  std::string line;
  for (std::size_t n = 0; n < r.chain.size(); ++n)
    line += (n ? " ⊂ " : "") + show_family(r.fixed.space, r.chain[n], true);
  std::cout << line << "\n";
  std::cout << "stable at " << r.stabilized_at << "\n";
  std::cout << "closed " << r.fixed.closed << "\n";
  CliqueSet orth = orthogonal(r.fixed.members, r.fixed.space);
  std::cout << "orthogonal " << show_family(r.fixed.space, orth, true) << "\n";
  return kOk;
}

int cmd_demo(const Options& o) {
  auto depth = [&](std::size_t dflt) { return o.depth ? o.depth : dflt; };
  if (o.demo == "seely-failure") return demo_seely(depth(3));
  if (o.demo == "lazy-iszero") return demo_lazy_iszero();
  if (o.demo == "streams") return demo_streams(depth(4));
  return demo_theta(depth(4));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence space semantics of linear logic with fixed points"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> run;

  auto file = [&](CLI::App* sc, const char* what) {
    sc->add_option("file", o.file, what)->required();
  };
  auto interp_flags = [&](CLI::App* sc) {
    sc->add_option("--budget", o.budget, "Token size bound")->capture_default_str();
    sc->add_option("--nu-depth", o.nu_depth, "Stages of a nu chain, 0 until stable")
        ->capture_default_str();
  };

  auto* c = app.add_subcommand("check", "Check a proof and print its conclusion");
  file(c, "Proof file");
  c->callback([&] { run = cmd_check; });

  auto* i = app.add_subcommand("interp", "Enumerate the interpretation of a proof");
  file(i, "Proof file");
  interp_flags(i);
  i->add_option("--out", o.out, "Write the sorted tokens to this file");
  i->callback([&] { run = cmd_interp; });

  auto* en = app.add_subcommand("eval-nat", "Read off the numeral of a proof of |- Nat");
  file(en, "Proof file");
  interp_flags(en);
  en->callback([&] { run = cmd_eval_nat; });

  auto* et = app.add_subcommand("eval-t", "Evaluate a closed System T term");
  file(et, "Term file");
  interp_flags(et);
  et->add_option("--mode", o.mode, "op, den, translated or all")
      ->check(CLI::IsMember({"op", "den", "translated", "all"}))
      ->capture_default_str();
  et->add_option("--fuel", o.fuel, "Reduction steps")->capture_default_str();
  et->callback([&] { run = cmd_eval_t; });

  auto* t = app.add_subcommand("totality", "Totality candidate of a closed formula");
  file(t, "Formula file");
  t->add_option("--depth", o.depth, "Unfoldings of every binder")->required();
  t->add_option("--binder", o.binder, "Read every binder as mu (lfp) or nu (gfp)")
      ->check(CLI::IsMember({"mu", "nu"}));
  t->callback([&] { run = cmd_totality; });

  auto* r = app.add_subcommand("reduce", "Reduce mu/nu cuts and compare interpretations");
  file(r, "Proof file");
  interp_flags(r);
  r->add_option("--steps", o.steps, "Maximal number of reductions")->capture_default_str();
  r->add_option("--out", o.out, "Write the reduct to this file");
  r->callback([&] { run = cmd_reduce; });

  auto* d = app.add_subcommand("demo", "Worked examples");
  d->add_option("name", o.demo, "seely-failure, lazy-iszero, streams or theta-chain")
      ->required()
      ->check(CLI::IsMember({"seely-failure", "lazy-iszero", "streams", "theta-chain"}));
  d->add_option("--depth", o.depth, "Truncation depth");
  d->callback([&] { run = cmd_demo; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    return run(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const SizeGuardError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheck;
  }
}

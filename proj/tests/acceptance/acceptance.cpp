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
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "mull/errors.hpp"
#include "mull/godelt.hpp"
#include "mull/interp.hpp"
#include "mull/showcase.hpp"
#include "mull/vcs.hpp"

using namespace mull;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Token U() { return Token::unit(); }
Token In(int s, Token t) { return Token::in(s, t); }

bool same_space(const Space& a, const Space& b, std::size_t bound) {
  const auto& wa = a->enumerate(bound);
  if (wa != b->enumerate(bound)) return false;
  for (Token x : wa)
    for (Token y : wa)
      if (a->coh(x, y) != b->coh(x, y)) return false;
  return true;
}

CliqueSet single(const FinSpace& w, std::initializer_list<std::size_t> ns) {
  std::vector<Token> ts;
  for (std::size_t n : ns) ts.push_back(nat_token(n));
  return {token_mask(w, ts)};
}

Outcome numerals() {
  Outcome o;
  for (std::size_t n = 0; n <= 20; ++n) {
    std::size_t v = eval_nat(numeral_proof(n));
    o.expect(v == n, "numeral " + std::to_string(n) + " evaluates to " + std::to_string(v));
  }
  o.detail = o.ok ? "n = 0..20" : o.detail;
  return o;
}

Outcome theta_chain() {
  Outcome o;
  for (std::size_t k = 1; k <= 6; ++k) {
    const std::string at = "k=" + std::to_string(k) + ": ";
    LatticeResult r = binder_chain(nat_formula(), k);
    const FinSpace& w = r.fixed.space;
    o.expect(w.size() == k, at + "web size " + std::to_string(w.size()));
    o.expect(r.stabilized_at == k, at + "stable at " + std::to_string(r.stabilized_at));
    o.expect(r.chain.size() == k + 1, at + "chain length");
    for (std::size_t n = 0; n < r.chain.size() && n <= k; ++n) {
      CliqueSet want;
      for (std::size_t i = 0; i < n; ++i) want.push_back(single(w, {i})[0]);
      normalize(want);
      o.expect(r.chain[n] == want, at + "stage " + std::to_string(n) + " is " +
                                       clique_set_str(w, r.chain[n]));
    }
    o.expect(biorthogonal(r.fixed.members, w).members == r.fixed.members, at + "not closed");
    o.expect(orthogonal(r.fixed.members, w) == CliqueSet{w.full()}, at + "orthogonal");
  }
  o.detail = o.ok ? "k = 1..6" : o.detail;
  return o;
}

Outcome streams() {
  Outcome o;
  for (std::size_t d = 0; d <= 4; ++d) {
    FinSpace e = stream_space(d);
    const std::string at = "d=" + std::to_string(d) + ": ";
    o.expect(e.size() == (std::size_t{1} << (d + 1)) - 1, at + "web size " + std::to_string(e.size()));
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < e.size(); ++j) {
        std::string x = stream_word(e.web[i]), y = stream_word(e.web[j]);
        bool prefix = x.starts_with(y) || y.starts_with(x);
        o.expect(bool(e.coh[i] >> j & 1) == prefix, at + "coherence of " + x + "," + y);
      }
  }
  Space top = top_space();
  o.expect(same_space(space_of(empty_stream_formula()), top, 40), "empty stream web is not empty");
  for (std::size_t d = 0; d <= 8; ++d) {
    FinTotality t = formula_totality(empty_stream_formula(), d);
    o.expect(t.space.size() == 0, "empty stream web at depth " + std::to_string(d));
    o.expect(t.members == CliqueSet{0}, "empty stream totality at depth " + std::to_string(d));
    o.expect(t.members == top_totality().members, "empty stream totality differs from top");
  }
  o.detail = o.ok ? "d <= 4, empty stream d <= 8" : o.detail;
  return o;
}

Outcome seely() {
  Outcome o;
  std::vector<Token> xs{U()}, ys{U()};
  for (std::size_t d = 0; d <= 3; ++d) {
    const std::string at = "d=" + std::to_string(d) + ": ";
    SeelyFailure f = seely_failure(xs, ys, d);
    o.expect(f.seely_functional && f.seely_injective, at + "seely not injective");
    o.expect(f.seelyinv_injective, at + "seelyinv not injective");
    o.expect(f.seelyinv_witness.has_value(), at + "no witness");
    if (!f.seelyinv_witness) continue;
    Token w = *f.seelyinv_witness;
    auto v = tree_view(w);
    o.expect(v && v->kind == TreeKind::D, at + "witness is not a dereliction leaf");
    for (const auto& [g, p] : seelyinv_mu(xs, ys, d)) o.expect(g != w, at + "witness in the image");
    o.expect(f.seelyinv_image < f.web_with, at + "seelyinv onto");
    if (!o.ok) break;
    if (d == 3) o.detail = "d <= 3, witness " + tree_str(w);
  }
  return o;
}

Outcome lazy_is_zero() {
  Outcome o;
  std::vector<Token> got = interpret(is_zero_proof()).enumerate(64);
  std::vector<Token> want{Token::pair(In(1, U()), In(1, U())),
                          Token::pair(In(2, Token::empty_set()), In(2, U()))};
  canonicalize(want);
  o.expect(got == want, "interpretation is " + tokens_str(got, " "));
  Rel rel;
  for (Token t : got) rel.emplace_back(t.left(), t.right());
  Clique f = rel_clique(space_of(lazy_nat_formula()), space_of(parse_formula("(plus one one)")), rel);
  auto run = [&](const char* name, const Clique& x, Token expect) {
    auto r = apply(f, x).enumerate(16);
    o.expect(r == std::vector<Token>{expect}, std::string(name) + " gives " + tokens_str(r, " "));
  };
  run("x(0)", lazy_int(0), In(1, U()));
  run("x(1)", lazy_int(1), In(2, U()));
  run("partial", partial_int(), In(2, U()));
  o.detail = o.ok ? "exact at budget 64" : o.detail;
  return o;
}

Outcome cut_invariance() {
  Outcome o;
  std::size_t mu_nu = 0, fold = 0;
  for (const auto& r : redex_corpus()) {
    RedexKind kind;
    auto q = reduce(r.proof, &kind);
    o.expect(q.has_value(), r.name + " has no redex");
    if (!q) continue;
    o.expect(kind == r.kind, r.name + " reduced by " + to_string(kind));
    (kind == RedexKind::MuNu ? mu_nu : fold)++;
    o.expect(same_sequent(check(*q), check(r.proof)), r.name + " changed its conclusion");
    Clique before = interpret(r.proof), after = interpret(*q);
    for (std::size_t b : {8, 16, 24, 32})
      o.expect(before.enumerate(b) == after.enumerate(b),
               r.name + " differs at budget " + std::to_string(b));
  }
  o.expect(mu_nu + fold >= 5 && mu_nu > 0 && fold > 0, "corpus too small");
  if (o.ok)
    o.detail = std::to_string(mu_nu) + " mu/nu and " + std::to_string(fold) +
               " mu/nufold redexes, budgets 8..32";
  return o;
}

Outcome system_t() {
  Outcome o;
  auto check_one = [&](const char* name, std::vector<std::size_t> args, std::size_t want) {
    std::vector<TTerm> ts;
    for (auto a : args) ts.push_back(tt::num(a));
    TTerm s = tt::apps(corpus_term(name), ts);
    std::string at = std::string(name);
    for (auto a : args) at += " " + std::to_string(a);
    std::size_t op = eval_nat_term(s);
    o.expect(op == want, at + ": operational " + std::to_string(op));
    o.expect(eval_nat_denote(s) == op, at + ": denotation differs");
    o.expect(eval_nat(translate({}, s)) == op, at + ": translated proof differs");
  };
  for (std::size_t a = 0; a <= 5; ++a)
    for (std::size_t b = 0; b <= 5; ++b) {
      check_one("add", {a, b}, a + b);
      check_one("mult", {a, b}, a * b);
    }
  Proof pred = translate({}, corpus_term("pred"));
  for (std::size_t n = 0; n <= 5; ++n) {
    check_one("pred", {n}, n ? n - 1 : 0);
    o.expect(eval_nat(apply_numeral(pred, n)) == (n ? n - 1 : 0),
             "pred cut with numeral " + std::to_string(n));
  }
  o.detail = o.ok ? "add, mult, pred on 0..5" : o.detail;
  return o;
}

std::vector<Formula> formulas() {
  std::vector<Formula> out;
  for (const char* t : {"one", "bot", "top", "zero", "nat", "lnat", "(tensor nat (bang nat))",
                        "(lolli nat nat)", "(nu z (with one (plus (var z) (var z))))",
                        "(nu z (plus (var z) (var z)))",
                        "(mu l (plus one (tensor nat (var l))))",
                        "(nu s (with bot (par (var s) (var s))))",
                        "(mu t (plus one (tensor (var t) (var t))))", "(whynot (with one bot))",
                        "(mu x (nu y (plus one (with (var x) (var y)))))",
                        "(par (bang one) (whynot bot))", "(mu z (plus one (bang (var z))))"})
    out.push_back(parse_formula(t));
  return out;
}

FinSpace graph(std::size_t n, std::uint64_t edges) {
  std::vector<Token> web;
  for (std::size_t i = 0; i < n; ++i) web.push_back(nat_token(i));
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if (edges >> k & 1) adj[i][j] = adj[j][i] = true;
  return fin_space(web, [&](Token a, Token b) {
    std::size_t i = *nat_value(a), j = *nat_value(b);
    return i == j || adj[i][j];
  });
}

bool closure_laws(const FinSpace& e, CliqueSet t) {
  normalize(t);
  CliqueSet o = orthogonal(t, e);
  CliqueSet bo = orthogonal(o, fin_dual(e));
  return subset(t, bo) && orthogonal(bo, e) == o;
}

Outcome properties(std::string& counts) {
  Outcome o;
  std::size_t spaces = 0, families = 0;
  for (const Formula& f : formulas()) {
    Space e = space_of(f);
    const auto& web = e->enumerate(6);
    for (Token a : web) {
      o.expect(e->coh(a, a), print(f) + ": coherence not reflexive");
      for (Token b : web) o.expect(e->coh(a, b) == e->coh(b, a), print(f) + ": not symmetric");
    }
    o.expect(same_space(dual(dual(e)), e, 6), print(f) + ": dual not an involution");
    o.expect(same_space(space_of(negate(f)), dual(e), 6), print(f) + ": De Morgan");
    if (f.is_binder())
      o.expect(same_space(space_of(unfold(f)), e, 6), print(f) + ": fixed-point web equation");
  }
  for (const char* body : {"(plus one (var z))", "(tensor (var z) (bang (var z)))",
                           "(mu w (plus (var z) (tensor (var w) (var z))))", "(with bot (var z))",
                           "(nu w (with (var z) (plus one (var w))))"}) {
    Formula fb = parse_formula(body);
    for (const Formula& g : formulas()) {
      Space lhs = denote(subst(fb, g, "z"), {}).obj();
      Space rhs = vcs_compose(denote(fb, {"z"}), {denote(g, {})}).obj();
      o.expect(same_space(lhs, rhs, 5), std::string(body) + "[" + print(g) + "]: substitution");
    }
  }
  // Every graph and clique family up to four tokens.
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::uint64_t g = 0; g < (std::uint64_t{1} << (n * (n - 1) / 2)); ++g) {
      FinSpace e = graph(n, g);
      CliqueSet all = all_cliques(e);
      ++spaces;
      for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << all.size()); ++sel) {
        CliqueSet t;
        for (std::size_t i = 0; i < all.size(); ++i)
          if (sel >> i & 1) t.push_back(all[i]);
        ++families;
        o.expect(closure_laws(e, t), "closure laws on a " + std::to_string(n) + "-token space");
      }
    }
  // Every graph on five and six tokens with every family of at most two cliques.
  for (std::size_t n = 5; n <= 6; ++n)
    for (std::uint64_t g = 0; g < (std::uint64_t{1} << (n * (n - 1) / 2)); ++g) {
      FinSpace e = graph(n, g);
      CliqueSet all = all_cliques(e);
      ++spaces;
      o.expect(closure_laws(e, {}), "closure of the empty family");
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j) {
          ++families;
          o.expect(closure_laws(e, {all[i], all[j]}), "closure laws on a pair");
        }
      if (!o.ok) break;
    }
  // Seeded random spaces and families from seven to twelve tokens.
  std::mt19937_64 rng(2024);
  for (std::size_t n = 7; n <= 12; ++n)
    for (int round = 0; round < 40; ++round) {
      FinSpace e = graph(n, rng());
      CliqueSet all = all_cliques(e);
      ++spaces;
      for (int k = 0; k < 4; ++k) {
        CliqueSet t;
        std::uint64_t sel = rng() & rng();
        for (std::size_t i = 0; i < all.size(); ++i)
          if (sel >> (i % 64) & 1) t.push_back(all[i]);
        ++families;
        o.expect(closure_laws(e, t), "closure laws on a random " + std::to_string(n) + "-token space");
      }
    }
  counts = std::to_string(spaces) + " spaces, " + std::to_string(families) + " families";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  std::string counts;
  std::vector<Criterion> all{
      {1, "numerals", 1.0, numerals},
      {2, "theta chain", 1.0, theta_chain},
      {3, "streams", 1.0, streams},
      {4, "seely failure", 5.0, seely},
      {5, "lazy is-zero", 1.0, lazy_is_zero},
      {6, "cut-reduction invariance", 10.0, cut_invariance},
      {7, "system T triangle", 30.0, system_t},
      {8, "property suites", 60.0, [&] {
         Outcome o = properties(counts);
         if (o.ok) o.detail = counts;
         return o;
       }},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.limit) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit)) + " s limit)";
    }
    failed += !o.ok;
    std::printf("%s %d %-26s %7.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}

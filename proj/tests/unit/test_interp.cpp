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
#include "doctest.h"
#include "mull/errors.hpp"
#include "mull/interp.hpp"
#include "mull/vcs.hpp"

using namespace mull;

namespace {

Formula F(const char* s) { return parse_formula(s); }

Token N(std::size_t n) { return nat_token(n); }

Token P(Token a, Token b) { return Token::pair(a, b); }

std::vector<Token> upto(std::vector<Token> ts, std::size_t b) { return restrict_size(ts, b); }

void all_cliques(const Proof& p, std::size_t budget) {
  Clique c = interpret(p);
  auto ts = c.enumerate(budget);
  CHECK(is_clique(*c.space(), ts));
  for (Token t : ts) CHECK(c.space()->contains(t));
}

Proof iter_succ() { return nat_iter(zero_proof(), succ_proof(pr::ax(nat_formula()), 1)); }

}  // namespace

TEST_SUITE("interp") {
  TEST_CASE("basic rules") {
    CHECK(interpret(zero_proof()).enumerate(20) == std::vector<Token>{N(0)});
    CHECK(interpret(numeral_proof(3)).enumerate(20) == std::vector<Token>{N(3)});
    CHECK(interpret(pr::top({})).enumerate(20).empty());
    auto ax = interpret(pr::ax(nat_formula())).enumerate(9);
    std::vector<Token> diag;
    for (std::size_t n = 0; n + n + 5 <= 9; ++n) diag.push_back(P(N(n), N(n)));
    canonicalize(diag);
    CHECK(ax == diag);
    CHECK(interpret(pr::ax(nat_formula())).member(P(N(4), N(4)), 16) == Membership::Yes);
    CHECK(interpret(pr::one()).enumerate(4) == std::vector<Token>{Token::unit()});
  }

  TEST_CASE("nat storage coalgebra") {
    for (const Proof& p : {pprom_nat(), pprom(nat_formula())}) {
      std::vector<Token> want;
      for (std::size_t n = 0; n < 20; ++n) {
        want.push_back(P(N(n), Token::empty_set()));
        want.push_back(P(N(n), singleton(N(n))));
      }
      canonicalize(want);
      CHECK(interpret(p).enumerate(12) == upto(want, 12));
    }
  }

  TEST_CASE("iteration satisfies the recursion equations") {
    // g(0) = h, g(n+1) = k(g(n)) with h = 0 and k = succ: the identity.
    auto it = interpret(iter_succ()).enumerate(14);
    std::vector<Token> want;
    for (std::size_t n = 0; n < 6; ++n) want.push_back(P(N(n), N(n)));
    canonicalize(want);
    CHECK(it == upto(want, 14));
    // h = 3, k = succ . succ: g(n) = 2n + 3.
    Proof k = succ_proof(succ_proof(pr::ax(nat_formula()), 1), 1);
    auto g = interpret(nat_iter(numeral_proof(3), k)).enumerate(24);
    for (Token t : g) CHECK(*nat_value(t.right()) == 2 * *nat_value(t.left()) + 3);
    CHECK(g.size() == 6);
  }

  TEST_CASE("nu chains are monotone and stable") {
    Interpreter in;
    Proof it = iter_succ();
    // The nu node sits under the final permutation.
    Proof nu = it->premises[0];
    REQUIRE(nu->rule == Rule::Nu);
    auto stages = in.nu_chain(nu, 10);
    REQUIRE(stages.size() >= 2);
    CHECK(stages.front().empty());
    for (std::size_t n = 0; n + 1 < stages.size(); ++n) {
      for (const Row& r : stages[n])
        CHECK(std::find(stages[n + 1].begin(), stages[n + 1].end(), r) != stages[n + 1].end());
    }
    CHECK(stages.back() == stages[stages.size() - 2]);
    InterpOptions one;
    one.nu_depth = 1;
    CHECK(Interpreter(one).nu_chain(nu, 10).size() == 2);
  }

  TEST_CASE("lazy integers") {
    auto z = interpret(is_zero_proof()).enumerate(16);
    Token u = Token::unit();
    std::vector<Token> want{P(Token::in(1, u), Token::in(1, u)), P(Token::in(2, Token::empty_set()), Token::in(2, u))};
    canonicalize(want);
    CHECK(z == want);
    CHECK(interpret(lazy_zero_proof()).enumerate(8) == std::vector<Token>{Token::in(1, u)});
  }

  TEST_CASE("eval-nat") {
    for (std::size_t n = 0; n <= 20; ++n) CHECK(eval_nat(numeral_proof(n)) == n);
    CHECK(eval_nat(pr::cut(numeral_proof(4), 0, iter_succ(), 0)) == 4);
    CHECK_THROWS_AS(eval_nat(pr::ax(nat_formula())), CheckError);
    CHECK_THROWS_AS(eval_nat(numeral_proof(9), 4), BudgetError);
  }

  TEST_CASE("every element is coherent") {
    all_cliques(is_zero_proof(), 16);
    all_cliques(pprom_nat(), 12);
    all_cliques(iter_succ(), 14);
    all_cliques(pr::prom(pr::der(pr::ax(nat_formula()), 0), 0), 12);
    all_cliques(gen_contr(pr::tensor(pr::ax(nat_formula()), 1, pr::ax(nat_formula()), 1), 0, 1), 12);
  }

  TEST_CASE("functorial action agrees with the vcs morphism map") {
    Formula nat = nat_formula();
    Proof tau = succ_proof(pr::ax(nat), 1);  // n -> n+1
    Clique t = Clique::generated(lolli(nat_space(), nat_space()),
                                 [tau](std::size_t b) { return interpret(tau).enumerate(b); }, false);
    for (const char* s : {"(plus one (var z))", "(tensor (var z) (var z))", "(with (var z) bot)",
                          "(bang (var z))", "(mu y (plus one (tensor (var z) (var y))))"}) {
      CAPTURE(s);
      Formula f = F(s);
      Clique fp = interpret(functor_proof(f, "z", tau, 0, 1));
      Vcs v = denote(f, {"z"});
      std::vector<Clique> ms{t};
      Clique m = v.mor(ms);
      CHECK(fp.enumerate(14) == upto(m.enumerate(28), 14));
    }
  }

  TEST_CASE("reduction preserves the interpretation") {
    Proof it = iter_succ();
    for (std::size_t n = 0; n < 5; ++n) {
      Proof p = pr::cut(numeral_proof(n), 0, it, 0);
      auto r = reduce(p);
      REQUIRE(r);
      CHECK(interpret(p).enumerate(16) == interpret(*r).enumerate(16));
    }
  }
}

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
#include <random>

#include "doctest.h"
#include "mull/errors.hpp"
#include "mull/proof.hpp"

using namespace mull;

namespace {

Formula F(const char* s) { return parse_formula(s); }

Sequent seq(std::initializer_list<const char*> fs) {
  Sequent out;
  for (const char* f : fs) out.push_back(F(f));
  return out;
}

// Cut of a mu introduction against a nu rule, principal on both sides.
Proof mu_nu_redex(std::size_t n) {
  // |- Nat^, C  by iteration with C = Nat: zero and successor.
  Formula nat = nat_formula();
  Proof step = succ_proof(pr::ax(nat), 1);  // |- Nat^, Nat
  Proof it = nat_iter(zero_proof(), step);  // |- Nat^, Nat
  return pr::cut(numeral_proof(n), 0, it, 0);
}

}  // namespace

TEST_SUITE("proof") {
  TEST_CASE("basic rules compute their conclusions") {
    CHECK(same_sequent(check(zero_proof()), seq({"nat"})));
    CHECK(same_sequent(check(numeral_proof(5)), seq({"nat"})));
    CHECK(same_sequent(check(pr::ax(nat_formula())), {negate(nat_formula()), nat_formula()}));
    Proof t = pr::tensor(pr::ax(F("one")), 1, pr::ax(F("bot")), 1);
    CHECK(same_sequent(t->seq, seq({"bot", "one", "(tensor one bot)"})));
    Proof p = pr::par(t, 0, 1);
    CHECK(same_sequent(p->seq, seq({"(tensor one bot)", "(par bot one)"})));
    CHECK(same_sequent(pr::top(seq({"one", "nat"}))->seq, seq({"one", "nat", "top"})));
  }

  TEST_CASE("rule violations raise CheckError") {
    CHECK_THROWS_AS(pr::prom(pr::ax(F("one")), 1), CheckError);
    CHECK_THROWS_AS(pr::cut(pr::ax(F("one")), 1, pr::ax(F("bot")), 0), CheckError);
    CHECK_THROWS_AS(pr::contr(pr::ax(F("one")), 0, 1), CheckError);
    CHECK_THROWS_AS(pr::with(pr::one(), 0, pr::ax(F("one")), 1), CheckError);
    CHECK_THROWS_AS(pr::mu(pr::one(), 0, nat_formula()), CheckError);
    CHECK_THROWS_AS(pr::ax(F("(var x)")), CheckError);
    CHECK_THROWS_AS(pr::perm(pr::ax(F("one")), {0, 0}), CheckError);
    ProofNode bad = *zero_proof();
    bad.seq = seq({"one"});
    CHECK_THROWS_AS(check(make_raw(bad)), CheckError);
  }

  TEST_CASE("derived rules") {
    CHECK(same_sequent(check(is_zero_proof()), seq({"(lolli lnat (plus one one))"})));
    CHECK(same_sequent(check(pprom_nat()), {negate(nat_formula()), Formula::bang(nat_formula())}));
    CHECK(same_sequent(check(lazy_succ_proof(lazy_zero_proof(), 0)), seq({"lnat"})));
    for (const char* s : {"one", "zero", "nat", "(tensor nat (plus one nat))", "lnat", "(bang bot)",
                          "(mu x (plus one (tensor (var x) (var x))))", "(mu x (plus one (bang (var x))))"}) {
      Formula p = F(s);
      CAPTURE(s);
      CHECK(same_sequent(check(pprom(p)), {negate(p), Formula::bang(p)}));
    }
    CHECK_THROWS_AS(pprom(F("bot")), CheckError);
  }

  TEST_CASE("generalized structural rules") {
    Proof w = gen_weak(pr::one(), F("bot"));
    CHECK(same_sequent(check(w), seq({"one", "bot"})));
    Formula nn = negate(nat_formula());
    Proof c = gen_contr(pr::tensor(pr::ax(nat_formula()), 1, pr::ax(nat_formula()), 1), 0, 1);
    CHECK(same_sequent(check(c), {F("(tensor nat nat)"), nn}));
    Proof g = gen_prom(pr::ax(nat_formula()), {0}, 1);
    CHECK(same_sequent(check(g), {nn, Formula::bang(nat_formula())}));
  }

  TEST_CASE("functorial action") {
    Formula nat = nat_formula();
    Proof tau = pr::ax(nat);
    for (const char* s : {"(var z)", "(bang (var z))", "(whynot (var z))", "(tensor (var z) one)",
                          "(par (var z) (var z))", "(plus (var z) bot)", "(with one (var z))",
                          "(mu y (plus (var z) (var y)))", "(nu y (with (var z) (var y)))", "top"}) {
      Formula f = F(s);
      CAPTURE(s);
      Formula fn = subst(f, nat, "z");
      CHECK(same_sequent(check(functor_proof(f, "z", tau, 0, 1)), {negate(fn), fn}));
    }
    Proof ctx = pr::weak(pr::ax(nat), F("one"));  // |- Nat^, Nat, ?1
    Proof r = functor_proof(F("(tensor (var z) (var z))"), "z", ctx, 0, 1);
    CHECK(same_sequent(check(r), {F("(whynot one)"), negate(F("(tensor nat nat)")), F("(tensor nat nat)")}));
  }

  TEST_CASE("cut reduction preserves conclusions") {
    for (std::size_t n = 0; n < 4; ++n) {
      Proof p = mu_nu_redex(n);
      Sequent before = check(p);
      CHECK(count_redexes(p) >= 1);
      RedexKind k;
      auto r = reduce(p, &k);
      REQUIRE(r);
      CHECK(k == RedexKind::MuNu);
      CHECK(same_sequent(check(*r), before));
    }
    Proof mu1 = pr::mu(pr::one(), 0, F("(mu x one)"));
    Proof nu2 = pr::nufold(pr::bot(pr::ax(F("one"))), 2, F("(nu x bot)"));
    Proof c = pr::cut(mu1, 0, nu2, 2);
    RedexKind k;
    auto r = reduce(c, &k);
    REQUIRE(r);
    CHECK(k == RedexKind::MuNuFold);
    CHECK(same_sequent(check(*r), c->seq));
    Proof c2 = pr::cut(nu2, 2, mu1, 0);
    auto r2 = reduce(c2, &k);
    REQUIRE(r2);
    CHECK(same_sequent(check(*r2), c2->seq));
  }

  TEST_CASE("mu/nu reduction in both orientations with context") {
    Formula nat = nat_formula();
    Proof step = pr::weak(succ_proof(pr::ax(nat), 1), F("one"));  // |- Nat^, Nat, ?1
    step = pr::arrange(step, {F("(whynot one)"), negate(nat), nat});
    Proof base = pr::weak(zero_proof(), F("one"));
    base = pr::arrange(base, {F("(whynot one)"), nat});
    Proof it = nat_iter(base, step);  // |- ?1, Nat^, Nat
    Proof a = pr::cut(numeral_proof(2), 0, it, 1);
    Proof b = pr::cut(it, 1, numeral_proof(2), 0);
    for (const Proof& p : {a, b}) {
      auto r = reduce(p);
      REQUIRE(r);
      CHECK(same_sequent(check(*r), p->seq));
    }
  }

  TEST_CASE("proof files round trip") {
    const char* text =
        "(cut (numeral 2) (natiter (zero) (succ (ax nat) @1)))";
    Proof p = parse_proof(text);
    CHECK(same_sequent(check(p), seq({"nat"})));
    Proof q = parse_proof(print_proof(p));
    CHECK(print_proof(q) == print_proof(p));
    CHECK(same_sequent(parse_proof("(seq ((neg nat) nat) (ax nat))")->seq, {negate(nat_formula()), nat_formula()}));
    CHECK_THROWS_AS(parse_proof("(seq (nat) (ax nat))"), CheckError);
    CHECK_THROWS_AS(parse_proof("(perm (0 0) (ax one))"), CheckError);
    CHECK_THROWS_AS(parse_proof("(frob (ax one))"), ParseError);
    CHECK_THROWS_AS(parse_proof("(cut (ax one) @x (ax one))"), ParseError);
    CHECK(same_sequent(parse_proof("(perm (1 0) (ax one))")->seq, seq({"one", "bot"})));
    CHECK(same_sequent(check(parse_proof("(iszero)")), check(is_zero_proof())));
    CHECK(same_sequent(check(parse_proof("(pprom nat)")), check(pprom(nat_formula()))));
  }

  TEST_CASE("repeated reduction terminates on numerals") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 4; ++trial) {
      Proof p = mu_nu_redex(static_cast<std::size_t>(trial));
      Sequent s = check(p);
      int steps = 0;
      while (auto r = reduce(p)) {
        p = *r;
        CHECK(same_sequent(check(p), s));
        if (++steps > 12) break;
      }
      CHECK(steps > 0);
    }
  }
}

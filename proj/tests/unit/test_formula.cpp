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
#include "mull/formula.hpp"

using namespace mull;

namespace {

void same_space(const Space& a, const Space& b, std::size_t bound) {
  const auto& wa = a->enumerate(bound);
  const auto& wb = b->enumerate(bound);
  REQUIRE(wa == wb);
  for (Token x : wa)
    for (Token y : wa) CHECK(a->coh(x, y) == b->coh(x, y));
}

// Random formula over the given free variables; binders never capture
// a name listed in `free`.
Formula random_formula(std::mt19937& rng, int depth, std::vector<std::string> vars) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 4 : 12);
  int k = pick(rng);
  auto sub = [&](std::vector<std::string> v) { return random_formula(rng, depth - 1, v); };
  switch (k) {
    case 0:
      return Formula::one();
    case 1:
      return Formula::bot();
    case 2:
      return Formula::zero();
    case 3:
      return Formula::top();
    case 4:
      if (vars.empty()) return Formula::one();
      return Formula::var(vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)]);
    case 5:
      return Formula::tensor(sub(vars), sub(vars));
    case 6:
      return Formula::par(sub(vars), sub(vars));
    case 7:
      return Formula::plus(sub(vars), sub(vars));
    case 8:
      return Formula::with(sub(vars), sub(vars));
    case 9:
      return Formula::bang(sub(vars));
    case 10:
      return Formula::whynot(sub(vars));
    default: {
      std::string z = "b" + std::to_string(vars.size());
      auto v2 = vars;
      v2.push_back(z);
      Formula body = sub(v2);
      return k == 11 ? Formula::mu(z, body) : Formula::nu(z, body);
    }
  }
}

std::vector<Formula> formula_corpus() {
  const char* texts[] = {
      "one", "bot", "top", "zero", "nat", "lnat",
      "(mu z (plus one (var z)))",
      "(nu z (with one (plus (var z) (var z))))",
      "(nu z (plus (var z) (var z)))",
      "(tensor nat (bang nat))",
      "(lolli nat nat)",
      "(mu l (plus one (tensor nat (var l))))",
      "(nu s (with bot (par (var s) (var s))))",
      "(mu t (plus one (tensor (var t) (var t))))",
      "(whynot (with one bot))",
      "(bang (plus one one))",
      "(mu x (nu y (plus one (with (var x) (var y)))))",
      "(nu x (mu y (with one (plus (var y) (var x)))))",
      "(par (bang one) (whynot bot))",
      "(mu z (plus one (bang (var z))))",
  };
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse_formula(t));
  return out;
}

}  // namespace

TEST_SUITE("formula") {
  TEST_CASE("parsing and printing") {
    Formula f = parse_formula("(mu z (plus one (var z)))");
    CHECK(f.kind() == FKind::Mu);
    CHECK(f.name() == "z");
    CHECK(f.body().kind() == FKind::Plus);
    CHECK(f.body().rhs().kind() == FKind::Var);
    CHECK(print(f) == "(mu x0 (plus one (var x0)))");
    CHECK(f == nat_formula());
    for (const Formula& g : formula_corpus()) {
      CHECK(parse_formula(print(g)) == g);
      CHECK(print(parse_formula(print(g))) == print(g));
    }
    CHECK(print(parse_formula("(mu x0 (tensor (var x0) (var x1)))")) ==
          "(mu x0 (tensor (var x0) (var x1)))");
    CHECK(print(parse_formula("(mu a (tensor (var a) (var x0)))")) ==
          "(mu x0_ (tensor (var x0_) (var x0)))");
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_formula("(nu z (with one (with (var x) one)"), ParseError);
    CHECK_THROWS_AS(parse_formula("(tensor one)"), ParseError);
    CHECK_THROWS_AS(parse_formula("(frob one)"), ParseError);
    CHECK_THROWS_AS(parse_formula("(var (one))"), ParseError);
    try {
      parse_formula("(plus one\n  (tensor one oops))");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.pos() == 24);
    }
  }

  TEST_CASE("negation") {
    CHECK(negate(nat_formula()) == parse_formula("(nu z (with bot (var z)))"));
    CHECK(negate(Formula::var("z")) == Formula::var("z"));
    CHECK(negate(parse_formula("(lolli one bot)")) == parse_formula("(tensor one one)"));
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
      Formula f = random_formula(rng, 4, {"p", "q"});
      CHECK(negate(negate(f)) == f);
      CHECK(print(negate(negate(f))) == print(f));
    }
  }

  TEST_CASE("substitution") {
    Formula body = parse_formula("(plus one (var z))");
    CHECK(subst(body, nat_formula(), "z") == Formula::plus(Formula::one(), nat_formula()));
    Formula cap = subst(parse_formula("(mu z (var w))"), Formula::var("z"), "w");
    REQUIRE(cap.kind() == FKind::Mu);
    CHECK(cap.name() != "z");
    CHECK(cap.body() == Formula::var("z"));
    CHECK(free_vars(cap) == std::set<std::string>{"z"});
    CHECK(unfold(nat_formula()) == Formula::plus(Formula::one(), nat_formula()));
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
      Formula a = random_formula(rng, 4, {"z", "p"});
      Formula b = random_formula(rng, 3, {"p", "b1"});
      CHECK(negate(subst(a, b, "z")) == subst(negate(a), negate(b), "z"));
    }
  }

  TEST_CASE("alpha equivalence") {
    CHECK(parse_formula("(mu a (var a))") == parse_formula("(mu b (var b))"));
    CHECK(!(parse_formula("(mu a (var c))") == parse_formula("(mu b (var b))")));
    CHECK(!(parse_formula("(mu a (var a))") == parse_formula("(nu a (var a))")));
    CHECK(parse_formula("(mu a (mu b (tensor (var a) (var b))))") ==
          parse_formula("(mu b (mu a (tensor (var b) (var a))))"));
    CHECK(!(parse_formula("(mu a (mu b (tensor (var a) (var b))))") ==
            parse_formula("(mu a (mu b (tensor (var b) (var a))))")));
  }

  TEST_CASE("polarity") {
    CHECK(polarity(nat_formula()) == Polarity::Positive);
    CHECK(polarity(Formula::var("z")) == Polarity::Both);
    CHECK(polarity(parse_formula("(tensor zero bot)")) == Polarity::Neither);
    CHECK(polarity(negate(nat_formula())) == Polarity::Negative);
    CHECK(polarity(lazy_nat_formula()) == Polarity::Positive);
    CHECK(polarity(stream_formula()) == Polarity::Neither);
    CHECK(polarity(parse_formula("(bang (lolli nat nat))")) == Polarity::Positive);
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
      Formula f = random_formula(rng, 4, {"p"});
      Polarity p = polarity(f), q = polarity(negate(f));
      if (p == Polarity::Positive) CHECK(q == Polarity::Negative);
      if (p == Polarity::Both) CHECK(f.kind() == FKind::Var);
    }
  }

  TEST_CASE("denotation of the strict integers") {
    Space nat = space_of(nat_formula());
    const auto& web = nat->enumerate(10);
    REQUIRE(web.size() == 9);
    for (std::size_t i = 0; i < web.size(); ++i) {
      CHECK(nat_value(web[i]) == i);
      for (std::size_t j = 0; j < web.size(); ++j) CHECK(nat->coh(web[i], web[j]) == (i == j));
    }
    CHECK_THROWS_AS(denote(Formula::var("q"), {}), Error);
  }

  TEST_CASE("stream space has prefix coherence") {
    Vcs s = denote(stream_formula(), {});
    for (std::size_t d = 0; d <= 4; ++d) {
      Space st = fix_stage(s, {}, d + 1);
      const auto& web = st->enumerate(200);
      CHECK(web.size() == (std::size_t{2} << d) - 1);
      // Decode a token as its bit string; coherence is prefix comparability.
      auto bits = [](Token t) {
        std::string out;
        while (t.side() == 2) {
          Token b = t.body();
          out += b.side() == 1 ? '0' : '1';
          t = b.body();
        }
        return out;
      };
      for (Token a : web)
        for (Token b : web) {
          std::string x = bits(a), y = bits(b);
          bool prefix = x.compare(0, y.size(), y) == 0 || y.compare(0, x.size(), x) == 0;
          CHECK(st->coh(a, b) == prefix);
        }
    }
    CHECK(space_of(empty_stream_formula())->enumerate(30).empty());
  }

  TEST_CASE("De Morgan duality agrees with space duality") {
    for (const Formula& f : formula_corpus()) {
      Space a = space_of(negate(f));
      Space b = dual(space_of(f));
      same_space(a, b, 6);
      same_space(denote(negate(f), {}).obj(), vcs_dual(denote(f, {})).obj(), 6);
    }
  }

  TEST_CASE("substitution lemma on truncations") {
    std::vector<Formula> bodies;
    for (const char* t : {"(plus one (var z))", "(tensor (var z) (bang (var z)))",
                          "(mu w (plus (var z) (tensor (var w) (var z))))", "(with bot (var z))",
                          "(nu w (with (var z) (plus one (var w))))"})
      bodies.push_back(parse_formula(t));
    for (const Formula& f : bodies)
      for (const Formula& g : formula_corpus()) {
        Space lhs = denote(subst(f, g, "z"), {}).obj();
        Space rhs = vcs_compose(denote(f, {"z"}), {denote(g, {})}).obj();
        same_space(lhs, rhs, 5);
      }
  }
}

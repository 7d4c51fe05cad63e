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
#include <algorithm>
#include <set>

#include "doctest.h"
#include "mull/clique.hpp"
#include "mull/space.hpp"

using namespace mull;

namespace {

Token U() { return Token::unit(); }
Token N(std::size_t n) { return nat_token(n); }

// Nat carrier truncated to numerals 0..n-1, given as an explicit finite space.
Space nat_carrier(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> none;
  return graph_space(n, none);
}

std::vector<Space> small_spaces() {
  Space two_coh = graph_space(2, {{0, 1}});
  Space two_inc = graph_space(2, {});
  Space three = graph_space(3, {{0, 1}});
  return {one_space(),
          bot_space(),
          top_space(),
          two_coh,
          two_inc,
          three,
          tensor(two_coh, two_inc),
          par(two_coh, two_inc),
          plus(one_space(), two_coh),
          with(bot_space(), two_inc),
          lolli(two_inc, two_coh),
          bang(two_coh),
          whynot(two_inc),
          bang(with(bot_space(), bot_space())),
          truncate(nat_space(), 6)};
}

void same_space(const Space& a, const Space& b, std::size_t bound) {
  const auto& wa = a->enumerate(bound);
  const auto& wb = b->enumerate(bound);
  REQUIRE(wa == wb);
  for (Token x : wa)
    for (Token y : wa) CHECK(a->coh(x, y) == b->coh(x, y));
}

std::set<Token> as_set(const std::vector<Token>& v) { return {v.begin(), v.end()}; }

std::set<Token> upto(const std::vector<Token>& v, std::size_t b) {
  std::set<Token> out;
  for (Token t : v)
    if (t.size() <= b) out.insert(t);
  return out;
}

}  // namespace

TEST_SUITE("space") {
  TEST_CASE("one and bot share their single token") {
    CHECK(one_space()->enumerate(5) == std::vector<Token>{U()});
    CHECK(bot_space()->enumerate(5) == std::vector<Token>{U()});
    same_space(dual(one_space()), bot_space(), 5);
    CHECK(top_space()->enumerate(10).empty());
    CHECK(zero_space()->enumerate(10).empty());
  }

  TEST_CASE("dual of the Nat carrier makes every pair coherent") {
    Space d = dual(nat_space());
    for (std::size_t i = 0; i <= 5; ++i)
      for (std::size_t j = 0; j <= 5; ++j) {
        CHECK(d->coh(N(i), N(j)));
        CHECK(nat_space()->coh(N(i), N(j)) == (i == j));
      }
  }

  TEST_CASE("with and plus on units") {
    Space w = with(bot_space(), bot_space());
    Space p = plus(one_space(), one_space());
    std::vector<Token> web{Token::in(1, U()), Token::in(2, U())};
    CHECK(w->enumerate(4) == web);
    CHECK(p->enumerate(4) == web);
    CHECK(w->coh(web[0], web[1]));
    CHECK(!p->coh(web[0], web[1]));
  }

  TEST_CASE("tensor on the Nat carrier is componentwise") {
    Space t = tensor(nat_space(), nat_space());
    CHECK(!t->coh(Token::pair(N(0), N(1)), Token::pair(N(0), N(2))));
    CHECK(t->coh(Token::pair(N(0), N(1)), Token::pair(N(0), N(1))));
  }

  TEST_CASE("bang") {
    Space b = bang(nat_space());
    CHECK(b->contains(Token::empty_set()));
    for (Token x : b->enumerate(7)) CHECK(b->coh(Token::empty_set(), x));
    CHECK(!b->coh(singleton(N(0)), singleton(N(1))));
    CHECK(!b->contains(Token::set({N(0), N(1)})));
    Space bw = bang(with(bot_space(), bot_space()));
    auto web = bw->enumerate(8);
    CHECK(std::count(web.begin(), web.end(), Token::parse("{1:u,2:u}")) == 1);
    CHECK(web.size() == 4);
  }

  TEST_CASE("lolli coherence follows the implication clause") {
    Space l = lolli(nat_space(), nat_space());
    CHECK(l->coh(Token::pair(N(0), N(3)), Token::pair(N(1), N(5))));
    CHECK(!l->coh(Token::pair(N(1), N(3)), Token::pair(N(1), N(5))));
    CHECK(l->coh(Token::pair(N(0), N(3)), Token::pair(N(1), N(3))));
    Space c = lolli(graph_space(2, {{0, 1}}), graph_space(2, {{0, 1}}));
    CHECK(!c->coh(Token::pair(N(0), N(0)), Token::pair(N(1), N(0))));
    CHECK(c->coh(Token::pair(N(0), N(0)), Token::pair(N(1), N(1))));
    for (const Space& e : small_spaces()) {
      same_space(lolli(e, e), par(dual(e), e), 7);
      std::vector<Token> diag;
      for (Token a : e->enumerate(3)) diag.push_back(Token::pair(a, a));
      CHECK(is_clique(*lolli(e, e), diag));
    }
  }

  TEST_CASE("coherence is reflexive and symmetric on every constructed space") {
    for (const Space& e : small_spaces()) {
      const auto& web = e->enumerate(6);
      for (Token a : web) {
        CHECK(e->coh(a, a));
        for (Token b : web) CHECK(e->coh(a, b) == e->coh(b, a));
      }
    }
  }

  TEST_CASE("enumerate returns exactly the web members up to the bound") {
    for (const Space& e : small_spaces()) {
      const auto& web = e->enumerate(6);
      for (Token a : web) {
        CHECK(a.size() <= 6);
        CHECK(e->contains(a));
      }
      CHECK(std::is_sorted(web.begin(), web.end()));
      Space probe = bang(plus(one_space(), one_space()));
      for (Token a : probe->enumerate(6))
        if (e->contains(a)) CHECK(std::binary_search(web.begin(), web.end(), a));
    }
  }

  TEST_CASE("duality laws on truncations") {
    for (const Space& e : small_spaces()) {
      same_space(dual(dual(e)), e, 6);
      for (const Space& f : {one_space(), graph_space(2, {{0, 1}})}) {
        same_space(par(e, f), dual(tensor(dual(e), dual(f))), 6);
        same_space(with(e, f), dual(plus(dual(e), dual(f))), 6);
      }
    }
  }

  TEST_CASE("truncate and subcoh") {
    for (const Space& e : small_spaces()) {
      CHECK(subcoh(truncate(e, 2), truncate(e, 4), 8).has_value());
      CHECK(subcoh(truncate(e, 4), e, 4).has_value());
    }
    CHECK(subcoh(one_space(), bot_space(), 4).has_value());
    CHECK(!subcoh(graph_space(2, {{0, 1}}), graph_space(2, {}), 4).has_value());
    CHECK(!subcoh(nat_carrier(3), nat_carrier(2), 10).has_value());
    // Size-bounded truncation: numerals of size <= k are 0..k-2.
    for (std::size_t k = 2; k <= 8; ++k) CHECK(truncate(nat_space(), k)->enumerate(100).size() == k - 1);
    auto er = subcoh(nat_carrier(2), nat_carrier(4), 6);
    REQUIRE(er.has_value());
    CHECK(as_set(compose(er->emb, er->ret).enumerate(9)) == as_set(identity(nat_carrier(2)).enumerate(9)));
    auto back = as_set(compose(er->ret, er->emb).enumerate(9));
    for (Token t : back) CHECK(t.left() == t.right());
  }
}

TEST_SUITE("clique") {
  TEST_CASE("identity and composition") {
    Space nat = nat_space();
    std::vector<Token> succ;
    for (std::size_t n = 0; n < 8; ++n) succ.push_back(Token::pair(N(n), N(n + 1)));
    Clique s = Clique::of(lolli(nat, nat), succ);
    Clique ss = compose(s, s);
    CHECK(ss.member(Token::pair(N(0), N(2)), 20) == Membership::Yes);
    CHECK(upto(compose(identity(nat), s).enumerate(20), 18) == upto(s.enumerate(20), 18));
    CHECK(upto(compose(s, identity(nat)).enumerate(20), 18) == upto(s.enumerate(20), 18));
    CHECK(compose(Clique::empty(lolli(nat, nat)), s).enumerate(20).empty());
    Clique sss1 = compose(compose(s, s), s), sss2 = compose(s, compose(s, s));
    CHECK(as_set(sss1.enumerate(24)) == as_set(sss2.enumerate(24)));
  }

  TEST_CASE("membership discipline") {
    Clique id = identity(nat_space());
    CHECK(id.member(Token::pair(N(4), N(4)), 64) == Membership::Yes);
    CHECK(id.member(Token::pair(N(4), N(3)), 64) == Membership::No);
    CHECK(id.member(U(), 64) == Membership::No);
    Clique g = Clique::generated(lolli(nat_space(), nat_space()),
                                 [](std::size_t) { return std::vector<Token>{}; }, false);
    CHECK(g.member(Token::pair(N(1), N(1)), 8) == Membership::Unknown);
  }

  TEST_CASE("apply") {
    Space nat = nat_space();
    Clique u = Clique::of(nat, {N(3)});
    CHECK(apply(identity(nat), u).enumerate(20) == std::vector<Token>{N(3)});
    CHECK(apply(identity(nat), Clique::empty(nat)).enumerate(20).empty());
  }

  TEST_CASE("exponential structure maps") {
    Space e = graph_space(2, {{0, 1}});
    auto der = exp_structure(e, ExpMap::Der).enumerate(20);
    for (Token a : e->enumerate(10))
      CHECK(std::count(der.begin(), der.end(), Token::pair(singleton(a), a)) == 1);
    CHECK(exp_structure(e, ExpMap::Weak).enumerate(20) ==
          std::vector<Token>{Token::pair(Token::empty_set(), U())});
    auto digg = exp_structure(graph_space(1, {}), ExpMap::Digg).enumerate(12);
    CHECK(std::count(digg.begin(), digg.end(),
                     Token::pair(Token::empty_set(), singleton(Token::empty_set()))) == 1);
    for (const Space& s : {one_space(), graph_space(2, {{0, 1}}), graph_space(2, {})}) {
      for (Token t : exp_structure(s, ExpMap::Digg).enumerate(14)) {
        Token u = Token::empty_set();
        for (Token p : t.right().elems()) u = set_union(u, p);
        CHECK(u == t.left());
      }
    }
  }

  TEST_CASE("weakening and contraction agree with their diagram composites") {
    for (const Space& e : {one_space(), graph_space(2, {{0, 1}}), graph_space(2, {})}) {
      // weak = !(E -o T) followed by !T = 1.
      Clique to_top = Clique::empty(lolli(e, top_space()));
      Clique top_one = Clique::of(lolli(bang(top_space()), one_space()),
                                  {Token::pair(Token::empty_set(), U())});
      CHECK(as_set(compose(bang_mor(to_top), top_one).enumerate(12)) ==
            as_set(exp_structure(e, ExpMap::Weak).enumerate(12)));
      // contr = !(diagonal E -o E & E) followed by the inverse Seely map.
      std::vector<Token> diag;
      for (Token a : e->enumerate(10)) {
        diag.push_back(Token::pair(a, Token::in(1, a)));
        diag.push_back(Token::pair(a, Token::in(2, a)));
      }
      Clique d = Clique::of(lolli(e, with(e, e)), diag);
      auto [fwd, bwd] = seely_iso(e, e);
      auto composite = upto(compose(bang_mor(d), bwd).enumerate(32), 16);
      auto contr = exp_structure(e, ExpMap::Contr).enumerate(16);
      CHECK(composite == as_set(contr));
      CHECK(!contr.empty());
    }
  }

  TEST_CASE("Seely isomorphism") {
    Space e1 = graph_space(2, {{0, 1}}), e2 = graph_space(2, {});
    auto [fwd, bwd] = seely_iso(e1, e2);
    Token empty = Token::empty_set();
    auto f = fwd.enumerate(12);
    CHECK(std::count(f.begin(), f.end(), Token::pair(Token::pair(empty, empty), empty)) == 1);
    Token a = N(1);
    CHECK(fwd.member(Token::pair(Token::pair(singleton(a), empty), singleton(Token::in(1, a))), 20) ==
          Membership::Yes);
    const std::size_t b = 30;
    std::set<Token> id_src, id_tgt;
    for (Token x : tensor(bang(e1), bang(e2))->enumerate(b)) id_src.insert(Token::pair(x, x));
    for (Token x : fwd.enumerate(b)) id_tgt.insert(Token::pair(x.right(), x.right()));
    std::set<Token> fb = as_set(compose(fwd, bwd).enumerate(2 * b));
    std::set<Token> bf = as_set(compose(bwd, fwd).enumerate(2 * b));
    CHECK(fb == id_src);
    CHECK(bf == id_tgt);
    CHECK(id_tgt.size() == bang(with(e1, e2))->enumerate(100).size());
  }

  TEST_CASE("derived cliques are cliques") {
    Space e = graph_space(3, {{0, 1}, {1, 2}});
    for (ExpMap m : {ExpMap::Der, ExpMap::Digg, ExpMap::Weak, ExpMap::Contr}) {
      Clique c = exp_structure(e, m);
      CHECK(is_clique(*c.space(), c.enumerate(12)));
    }
    auto [fwd, bwd] = seely_iso(e, e);
    CHECK(is_clique(*fwd.space(), fwd.enumerate(16)));
    CHECK(is_clique(*bwd.space(), bwd.enumerate(16)));
    CHECK(is_clique(*transpose(fwd).space(), transpose(fwd).enumerate(16)));
  }
}

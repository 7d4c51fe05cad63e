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
#include <set>

#include "doctest.h"
#include "mull/clique.hpp"
#include "mull/formula.hpp"
#include "mull/vcs.hpp"

using namespace mull;

namespace {

Token U() { return Token::unit(); }
Token N(std::size_t n) { return nat_token(n); }

std::set<Token> as_set(const std::vector<Token>& v) { return {v.begin(), v.end()}; }

std::set<Token> upto(const std::vector<Token>& v, std::size_t b) {
  std::set<Token> out;
  for (Token t : v)
    if (t.size() <= b) out.insert(t);
  return out;
}

void same_space(const Space& a, const Space& b, std::size_t bound) {
  const auto& wa = a->enumerate(bound);
  const auto& wb = b->enumerate(bound);
  REQUIRE(wa == wb);
  for (Token x : wa)
    for (Token y : wa) CHECK(a->coh(x, y) == b->coh(x, y));
}

Vcs nat_body() { return vcs_connective(Connective::Plus, vcs_const(one_space(), 1), vcs_var(0, 1)); }

std::vector<Vcs> unary_corpus() {
  Vcs z = vcs_var(0, 1);
  Vcs one = vcs_const(one_space(), 1);
  Vcs bot = vcs_const(bot_space(), 1);
  return {z,
          one,
          nat_body(),
          vcs_connective(Connective::Tensor, z, z),
          vcs_connective(Connective::With, bot, z),
          vcs_connective(Connective::Par, z, one),
          vcs_bang(z),
          vcs_whynot(vcs_connective(Connective::Plus, z, one))};
}

}  // namespace

TEST_SUITE("vcs") {
  TEST_CASE("projection and constant functors") {
    Space e = graph_space(2, {{0, 1}});
    std::vector<Space> xs{e};
    same_space(vcs_var(0, 1).obj(xs), e, 6);
    Vcs c = vcs_const(one_space(), 1);
    std::vector<Clique> fs{identity(e)};
    CHECK(as_set(c.mor(fs).enumerate(10)) == as_set(identity(one_space()).enumerate(10)));
    Clique st = vcs_const(e, 0).strength(graph_space(2, {}), {});
    std::set<Token> expect;
    for (Token a : e->enumerate(5)) expect.insert(Token::pair(Token::pair(Token::empty_set(), a), a));
    CHECK(as_set(st.enumerate(12)) == expect);
  }

  TEST_CASE("plus of one and a variable on the Nat carrier") {
    std::vector<Space> xs{nat_space()};
    Space s = nat_body().obj(xs);
    for (Token t : s->enumerate(8)) {
      bool left = t.side() == 1 && t.body() == U();
      bool right = t.side() == 2 && nat_value(t.body()).has_value();
      CHECK((left || right));
    }
    CHECK(s->enumerate(8).size() == 7);
  }

  TEST_CASE("dual is an involution and commutes with composition") {
    Space e = graph_space(3, {{0, 1}});
    std::vector<Space> xs{e};
    for (const Vcs& f : unary_corpus()) {
      same_space(vcs_dual(vcs_dual(f)).obj(xs), f.obj(xs), 7);
      std::vector<Space> dxs{dual(e)};
      same_space(vcs_dual(f).obj(xs), dual(f.obj(dxs)), 7);
      for (const Vcs& g : unary_corpus()) {
        Vcs fg = vcs_compose(f, {g});
        same_space(vcs_dual(fg).obj(xs), vcs_compose(vcs_dual(f), {vcs_dual(g)}).obj(xs), 7);
        same_space(fg.obj(xs), f.obj(std::vector<Space>{g.obj(xs)}), 7);
      }
    }
  }

  TEST_CASE("fixed point of one plus z is the strict integers") {
    Space nat = vcs_fix(nat_body()).obj();
    const auto& web = nat->enumerate(12);
    REQUIRE(web.size() == 11);
    for (std::size_t i = 0; i < web.size(); ++i) {
      CHECK(web[i] == N(i));
      for (std::size_t j = 0; j < web.size(); ++j) CHECK(nat->coh(web[i], web[j]) == (i == j));
    }
    Clique m = vcs_fix(nat_body()).mor({});
    CHECK(as_set(m.enumerate(13)) == as_set(identity(nat).enumerate(13)));
  }

  TEST_CASE("fixed point of z plus z is empty") {
    Vcs f = vcs_fix(vcs_connective(Connective::Plus, vcs_var(0, 1), vcs_var(0, 1)));
    CHECK(f.obj()->enumerate(20).empty());
    for (std::size_t s = 0; s < 6; ++s) CHECK(fix_stage(f, {}, s)->enumerate(30).empty());
  }

  TEST_CASE("fixed-point web equation on truncations") {
    for (const Vcs& body : unary_corpus()) {
      if (body.kind() == VcsKind::Var) continue;
      Vcs fix = vcs_fix(body);
      Space m = fix.obj();
      std::vector<Space> xs{m};
      same_space(body.obj(xs), m, 6);
    }
  }

  TEST_CASE("rank-bounded membership matches stage iteration") {
    for (const Vcs& body : unary_corpus()) {
      if (body.kind() == VcsKind::Var) continue;
      Vcs fix = vcs_fix(body);
      Space m = fix.obj();
      for (std::size_t s = 1; s <= 6; ++s) {
        Space st = fix_stage(fix, {}, s);
        for (Token t : st->enumerate(6)) CHECK(m->contains(t));
        // Everything of size < s is already present at stage s.
        for (Token t : m->enumerate(s - 1)) CHECK(st->contains(t));
        Space prev = fix_stage(fix, {}, s - 1);
        for (Token t : prev->enumerate(6)) CHECK(st->contains(t));
      }
    }
  }

  TEST_CASE("stream carrier") {
    Vcs body = vcs_connective(Connective::With, vcs_const(one_space(), 1),
                              vcs_connective(Connective::Plus, vcs_var(0, 1), vcs_var(0, 1)));
    Vcs fix = vcs_fix(body);
    for (std::size_t d = 0; d <= 4; ++d)
      CHECK(fix_stage(fix, {}, d + 1)->enumerate(200).size() == (std::size_t{2} << d) - 1);
  }

  TEST_CASE("morphism action is functorial") {
    Space e = graph_space(2, {});
    Space f = graph_space(2, {{0, 1}});
    Clique id_e = identity(e);
    Clique s = Clique::of(lolli(e, f), {Token::pair(N(0), N(0)), Token::pair(N(1), N(0))});
    Clique t = Clique::of(lolli(f, f), {Token::pair(N(0), N(1)), Token::pair(N(1), N(0))});
    std::vector<Vcs> corpus = unary_corpus();
    corpus.push_back(vcs_fix(vcs_connective(
        Connective::Plus, vcs_var(0, 2), vcs_connective(Connective::Tensor, vcs_var(0, 2), vcs_var(1, 2)))));
    for (const Vcs& fn : corpus) {
      const std::size_t b = 12;
      std::vector<Clique> ids{id_e};
      std::vector<Space> xs{e};
      CHECK(as_set(fn.mor(ids).enumerate(b)) == as_set(identity(fn.obj(xs)).enumerate(b)));
      std::vector<Clique> fs{s}, gs{t}, fgs{compose(s, t)};
      auto lhs = as_set(fn.mor(fgs).enumerate(b));
      auto rhs = upto(compose(fn.mor(fs), fn.mor(gs)).enumerate(2 * b), b);
      CHECK(lhs == rhs);
      Clique m = fn.mor(fs);
      CHECK(is_clique(*m.space(), m.enumerate(b)));
    }
  }

  TEST_CASE("fixed-point morphism chain is monotone and converges") {
    Space e = graph_space(2, {});
    Clique sw = Clique::of(lolli(e, e), {Token::pair(N(0), N(1)), Token::pair(N(1), N(0))});
    Vcs list = vcs_fix(vcs_connective(Connective::Plus, vcs_const(one_space(), 2),
                                      vcs_connective(Connective::Tensor, vcs_var(0, 2), vcs_var(1, 2))));
    std::vector<Clique> fs{sw};
    Clique m = list.mor(fs);
    std::set<Token> prev;
    for (std::size_t b = 4; b <= 20; b += 2) {
      auto cur = as_set(m.enumerate(b));
      for (Token t : prev) CHECK(cur.count(t) == 1);
      prev = cur;
    }
    // Explicit chain h_{k+1} = F(sw, h_k) from the empty relation.
    std::vector<Space> xs{e};
    Space carrier = list.obj(xs);
    Clique h = Clique::empty(lolli(carrier, carrier));
    Vcs body = list.node().children[0];
    for (int k = 0; k < 6; ++k) {
      std::vector<Clique> args{sw, h};
      std::vector<Token> next = body.mor(args).enumerate(20);
      h = Clique::of(lolli(carrier, carrier), next);
    }
    CHECK(as_set(h.enumerate(20)) == as_set(m.enumerate(20)));
  }

  TEST_CASE("strength followed by projection is weakening") {
    Space y = graph_space(2, {{0, 1}});
    Space x = graph_space(2, {});
    std::vector<Space> xs{x};
    for (const Vcs& fn : unary_corpus()) {
      Clique st = fn.strength(y, xs);
      std::vector<Token> proj;
      for (Token v : bang(y)->enumerate(6))
        for (Token a : x->enumerate(4))
          if (v == Token::empty_set()) proj.push_back(Token::pair(Token::pair(v, a), a));
      std::vector<Clique> ps{Clique::of(lolli(tensor(bang(y), x), x), proj)};
      const std::size_t b = 10;
      std::set<Token> lhs = upto(compose(st, fn.mor(ps)).enumerate(2 * b), b);
      std::vector<Token> rhs;
      for (Token a : fn.obj(xs)->enumerate(b))
        rhs.push_back(Token::pair(Token::pair(Token::empty_set(), a), a));
      CHECK(lhs == upto(rhs, b));
      CHECK(is_clique(*st.space(), st.enumerate(12)));
    }
  }
}

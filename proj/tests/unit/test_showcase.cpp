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
#include "mull/showcase.hpp"

using namespace mull;

namespace {

Token U() { return Token::unit(); }
Token In(int s, Token t) { return Token::in(s, t); }
Token S(std::vector<Token> ts) { return Token::set(std::move(ts)); }

Rel only_depth(const Rel& r, std::size_t d) {
  Rel out;
  for (const auto& [a, b] : r)
    if (tree_depth(b.left()) <= d && tree_depth(b.right()) <= d) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_SUITE("showcase") {
  TEST_CASE("lazy integers") {
    CHECK(lazy_int(0).enumerate(50) == std::vector<Token>{In(1, U())});
    std::vector<Token> x1{In(2, S({})), In(2, S({In(1, U())}))};
    CHECK(lazy_int(1).enumerate(50) == x1);
    std::vector<Token> x2{In(2, S({})), In(2, S({x1[0]})), In(2, S({x1[1]})), In(2, S(x1))};
    canonicalize(x2);
    CHECK(lazy_int(2).enumerate(50) == x2);
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(lazy_int(k + 1).enumerate(1000).size() ==
            (std::size_t{1} << lazy_int(k).enumerate(1000).size()));
    CHECK_THROWS_AS(lazy_int(5), SizeGuardError);
    for (std::size_t k = 0; k <= 1; ++k)
      CHECK(check_total(lazy_int(k), lazy_nat_formula(), {}, 3).verdict == Verdict::TotalAtDepth);
    CHECK(check_total(partial_int(), lazy_nat_formula(), {}, 3).verdict == Verdict::NotTotal);
  }

  TEST_CASE("lazy is-zero") {
    CHECK(interpret(is_zero_proof()).enumerate(30) == is_zero_clique().enumerate(30));
    CHECK(apply(is_zero_clique(), lazy_int(0)).enumerate(10) == std::vector<Token>{In(1, U())});
    CHECK(apply(is_zero_clique(), lazy_int(1)).enumerate(10) == std::vector<Token>{In(2, U())});
    CHECK(apply(is_zero_clique(), lazy_int(3)).enumerate(10) == std::vector<Token>{In(2, U())});
    CHECK(apply(is_zero_clique(), partial_int()).enumerate(10) == std::vector<Token>{In(2, U())});
  }

  TEST_CASE("streams") {
    CHECK(stream_word(stream_token("011")) == "011");
    CHECK(stream_token("") == In(1, U()));
    CHECK_THROWS_AS(stream_token("012"), Error);
    for (std::size_t d = 0; d <= 5; ++d) {
      StreamFacts f = stream_facts(d);
      CHECK(f.tokens == (std::size_t{1} << (d + 1)) - 1);
      CHECK(f.ok());
    }
    FinSpace e = stream_space(2);
    CHECK(e.size() == 7);
    std::vector<Token> chain{stream_token(""), stream_token("0"), stream_token("01")};
    CHECK(e.is_clique(token_mask(e, chain)));
    std::vector<Token> fork{stream_token("0"), stream_token("1")};
    CHECK_FALSE(e.is_clique(token_mask(e, fork)));
    std::vector<Token> anti{stream_token("00"), stream_token("01"), stream_token("10"),
                            stream_token("11")};
    CHECK(fin_dual(e).is_clique(token_mask(e, anti)));
  }

  TEST_CASE("tree view of the encoded exponential") {
    Token a = U();
    Token t = tree_c(tree_d(a), tree_w());
    CHECK(tree_str(t) == "C(D(u),W)");
    CHECK(tree_depth(t) == 1);
    CHECK(tree_view(tree_w())->kind == TreeKind::W);
    CHECK_FALSE(tree_view(Token::pair(U(), U())));
    // Same web and coherence as the fixed point formula.
    for (const char* x : {"one", "(plus one one)"}) {
      Formula f = parse_formula(x);
      Space generic = space_of(exclmu_formula(f));
      Space view = exclmu_space(space_of(f));
      auto w1 = generic->enumerate(16), w2 = view->enumerate(16);
      CHECK(w1 == w2);
      for (Token p : w2) {
        CHECK(tree_view(p));
        for (Token q : w2) CHECK(generic->coh(p, q) == view->coh(p, q));
      }
    }
    CHECK(negate(intmu_formula(Formula::one())) == exclmu_formula(Formula::bot()));
    std::vector<Token> leaves{U()};
    CHECK(exclmu_trees(leaves, 0).size() == 2);
    CHECK(exclmu_trees(leaves, 1).size() == 6);
    CHECK(exclmu_trees(leaves, 2).size() == 38);
    // Non-uniform: D-leaves of a tree need not be coherent.
    Space two = space_of(parse_formula("(plus one one)"));
    Token l = tree_d(In(1, U())), r = tree_d(In(2, U()));
    CHECK_FALSE(exclmu_space(two)->coh(l, r));
    CHECK(exclmu_space(two)->contains(tree_c(l, r)));
  }

  TEST_CASE("co-structure and functor") {
    std::vector<Token> xs{In(1, U()), In(2, U())};
    const std::size_t d = 2;
    auto trees = exclmu_trees(xs, d);
    Rel der = dermu(xs, d);
    for (Token a : xs) CHECK(std::find(der.begin(), der.end(), std::make_pair(tree_d(a), a)) != der.end());
    CHECK(weakmu(xs, d) == Rel{{tree_w(), U()}});
    for (const auto& [c, p] : contrmu(xs, d)) CHECK(c == tree_c(p.left(), p.right()));
    // Functor: identity, composition, same shape.
    CHECK(exclmu_map(rel_identity(xs), xs, d) == rel_identity(trees));
    Rel swap{{In(1, U()), In(2, U())}, {In(2, U()), In(1, U())}};
    Rel swap_tree = exclmu_map(swap, xs, d);
    CHECK(rel_compose(swap_tree, swap_tree) == rel_identity(trees));
    for (const auto& [p, q] : swap_tree) CHECK(tree_depth(p) == tree_depth(q));
    CHECK(exclmu_map(rel_compose(swap, swap), xs, d) == rel_identity(trees));
  }

  TEST_CASE("promotion equations") {
    std::vector<Token> xs{In(1, U()), In(2, U())};
    const std::size_t d = 2;
    auto trees = exclmu_trees(xs, d);
    // f = der followed by the swap of the two leaves.
    Rel swap{{In(1, U()), In(2, U())}, {In(2, U()), In(1, U())}};
    Rel f = rel_compose(dermu(xs, d), swap);
    PromResult p = prommu(f, trees, d);
    CHECK(p.rounds <= d + 2);
    CHECK(rel_compose(p.rel, weakmu(xs, d)) == weakmu(xs, d));
    CHECK(rel_compose(p.rel, dermu(xs, d)) == f);
    CHECK(rel_compose(p.rel, contrmu(xs, d)) ==
          only_depth(rel_compose(contrmu(xs, d), rel_tensor(p.rel, p.rel)), d - 1));
    // prommu(der) is the identity.
    CHECK(prommu(dermu(xs, d), trees, d).rel == rel_identity(trees));
  }

  TEST_CASE("digging") {
    std::vector<Token> xs{U()};
    const std::size_t d = 2;
    auto trees = exclmu_trees(xs, d);
    PromResult dg = diggmu(xs, d);
    CHECK(dg.rounds >= 2);
    CHECK(rel_compose(dg.rel, dermu(trees, d)) == rel_identity(trees));
    CHECK(rel_compose(dg.rel, exclmu_map(dermu(xs, d), trees, d)) == rel_identity(trees));
    CHECK(rel_compose(dg.rel, weakmu(trees, d)) == weakmu(xs, d));
    // D(alpha) and the tree of W/D leaves with alpha's shape are both images.
    Token a = tree_c(tree_w(), tree_d(U()));
    CHECK(std::find(dg.rel.begin(), dg.rel.end(), std::make_pair(a, tree_d(a))) != dg.rel.end());
    CHECK(std::find(dg.rel.begin(), dg.rel.end(),
                    std::make_pair(a, tree_c(tree_w(), tree_d(tree_d(U()))))) != dg.rel.end());
  }

  TEST_CASE("seely maps are injective but not onto") {
    std::vector<Token> xs{U()}, ys{U()};
    for (std::size_t d = 0; d <= 3; ++d) {
      SeelyFailure f = seely_failure(xs, ys, d);
      CHECK(f.seely_functional);
      CHECK(f.seely_injective);
      CHECK(f.seelyinv_injective);
      CHECK(f.seely_image < f.web_tensor);
      CHECK(f.seelyinv_image < f.web_with);
      REQUIRE(f.seelyinv_witness);
      CHECK(*f.seelyinv_witness == tree_d(In(1, U())));
      REQUIRE(f.seely_witness);
    }
    CHECK(iso_failure_witness(xs, ys, 2) == tree_d(In(1, U())));
    for (const auto& [g, p] : seelyinv_mu(xs, ys, 2)) {
      TreeView v = *tree_view(g);
      REQUIRE(v.kind == TreeKind::C);
      CHECK(tree_prr(v.left) == tree_prr(tree_inl(p.left())));
      CHECK(v.left == tree_inl(p.left()));
      CHECK(v.right == tree_inr(p.right()));
    }
    Token g = tree_c(tree_d(In(1, U())), tree_d(In(2, U())));
    CHECK(tree_prl(g) == tree_c(tree_d(U()), tree_w()));
    CHECK(tree_prr(g) == tree_c(tree_w(), tree_d(U())));
  }

  TEST_CASE("redex corpus") {
    CHECK(redex_corpus().size() >= 5);
    for (const auto& r : redex_corpus()) {
      RedexKind k;
      auto q = reduce(r.proof, &k);
      REQUIRE(q);
      CHECK(k == r.kind);
      CHECK(same_sequent(check(*q), check(r.proof)));
      CHECK_MESSAGE(interpret(r.proof).enumerate(24) == interpret(*q).enumerate(24), r.name);
    }
  }
}

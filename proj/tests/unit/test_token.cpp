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
#include "mull/errors.hpp"
#include "mull/token.hpp"

using namespace mull;

TEST_SUITE("token") {
  TEST_CASE("sizes follow the rank definition") {
    Token u = Token::unit();
    CHECK(u.size() == 1);
    CHECK(Token::pair(u, u).size() == 3);
    CHECK(Token::in(2, u).size() == 2);
    CHECK(Token::set({u, Token::in(1, u)}).size() == 4);
    CHECK(Token::empty_set().size() == 1);
  }

  TEST_CASE("hash-consing gives structural identity") {
    Token a = Token::pair(Token::in(1, Token::unit()), Token::empty_set());
    Token b = Token::pair(Token::in(1, Token::unit()), Token::empty_set());
    CHECK(a == b);
    CHECK(a.node() == b.node());
    CHECK(Token::set({a, a, Token::unit()}) == Token::set({Token::unit(), b}));
  }

  TEST_CASE("sets are strictly increasing in canonical order") {
    Token s = Token::set({nat_token(3), nat_token(0), Token::unit(), nat_token(1), nat_token(0)});
    auto e = s.elems();
    REQUIRE(e.size() == 4);
    for (std::size_t i = 1; i < e.size(); ++i) CHECK(compare(e[i - 1], e[i]) < 0);
  }

  TEST_CASE("canonical order is size then kind then children") {
    CHECK(Token::unit() < Token::in(1, Token::unit()));
    CHECK(Token::empty_set() > Token::unit());
    CHECK(Token::in(1, Token::unit()) < Token::in(2, Token::unit()));
    CHECK(Token::pair(Token::unit(), Token::in(1, Token::unit())) >
          Token::pair(Token::unit(), Token::unit()));
  }

  TEST_CASE("text format round-trips") {
    for (const char* s : {"u", "(u,u)", "1:u", "2:1:u", "{}", "{1:u,2:u}", "({u},(1:u,{}))",
                          "{u,{u},(u,u)}"}) {
      Token t = Token::parse(s);
      CHECK(t.str() == s);
    }
    CHECK(Token::set({Token::in(2, Token::unit()), Token::in(1, Token::unit())}).str() ==
          "{1:u,2:u}");
  }

  TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(Token::parse("(u,"), ParseError);
    CHECK_THROWS_AS(Token::parse("3:u"), ParseError);
    CHECK_THROWS_AS(Token::parse("u u"), ParseError);
    try {
      Token::parse("(u;u)");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.pos() == 2);
    }
  }

  TEST_CASE("numerals") {
    CHECK(nat_token(0).str() == "1:u");
    CHECK(nat_token(2).str() == "2:2:1:u");
    for (std::size_t n = 0; n < 30; ++n) CHECK(nat_value(nat_token(n)) == n);
    CHECK(!nat_value(Token::unit()).has_value());
    CHECK(!nat_value(Token::in(2, Token::in(2, Token::unit()))).has_value());
  }

  TEST_CASE("tuples") {
    std::vector<Token> parts{nat_token(0), nat_token(1), nat_token(2)};
    Token t = tuple_token(parts);
    CHECK(t == Token::pair(parts[0], Token::pair(parts[1], parts[2])));
    CHECK(untuple(t, 3) == parts);
    CHECK(tuple_token({}) == Token::unit());
    CHECK(untuple(Token::unit(), 0).empty());
    CHECK(tuple_token(std::span<const Token>(parts.data(), 1)) == parts[0]);
  }

  TEST_CASE("set algebra") {
    Token a = nat_token(0), b = nat_token(1);
    Token s = set_union(singleton(a), singleton(b));
    CHECK(s == Token::set({a, b}));
    CHECK(set_contains(s, a));
    CHECK(!set_contains(singleton(a), b));
  }
}

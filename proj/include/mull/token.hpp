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

#ifndef MULL_TOKEN_HPP
#define MULL_TOKEN_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mull {

enum class TokenKind : std::uint8_t { Unit = 0, Pair = 1, In = 2, Set = 3 };

struct TokenNode;

// Web element. Tokens are hash-consed: structurally equal tokens share a
// node, so equality is pointer equality. Handles are trivially copyable.
class Token {
 public:
  Token();

  static Token unit();
  static Token pair(Token a, Token b);
  static Token in(int side, Token body);
  // Sorts and deduplicates.
  static Token set(std::vector<Token> elems);
  static Token empty_set();

  TokenKind kind() const;
  std::size_t size() const;
  std::uint64_t hash() const;

  int side() const;           // In
  Token body() const;         // In
  Token left() const;         // Pair
  Token right() const;        // Pair
  std::span<const Token> elems() const;  // Set

  bool is_unit() const { return kind() == TokenKind::Unit; }
  bool is_pair() const { return kind() == TokenKind::Pair; }
  bool is_in() const { return kind() == TokenKind::In; }
  bool is_set() const { return kind() == TokenKind::Set; }

  std::string str() const;
  // Throws ParseError.
  static Token parse(std::string_view text);

  friend bool operator==(Token a, Token b) { return a.node_ == b.node_; }
  friend std::strong_ordering operator<=>(Token a, Token b);

  const TokenNode* node() const { return node_; }

 private:
  explicit Token(const TokenNode* n) : node_(n) {}
  const TokenNode* node_;
  friend class TokenTable;
};

std::strong_ordering compare(Token a, Token b);

struct TokenHash {
  std::size_t operator()(Token t) const { return static_cast<std::size_t>(t.hash()); }
};

struct TokenVecHash {
  std::size_t operator()(const std::vector<Token>& v) const;
};

// Sort into canonical order and drop duplicates.
void canonicalize(std::vector<Token>& ts);
std::string tokens_str(std::span<const Token> ts, std::string_view sep = "\n");

// Set algebra on Set tokens.
Token set_union(Token u, Token v);
bool set_contains(Token u, Token a);
Token singleton(Token a);

// Strict integers: 0 = 1:u, n+1 = 2:n.
Token nat_token(std::size_t n);
std::optional<std::size_t> nat_value(Token t);

// Right-nested tuple layout for sequents: () = u, (a) = a, (a,b,...) = (a,(b,...)).
Token tuple_token(std::span<const Token> parts);
std::vector<Token> untuple(Token t, std::size_t arity);

}  // namespace mull

#endif  // MULL_TOKEN_HPP

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

#include "mull/token.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_set>

#include "mull/errors.hpp"

namespace mull {

struct TokenNode {
  TokenKind kind;
  std::uint8_t side;
  std::size_t size;
  std::uint64_t hash;
  const TokenNode* a;
  const TokenNode* b;
  std::vector<Token> elems;
};

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  return h;
}

struct NodeHash {
  std::size_t operator()(const TokenNode* n) const { return static_cast<std::size_t>(n->hash); }
};

struct NodeEq {
  bool operator()(const TokenNode* x, const TokenNode* y) const {
    if (x->hash != y->hash || x->kind != y->kind || x->side != y->side || x->a != y->a ||
        x->b != y->b || x->elems.size() != y->elems.size())
      return false;
    for (std::size_t i = 0; i < x->elems.size(); ++i)
      if (!(x->elems[i] == y->elems[i])) return false;
    return true;
  }
};

}  // namespace

class TokenTable {
 public:
  static TokenTable& get() {
    static TokenTable table;
    return table;
  }

  const TokenNode* intern(TokenNode&& probe) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = set_.find(&probe);
    if (it != set_.end()) return *it;
    arena_.push_back(std::move(probe));
    const TokenNode* n = &arena_.back();
    set_.insert(n);
    return n;
  }

  static Token wrap(const TokenNode* n) { return Token(n); }

 private:
  std::mutex mu_;
  std::deque<TokenNode> arena_;
  std::unordered_set<const TokenNode*, NodeHash, NodeEq> set_;
};

namespace {

const TokenNode* unit_node() {
  static const TokenNode* n =
      TokenTable::get().intern(TokenNode{TokenKind::Unit, 0, 1, mix(0, 1), nullptr, nullptr, {}});
  return n;
}

}  // namespace

Token::Token() : node_(unit_node()) {}

Token Token::unit() { return Token(); }

Token Token::pair(Token a, Token b) {
  TokenNode n{TokenKind::Pair, 0, 1 + a.size() + b.size(),
              mix(mix(mix(0, 2), a.hash()), b.hash()), a.node_, b.node_, {}};
  return Token(TokenTable::get().intern(std::move(n)));
}

Token Token::in(int side, Token body) {
  if (side != 1 && side != 2) throw Error("injection side must be 1 or 2");
  TokenNode n{TokenKind::In, static_cast<std::uint8_t>(side), 1 + body.size(),
              mix(mix(mix(0, 3), static_cast<std::uint64_t>(side)), body.hash()), body.node_,
              nullptr, {}};
  return Token(TokenTable::get().intern(std::move(n)));
}

Token Token::set(std::vector<Token> elems) {
  canonicalize(elems);
  std::size_t sz = 1;
  std::uint64_t h = mix(0, 4);
  for (Token e : elems) {
    sz += e.size();
    h = mix(h, e.hash());
  }
  TokenNode n{TokenKind::Set, 0, sz, h, nullptr, nullptr, std::move(elems)};
  return Token(TokenTable::get().intern(std::move(n)));
}

Token Token::empty_set() {
  static const Token e = set({});
  return e;
}

TokenKind Token::kind() const { return node_->kind; }
std::size_t Token::size() const { return node_->size; }
std::uint64_t Token::hash() const { return node_->hash; }
int Token::side() const { return node_->side; }
Token Token::body() const { return Token(node_->a); }
Token Token::left() const { return Token(node_->a); }
Token Token::right() const { return Token(node_->b); }
std::span<const Token> Token::elems() const { return node_->elems; }

std::strong_ordering compare(Token a, Token b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case TokenKind::Unit:
      return std::strong_ordering::equal;
    case TokenKind::In:
      if (auto c = a.side() <=> b.side(); c != 0) return c;
      return compare(a.body(), b.body());
    case TokenKind::Pair:
      if (auto c = compare(a.left(), b.left()); c != 0) return c;
      return compare(a.right(), b.right());
    case TokenKind::Set: {
      auto ea = a.elems();
      auto eb = b.elems();
      std::size_t n = std::min(ea.size(), eb.size());
      for (std::size_t i = 0; i < n; ++i)
        if (auto c = compare(ea[i], eb[i]); c != 0) return c;
      return ea.size() <=> eb.size();
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(Token a, Token b) { return compare(a, b); }

std::size_t TokenVecHash::operator()(const std::vector<Token>& v) const {
  std::uint64_t h = mix(0, v.size());
  for (Token t : v) h = mix(h, t.hash());
  return static_cast<std::size_t>(h);
}

void canonicalize(std::vector<Token>& ts) {
  std::sort(ts.begin(), ts.end(), [](Token x, Token y) { return compare(x, y) < 0; });
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

namespace {

void print(Token t, std::string& out) {
  switch (t.kind()) {
    case TokenKind::Unit:
      out += 'u';
      return;
    case TokenKind::Pair:
      out += '(';
      print(t.left(), out);
      out += ',';
      print(t.right(), out);
      out += ')';
      return;
    case TokenKind::In:
      out += t.side() == 1 ? "1:" : "2:";
      print(t.body(), out);
      return;
    case TokenKind::Set: {
      out += '{';
      bool first = true;
      for (Token e : t.elems()) {
        if (!first) out += ',';
        first = false;
        print(e, out);
      }
      out += '}';
      return;
    }
  }
}

class TokenParser {
 public:
  explicit TokenParser(std::string_view s) : s_(s) {}

  Token parse_all() {
    Token t = parse();
    if (pos_ != s_.size()) throw ParseError("trailing characters in token", pos_);
    return t;
  }

 private:
  Token parse() {
    if (pos_ >= s_.size()) throw ParseError("unexpected end of token", pos_);
    char c = s_[pos_];
    if (c == 'u') {
      ++pos_;
      return Token::unit();
    }
    if (c == '1' || c == '2') {
      ++pos_;
      expect(':');
      return Token::in(c - '0', parse());
    }
    if (c == '(') {
      ++pos_;
      Token a = parse();
      expect(',');
      Token b = parse();
      expect(')');
      return Token::pair(a, b);
    }
    if (c == '{') {
      ++pos_;
      std::vector<Token> elems;
      if (peek() == '}') {
        ++pos_;
        return Token::set({});
      }
      for (;;) {
        elems.push_back(parse());
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect('}');
        break;
      }
      std::size_t n = elems.size();
      std::vector<Token> sorted = elems;
      canonicalize(sorted);
      if (sorted.size() != n) throw ParseError("duplicate element in set token", pos_);
      return Token::set(std::move(sorted));
    }
    throw ParseError(std::string("unexpected character '") + c + "' in token", pos_);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "' in token", pos_);
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Token::str() const {
  std::string out;
  print(*this, out);
  return out;
}

Token Token::parse(std::string_view text) { return TokenParser(text).parse_all(); }

std::string tokens_str(std::span<const Token> ts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += sep;
    out += ts[i].str();
  }
  return out;
}

Token set_union(Token u, Token v) {
  if (u.elems().empty()) return v;
  if (v.elems().empty()) return u;
  std::vector<Token> all(u.elems().begin(), u.elems().end());
  all.insert(all.end(), v.elems().begin(), v.elems().end());
  return Token::set(std::move(all));
}

bool set_contains(Token u, Token a) {
  for (Token e : u.elems())
    if (e == a) return true;
  return false;
}

Token singleton(Token a) { return Token::set({a}); }

Token nat_token(std::size_t n) {
  Token t = Token::in(1, Token::unit());
  for (std::size_t i = 0; i < n; ++i) t = Token::in(2, t);
  return t;
}

std::optional<std::size_t> nat_value(Token t) {
  std::size_t n = 0;
  while (t.is_in() && t.side() == 2) {
    ++n;
    t = t.body();
  }
  if (t.is_in() && t.side() == 1 && t.body().is_unit()) return n;
  return std::nullopt;
}

Token tuple_token(std::span<const Token> parts) {
  if (parts.empty()) return Token::unit();
  Token acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Token::pair(parts[i], acc);
  return acc;
}

std::vector<Token> untuple(Token t, std::size_t arity) {
  std::vector<Token> out;
  if (arity == 0) return out;
  out.reserve(arity);
  for (std::size_t i = 0; i + 1 < arity; ++i) {
    out.push_back(t.left());
    t = t.right();
  }
  out.push_back(t);
  return out;
}

}  // namespace mull

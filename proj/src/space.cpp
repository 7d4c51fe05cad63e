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

#include "mull/space.hpp"

#include <algorithm>

#include "mull/errors.hpp"

namespace mull {

std::vector<Token> CoherenceSpace::enumerate(std::size_t bound) const {
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = memo_.find(bound);
    if (it != memo_.end()) return it->second;
  }
  std::vector<Token> toks = generate(bound);
  canonicalize(toks);
  std::lock_guard<std::mutex> lock(memo_mu_);
  return memo_.try_emplace(bound, std::move(toks)).first->second;
}

std::optional<std::vector<Token>> CoherenceSpace::finite_web() const {
  auto m = max_token_size();
  if (!m) return std::nullopt;
  return enumerate(*m);
}

namespace {

class EmptySpace final : public CoherenceSpace {
 public:
  explicit EmptySpace(std::string name) : name_(std::move(name)) {}
  bool contains(Token) const override { return false; }
  bool coh(Token, Token) const override { return false; }
  std::string describe() const override { return name_; }
  SpaceKind kind() const override { return SpaceKind::Empty; }
  std::optional<std::size_t> max_token_size() const override { return 0; }

 protected:
  std::vector<Token> generate(std::size_t) const override { return {}; }

 private:
  std::string name_;
};

class UnitSpace final : public CoherenceSpace {
 public:
  explicit UnitSpace(std::string name) : name_(std::move(name)) {}
  bool contains(Token a) const override { return a.is_unit(); }
  bool coh(Token, Token) const override { return true; }
  std::string describe() const override { return name_; }
  SpaceKind kind() const override { return SpaceKind::Unit; }
  std::optional<std::size_t> max_token_size() const override { return 1; }

 protected:
  std::vector<Token> generate(std::size_t bound) const override {
    if (bound < 1) return {};
    return {Token::unit()};
  }

 private:
  std::string name_;
};

class NatSpace final : public CoherenceSpace {
 public:
  bool contains(Token a) const override { return nat_value(a).has_value(); }
  bool coh(Token a, Token b) const override { return a == b; }
  std::string describe() const override { return "Nat"; }
  SpaceKind kind() const override { return SpaceKind::Nat; }

 protected:
  std::vector<Token> generate(std::size_t bound) const override {
    std::vector<Token> out;
    for (std::size_t n = 0; n + 2 <= bound; ++n) out.push_back(nat_token(n));
    return out;
  }
};

class FiniteSpace final : public CoherenceSpace {
 public:
  FiniteSpace(std::vector<Token> web, std::function<bool(Token, Token)> coh, std::string name)
      : web_(std::move(web)), coh_(std::move(coh)), name_(std::move(name)) {
    canonicalize(web_);
    for (Token t : web_) max_ = std::max(max_, t.size());
  }
  bool contains(Token a) const override {
    return std::binary_search(web_.begin(), web_.end(), a,
                              [](Token x, Token y) { return compare(x, y) < 0; });
  }
  bool coh(Token a, Token b) const override { return a == b || coh_(a, b); }
  std::string describe() const override { return name_; }
  SpaceKind kind() const override { return SpaceKind::Finite; }
  std::optional<std::size_t> max_token_size() const override { return max_; }

 protected:
  std::vector<Token> generate(std::size_t bound) const override {
    std::vector<Token> out;
    for (Token t : web_)
      if (t.size() <= bound) out.push_back(t);
    return out;
  }

 private:
  std::vector<Token> web_;
  std::function<bool(Token, Token)> coh_;
  std::string name_;
  std::size_t max_ = 0;
};

class UnarySpace : public CoherenceSpace {
 public:
  explicit UnarySpace(Space e) : ops_{std::move(e)} {}
  std::span<const Space> operands() const override { return ops_; }
  const CoherenceSpace& e() const { return *ops_[0]; }

 protected:
  std::vector<Space> ops_;
};

class BinarySpace : public CoherenceSpace {
 public:
  BinarySpace(Space e, Space f) : ops_{std::move(e), std::move(f)} {}
  std::span<const Space> operands() const override { return ops_; }
  const CoherenceSpace& e() const { return *ops_[0]; }
  const CoherenceSpace& f() const { return *ops_[1]; }

 protected:
  std::vector<Token> pairs(std::size_t bound) const {
    std::vector<Token> out;
    if (bound < 3) return out;
    for (Token a : e().enumerate(bound - 2))
      for (Token b : f().enumerate(bound - 1 - a.size())) out.push_back(Token::pair(a, b));
    return out;
  }
  std::vector<Token> injections(std::size_t bound) const {
    std::vector<Token> out;
    if (bound < 2) return out;
    for (Token a : e().enumerate(bound - 1)) out.push_back(Token::in(1, a));
    for (Token b : f().enumerate(bound - 1)) out.push_back(Token::in(2, b));
    return out;
  }
  bool contains_pair(Token t) const {
    return t.is_pair() && e().contains(t.left()) && f().contains(t.right());
  }
  bool contains_in(Token t) const {
    if (!t.is_in()) return false;
    return t.side() == 1 ? e().contains(t.body()) : f().contains(t.body());
  }
  std::optional<std::size_t> pair_max() const {
    auto a = e().max_token_size();
    auto b = f().max_token_size();
    if (!a || !b) return std::nullopt;
    return 1 + *a + *b;
  }
  std::optional<std::size_t> in_max() const {
    auto a = e().max_token_size();
    auto b = f().max_token_size();
    if (!a || !b) return std::nullopt;
    return 1 + std::max(*a, *b);
  }
  std::vector<Space> ops_;
};

class TruncateSpace final : public UnarySpace {
 public:
  TruncateSpace(Space e, std::size_t k) : UnarySpace(std::move(e)), k_(k) {}
  bool contains(Token a) const override { return a.size() <= k_ && e().contains(a); }
  bool coh(Token a, Token b) const override { return e().coh(a, b); }
  std::string describe() const override {
    return "trunc(" + e().describe() + "," + std::to_string(k_) + ")";
  }
  SpaceKind kind() const override { return SpaceKind::Truncate; }
  std::optional<std::size_t> max_token_size() const override {
    auto m = e().max_token_size();
    return m ? std::min(*m, k_) : k_;
  }

 protected:
  std::vector<Token> generate(std::size_t bound) const override {
    return e().enumerate(std::min(bound, k_));
  }

 private:
  std::size_t k_;
};

class DualSpace final : public UnarySpace {
 public:
  using UnarySpace::UnarySpace;
  bool contains(Token a) const override { return e().contains(a); }
  bool coh(Token a, Token b) const override { return a == b || !e().coh(a, b); }
  std::string describe() const override { return "dual(" + e().describe() + ")"; }
  SpaceKind kind() const override { return SpaceKind::Dual; }
  std::optional<std::size_t> max_token_size() const override { return e().max_token_size(); }

 protected:
  std::vector<Token> generate(std::size_t bound) const override { return e().enumerate(bound); }
};

class TensorSpace final : public BinarySpace {
 public:
  using BinarySpace::BinarySpace;
  bool contains(Token a) const override { return contains_pair(a); }
  bool coh(Token a, Token b) const override {
    return e().coh(a.left(), b.left()) && f().coh(a.right(), b.right());
  }
  std::string describe() const override {
    return "tensor(" + e().describe() + "," + f().describe() + ")";
  }
  SpaceKind kind() const override { return SpaceKind::Tensor; }
  std::optional<std::size_t> max_token_size() const override { return pair_max(); }

 protected:
  std::vector<Token> generate(std::size_t bound) const override { return pairs(bound); }
};

class ParSpace final : public BinarySpace {
 public:
  using BinarySpace::BinarySpace;
  bool contains(Token a) const override { return contains_pair(a); }
  bool coh(Token a, Token b) const override {
    return a == b || e().strict_coh(a.left(), b.left()) || f().strict_coh(a.right(), b.right());
  }
  std::string describe() const override {
    return "par(" + e().describe() + "," + f().describe() + ")";
  }
  SpaceKind kind() const override { return SpaceKind::Par; }
  std::optional<std::size_t> max_token_size() const override { return pair_max(); }

 protected:
  std::vector<Token> generate(std::size_t bound) const override { return pairs(bound); }
};

class LolliSpace final : public BinarySpace {
 public:
  using BinarySpace::BinarySpace;
  bool contains(Token a) const override { return contains_pair(a); }
  bool coh(Token a, Token b) const override {
    Token a1 = a.left(), b1 = a.right(), a2 = b.left(), b2 = b.right();
    if (!e().coh(a1, a2)) return true;
    return f().coh(b1, b2) && (!(b1 == b2) || a1 == a2);
  }
  std::string describe() const override {
    return "lolli(" + e().describe() + "," + f().describe() + ")";
  }
  SpaceKind kind() const override { return SpaceKind::Lolli; }
  std::optional<std::size_t> max_token_size() const override { return pair_max(); }

 protected:
  std::vector<Token> generate(std::size_t bound) const override { return pairs(bound); }
};

class PlusSpace final : public BinarySpace {
 public:
  using BinarySpace::BinarySpace;
  bool contains(Token a) const override { return contains_in(a); }
  bool coh(Token a, Token b) const override {
    if (a.side() != b.side()) return false;
    return a.side() == 1 ? e().coh(a.body(), b.body()) : f().coh(a.body(), b.body());
  }
  std::string describe() const override {
    return "plus(" + e().describe() + "," + f().describe() + ")";
  }
  SpaceKind kind() const override { return SpaceKind::Plus; }
  std::optional<std::size_t> max_token_size() const override { return in_max(); }

 protected:
  std::vector<Token> generate(std::size_t bound) const override { return injections(bound); }
};

class WithSpace final : public BinarySpace {
 public:
  using BinarySpace::BinarySpace;
  bool contains(Token a) const override { return contains_in(a); }
  bool coh(Token a, Token b) const override {
    if (a.side() != b.side()) return true;
    return a.side() == 1 ? e().coh(a.body(), b.body()) : f().coh(a.body(), b.body());
  }
  std::string describe() const override {
    return "with(" + e().describe() + "," + f().describe() + ")";
  }
  SpaceKind kind() const override { return SpaceKind::With; }
  std::optional<std::size_t> max_token_size() const override { return in_max(); }

 protected:
  std::vector<Token> generate(std::size_t bound) const override { return injections(bound); }
};

class BangSpace final : public UnarySpace {
 public:
  using UnarySpace::UnarySpace;
  bool contains(Token a) const override {
    if (!a.is_set()) return false;
    auto el = a.elems();
    for (std::size_t i = 0; i < el.size(); ++i) {
      if (!e().contains(el[i])) return false;
      for (std::size_t j = i + 1; j < el.size(); ++j)
        if (!e().coh(el[i], el[j])) return false;
    }
    return true;
  }
  bool coh(Token a, Token b) const override {
    for (Token x : a.elems())
      for (Token y : b.elems())
        if (!e().coh(x, y)) return false;
    return true;
  }
  std::string describe() const override { return "bang(" + e().describe() + ")"; }
  SpaceKind kind() const override { return SpaceKind::Bang; }
  std::optional<std::size_t> max_token_size() const override {
    auto web = e().finite_web();
    if (!web) return std::nullopt;
    std::size_t total = 1;
    for (Token t : *web) total += t.size();
    return total;
  }

 protected:
  std::vector<Token> generate(std::size_t bound) const override {
    std::vector<Token> out;
    if (bound < 1) return out;
    const std::vector<Token>& cand = e().enumerate(bound - 1);
    std::vector<Token> chosen;
    extend(cand, 0, bound - 1, chosen, out);
    return out;
  }

 private:
  void extend(const std::vector<Token>& cand, std::size_t from, std::size_t room,
              std::vector<Token>& chosen, std::vector<Token>& out) const {
    out.push_back(Token::set(chosen));
    for (std::size_t i = from; i < cand.size(); ++i) {
      Token c = cand[i];
      // Candidates are sorted by size first.
      if (c.size() > room) break;
      bool ok = true;
      for (Token x : chosen)
        if (!e().coh(x, c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(c);
      extend(cand, i + 1, room - c.size(), chosen, out);
      chosen.pop_back();
    }
  }
};

}  // namespace

Space one_space() {
  static const Space s = std::make_shared<UnitSpace>("1");
  return s;
}
Space bot_space() {
  static const Space s = std::make_shared<UnitSpace>("bot");
  return s;
}
Space top_space() {
  static const Space s = std::make_shared<EmptySpace>("top");
  return s;
}
Space zero_space() {
  static const Space s = std::make_shared<EmptySpace>("0");
  return s;
}
Space nat_space() {
  static const Space s = std::make_shared<NatSpace>();
  return s;
}

Space finite_space(std::vector<Token> web, std::function<bool(Token, Token)> coh,
                   std::string name) {
  return std::make_shared<FiniteSpace>(std::move(web), std::move(coh), std::move(name));
}

Space graph_space(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<Token> web;
  for (std::size_t i = 0; i < n; ++i) web.push_back(nat_token(i));
  auto adj = std::make_shared<std::vector<std::vector<bool>>>(n, std::vector<bool>(n, false));
  for (auto [i, j] : edges) {
    if (i >= n || j >= n) throw Error("graph edge out of range");
    (*adj)[i][j] = (*adj)[j][i] = true;
  }
  return finite_space(
      std::move(web),
      [adj](Token a, Token b) { return (*adj)[*nat_value(a)][*nat_value(b)]; },
      "graph" + std::to_string(n));
}

Space dual(Space e) { return std::make_shared<DualSpace>(std::move(e)); }
Space tensor(Space e, Space f) { return std::make_shared<TensorSpace>(std::move(e), std::move(f)); }
Space par(Space e, Space f) { return std::make_shared<ParSpace>(std::move(e), std::move(f)); }
Space plus(Space e, Space f) { return std::make_shared<PlusSpace>(std::move(e), std::move(f)); }
Space with(Space e, Space f) { return std::make_shared<WithSpace>(std::move(e), std::move(f)); }
Space lolli(Space e, Space f) { return std::make_shared<LolliSpace>(std::move(e), std::move(f)); }
Space bang(Space e) { return std::make_shared<BangSpace>(std::move(e)); }
Space whynot(Space e) { return dual(bang(dual(std::move(e)))); }
Space truncate(Space e, std::size_t k) { return std::make_shared<TruncateSpace>(std::move(e), k); }

Space connective(Connective k, Space e, Space f) {
  switch (k) {
    case Connective::Tensor:
      return tensor(std::move(e), std::move(f));
    case Connective::Par:
      return par(std::move(e), std::move(f));
    case Connective::Plus:
      return plus(std::move(e), std::move(f));
    case Connective::With:
      return with(std::move(e), std::move(f));
  }
  return nullptr;
}

bool is_clique(const CoherenceSpace& e, std::span<const Token> tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!e.contains(tokens[i])) return false;
    for (std::size_t j = i + 1; j < tokens.size(); ++j)
      if (!e.coh(tokens[i], tokens[j])) return false;
  }
  return true;
}

std::vector<Token> enumerate_web(const Space& e, std::size_t size_bound) {
  return e->enumerate(size_bound);
}

std::optional<std::pair<Space, Space>> lolli_parts(const Space& s) {
  if (s->kind() == SpaceKind::Lolli) return std::make_pair(s->operands()[0], s->operands()[1]);
  if (s->kind() == SpaceKind::Par && s->operands()[0]->kind() == SpaceKind::Dual)
    return std::make_pair(s->operands()[0]->operands()[0], s->operands()[1]);
  return std::nullopt;
}

}  // namespace mull

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
#include "mull/showcase.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "mull/errors.hpp"
#include "mull/interp.hpp"

namespace mull {

// ---------------------------------------------------------------------------
// Lazy integers.

namespace {

Space lnat_space() {
  static const Space s = space_of(lazy_nat_formula());
  return s;
}

constexpr std::size_t kMaxLazyTokens = 20;

}  // namespace

Clique lazy_int(std::size_t k) {
  std::vector<Token> cur{Token::in(1, Token::unit())};
  for (std::size_t i = 0; i < k; ++i) {
    if (cur.size() > kMaxLazyTokens)
      throw SizeGuardError("x(" + std::to_string(i + 1) + ") would have 2^" +
                           std::to_string(cur.size()) + " tokens");
    std::vector<Token> next;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << cur.size()); ++m) {
      std::vector<Token> s;
      for (std::size_t j = 0; j < cur.size(); ++j)
        if (m >> j & 1) s.push_back(cur[j]);
      next.push_back(Token::in(2, Token::set(std::move(s))));
    }
    canonicalize(next);
    cur = std::move(next);
  }
  return Clique::of(lnat_space(), cur);
}

Clique partial_int() { return Clique::of(lnat_space(), {Token::in(2, Token::empty_set())}); }

Clique is_zero_clique() {
  Space s = lolli(lnat_space(), space_of(parse_formula("(plus one one)")));
  Token one = Token::unit();
  return Clique::of(s, {Token::pair(Token::in(1, one), Token::in(1, one)),
                        Token::pair(Token::in(2, Token::empty_set()), Token::in(2, one))});
}

// ---------------------------------------------------------------------------
// Streams.

std::string stream_word(Token t) {
  std::string out;
  while (true) {
    if (!t.is_in()) throw Error("not a stream token: " + t.str());
    if (t.side() == 1) return out;
    Token b = t.body();
    if (!b.is_in()) throw Error("not a stream token: " + t.str());
    out += b.side() == 1 ? '0' : '1';
    t = b.body();
  }
}

Token stream_token(std::string_view word) {
  Token t = Token::in(1, Token::unit());
  for (std::size_t i = word.size(); i-- > 0;) {
    if (word[i] != '0' && word[i] != '1') throw Error("stream words use the letters 0 and 1");
    t = Token::in(2, Token::in(word[i] == '0' ? 1 : 2, t));
  }
  return t;
}

FinSpace stream_space(std::size_t depth) { return formula_web(stream_formula(), depth + 1); }

bool StreamFacts::ok() const {
  return tokens == expected_tokens && prefix_coherence && max_chain == depth + 1 &&
         chains_maximal_ok && antichain_meets_all;
}

StreamFacts stream_facts(std::size_t depth) {
  StreamFacts f;
  f.depth = depth;
  FinSpace e = stream_space(depth);
  f.tokens = e.size();
  f.expected_tokens = (std::size_t{1} << (depth + 1)) - 1;
  f.prefix_coherence = true;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) {
      std::string a = stream_word(e.web[i]), b = stream_word(e.web[j]);
      bool prefix = a.compare(0, b.size(), b) == 0 || b.compare(0, a.size(), a) == 0;
      if (prefix != static_cast<bool>(e.coh[i] >> j & 1)) f.prefix_coherence = false;
    }
  TotalityConfig cfg;
  cfg.max_web = 64;
  CliqueSet all = all_cliques(e, cfg);
  std::uint64_t anti = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (stream_word(e.web[i]).size() == depth) anti |= std::uint64_t{1} << i;
  f.chains_maximal_ok = true;
  f.antichain_meets_all = fin_dual(e).is_clique(anti);
  for (std::uint64_t m : all) {
    std::size_t n = static_cast<std::size_t>(std::popcount(m));
    f.max_chain = std::max(f.max_chain, n);
    bool maximal = true;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (!(m >> v & 1) && (e.coh[v] & m) == m) maximal = false;
    if (!maximal) continue;
    if (n != depth + 1) f.chains_maximal_ok = false;
    if ((m & anti) == 0) f.antichain_meets_all = false;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Trees.

Formula exclmu_formula(const Formula& a) {
  Formula z = Formula::var("z");
  return Formula::nu("z", Formula::with(Formula::one(), Formula::with(a, Formula::tensor(z, z))));
}

Formula intmu_formula(const Formula& a) { return negate(exclmu_formula(negate(a))); }

Token tree_w() { return Token::in(1, Token::unit()); }
Token tree_d(Token a) { return Token::in(2, Token::in(1, a)); }
Token tree_c(Token l, Token r) { return Token::in(2, Token::in(2, Token::pair(l, r))); }

std::optional<TreeView> tree_view(Token t) {
  if (!t.is_in()) return std::nullopt;
  if (t.side() == 1) {
    if (!t.body().is_unit()) return std::nullopt;
    return TreeView{TreeKind::W, {}, {}, {}};
  }
  Token b = t.body();
  if (!b.is_in()) return std::nullopt;
  if (b.side() == 1) return TreeView{TreeKind::D, b.body(), {}, {}};
  if (!b.body().is_pair()) return std::nullopt;
  return TreeView{TreeKind::C, {}, b.body().left(), b.body().right()};
}

namespace {
TreeView view(Token t) {
  auto v = tree_view(t);
  if (!v) throw Error("not a tree token: " + t.str());
  return *v;
}
}  // namespace

std::string tree_str(Token t) {
  TreeView v = view(t);
  switch (v.kind) {
    case TreeKind::W:
      return "W";
    case TreeKind::D:
      return "D(" + v.leaf.str() + ")";
    case TreeKind::C:
      return "C(" + tree_str(v.left) + "," + tree_str(v.right) + ")";
  }
  return "?";
}

std::size_t tree_depth(Token t) {
  TreeView v = view(t);
  if (v.kind != TreeKind::C) return 0;
  return 1 + std::max(tree_depth(v.left), tree_depth(v.right));
}

namespace {

class ExclMuSpace final : public CoherenceSpace {
 public:
  explicit ExclMuSpace(Space x) : x_(std::move(x)) {}

  bool contains(Token t) const override {
    auto v = tree_view(t);
    if (!v) return false;
    switch (v->kind) {
      case TreeKind::W:
        return true;
      case TreeKind::D:
        return x_->contains(v->leaf);
      case TreeKind::C:
        return contains(v->left) && contains(v->right);
    }
    return false;
  }

  bool coh(Token a, Token b) const override {
    TreeView u = view(a), v = view(b);
    if (u.kind != v.kind) return true;
    switch (u.kind) {
      case TreeKind::W:
        return true;
      case TreeKind::D:
        return x_->coh(u.leaf, v.leaf);
      case TreeKind::C:
        return coh(u.left, v.left) && coh(u.right, v.right);
    }
    return false;
  }

  std::string describe() const override { return "!mu(" + x_->describe() + ")"; }

 protected:
  std::vector<Token> generate(std::size_t bound) const override {
    std::vector<Token> out;
    if (tree_w().size() <= bound) out.push_back(tree_w());
    if (bound >= 3)
      for (Token a : x_->enumerate(bound - 2)) out.push_back(tree_d(a));
    if (bound >= 7) {
      std::vector<Token> sub = enumerate(bound - 5);
      for (Token l : sub)
        for (Token r : sub)
          if (3 + l.size() + r.size() <= bound) out.push_back(tree_c(l, r));
    }
    return out;
  }

 private:
  Space x_;
};

}  // namespace

Space exclmu_space(Space x) { return std::make_shared<ExclMuSpace>(std::move(x)); }

std::vector<Token> exclmu_trees(std::span<const Token> leaves, std::size_t depth) {
  std::vector<Token> cur{tree_w()};
  for (Token a : leaves) cur.push_back(tree_d(a));
  std::vector<Token> base = cur;
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Token> next = base;
    for (Token l : cur)
      for (Token r : cur) next.push_back(tree_c(l, r));
    cur = std::move(next);
  }
  canonicalize(cur);
  return cur;
}

// ---------------------------------------------------------------------------
// Relations.

namespace {
bool pair_less(const std::pair<Token, Token>& a, const std::pair<Token, Token>& b) {
  if (auto c = compare(a.first, b.first); c != 0) return c < 0;
  return compare(a.second, b.second) < 0;
}
}  // namespace

void normalize(Rel& r) {
  std::sort(r.begin(), r.end(), pair_less);
  r.erase(std::unique(r.begin(), r.end()), r.end());
}

Rel rel_compose(const Rel& r, const Rel& s) {
  std::unordered_multimap<Token, Token, TokenHash> by_src;
  for (const auto& [b, c] : s) by_src.emplace(b, c);
  Rel out;
  for (const auto& [a, b] : r) {
    auto [lo, hi] = by_src.equal_range(b);
    for (auto it = lo; it != hi; ++it) out.emplace_back(a, it->second);
  }
  normalize(out);
  return out;
}

Rel rel_tensor(const Rel& r, const Rel& s) {
  Rel out;
  for (const auto& [a, b] : r)
    for (const auto& [c, d] : s) out.emplace_back(Token::pair(a, c), Token::pair(b, d));
  normalize(out);
  return out;
}

Rel rel_identity(std::span<const Token> web) {
  Rel out;
  for (Token t : web) out.emplace_back(t, t);
  normalize(out);
  return out;
}

Clique rel_clique(const Space& from, const Space& to, const Rel& r) {
  std::vector<Token> ts;
  for (const auto& [a, b] : r) ts.push_back(Token::pair(a, b));
  return Clique::of(lolli(from, to), ts);
}

Rel dermu(std::span<const Token> leaves, std::size_t depth) {
  Rel out;
  for (Token t : exclmu_trees(leaves, depth))
    if (view(t).kind == TreeKind::D) out.emplace_back(t, view(t).leaf);
  normalize(out);
  return out;
}

Rel weakmu(std::span<const Token> leaves, std::size_t depth) {
  (void)leaves;
  (void)depth;
  return {{tree_w(), Token::unit()}};
}

Rel contrmu(std::span<const Token> leaves, std::size_t depth) {
  Rel out;
  for (Token t : exclmu_trees(leaves, depth)) {
    TreeView v = view(t);
    if (v.kind == TreeKind::C) out.emplace_back(t, Token::pair(v.left, v.right));
  }
  normalize(out);
  return out;
}

Rel exclmu_map(const Rel& f, std::span<const Token> leaves, std::size_t depth) {
  std::function<std::vector<Token>(Token)> images = [&](Token t) -> std::vector<Token> {
    TreeView v = view(t);
    std::vector<Token> out;
    switch (v.kind) {
      case TreeKind::W:
        out.push_back(tree_w());
        break;
      case TreeKind::D:
        for (const auto& [a, b] : f)
          if (a == v.leaf) out.push_back(tree_d(b));
        break;
      case TreeKind::C:
        for (Token l : images(v.left))
          for (Token r : images(v.right)) out.push_back(tree_c(l, r));
        break;
    }
    return out;
  };
  Rel out;
  for (Token t : exclmu_trees(leaves, depth))
    for (Token b : images(t)) out.emplace_back(t, b);
  normalize(out);
  return out;
}

PromResult prommu(const Rel& f, std::span<const Token> src, std::size_t depth) {
  std::unordered_set<Token, TokenHash> in_src(src.begin(), src.end());
  std::map<Token, std::vector<Token>> fimg;
  for (const auto& [a, b] : f) fimg[a].push_back(b);
  PromResult r;
  std::map<Token, std::vector<Token>> cur;
  while (true) {
    std::map<Token, std::vector<Token>> next;
    for (Token a : src) {
      std::vector<Token>& out = next[a];
      TreeView v = view(a);
      if (v.kind == TreeKind::W) out.push_back(tree_w());
      if (auto it = fimg.find(a); it != fimg.end())
        for (Token b : it->second) out.push_back(tree_d(b));
      if (v.kind == TreeKind::C && cur.count(v.left) && cur.count(v.right))
        for (Token x : cur[v.left])
          for (Token y : cur[v.right]) {
            Token c = tree_c(x, y);
            if (tree_depth(c) <= depth) out.push_back(c);
          }
      canonicalize(out);
    }
    ++r.rounds;
    if (next == cur) break;
    cur = std::move(next);
  }
  for (const auto& [a, bs] : cur)
    for (Token b : bs) r.rel.emplace_back(a, b);
  normalize(r.rel);
  return r;
}

PromResult diggmu(std::span<const Token> leaves, std::size_t depth) {
  std::vector<Token> trees = exclmu_trees(leaves, depth);
  return prommu(rel_identity(trees), trees, depth);
}

// ---------------------------------------------------------------------------
// Seely maps.

namespace {
Token tree_side(Token t, int side) {
  TreeView v = view(t);
  switch (v.kind) {
    case TreeKind::W:
      return t;
    case TreeKind::D:
      return tree_d(Token::in(side, v.leaf));
    case TreeKind::C:
      return tree_c(tree_side(v.left, side), tree_side(v.right, side));
  }
  return t;
}

Token tree_project(Token t, int side) {
  TreeView v = view(t);
  switch (v.kind) {
    case TreeKind::W:
      return t;
    case TreeKind::D:
      if (!v.leaf.is_in()) throw Error("leaf is not a with token: " + v.leaf.str());
      return v.leaf.side() == side ? tree_d(v.leaf.body()) : tree_w();
    case TreeKind::C:
      return tree_c(tree_project(v.left, side), tree_project(v.right, side));
  }
  return t;
}

std::vector<Token> with_leaves(std::span<const Token> xs, std::span<const Token> ys) {
  std::vector<Token> out;
  for (Token a : xs) out.push_back(Token::in(1, a));
  for (Token b : ys) out.push_back(Token::in(2, b));
  return out;
}
}  // namespace

Token tree_inl(Token alpha) { return tree_side(alpha, 1); }
Token tree_inr(Token beta) { return tree_side(beta, 2); }
Token tree_prl(Token gamma) { return tree_project(gamma, 1); }
Token tree_prr(Token gamma) { return tree_project(gamma, 2); }

PromResult seely_mu(std::span<const Token> xs, std::span<const Token> ys, std::size_t depth) {
  std::vector<Token> gammas = exclmu_trees(with_leaves(xs, ys), depth);
  PromResult r;
  std::map<Token, std::vector<Token>> cur;  // gamma -> pairs (alpha, beta)
  while (true) {
    std::map<Token, std::vector<Token>> next;
    for (Token g : gammas) {
      std::vector<Token>& out = next[g];
      TreeView v = view(g);
      if (v.kind == TreeKind::W) out.push_back(Token::pair(tree_w(), tree_w()));
      if (v.kind == TreeKind::D) {
        if (v.leaf.side() == 1) out.push_back(Token::pair(tree_d(v.leaf.body()), tree_w()));
        else out.push_back(Token::pair(tree_w(), tree_d(v.leaf.body())));
      }
      if (v.kind == TreeKind::C && cur.count(v.left) && cur.count(v.right))
        for (Token p : cur[v.left])
          for (Token q : cur[v.right])
            out.push_back(Token::pair(tree_c(p.left(), q.left()), tree_c(p.right(), q.right())));
      canonicalize(out);
    }
    ++r.rounds;
    if (next == cur) break;
    cur = std::move(next);
  }
  for (const auto& [g, ps] : cur)
    for (Token p : ps) r.rel.emplace_back(p, g);
  normalize(r.rel);
  return r;
}

Rel seelyinv_mu(std::span<const Token> xs, std::span<const Token> ys, std::size_t depth) {
  Rel out;
  if (depth == 0) return out;
  for (Token a : exclmu_trees(xs, depth - 1))
    for (Token b : exclmu_trees(ys, depth - 1))
      out.emplace_back(tree_c(tree_inl(a), tree_inr(b)), Token::pair(a, b));
  normalize(out);
  return out;
}

SeelyFailure seely_failure(std::span<const Token> xs, std::span<const Token> ys, std::size_t depth) {
  SeelyFailure f;
  f.depth = depth;
  std::vector<Token> gammas = exclmu_trees(with_leaves(xs, ys), depth);
  std::vector<Token> as = exclmu_trees(xs, depth), bs = exclmu_trees(ys, depth);
  f.web_with = gammas.size();
  f.web_tensor = as.size() * bs.size();

  // seelyinv: (alpha, beta) -> gamma.
  Rel inv = seelyinv_mu(xs, ys, depth);
  std::unordered_set<Token, TokenHash> inv_image;
  std::unordered_set<Token, TokenHash> inv_src;
  for (const auto& [g, p] : inv) {
    inv_image.insert(g);
    inv_src.insert(p);
  }
  f.seelyinv_image = inv_image.size();
  f.seelyinv_injective = inv_image.size() == inv.size() && inv_src.size() == inv.size();
  for (Token g : gammas)
    if (!inv_image.count(g) && view(g).kind == TreeKind::D) {
      f.seelyinv_witness = g;
      break;
    }

  // seely: gamma -> (alpha, beta).
  Rel se = seely_mu(xs, ys, depth).rel;
  std::map<Token, std::vector<Token>> by_gamma;
  std::unordered_set<Token, TokenHash> se_image;
  for (const auto& [p, g] : se) {
    by_gamma[g].push_back(p);
    se_image.insert(p);
  }
  f.seely_functional = by_gamma.size() == gammas.size();
  for (const auto& [g, ps] : by_gamma)
    if (ps.size() != 1 || !(ps[0] == Token::pair(tree_prl(g), tree_prr(g)))) f.seely_functional = false;
  f.seely_image = se_image.size();
  f.seely_injective = se_image.size() == se.size();
  for (Token a : as) {
    for (Token b : bs)
      if (!se_image.count(Token::pair(a, b))) {
        f.seely_witness = Token::pair(a, b);
        break;
      }
    if (f.seely_witness) break;
  }
  return f;
}

Token iso_failure_witness(std::span<const Token> xs, std::span<const Token> ys, std::size_t depth) {
  if (xs.empty() && ys.empty()) throw Error("the witness needs a leaf in X or Y");
  SeelyFailure f = seely_failure(xs, ys, depth);
  if (!f.seelyinv_witness) throw Error("internal: no dereliction leaf outside the image");
  return *f.seelyinv_witness;
}

// ---------------------------------------------------------------------------
// Redex corpus.

const std::vector<NamedRedex>& redex_corpus() {
  static const std::vector<NamedRedex> corpus = [] {
    Formula nat = nat_formula();
    Formula one = Formula::one();
    std::vector<NamedRedex> out;
    Proof iter_succ = nat_iter(zero_proof(), succ_proof(pr::ax(nat), 1));
    out.push_back({"numeral-2-iter-succ", pr::cut(numeral_proof(2), 0, iter_succ, 0), RedexKind::MuNu});
    out.push_back({"iter-succ-numeral-3", pr::cut(iter_succ, 0, numeral_proof(3), 0), RedexKind::MuNu});
    Proof dbl = nat_iter(zero_proof(), succ_proof(succ_proof(pr::ax(nat), 1), 1));
    out.push_back({"numeral-1-iter-double", pr::cut(numeral_proof(1), 0, dbl, 0), RedexKind::MuNu});

    Proof step = pr::arrange(pr::weak(succ_proof(pr::ax(nat), 1), one),
                             {Formula::whynot(one), negate(nat), nat});
    Proof base = pr::arrange(pr::weak(zero_proof(), one), {Formula::whynot(one), nat});
    Proof it = nat_iter(base, step);
    out.push_back({"numeral-2-iter-with-context", pr::cut(numeral_proof(2), 0, it, 1), RedexKind::MuNu});

    // Case analysis: 0 -> 0, n+1 -> n+2, by unfolding Nat^ once.
    Proof on_zero = pr::bot(zero_proof());
    Proof on_succ = pr::perm(succ_proof(pr::ax(nat), 1), {1, 0});
    Proof cases = pr::nufold(pr::with(on_zero, 1, on_succ, 1), 1, negate(nat));
    out.push_back({"numeral-2-cases", pr::cut(numeral_proof(2), 0, cases, 1), RedexKind::MuNuFold});
    out.push_back({"cases-numeral-0", pr::cut(cases, 1, numeral_proof(0), 0), RedexKind::MuNuFold});

    // Open redexes: the successor of an axiom against iteration and cases.
    Proof open_succ = succ_proof(pr::ax(nat), 1);
    out.push_back({"open-succ-iter-succ", pr::cut(open_succ, 1, iter_succ, 0), RedexKind::MuNu});
    out.push_back({"open-succ-iter-double", pr::cut(open_succ, 1, dbl, 0), RedexKind::MuNu});
    out.push_back({"open-succ-cases", pr::cut(open_succ, 1, cases, 1), RedexKind::MuNuFold});

    Proof mu1 = pr::mu(pr::one(), 0, parse_formula("(mu x one)"));
    Proof nu2 = pr::nufold(pr::bot(pr::ax(one)), 2, parse_formula("(nu x bot)"));
    out.push_back({"unit-fold", pr::cut(mu1, 0, nu2, 2), RedexKind::MuNuFold});
    return out;
  }();
  return corpus;
}

}  // namespace mull

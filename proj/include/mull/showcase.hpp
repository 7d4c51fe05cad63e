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
#ifndef MULL_SHOWCASE_HPP
#define MULL_SHOWCASE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mull/clique.hpp"
#include "mull/proof.hpp"
#include "mull/totality.hpp"

namespace mull {

// ---------------------------------------------------------------------------
// Lazy integers.

// x(0) = {(1,*)}, x(k+1) = {(2,s) | s a finite subset of x(k)}.
Clique lazy_int(std::size_t k);
// {(2,{})}: a successor whose predecessor is never inspected.
Clique partial_int();
// {((1,*),(1,*)), ((2,{}),(2,*))} in the space of the is-zero proof.
Clique is_zero_clique();

// ---------------------------------------------------------------------------
// Boolean streams nu z. 1 & (z + z).

// Tokens as words: "" is the end marker, "0w" and "1w" prefix a bit.
std::string stream_word(Token t);
Token stream_token(std::string_view word);
// The truncation holding every word of length <= depth.
FinSpace stream_space(std::size_t depth);

struct StreamFacts {
  std::size_t depth = 0;
  std::size_t tokens = 0;
  std::size_t expected_tokens = 0;
  bool prefix_coherence = false;   // coherent iff one word is a prefix of the other
  std::size_t max_chain = 0;       // length of the longest clique
  bool chains_maximal_ok = false;  // every maximal clique has depth+1 words
  bool antichain_meets_all = false;  // words of length depth meet every maximal clique
  bool ok() const;
};
StreamFacts stream_facts(std::size_t depth);

// ---------------------------------------------------------------------------
// The encoded exponential nu z. 1 & (X & (z * z)).

Formula exclmu_formula(const Formula& a);
Formula intmu_formula(const Formula& a);

enum class TreeKind { W, D, C };
struct TreeView {
  TreeKind kind;
  Token leaf;         // D
  Token left, right;  // C
};

Token tree_w();
Token tree_d(Token a);
Token tree_c(Token l, Token r);
std::optional<TreeView> tree_view(Token t);
std::string tree_str(Token t);
// Nesting of C nodes.
std::size_t tree_depth(Token t);

// Tree-view coherence space over the coherence space x.
Space exclmu_space(Space x);
// Every tree with C-nesting <= depth over the given leaves, canonically ordered.
std::vector<Token> exclmu_trees(std::span<const Token> leaves, std::size_t depth);

// Finite relations, sorted and deduplicated.
using Rel = std::vector<std::pair<Token, Token>>;
void normalize(Rel& r);
// r then s.
Rel rel_compose(const Rel& r, const Rel& s);
Rel rel_tensor(const Rel& r, const Rel& s);
Rel rel_identity(std::span<const Token> web);
Clique rel_clique(const Space& from, const Space& to, const Rel& r);

// Co-structure on trees of C-nesting <= depth.
Rel dermu(std::span<const Token> leaves, std::size_t depth);
Rel weakmu(std::span<const Token> leaves, std::size_t depth);
Rel contrmu(std::span<const Token> leaves, std::size_t depth);
// Same shape, D-leaves related by f.
Rel exclmu_map(const Rel& f, std::span<const Token> leaves, std::size_t depth);

struct PromResult {
  Rel rel;
  std::size_t rounds = 0;  // iterations until the chain was stable
};
// The least relation P from the source trees to trees of C-nesting <= depth with
// weak . P = weak, der . P = f, contr . P = (P * P) . contr.
PromResult prommu(const Rel& f, std::span<const Token> src, std::size_t depth);
PromResult diggmu(std::span<const Token> leaves, std::size_t depth);

// Seely maps between !X * !Y and !(X & Y); leaves of X & Y are In(1,a), In(2,b).
Token tree_inl(Token alpha);
Token tree_inr(Token beta);
// gamma with the leaves of the other side replaced by W.
Token tree_prl(Token gamma);
Token tree_prr(Token gamma);

// ((alpha, beta), gamma), computed as a least fixed point by chain iteration.
PromResult seely_mu(std::span<const Token> xs, std::span<const Token> ys, std::size_t depth);
// (gamma, (alpha, beta)) with gamma = C(inl alpha, inr beta).
Rel seelyinv_mu(std::span<const Token> xs, std::span<const Token> ys, std::size_t depth);

struct SeelyFailure {
  std::size_t depth = 0;
  std::size_t web_with = 0;     // trees over X & Y
  std::size_t web_tensor = 0;   // pairs of trees
  bool seely_functional = false;  // each gamma has exactly one (alpha, beta)
  bool seely_injective = false;
  bool seelyinv_injective = false;
  std::size_t seely_image = 0;
  std::size_t seelyinv_image = 0;
  std::optional<Token> seelyinv_witness;  // tree outside the image of seelyinv_mu
  std::optional<Token> seely_witness;     // pair outside the image of seely_mu
};
SeelyFailure seely_failure(std::span<const Token> xs, std::span<const Token> ys, std::size_t depth);
// A dereliction leaf of !(X & Y), never in the image of seelyinv_mu.
Token iso_failure_witness(std::span<const Token> xs, std::span<const Token> ys, std::size_t depth);

// ---------------------------------------------------------------------------
// Redexes for the invariance check.

struct NamedRedex {
  std::string name;
  Proof proof;
  RedexKind kind;
};
const std::vector<NamedRedex>& redex_corpus();

}  // namespace mull

#endif  // MULL_SHOWCASE_HPP

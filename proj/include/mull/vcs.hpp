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

#ifndef MULL_VCS_HPP
#define MULL_VCS_HPP

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "mull/clique.hpp"
#include "mull/space.hpp"

namespace mull {

enum class VcsKind { Const, Var, Tensor, Par, Plus, With, Bang, WhyNot, Compose, Fix };

struct VcsNode;

// Variable coherence space: an n-ary strong functor on coherence spaces.
class Vcs {
 public:
  explicit Vcs(std::shared_ptr<const VcsNode> node) : node_(std::move(node)) {}

  std::size_t arity() const;
  VcsKind kind() const;
  const VcsNode& node() const { return *node_; }
  const std::shared_ptr<const VcsNode>& ptr() const { return node_; }

  Space obj(std::span<const Space> xs) const;
  Space obj() const { return obj(std::span<const Space>{}); }
  // fs[i] : X_i -o Y_i.
  Clique mor(std::span<const Clique> fs) const;
  // Clique of (!Y (x) F(Xs)) -o F(!Y (x) Xs).
  Clique strength(Space y, std::span<const Space> xs) const;

 private:
  std::shared_ptr<const VcsNode> node_;
};

struct VcsNode {
  VcsKind kind;
  std::size_t arity;
  Space constant;             // Const
  std::size_t index = 0;      // Var
  std::vector<Vcs> children;  // connectives, Bang/WhyNot (1), Compose (F, Gs...), Fix (body)
};

Vcs vcs_const(Space e, std::size_t arity = 0);
Vcs vcs_var(std::size_t i, std::size_t n);
Vcs vcs_connective(Connective k, Vcs f, Vcs g);
Vcs vcs_bang(Vcs f);
Vcs vcs_whynot(Vcs f);
// De Morgan dual, pushed through the constructors.
Vcs vcs_dual(Vcs f);
Vcs vcs_compose(Vcs f, std::vector<Vcs> gs);
// Fixed point in the last variable.
Vcs vcs_fix(Vcs f);

// The space F^stage(empty) for a Fix node, used for rank-bounded checks.
Space fix_stage(const Vcs& fix, std::span<const Space> xs, std::size_t stage);

// One output of the contextual action: a context (one finite set per context
// component) and an output token.
struct ActElem {
  std::vector<Token> ctx;
  Token out;
  friend bool operator==(const ActElem&, const ActElem&) = default;
};
using ImageFn = std::function<std::vector<ActElem>(Token)>;

// Contextual action of a Vcs: each variable position i is acted on by an
// image function Token -> {(ctx, out)}; contexts are merged by union and must
// stay cliques of the given context spaces. Const positions consume the empty
// context. With the empty context this is the morphism action, with the
// identity images it is the strength.
class VcsAction {
 public:
  VcsAction(const Vcs& f, std::vector<Space> targets, std::vector<Space> ctx_spaces,
            std::size_t bound);
  ~VcsAction();
  VcsAction(const VcsAction&) = delete;
  VcsAction& operator=(const VcsAction&) = delete;

  std::vector<ActElem> run(Token input, std::span<const ImageFn> env) const;
  const Space& target() const;
  std::size_t ctx_arity() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<Token> empty_ctx(std::size_t n);
// Componentwise union, provided each component stays a clique.
std::optional<std::vector<Token>> merge_ctx(const std::vector<Space>& spaces,
                                            const std::vector<Token>& a,
                                            const std::vector<Token>& b);
void canonicalize(std::vector<ActElem>& elems);

}  // namespace mull

#endif  // MULL_VCS_HPP

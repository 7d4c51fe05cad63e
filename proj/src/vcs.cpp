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

#include "mull/vcs.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "mull/errors.hpp"

namespace mull {

namespace {

class FixSpace final : public CoherenceSpace {
 public:
  FixSpace(Vcs body, std::vector<Space> xs) : body_(std::move(body)), xs_(std::move(xs)) {}

  bool contains(Token a) const override { return stage(a.size() + 1)->contains(a); }
  bool coh(Token a, Token b) const override {
    return stage(std::max(a.size(), b.size()) + 1)->coh(a, b);
  }
  std::string describe() const override { return "fix"; }

  Space stage(std::size_t s) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (stages_.empty()) stages_.push_back(top_space());
    while (stages_.size() <= s) {
      std::vector<Space> args = xs_;
      args.push_back(stages_.back());
      stages_.push_back(body_.obj(args));
    }
    return stages_[s];
  }

 protected:
  std::vector<Token> generate(std::size_t bound) const override {
    return stage(bound + 1)->enumerate(bound);
  }

 private:
  Vcs body_;
  std::vector<Space> xs_;
  mutable std::mutex mu_;
  mutable std::vector<Space> stages_;
};

Vcs make(VcsKind k, std::size_t arity, std::vector<Vcs> kids = {}, Space c = nullptr,
         std::size_t index = 0) {
  auto n = std::make_shared<VcsNode>();
  n->kind = k;
  n->arity = arity;
  n->constant = std::move(c);
  n->index = index;
  n->children = std::move(kids);
  return Vcs(std::move(n));
}

Connective connective_of(VcsKind k) {
  switch (k) {
    case VcsKind::Tensor:
      return Connective::Tensor;
    case VcsKind::Par:
      return Connective::Par;
    case VcsKind::Plus:
      return Connective::Plus;
    default:
      return Connective::With;
  }
}

VcsKind kind_of(Connective k) {
  switch (k) {
    case Connective::Tensor:
      return VcsKind::Tensor;
    case Connective::Par:
      return VcsKind::Par;
    case Connective::Plus:
      return VcsKind::Plus;
    case Connective::With:
      return VcsKind::With;
  }
  return VcsKind::Tensor;
}

}  // namespace

std::size_t Vcs::arity() const { return node_->arity; }
VcsKind Vcs::kind() const { return node_->kind; }

Vcs vcs_const(Space e, std::size_t arity) { return make(VcsKind::Const, arity, {}, std::move(e)); }

Vcs vcs_var(std::size_t i, std::size_t n) {
  if (i >= n) throw Error("variable index out of range");
  return make(VcsKind::Var, n, {}, nullptr, i);
}

Vcs vcs_connective(Connective k, Vcs f, Vcs g) {
  if (f.arity() != g.arity()) throw Error("arity mismatch in connective");
  std::size_t n = f.arity();
  return make(kind_of(k), n, {std::move(f), std::move(g)});
}

Vcs vcs_bang(Vcs f) {
  std::size_t n = f.arity();
  return make(VcsKind::Bang, n, {std::move(f)});
}

Vcs vcs_whynot(Vcs f) {
  std::size_t n = f.arity();
  return make(VcsKind::WhyNot, n, {std::move(f)});
}

Vcs vcs_compose(Vcs f, std::vector<Vcs> gs) {
  if (f.arity() != gs.size()) throw Error("compose: arity of outer functor mismatch");
  std::size_t m = gs.empty() ? 0 : gs[0].arity();
  for (const Vcs& g : gs)
    if (g.arity() != m) throw Error("compose: inner arities differ");
  std::vector<Vcs> kids{std::move(f)};
  for (Vcs& g : gs) kids.push_back(std::move(g));
  return make(VcsKind::Compose, m, std::move(kids));
}

Vcs vcs_fix(Vcs f) {
  if (f.arity() == 0) throw Error("fix needs a functor of arity at least 1");
  std::size_t n = f.arity() - 1;
  return make(VcsKind::Fix, n, {std::move(f)});
}

Vcs vcs_dual(Vcs f) {
  const VcsNode& n = f.node();
  switch (n.kind) {
    case VcsKind::Const:
      return vcs_const(dual(n.constant), n.arity);
    case VcsKind::Var:
      return f;
    case VcsKind::Tensor:
      return vcs_connective(Connective::Par, vcs_dual(n.children[0]), vcs_dual(n.children[1]));
    case VcsKind::Par:
      return vcs_connective(Connective::Tensor, vcs_dual(n.children[0]), vcs_dual(n.children[1]));
    case VcsKind::Plus:
      return vcs_connective(Connective::With, vcs_dual(n.children[0]), vcs_dual(n.children[1]));
    case VcsKind::With:
      return vcs_connective(Connective::Plus, vcs_dual(n.children[0]), vcs_dual(n.children[1]));
    case VcsKind::Bang:
      return vcs_whynot(vcs_dual(n.children[0]));
    case VcsKind::WhyNot:
      return vcs_bang(vcs_dual(n.children[0]));
    case VcsKind::Compose: {
      std::vector<Vcs> gs;
      for (std::size_t i = 1; i < n.children.size(); ++i) gs.push_back(vcs_dual(n.children[i]));
      return vcs_compose(vcs_dual(n.children[0]), std::move(gs));
    }
    case VcsKind::Fix:
      return vcs_fix(vcs_dual(n.children[0]));
  }
  return f;
}

Space Vcs::obj(std::span<const Space> xs) const {
  const VcsNode& n = *node_;
  if (xs.size() != n.arity) throw Error("obj: wrong number of arguments");
  switch (n.kind) {
    case VcsKind::Const:
      return n.constant;
    case VcsKind::Var:
      return xs[n.index];
    case VcsKind::Tensor:
    case VcsKind::Par:
    case VcsKind::Plus:
    case VcsKind::With:
      return connective(connective_of(n.kind), n.children[0].obj(xs), n.children[1].obj(xs));
    case VcsKind::Bang:
      return bang(n.children[0].obj(xs));
    case VcsKind::WhyNot:
      return whynot(n.children[0].obj(xs));
    case VcsKind::Compose: {
      std::vector<Space> inner;
      for (std::size_t i = 1; i < n.children.size(); ++i) inner.push_back(n.children[i].obj(xs));
      return n.children[0].obj(inner);
    }
    case VcsKind::Fix:
      return std::make_shared<FixSpace>(n.children[0],
                                        std::vector<Space>(xs.begin(), xs.end()));
  }
  return nullptr;
}

Space fix_stage(const Vcs& fix, std::span<const Space> xs, std::size_t stage) {
  if (fix.kind() != VcsKind::Fix) throw Error("fix_stage expects a fixed point");
  Space s = top_space();
  for (std::size_t i = 0; i < stage; ++i) {
    std::vector<Space> args(xs.begin(), xs.end());
    args.push_back(s);
    s = fix.node().children[0].obj(args);
  }
  return s;
}

std::vector<Token> empty_ctx(std::size_t n) { return std::vector<Token>(n, Token::empty_set()); }

std::optional<std::vector<Token>> merge_ctx(const std::vector<Space>& spaces,
                                            const std::vector<Token>& a,
                                            const std::vector<Token>& b) {
  std::vector<Token> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == b[j] || b[j].elems().empty()) {
      out[j] = a[j];
      continue;
    }
    if (a[j].elems().empty()) {
      out[j] = b[j];
      continue;
    }
    for (Token x : a[j].elems()) {
      if (set_contains(b[j], x)) continue;
      for (Token y : b[j].elems())
        if (!spaces[j]->coh(x, y)) return std::nullopt;
    }
    out[j] = set_union(a[j], b[j]);
  }
  return out;
}

void canonicalize(std::vector<ActElem>& elems) {
  auto less = [](const ActElem& x, const ActElem& y) {
    for (std::size_t j = 0; j < x.ctx.size(); ++j) {
      auto c = compare(x.ctx[j], y.ctx[j]);
      if (c != 0) return c < 0;
    }
    return compare(x.out, y.out) < 0;
  };
  std::sort(elems.begin(), elems.end(), less);
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
}

// ---------------------------------------------------------------------------

namespace {

struct PNode {
  VcsKind kind;
  Space target;
  std::size_t index = 0;
  std::vector<std::unique_ptr<PNode>> kids;
};

std::unique_ptr<PNode> prepare(const Vcs& f, const std::vector<Space>& targets) {
  const VcsNode& n = f.node();
  auto p = std::make_unique<PNode>();
  p->kind = n.kind;
  switch (n.kind) {
    case VcsKind::Const:
      p->target = n.constant;
      break;
    case VcsKind::Var:
      p->index = n.index;
      p->target = targets[n.index];
      break;
    case VcsKind::Tensor:
    case VcsKind::Par:
    case VcsKind::Plus:
    case VcsKind::With:
      p->kids.push_back(prepare(n.children[0], targets));
      p->kids.push_back(prepare(n.children[1], targets));
      p->target = connective(connective_of(n.kind), p->kids[0]->target, p->kids[1]->target);
      break;
    case VcsKind::Bang:
    case VcsKind::WhyNot:
      p->kids.push_back(prepare(n.children[0], targets));
      p->target = n.kind == VcsKind::Bang ? bang(p->kids[0]->target) : whynot(p->kids[0]->target);
      break;
    case VcsKind::Compose: {
      std::vector<Space> inner;
      std::vector<std::unique_ptr<PNode>> gs;
      for (std::size_t i = 1; i < n.children.size(); ++i) {
        gs.push_back(prepare(n.children[i], targets));
        inner.push_back(gs.back()->target);
      }
      p->kids.push_back(prepare(n.children[0], inner));
      for (auto& g : gs) p->kids.push_back(std::move(g));
      p->target = p->kids[0]->target;
      break;
    }
    case VcsKind::Fix: {
      p->target = f.obj(targets);
      std::vector<Space> ext = targets;
      ext.push_back(p->target);
      p->kids.push_back(prepare(n.children[0], ext));
      break;
    }
  }
  return p;
}

struct Frame;
using FramePtr = std::shared_ptr<const Frame>;

struct Binding {
  enum Kind { External, FixSelf, ComposeArg } kind = External;
  std::size_t ext = 0;
  const PNode* node = nullptr;
  FramePtr frame;
  std::size_t stage = 0;
};

struct Frame {
  std::vector<Binding> vars;
};

struct MemoKey {
  const PNode* node;
  const Frame* frame;
  Token input;
  bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const {
    return std::hash<const void*>()(k.node) * 31 + std::hash<const void*>()(k.frame) * 17 +
           static_cast<std::size_t>(k.input.hash());
  }
};

constexpr std::size_t kMaxFanOut = 16;

class Session {
 public:
  Session(const std::vector<Space>& ctx_spaces, std::size_t bound, std::span<const ImageFn> env)
      : ctx_spaces_(ctx_spaces), bound_(bound), env_(env) {}

  std::vector<ActElem> go(const PNode& p, const FramePtr& frame, Token input) {
    std::vector<ActElem> out;
    switch (p.kind) {
      case VcsKind::Const:
        out.push_back({empty_ctx(ctx_spaces_.size()), input});
        return out;
      case VcsKind::Var:
        return call(frame->vars[p.index], input);
      case VcsKind::Tensor:
      case VcsKind::Par: {
        if (!input.is_pair()) return out;
        auto l = go(*p.kids[0], frame, input.left());
        if (l.empty()) return out;
        auto r = go(*p.kids[1], frame, input.right());
        for (const ActElem& x : l)
          for (const ActElem& y : r) {
            if (1 + x.out.size() + y.out.size() > bound_) continue;
            auto c = merge(x.ctx, y.ctx);
            if (!c) continue;
            out.push_back({std::move(*c), Token::pair(x.out, y.out)});
          }
        canonicalize(out);
        return out;
      }
      case VcsKind::Plus:
      case VcsKind::With: {
        if (!input.is_in()) return out;
        auto in = go(*p.kids[input.side() - 1], frame, input.body());
        for (ActElem& x : in) {
          if (x.out.size() + 1 > bound_) continue;
          out.push_back({std::move(x.ctx), Token::in(input.side(), x.out)});
        }
        return out;
      }
      case VcsKind::Bang:
      case VcsKind::WhyNot:
        return exponential(p, frame, input);
      case VcsKind::Compose: {
        auto f2 = std::make_shared<Frame>();
        for (std::size_t i = 1; i < p.kids.size(); ++i) {
          Binding b;
          b.kind = Binding::ComposeArg;
          b.node = p.kids[i].get();
          b.frame = frame;
          f2->vars.push_back(b);
        }
        keep_.push_back(f2);
        return go(*p.kids[0], f2, input);
      }
      case VcsKind::Fix:
        return fix(p, frame, input, input.size() + 1);
    }
    return out;
  }

 private:
  std::optional<std::vector<Token>> merge(const std::vector<Token>& a,
                                          const std::vector<Token>& b) {
    auto c = merge_ctx(ctx_spaces_, a, b);
    if (!c) return c;
    for (Token t : *c)
      if (t.size() > bound_) return std::nullopt;
    return c;
  }

  std::vector<ActElem> call(const Binding& b, Token input) {
    switch (b.kind) {
      case Binding::External:
        return env_[b.ext](input);
      case Binding::FixSelf:
        return fix(*b.node, b.frame, input, b.stage);
      case Binding::ComposeArg:
        return go(*b.node, b.frame, input);
    }
    return {};
  }

  std::vector<ActElem> fix(const PNode& p, const FramePtr& frame, Token input, std::size_t stage) {
    if (stage == 0) return {};
    bool stable = stage >= input.size() + 1;
    MemoKey key{&p, frame.get(), input};
    if (stable) {
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    auto f2 = std::make_shared<Frame>(*frame);
    Binding self;
    self.kind = Binding::FixSelf;
    self.node = &p;
    self.frame = frame;
    self.stage = stage - 1;
    f2->vars.push_back(self);
    keep_.push_back(f2);
    auto res = go(*p.kids[0], f2, input);
    if (stable) memo_.emplace(key, res);
    return res;
  }

  std::vector<ActElem> exponential(const PNode& p, const FramePtr& frame, Token input) {
    std::vector<ActElem> out;
    if (!input.is_set()) return out;
    auto elems = input.elems();
    std::vector<std::vector<ActElem>> images;
    for (Token d : elems) {
      images.push_back(go(*p.kids[0], frame, d));
      if (images.back().empty()) return out;
      if (images.back().size() > kMaxFanOut)
        throw BudgetError("exponential action fan-out too large", bound_);
    }
    std::vector<Token> outs;
    std::size_t out_size = 1;
    std::function<void(std::size_t, const std::vector<Token>&)> pick =
        [&](std::size_t i, const std::vector<Token>& ctx) {
          if (i == images.size()) {
            Token s = Token::set(outs);
            if (s.size() <= bound_ && p.target->contains(s)) out.push_back({ctx, s});
            return;
          }
          const auto& img = images[i];
          std::size_t m = img.size();
          for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
            std::vector<Token> c = ctx;
            std::size_t saved_len = outs.size();
            std::size_t saved_size = out_size;
            bool ok = true;
            for (std::size_t k = 0; k < m && ok; ++k) {
              if (!(mask >> k & 1)) continue;
              auto merged = merge(c, img[k].ctx);
              if (!merged) {
                ok = false;
                break;
              }
              c = std::move(*merged);
              if (std::find(outs.begin(), outs.end(), img[k].out) == outs.end()) {
                outs.push_back(img[k].out);
                out_size += img[k].out.size();
              }
              if (out_size > bound_) ok = false;
            }
            if (ok) pick(i + 1, c);
            outs.resize(saved_len);
            out_size = saved_size;
          }
        };
    pick(0, empty_ctx(ctx_spaces_.size()));
    canonicalize(out);
    return out;
  }

  const std::vector<Space>& ctx_spaces_;
  std::size_t bound_;
  std::span<const ImageFn> env_;
  std::vector<FramePtr> keep_;
  std::unordered_map<MemoKey, std::vector<ActElem>, MemoHash> memo_;
};

}  // namespace

struct VcsAction::Impl {
  std::unique_ptr<PNode> root;
  std::vector<Space> ctx_spaces;
  std::size_t bound;
  std::size_t arity;
};

VcsAction::VcsAction(const Vcs& f, std::vector<Space> targets, std::vector<Space> ctx_spaces,
                     std::size_t bound)
    : impl_(std::make_unique<Impl>()) {
  if (targets.size() != f.arity()) throw Error("VcsAction: wrong number of targets");
  impl_->root = prepare(f, targets);
  impl_->ctx_spaces = std::move(ctx_spaces);
  impl_->bound = bound;
  impl_->arity = f.arity();
}

VcsAction::~VcsAction() = default;

const Space& VcsAction::target() const { return impl_->root->target; }
std::size_t VcsAction::ctx_arity() const { return impl_->ctx_spaces.size(); }

std::vector<ActElem> VcsAction::run(Token input, std::span<const ImageFn> env) const {
  if (env.size() != impl_->arity) throw Error("VcsAction: wrong number of images");
  Session s(impl_->ctx_spaces, impl_->bound, env);
  auto top = std::make_shared<Frame>();
  for (std::size_t i = 0; i < env.size(); ++i) {
    Binding b;
    b.kind = Binding::External;
    b.ext = i;
    top->vars.push_back(b);
  }
  auto res = s.go(*impl_->root, top, input);
  canonicalize(res);
  return res;
}

// ---------------------------------------------------------------------------

Clique Vcs::mor(std::span<const Clique> fs) const {
  if (fs.size() != arity()) throw Error("mor: wrong number of morphisms");
  std::vector<Space> src, tgt;
  for (const Clique& f : fs) {
    auto parts = lolli_parts(f.space());
    if (!parts) throw Error("mor expects cliques of linear function spaces");
    src.push_back(parts->first);
    tgt.push_back(parts->second);
  }
  Vcs self = *this;
  std::vector<Clique> morphs(fs.begin(), fs.end());
  Space from = obj(src);
  Space to = obj(tgt);
  return Clique::generated(
      lolli(from, to),
      [self, morphs, tgt, from](std::size_t budget) {
        VcsAction act(self, tgt, {}, budget);
        std::vector<ImageFn> env;
        for (const Clique& f : morphs) {
          auto index = std::make_shared<std::unordered_multimap<Token, Token, TokenHash>>();
          for (Token ab : f.enumerate(budget)) index->emplace(ab.left(), ab.right());
          env.push_back([index](Token a) {
            std::vector<ActElem> out;
            auto [lo, hi] = index->equal_range(a);
            for (auto it = lo; it != hi; ++it) out.push_back({{}, it->second});
            return out;
          });
        }
        std::vector<Token> res;
        for (Token a : from->enumerate(budget))
          for (const ActElem& e : act.run(a, env)) {
            Token t = Token::pair(a, e.out);
            if (t.size() <= budget) res.push_back(t);
          }
        return res;
      },
      false);
}

Clique Vcs::strength(Space y, std::span<const Space> xs) const {
  if (xs.size() != arity()) throw Error("strength: wrong number of spaces");
  Space by = bang(y);
  std::vector<Space> tgt;
  for (const Space& x : xs) tgt.push_back(tensor(by, x));
  Space fx = obj(xs);
  Space from = tensor(by, fx);
  Space to = obj(tgt);
  Vcs self = *this;
  return Clique::generated(
      lolli(from, to),
      [self, y, by, tgt, fx](std::size_t budget) {
        VcsAction act(self, tgt, {y}, budget);
        std::vector<ImageFn> env;
        for (std::size_t i = 0; i < tgt.size(); ++i)
          env.push_back([by, budget](Token a) {
            std::vector<ActElem> out;
            for (Token v : by->enumerate(budget)) {
              if (1 + v.size() + a.size() > budget) continue;
              out.push_back({{v}, Token::pair(v, a)});
            }
            return out;
          });
        std::vector<Token> res;
        for (Token x : fx->enumerate(budget))
          for (const ActElem& e : act.run(x, env)) {
            Token t = Token::pair(Token::pair(e.ctx[0], x), e.out);
            if (t.size() <= budget) res.push_back(t);
          }
        return res;
      },
      false);
}

}  // namespace mull

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

#include "mull/clique.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "mull/errors.hpp"

namespace mull {

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Yes:
      return "yes";
    case Membership::No:
      return "no";
    case Membership::Unknown:
      return "unknown";
  }
  return "?";
}

struct Clique::Memo {
  std::mutex mu;
  std::map<std::size_t, std::vector<Token>> by_budget;
};

Clique::Clique(Space space, std::shared_ptr<const CliqueSource> source)
    : space_(std::move(space)), source_(std::move(source)), memo_(std::make_shared<Memo>()) {}

std::vector<Token> Clique::enumerate(std::size_t budget) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->by_budget.find(budget);
    if (it != memo_->by_budget.end()) return it->second;
  }
  std::vector<Token> toks = source_->generate(budget);
  canonicalize(toks);
  std::lock_guard<std::mutex> lock(memo_->mu);
  return memo_->by_budget.try_emplace(budget, std::move(toks)).first->second;
}

Membership Clique::member(Token t, std::size_t budget) const {
  if (!space_->contains(t)) return Membership::No;
  const std::vector<Token>& found = enumerate(budget);
  bool hit = false;
  for (Token x : found) {
    if (x == t) {
      hit = true;
      break;
    }
    if (!space_->coh(x, t)) return Membership::No;
  }
  if (hit) return Membership::Yes;
  if (t.size() <= budget && source_->exact(budget)) return Membership::No;
  return Membership::Unknown;
}

namespace {

class FixedSource final : public CliqueSource {
 public:
  explicit FixedSource(std::vector<Token> ts) : ts_(std::move(ts)) {}
  std::vector<Token> generate(std::size_t) const override { return ts_; }
  bool exact(std::size_t) const override { return true; }

 private:
  std::vector<Token> ts_;
};

class FnSource final : public CliqueSource {
 public:
  FnSource(std::function<std::vector<Token>(std::size_t)> gen, bool exact)
      : gen_(std::move(gen)), exact_(exact) {}
  std::vector<Token> generate(std::size_t budget) const override { return gen_(budget); }
  bool exact(std::size_t) const override { return exact_; }

 private:
  std::function<std::vector<Token>(std::size_t)> gen_;
  bool exact_;
};

std::vector<Token> sized(std::vector<Token> ts, std::size_t budget) {
  ts.erase(std::remove_if(ts.begin(), ts.end(), [&](Token t) { return t.size() > budget; }),
           ts.end());
  return ts;
}

}  // namespace

Clique Clique::of(Space space, std::vector<Token> tokens) {
  return Clique(std::move(space), std::make_shared<FixedSource>(std::move(tokens)));
}

Clique Clique::empty(Space space) { return of(std::move(space), {}); }

Clique Clique::generated(Space space, std::function<std::vector<Token>(std::size_t)> gen,
                         bool exact) {
  return Clique(std::move(space), std::make_shared<FnSource>(std::move(gen), exact));
}

std::vector<Token> restrict_size(const std::vector<Token>& ts, std::size_t limit) {
  return sized(ts, limit);
}

Clique identity(Space e) {
  return Clique::generated(
      lolli(e, e),
      [e](std::size_t budget) {
        std::vector<Token> out;
        if (budget < 3) return out;
        for (Token a : e->enumerate((budget - 1) / 2)) out.push_back(Token::pair(a, a));
        return out;
      },
      true);
}

Clique compose(const Clique& s, const Clique& t) {
  auto ps = lolli_parts(s.space());
  auto pt = lolli_parts(t.space());
  if (!ps || !pt) throw Error("compose expects cliques of linear function spaces");
  Space out = lolli(ps->first, pt->second);
  return Clique::generated(
      out,
      [s, t](std::size_t budget) {
        std::unordered_multimap<Token, Token, TokenHash> by_mid;
        for (Token bc : t.enumerate(budget)) by_mid.emplace(bc.left(), bc.right());
        std::vector<Token> res;
        for (Token ab : s.enumerate(budget)) {
          auto [lo, hi] = by_mid.equal_range(ab.right());
          for (auto it = lo; it != hi; ++it) res.push_back(Token::pair(ab.left(), it->second));
        }
        canonicalize(res);
        return res;
      },
      false);
}

Clique apply(const Clique& t, const Clique& u) {
  auto pt = lolli_parts(t.space());
  if (!pt) throw Error("apply expects a clique of a linear function space");
  return Clique::generated(
      pt->second,
      [t, u](std::size_t budget) {
        std::vector<Token> args = u.enumerate(budget);
        std::unordered_set<Token, TokenHash> in(args.begin(), args.end());
        std::vector<Token> res;
        for (Token ab : t.enumerate(budget))
          if (in.count(ab.left())) res.push_back(ab.right());
        canonicalize(res);
        return res;
      },
      false);
}

Clique transpose(const Clique& t) {
  auto pt = lolli_parts(t.space());
  if (!pt) throw Error("transpose expects a clique of a linear function space");
  return Clique::generated(
      lolli(dual(pt->second), dual(pt->first)),
      [t](std::size_t budget) {
        std::vector<Token> res;
        for (Token ab : t.enumerate(budget)) res.push_back(Token::pair(ab.right(), ab.left()));
        return res;
      },
      false);
}

Clique exp_structure(Space e, ExpMap which) {
  switch (which) {
    case ExpMap::Der:
      return Clique::generated(
          lolli(bang(e), e),
          [e](std::size_t budget) {
            std::vector<Token> out;
            if (budget < 4) return out;
            for (Token a : e->enumerate((budget - 2) / 2))
              out.push_back(Token::pair(singleton(a), a));
            return out;
          },
          true);
    case ExpMap::Digg: {
      Space bb = bang(bang(e));
      return Clique::generated(
          lolli(bang(e), bb),
          [bb](std::size_t budget) {
            std::vector<Token> out;
            if (budget < 3) return out;
            for (Token parts : bb->enumerate(budget - 2)) {
              Token u = Token::empty_set();
              for (Token p : parts.elems()) u = set_union(u, p);
              Token t = Token::pair(u, parts);
              if (t.size() <= budget) out.push_back(t);
            }
            return out;
          },
          true);
    }
    case ExpMap::Weak:
      return Clique::of(lolli(bang(e), one_space()),
                        {Token::pair(Token::empty_set(), Token::unit())});
    case ExpMap::Contr: {
      Space be = bang(e);
      Space tt = tensor(be, be);
      return Clique::generated(
          lolli(be, tt),
          [e, tt](std::size_t budget) {
            std::vector<Token> out;
            if (budget < 3) return out;
            for (Token uv : tt->enumerate(budget - 2)) {
              Token u = set_union(uv.left(), uv.right());
              if (!is_clique(*e, u.elems())) continue;
              Token t = Token::pair(u, uv);
              if (t.size() <= budget) out.push_back(t);
            }
            return out;
          },
          true);
    }
  }
  throw Error("unknown exponential map");
}

Clique bang_mor(const Clique& t) {
  auto pt = lolli_parts(t.space());
  if (!pt) throw Error("bang_mor expects a clique of a linear function space");
  Space e = pt->first;
  return Clique::generated(
      lolli(bang(pt->first), bang(pt->second)),
      [t, e](std::size_t budget) {
        const std::vector<Token>& rel = t.enumerate(budget);
        std::vector<Token> out;
        std::vector<Token> as, bs;
        std::function<void(std::size_t, std::size_t)> go = [&](std::size_t from,
                                                                std::size_t room) {
          out.push_back(Token::pair(Token::set(as), Token::set(bs)));
          for (std::size_t i = from; i < rel.size(); ++i) {
            Token a = rel[i].left(), b = rel[i].right();
            if (a.size() + b.size() > room) continue;
            bool ok = true;
            for (Token x : as)
              if (!e->coh(x, a)) {
                ok = false;
                break;
              }
            if (!ok) continue;
            as.push_back(a);
            bs.push_back(b);
            go(i + 1, room - a.size() - b.size());
            as.pop_back();
            bs.pop_back();
          }
        };
        if (budget >= 3) go(0, budget - 3);
        return out;
      },
      false);
}

std::pair<Clique, Clique> seely_iso(Space e1, Space e2) {
  Space src = tensor(bang(e1), bang(e2));
  Space tgt = bang(with(e1, e2));
  auto merge = [](Token uv) {
    std::vector<Token> elems;
    for (Token a : uv.left().elems()) elems.push_back(Token::in(1, a));
    for (Token b : uv.right().elems()) elems.push_back(Token::in(2, b));
    return Token::set(std::move(elems));
  };
  // Sizes: |merged| = |u1| + |u2| - 1 + (number of elements), so the pair
  // token is bounded by twice the source size plus a constant.
  auto gen = [src, merge](bool forward) {
    return [src, merge, forward](std::size_t budget) {
      std::vector<Token> out;
      for (Token uv : src->enumerate(budget)) {
        Token w = merge(uv);
        Token t = forward ? Token::pair(uv, w) : Token::pair(w, uv);
        if (t.size() <= budget) out.push_back(t);
      }
      return out;
    };
  };
  return {Clique::generated(lolli(src, tgt), gen(true), true),
          Clique::generated(lolli(tgt, src), gen(false), true)};
}

std::optional<EmbRet> subcoh(Space e, Space f, std::size_t bound) {
  const std::vector<Token>& web = e->enumerate(bound);
  for (Token a : web)
    if (!f->contains(a)) return std::nullopt;
  for (std::size_t i = 0; i < web.size(); ++i)
    for (std::size_t j = i + 1; j < web.size(); ++j)
      if (e->coh(web[i], web[j]) != f->coh(web[i], web[j])) return std::nullopt;
  auto diag = [e](std::size_t budget) {
    std::vector<Token> out;
    if (budget < 3) return out;
    for (Token a : e->enumerate((budget - 1) / 2)) out.push_back(Token::pair(a, a));
    return out;
  };
  return EmbRet{Clique::generated(lolli(e, f), diag, true),
                Clique::generated(lolli(f, e), diag, true)};
}

}  // namespace mull

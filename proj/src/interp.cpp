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
#include "mull/interp.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "mull/errors.hpp"
#include "mull/vcs.hpp"

namespace mull {

Space sequent_space(const Sequent& s) {
  if (s.empty()) return bot_space();
  Space out = space_of(s.back());
  for (std::size_t q = s.size() - 1; q-- > 0;) out = par(space_of(s[q]), out);
  return out;
}

Token row_token(const Row& r) { return tuple_token(r); }

namespace {

bool row_less(const Row& a, const Row& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Token x, Token y) { return compare(x, y) < 0; });
}

void normalize(std::vector<Row>& rows) {
  std::sort(rows.begin(), rows.end(), row_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

Row without(const Row& r, std::size_t i, std::size_t j = SIZE_MAX) {
  Row out;
  out.reserve(r.size());
  for (std::size_t q = 0; q < r.size(); ++q)
    if (q != i && q != j) out.push_back(r[q]);
  return out;
}

// Context spaces for ?-formulas: a ?D token is a finite clique of D^.
std::vector<Space> ctx_spaces(const Sequent& s, std::size_t skip1, std::size_t skip2 = SIZE_MAX) {
  std::vector<Space> out;
  for (std::size_t q = 0; q < s.size(); ++q)
    if (q != skip1 && q != skip2) out.push_back(dual(space_of(s[q].body())));
  return out;
}

struct TokenRowsIndex {
  std::unordered_map<Token, std::vector<const Row*>, TokenHash> by;
  TokenRowsIndex(const std::vector<Row>& rows, std::size_t pos) {
    for (const Row& r : rows) by[r[pos]].push_back(&r);
  }
  const std::vector<const Row*>& at(Token t) const {
    static const std::vector<const Row*> none;
    auto it = by.find(t);
    return it == by.end() ? none : it->second;
  }
};

}  // namespace

Interpreter::Interpreter(InterpOptions opts) : opts_(opts) {}

std::vector<Row> Interpreter::rows(const Proof& p, std::size_t bound) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return eval(p, bound);
}

const std::vector<Row>& Interpreter::eval(const Proof& p, std::size_t bound) {
  auto key = std::make_pair(p.get(), bound);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  std::vector<Row> r = compute(p, bound);
  normalize(r);
  if (r.size() > opts_.max_rows)
    throw BudgetError(rule_name(p->rule) + ": interpretation has too many elements", bound);
  keep_.push_back(p);
  return memo_.emplace(key, std::move(r)).first->second;
}

std::vector<Row> Interpreter::compute(const Proof& p, std::size_t bound) {
  std::vector<Row> out;
  auto fits = [bound](Token t) { return t.size() <= bound; };
  auto guard = [&]() {
    if (out.size() > opts_.max_rows)
      throw BudgetError(rule_name(p->rule) + ": interpretation has too many elements", bound);
  };
  const auto& idx = p->idx;
  switch (p->rule) {
    case Rule::Ax:
      for (Token a : space_of(p->formula)->enumerate(bound)) out.push_back({a, a});
      return out;
    case Rule::One:
      out.push_back({Token::unit()});
      return out;
    case Rule::Top:
      return out;
    case Rule::Bot:
      for (Row r : eval(p->premises[0], bound)) {
        r.push_back(Token::unit());
        out.push_back(std::move(r));
      }
      return out;
    case Rule::Cut: {
      const auto& l = eval(p->premises[0], bound);
      const auto& r = eval(p->premises[1], bound);
      TokenRowsIndex ix(r, idx[1]);
      for (const Row& x : l)
        for (const Row* y : ix.at(x[idx[0]])) {
          Row z = without(x, idx[0]);
          for (std::size_t q = 0; q < y->size(); ++q)
            if (q != idx[1]) z.push_back((*y)[q]);
          out.push_back(std::move(z));
          guard();
        }
      return out;
    }
    case Rule::Tensor: {
      const auto& l = eval(p->premises[0], bound);
      const auto& r = eval(p->premises[1], bound);
      for (const Row& x : l)
        for (const Row& y : r) {
          if (1 + x[idx[0]].size() + y[idx[1]].size() > bound) continue;
          Row z = without(x, idx[0]);
          for (std::size_t q = 0; q < y.size(); ++q)
            if (q != idx[1]) z.push_back(y[q]);
          z.push_back(Token::pair(x[idx[0]], y[idx[1]]));
          out.push_back(std::move(z));
          guard();
        }
      return out;
    }
    case Rule::Par:
      for (const Row& x : eval(p->premises[0], bound)) {
        Token t = Token::pair(x[idx[0]], x[idx[1]]);
        if (!fits(t)) continue;
        Row z = without(x, idx[0], idx[1]);
        z.push_back(t);
        out.push_back(std::move(z));
      }
      return out;
    case Rule::PlusL:
    case Rule::PlusR:
      for (const Row& x : eval(p->premises[0], bound)) {
        Token t = Token::in(p->rule == Rule::PlusL ? 1 : 2, x[idx[0]]);
        if (!fits(t)) continue;
        Row z = without(x, idx[0]);
        z.push_back(t);
        out.push_back(std::move(z));
      }
      return out;
    case Rule::With:
      for (int side = 1; side <= 2; ++side)
        for (const Row& x : eval(p->premises[side - 1], bound)) {
          std::size_t i = idx[side - 1];
          Token t = Token::in(side, x[i]);
          if (!fits(t)) continue;
          Row z = without(x, i);
          z.push_back(t);
          out.push_back(std::move(z));
        }
      return out;
    case Rule::Weak:
      for (Row r : eval(p->premises[0], bound)) {
        r.push_back(Token::empty_set());
        out.push_back(std::move(r));
      }
      return out;
    case Rule::Contr: {
      Space wn = space_of(p->seq.back());
      for (const Row& x : eval(p->premises[0], bound)) {
        Token u = set_union(x[idx[0]], x[idx[1]]);
        if (!fits(u) || !wn->contains(u)) continue;
        Row z = without(x, idx[0], idx[1]);
        z.push_back(u);
        out.push_back(std::move(z));
      }
      return out;
    }
    case Rule::Der:
      for (const Row& x : eval(p->premises[0], bound)) {
        Token u = singleton(x[idx[0]]);
        if (!fits(u)) continue;
        Row z = without(x, idx[0]);
        z.push_back(u);
        out.push_back(std::move(z));
      }
      return out;
    case Rule::Prom: {
      const Sequent& ps = p->premises[0]->seq;
      const std::size_t i = idx[0];
      std::vector<Space> cs = ctx_spaces(ps, i);
      Space a_space = space_of(ps[i]);
      std::vector<const Row*> prem;
      for (const Row& x : eval(p->premises[0], bound)) prem.push_back(&x);
      std::stable_sort(prem.begin(), prem.end(),
                       [i](const Row* x, const Row* y) { return (*x)[i].size() < (*y)[i].size(); });
      std::vector<Token> chosen;
      std::function<void(std::size_t, const std::vector<Token>&, std::size_t)> dfs =
          [&](std::size_t from, const std::vector<Token>& ctx, std::size_t size) {
            Row z = ctx;
            z.push_back(Token::set(chosen));
            out.push_back(std::move(z));
            guard();
            for (std::size_t q = from; q < prem.size(); ++q) {
              Token a = (*prem[q])[i];
              if (size + a.size() > bound) break;
              bool ok = true;
              for (Token b : chosen)
                if (a == b || !a_space->coh(a, b)) ok = false;
              if (!ok) continue;
              auto merged = merge_ctx(cs, ctx, without(*prem[q], i));
              if (!merged) continue;
              if (!std::all_of(merged->begin(), merged->end(), fits)) continue;
              chosen.push_back(a);
              dfs(q + 1, *merged, size + a.size());
              chosen.pop_back();
            }
          };
      dfs(0, empty_ctx(cs.size()), 1);
      return out;
    }
    case Rule::Mu:
    case Rule::NuFold:
      for (const Row& x : eval(p->premises[0], bound)) {
        Row z = without(x, idx[0]);
        z.push_back(x[idx[0]]);
        out.push_back(std::move(z));
      }
      return out;
    case Rule::Perm:
      for (const Row& x : eval(p->premises[0], bound)) {
        Row z;
        for (std::size_t q : p->perm) z.push_back(x[q]);
        out.push_back(std::move(z));
      }
      return out;
    case Rule::Nu:
      return nu_rows(p, bound, nullptr);
  }
  return out;
}

std::vector<Row> Interpreter::nu_rows(const Proof& p, std::size_t bound,
                                      std::vector<std::vector<Row>>* stages) {
  const Proof& step = p->premises[1];
  const std::size_t j = p->idx[1], k = p->idx[2];
  const Formula& nf = p->formula;
  std::vector<Space> cs = ctx_spaces(step->seq, j, k);
  const std::size_t nctx = cs.size();
  Vcs body = denote(nf.body(), {nf.name()});
  VcsAction act(body, {space_of(nf)}, cs, bound);

  const auto& srows = eval(step, bound);
  // g rows are (ctx..., b, c).
  std::vector<Row> g;
  if (stages) stages->push_back(g);
  for (std::size_t n = 0; opts_.nu_depth == 0 || n < opts_.nu_depth; ++n) {
    TokenRowsIndex ix(g, nctx);
    ImageFn img = [&](Token b) {
      std::vector<ActElem> res;
      for (const Row* r : ix.at(b)) {
        ActElem e;
        e.ctx.assign(r->begin(), r->begin() + static_cast<std::ptrdiff_t>(nctx));
        e.out = (*r)[nctx + 1];
        res.push_back(std::move(e));
      }
      return res;
    };
    std::vector<ImageFn> env{img};
    std::vector<Row> next;
    for (const Row& s : srows) {
      std::vector<Token> ctx = without(s, j, k);
      for (const ActElem& e : act.run(s[k], env)) {
        auto merged = merge_ctx(cs, ctx, e.ctx);
        if (!merged) continue;
        if (!std::all_of(merged->begin(), merged->end(), [&](Token t) { return t.size() <= bound; }))
          continue;
        Row z = std::move(*merged);
        z.push_back(s[j]);
        z.push_back(e.out);
        next.push_back(std::move(z));
        if (next.size() > opts_.max_rows) throw BudgetError("nu: chain stage too large", bound);
      }
    }
    normalize(next);
    bool stable = next == g;
    g = std::move(next);
    if (stages) stages->push_back(g);
    if (stable) break;
  }

  const auto& drows = eval(p->premises[0], bound);
  const std::size_t i = p->idx[0];
  TokenRowsIndex gx(g, nctx);
  std::vector<Row> out;
  for (const Row& d : drows)
    for (const Row* r : gx.at(d[i])) {
      Row z = without(d, i);
      z.insert(z.end(), r->begin(), r->begin() + static_cast<std::ptrdiff_t>(nctx));
      z.push_back((*r)[nctx + 1]);
      out.push_back(std::move(z));
      if (out.size() > opts_.max_rows) throw BudgetError("nu: interpretation too large", bound);
    }
  return out;
}

std::vector<std::vector<Row>> Interpreter::nu_chain(const Proof& nu, std::size_t bound) {
  if (nu->rule != Rule::Nu) throw Error("nu_chain expects a nu rule");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  std::vector<std::vector<Row>> stages;
  nu_rows(nu, bound, &stages);
  return stages;
}

Clique interpret(const Proof& p, InterpOptions opts) {
  auto in = std::make_shared<Interpreter>(opts);
  Proof keep = p;
  return Clique::generated(
      sequent_space(p->seq),
      [in, keep](std::size_t budget) {
        std::size_t b = std::max(budget, in->options().min_bound);
        std::vector<Token> out;
        for (const Row& r : in->rows(keep, b)) {
          Token t = row_token(r);
          if (t.size() <= budget) out.push_back(t);
        }
        return out;
      },
      false);
}

Clique interpret_nu(const Formula& n, const Proof& delta, std::size_t i, const Proof& step,
                    std::size_t j, std::size_t k, InterpOptions opts) {
  return interpret(pr::nu(n, delta, i, step, j, k), opts);
}

EvalNatResult eval_nat_ex(const Proof& p, std::size_t max_bound, InterpOptions opts) {
  if (p->seq.size() != 1 || !alpha_equal(p->seq[0], nat_formula()))
    throw CheckError("eval-nat: conclusion " + print_sequent(p->seq) + " is not |- nat");
  Interpreter in(opts);
  std::size_t b = 2;
  for (;;) {
    for (const Row& r : in.rows(p, b))
      if (auto v = nat_value(r[0])) return {*v, b};
    if (b >= max_bound) throw BudgetError("eval-nat: no numeral found", b);
    b = std::min(max_bound, b * 2);
  }
}

std::size_t eval_nat(const Proof& p, std::size_t max_bound) { return eval_nat_ex(p, max_bound).value; }

}  // namespace mull

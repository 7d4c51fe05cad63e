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
#include "mull/godelt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "mull/errors.hpp"
#include "mull/interp.hpp"
#include "mull/vcs.hpp"

namespace mull {

// ---------------------------------------------------------------------------
// Types.

TType t_nat() {
  static const TType n = std::make_shared<TTypeNode>();
  return n;
}

TType t_arrow(TType a, TType b) {
  auto n = std::make_shared<TTypeNode>();
  n->arrow = true;
  n->dom = std::move(a);
  n->cod = std::move(b);
  return n;
}

bool type_eq(const TType& a, const TType& b) {
  if (a == b) return true;
  if (a->arrow != b->arrow) return false;
  return !a->arrow || (type_eq(a->dom, b->dom) && type_eq(a->cod, b->cod));
}

std::string print_type(const TType& a) {
  if (!a->arrow) return "nat";
  return "(-> " + print_type(a->dom) + " " + print_type(a->cod) + ")";
}

TType type_from_sexp(const Sexp& e) {
  if (e.is("nat")) return t_nat();
  if (e.head_is("->") && e.items.size() >= 3) {
    TType out = type_from_sexp(e.items.back());
    for (std::size_t i = e.items.size() - 1; i-- > 1;) out = t_arrow(type_from_sexp(e.items[i]), out);
    return out;
  }
  throw ParseError("expected a type", e.pos);
}

// ---------------------------------------------------------------------------
// Terms.

namespace tt {

namespace {
TTerm make(TKind k, std::vector<TTerm> kids, std::string x = {}, TType ty = nullptr,
           std::size_t n = 0) {
  auto node = std::make_shared<TTermNode>();
  node->kind = k;
  node->kids = std::move(kids);
  node->x = std::move(x);
  node->ty = std::move(ty);
  node->n = n;
  return node;
}
}  // namespace

TTerm num(std::size_t n) { return make(TKind::Num, {}, {}, nullptr, n); }
TTerm var(std::string x) { return make(TKind::Var, {}, std::move(x)); }
TTerm app(TTerm s, TTerm t) { return make(TKind::App, {std::move(s), std::move(t)}); }
TTerm apps(TTerm s, std::vector<TTerm> args) {
  for (auto& a : args) s = app(s, a);
  return s;
}
TTerm abs(std::string x, TType ty, TTerm s) {
  return make(TKind::Abs, {std::move(s)}, std::move(x), std::move(ty));
}
TTerm succ(TTerm s) { return make(TKind::Succ, {std::move(s)}); }
TTerm rec(TTerm s, TTerm t, TTerm u) {
  return make(TKind::Rec, {std::move(s), std::move(t), std::move(u)});
}
TTerm let(std::string x, TTerm s, TTerm t) {
  return make(TKind::Let, {std::move(s), std::move(t)}, std::move(x));
}

}  // namespace tt

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''))
      return false;
  return std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_';
}

std::string name_at(const Sexp& e) {
  if (!e.atom || !valid_name(e.text)) throw ParseError("expected a variable name", e.pos);
  return e.text;
}

void arity(const Sexp& e, std::size_t n) {
  if (e.items.size() != n)
    throw ParseError("'" + e.items[0].text + "' expects " + std::to_string(n - 1) + " argument(s)",
                     e.pos);
}

}  // namespace

TTerm term_from_sexp(const Sexp& e) {
  if (e.atom) {
    if (!e.text.empty() && std::all_of(e.text.begin(), e.text.end(), ::isdigit))
      return tt::num(std::stoul(e.text));
    return tt::var(name_at(e));
  }
  if (e.items.empty() || !e.items[0].atom) throw ParseError("expected a term constructor", e.pos);
  const std::string& h = e.items[0].text;
  if (h == "num") {
    arity(e, 2);
    const Sexp& a = e.items[1];
    if (!a.atom || a.text.empty() || !std::all_of(a.text.begin(), a.text.end(), ::isdigit))
      throw ParseError("expected a natural number", a.pos);
    return tt::num(std::stoul(a.text));
  }
  if (h == "var") {
    arity(e, 2);
    return tt::var(name_at(e.items[1]));
  }
  if (h == "app") {
    if (e.items.size() < 3) throw ParseError("'app' expects at least 2 arguments", e.pos);
    TTerm out = term_from_sexp(e.items[1]);
    for (std::size_t i = 2; i < e.items.size(); ++i) out = tt::app(out, term_from_sexp(e.items[i]));
    return out;
  }
  if (h == "abs") {
    arity(e, 4);
    return tt::abs(name_at(e.items[1]), type_from_sexp(e.items[2]), term_from_sexp(e.items[3]));
  }
  if (h == "succ") {
    arity(e, 2);
    return tt::succ(term_from_sexp(e.items[1]));
  }
  if (h == "rec") {
    arity(e, 4);
    return tt::rec(term_from_sexp(e.items[1]), term_from_sexp(e.items[2]),
                   term_from_sexp(e.items[3]));
  }
  if (h == "let") {
    arity(e, 4);
    return tt::let(name_at(e.items[1]), term_from_sexp(e.items[2]), term_from_sexp(e.items[3]));
  }
  throw ParseError("unknown term constructor '" + h + "'", e.pos);
}

TTerm parse_term(std::string_view text) { return term_from_sexp(read_sexp(text)); }

std::string print_term(const TTerm& s) {
  switch (s->kind) {
    case TKind::Num:
      return "(num " + std::to_string(s->n) + ")";
    case TKind::Var:
      return "(var " + s->x + ")";
    case TKind::App:
      return "(app " + print_term(s->kids[0]) + " " + print_term(s->kids[1]) + ")";
    case TKind::Abs:
      return "(abs " + s->x + " " + print_type(s->ty) + " " + print_term(s->kids[0]) + ")";
    case TKind::Succ:
      return "(succ " + print_term(s->kids[0]) + ")";
    case TKind::Rec:
      return "(rec " + print_term(s->kids[0]) + " " + print_term(s->kids[1]) + " " +
             print_term(s->kids[2]) + ")";
    case TKind::Let:
      return "(let " + s->x + " " + print_term(s->kids[0]) + " " + print_term(s->kids[1]) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Typing.

namespace {

std::optional<std::size_t> lookup(const TCtx& ctx, const std::string& x) {
  for (std::size_t i = ctx.size(); i-- > 0;)
    if (ctx[i].first == x) return i;
  return std::nullopt;
}

void expect(const TType& got, const TType& want, const TTerm& where) {
  if (!type_eq(got, want))
    throw TypeError("expected type " + print_type(want) + " but " + print_term(where) + " has type " +
                    print_type(got));
}

}  // namespace

TType typecheck(const TCtx& ctx, const TTerm& s) {
  switch (s->kind) {
    case TKind::Num:
      return t_nat();
    case TKind::Var: {
      auto i = lookup(ctx, s->x);
      if (!i) throw TypeError("unbound variable " + s->x);
      return ctx[*i].second;
    }
    case TKind::App: {
      TType f = typecheck(ctx, s->kids[0]);
      if (!f->arrow)
        throw TypeError(print_term(s->kids[0]) + " has type " + print_type(f) +
                        " and cannot be applied");
      expect(typecheck(ctx, s->kids[1]), f->dom, s->kids[1]);
      return f->cod;
    }
    case TKind::Abs: {
      TCtx c2 = ctx;
      c2.emplace_back(s->x, s->ty);
      return t_arrow(s->ty, typecheck(c2, s->kids[0]));
    }
    case TKind::Succ:
      expect(typecheck(ctx, s->kids[0]), t_nat(), s->kids[0]);
      return t_nat();
    case TKind::Rec: {
      expect(typecheck(ctx, s->kids[0]), t_nat(), s->kids[0]);
      TType sigma = typecheck(ctx, s->kids[1]);
      expect(typecheck(ctx, s->kids[2]), t_arrow(t_nat(), t_arrow(sigma, sigma)), s->kids[2]);
      return sigma;
    }
    case TKind::Let: {
      expect(typecheck(ctx, s->kids[0]), t_nat(), s->kids[0]);
      TCtx c2 = ctx;
      c2.emplace_back(s->x, t_nat());
      return typecheck(c2, s->kids[1]);
    }
  }
  throw TypeError("unknown term");
}

// ---------------------------------------------------------------------------
// Operational semantics.

namespace {

void collect_free(const TTerm& s, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (s->kind) {
    case TKind::Num:
      return;
    case TKind::Var:
      if (std::find(bound.begin(), bound.end(), s->x) == bound.end()) out.insert(s->x);
      return;
    case TKind::Abs:
      bound.push_back(s->x);
      collect_free(s->kids[0], bound, out);
      bound.pop_back();
      return;
    case TKind::Let:
      collect_free(s->kids[0], bound, out);
      bound.push_back(s->x);
      collect_free(s->kids[1], bound, out);
      bound.pop_back();
      return;
    default:
      for (const auto& k : s->kids) collect_free(k, bound, out);
  }
}

std::string fresh(const std::string& base, const std::set<std::string>& avoid) {
  for (std::size_t i = 1;; ++i) {
    std::string c = base + "_" + std::to_string(i);
    if (!avoid.count(c)) return c;
  }
}

TTerm rebuild(const TTerm& s, std::vector<TTerm> kids) {
  auto n = std::make_shared<TTermNode>(*s);
  n->kids = std::move(kids);
  return n;
}

// Substitutes under a binder named y whose body is b.
std::pair<std::string, TTerm> under_binder(const std::string& y, const TTerm& b, const TTerm& t,
                                           const std::string& x,
                                           const std::set<std::string>& fv_t) {
  if (y == x) return {y, b};
  if (!fv_t.count(y)) return {y, subst(b, t, x)};
  std::set<std::string> avoid = fv_t;
  for (const auto& v : free_vars(b)) avoid.insert(v);
  avoid.insert(x);
  std::string z = fresh(y, avoid);
  return {z, subst(subst(b, tt::var(z), y), t, x)};
}

}  // namespace

std::vector<std::string> free_vars(const TTerm& s) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(s, bound, out);
  return {out.begin(), out.end()};
}

TTerm subst(const TTerm& s, const TTerm& t, const std::string& x) {
  switch (s->kind) {
    case TKind::Num:
      return s;
    case TKind::Var:
      return s->x == x ? t : s;
    case TKind::Abs: {
      auto fv = free_vars(t);
      auto [y, b] = under_binder(s->x, s->kids[0], t, x, {fv.begin(), fv.end()});
      return tt::abs(y, s->ty, b);
    }
    case TKind::Let: {
      auto fv = free_vars(t);
      auto [y, b] = under_binder(s->x, s->kids[1], t, x, {fv.begin(), fv.end()});
      return tt::let(y, subst(s->kids[0], t, x), b);
    }
    default: {
      std::vector<TTerm> kids;
      for (const auto& k : s->kids) kids.push_back(subst(k, t, x));
      return rebuild(s, std::move(kids));
    }
  }
}

std::optional<TTerm> step(const TTerm& s) {
  switch (s->kind) {
    case TKind::App: {
      const TTerm& f = s->kids[0];
      if (f->kind == TKind::Abs) return subst(f->kids[0], s->kids[1], f->x);
      if (auto f2 = step(f)) return tt::app(*f2, s->kids[1]);
      return std::nullopt;
    }
    case TKind::Let: {
      const TTerm& a = s->kids[0];
      if (a->kind == TKind::Num) return subst(s->kids[1], a, s->x);
      if (auto a2 = step(a)) return tt::let(s->x, *a2, s->kids[1]);
      return std::nullopt;
    }
    case TKind::Succ: {
      const TTerm& a = s->kids[0];
      if (a->kind == TKind::Num) return tt::num(a->n + 1);
      if (auto a2 = step(a)) return tt::succ(*a2);
      return std::nullopt;
    }
    case TKind::Rec: {
      const TTerm& a = s->kids[0];
      if (a->kind == TKind::Num) {
        if (a->n == 0) return s->kids[1];
        TTerm pred = tt::num(a->n - 1);
        return tt::app(tt::app(s->kids[2], pred), tt::rec(pred, s->kids[1], s->kids[2]));
      }
      if (auto a2 = step(a)) return tt::rec(*a2, s->kids[1], s->kids[2]);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

EvalResult eval(const TTerm& s, std::size_t fuel) {
  EvalResult r{s, 0};
  while (auto next = step(r.value)) {
    if (r.steps == fuel) throw FuelExhausted("weak-head evaluation did not terminate", fuel);
    r.value = *next;
    ++r.steps;
  }
  return r;
}

std::size_t eval_nat_term(const TTerm& s, std::size_t fuel) {
  if (!free_vars(s).empty()) throw TypeError("term " + print_term(s) + " is not closed");
  expect(typecheck({}, s), t_nat(), s);
  EvalResult r = eval(s, fuel);
  if (r.value->kind != TKind::Num)
    throw Error("weak-head normal form " + print_term(r.value) + " is not a numeral");
  return r.value->n;
}

// ---------------------------------------------------------------------------
// Direct denotation.

Formula translate_type(const TType& a) {
  if (!a->arrow) return nat_formula();
  return Formula::lolli(Formula::bang(translate_type(a->dom)), translate_type(a->cod));
}

Sequent translate_sequent(const TCtx& ctx, const TType& tau) {
  Sequent out;
  for (const auto& [x, ty] : ctx) out.push_back(negate(Formula::bang(translate_type(ty))));
  out.push_back(translate_type(tau));
  return out;
}

namespace {

struct DRow {
  std::vector<Token> g;
  Token a;
};

class Denoter {
 public:
  explicit Denoter(std::size_t bound) : bound_(bound) {}

  std::vector<DRow> rows(const TCtx& ctx, const TTerm& s) {
    std::vector<Space> spaces;
    for (const auto& [x, ty] : ctx) spaces.push_back(space_of(translate_type(ty)));
    return go(ctx, spaces, s);
  }

 private:
  bool fits(const std::vector<Token>& g) const {
    for (Token t : g)
      if (t.size() > bound_) return false;
    return true;
  }

  std::optional<std::vector<Token>> merge(const std::vector<Space>& sp, const std::vector<Token>& a,
                                          const std::vector<Token>& b) const {
    auto m = merge_ctx(sp, a, b);
    if (m && !fits(*m)) return std::nullopt;
    return m;
  }

  // Extends g by one row of `pool` for every element of the set x.
  template <class F>
  void choose(const std::vector<Space>& sp, const std::multimap<Token, std::size_t>& by_a,
              const std::vector<DRow>& pool, std::span<const Token> xs, std::vector<Token> g,
              F&& emit) const {
    if (xs.empty()) {
      emit(g);
      return;
    }
    auto [lo, hi] = by_a.equal_range(xs[0]);
    for (auto it = lo; it != hi; ++it)
      if (auto m = merge(sp, g, pool[it->second].g)) choose(sp, by_a, pool, xs.subspan(1), *m, emit);
  }

  static std::multimap<Token, std::size_t> index(const std::vector<DRow>& rows) {
    std::multimap<Token, std::size_t> m;
    for (std::size_t i = 0; i < rows.size(); ++i) m.emplace(rows[i].a, i);
    return m;
  }

  static void dedupe(std::vector<DRow>& rows) {
    auto key = [](const DRow& r) {
      std::vector<Token> k = r.g;
      k.push_back(r.a);
      return k;
    };
    std::sort(rows.begin(), rows.end(), [&](const DRow& x, const DRow& y) {
      auto kx = key(x), ky = key(y);
      return std::lexicographical_compare(kx.begin(), kx.end(), ky.begin(), ky.end(),
                                          [](Token p, Token q) { return compare(p, q) < 0; });
    });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const DRow& x, const DRow& y) { return x.a == y.a && x.g == y.g; }),
               rows.end());
  }

  std::vector<DRow> go(const TCtx& ctx, const std::vector<Space>& sp, const TTerm& s) {
    std::vector<DRow> out;
    const std::size_t k = ctx.size();
    switch (s->kind) {
      case TKind::Num: {
        Token n = nat_token(s->n);
        if (n.size() <= bound_) out.push_back({empty_ctx(k), n});
        break;
      }
      case TKind::Var: {
        std::size_t i = *lookup(ctx, s->x);
        for (Token a : sp[i]->enumerate(bound_)) {
          std::vector<Token> g = empty_ctx(k);
          g[i] = singleton(a);
          if (fits(g)) out.push_back({g, a});
        }
        break;
      }
      case TKind::Succ:
        for (const DRow& r : go(ctx, sp, s->kids[0])) {
          Token b = Token::in(2, r.a);
          if (b.size() <= bound_) out.push_back({r.g, b});
        }
        break;
      case TKind::Abs: {
        TCtx c2 = ctx;
        c2.emplace_back(s->x, s->ty);
        std::vector<Space> sp2 = sp;
        sp2.push_back(space_of(translate_type(s->ty)));
        for (const DRow& r : go(c2, sp2, s->kids[0])) {
          Token b = Token::pair(r.g.back(), r.a);
          if (b.size() > bound_) continue;
          out.push_back({std::vector<Token>(r.g.begin(), r.g.end() - 1), b});
        }
        break;
      }
      case TKind::App: {
        std::vector<DRow> fs = go(ctx, sp, s->kids[0]);
        std::vector<DRow> as = go(ctx, sp, s->kids[1]);
        auto by_a = index(as);
        for (const DRow& f : fs)
          choose(sp, by_a, as, f.a.left().elems(), f.g,
                 [&](const std::vector<Token>& g) { out.push_back({g, f.a.right()}); });
        break;
      }
      case TKind::Let: {
        std::vector<DRow> ts = go(ctx, sp, s->kids[0]);
        TCtx c2 = ctx;
        c2.emplace_back(s->x, t_nat());
        std::vector<Space> sp2 = sp;
        sp2.push_back(nat_space());
        for (const DRow& u : go(c2, sp2, s->kids[1])) {
          std::vector<Token> g(u.g.begin(), u.g.end() - 1);
          auto x = u.g.back().elems();
          for (const DRow& t : ts) {
            if (!x.empty() && !(x.size() == 1 && x[0] == t.a)) continue;
            if (auto m = merge(sp, g, t.g)) out.push_back({*m, u.a});
          }
        }
        break;
      }
      case TKind::Rec: {
        std::vector<DRow> ns = go(ctx, sp, s->kids[0]);
        std::vector<DRow> base = go(ctx, sp, s->kids[1]);
        std::vector<DRow> us = go(ctx, sp, s->kids[2]);
        std::size_t top = 0;
        for (const DRow& r : ns) top = std::max(top, *nat_value(r.a));
        // stage[m] holds the rows of rec (num m) t u.
        std::vector<std::vector<DRow>> stage{base};
        for (std::size_t m = 0; m < top; ++m) {
          auto by_a = index(stage[m]);
          std::vector<DRow> next;
          for (const DRow& u : us) {
            auto y = u.a.left().elems();
            if (!y.empty() && !(y.size() == 1 && y[0] == nat_token(m))) continue;
            Token inner = u.a.right();
            choose(sp, by_a, stage[m], inner.left().elems(), u.g,
                   [&](const std::vector<Token>& g) { next.push_back({g, inner.right()}); });
          }
          dedupe(next);
          stage.push_back(std::move(next));
        }
        for (const DRow& r : ns)
          for (const DRow& v : stage[*nat_value(r.a)])
            if (auto m = merge(sp, r.g, v.g)) out.push_back({*m, v.a});
        break;
      }
    }
    dedupe(out);
    return out;
  }

  std::size_t bound_;
};

}  // namespace

Clique denote_t(const TCtx& ctx, const TTerm& s, std::size_t min_bound) {
  TType tau = typecheck(ctx, s);
  Space space = sequent_space(translate_sequent(ctx, tau));
  return Clique::generated(
      space,
      [ctx, s, min_bound](std::size_t budget) {
        Denoter d(std::max(budget, min_bound));
        std::vector<Token> out;
        for (const DRow& r : d.rows(ctx, s)) {
          Row row = r.g;
          row.push_back(r.a);
          Token t = row_token(row);
          if (t.size() <= budget) out.push_back(t);
        }
        return out;
      },
      false);
}

std::size_t eval_nat_denote(const TTerm& s, std::size_t max_bound) {
  if (!free_vars(s).empty()) throw TypeError("term " + print_term(s) + " is not closed");
  expect(typecheck({}, s), t_nat(), s);
  for (std::size_t b = 2; b <= max_bound; b *= 2) {
    auto toks = denote_t({}, s).enumerate(b);
    if (toks.size() > 1) throw Error("denotation of a closed Nat term is not a singleton");
    if (toks.size() == 1) return *nat_value(toks[0]);
  }
  throw BudgetError("no numeral in the denotation", max_bound);
}

// ---------------------------------------------------------------------------
// Translation into proofs.

namespace {

constexpr int kResult = 1'000'000;

class Translator {
 public:
  Proof run(const TCtx& ctx, const TTerm& s) {
    Tagged t = go(ctx, s);
    return tg::order(t, ctx_tags(ctx.size(), 0, kResult));
  }

 private:
  int fresh() { return next_++; }

  static std::vector<int> ctx_tags(std::size_t k, int base, int last) {
    std::vector<int> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(base + static_cast<int>(i));
    out.push_back(last);
    return out;
  }

  // Context at tags 0..k-1, result at kResult.
  Tagged go(const TCtx& ctx, const TTerm& s) {
    const std::size_t k = ctx.size();
    switch (s->kind) {
      case TKind::Num: {
        Tagged t = tg::retag({numeral_proof(s->n), {}}, {kResult});
        return weaken_all(t, ctx, {});
      }
      case TKind::Var: {
        std::size_t i = *lookup(ctx, s->x);
        Formula a = translate_type(ctx[i].second);
        int neg = fresh();
        Tagged t = tg::ax(a, neg, kResult);
        t = tg::der(t, neg, static_cast<int>(i));
        return weaken_all(t, ctx, {i});
      }
      case TKind::Succ: {
        Tagged t = go(ctx, s->kids[0]);
        Proof p = succ_proof(t.p, t.at(kResult));
        std::vector<int> tags = t.tags;
        tags.erase(tags.begin() + static_cast<std::ptrdiff_t>(t.at(kResult)));
        tags.push_back(kResult);
        return {p, tags};
      }
      case TKind::Abs: {
        TCtx c2 = ctx;
        c2.emplace_back(s->x, s->ty);
        Tagged t = go(c2, s->kids[0]);
        return tg::par(t, static_cast<int>(k), kResult, kResult);
      }
      case TKind::App: {
        Tagged f = go(ctx, s->kids[0]);
        int arg = fresh();
        f = unpar(f, kResult, arg, kResult);
        Tagged a = shift(go(ctx, s->kids[1]));
        int res = fresh();
        a = tg::prom(a, kResult, res);
        Tagged t = tg::cut(f, arg, a, res);
        return contract_shifted(t, k);
      }
      case TKind::Let: {
        Tagged a = shift(go(ctx, s->kids[0]));
        int nat_in = fresh(), stored = fresh();
        Tagged h = tg::retag({pprom_nat(), {}}, {nat_in, stored});
        a = tg::cut(a, kResult, h, nat_in);
        TCtx c2 = ctx;
        c2.emplace_back(s->x, t_nat());
        Tagged u = go(c2, s->kids[1]);
        Tagged t = tg::cut(u, static_cast<int>(k), a, stored);
        return contract_shifted(t, k);
      }
      case TKind::Rec:
        return rec(ctx, s);
    }
    throw Error("unknown term");
  }

  Tagged weaken_all(Tagged t, const TCtx& ctx, std::optional<std::size_t> skip) {
    for (std::size_t j = 0; j < ctx.size(); ++j) {
      if (skip && *skip == j) continue;
      t = tg::weak(t, negate(translate_type(ctx[j].second)), static_cast<int>(j));
    }
    return t;
  }

  // A par B at tag p gives A at ta and B at tb.
  Tagged unpar(const Tagged& t, int p, int ta, int tb) {
    const Formula& f = t.formula(p);
    if (f.kind() != FKind::Par) throw Error("internal: expected a par formula");
    int x = fresh(), y = fresh(), q = fresh();
    // |- A, B, A^ * B^
    Tagged l = tg::ax(f.lhs(), x, ta);
    Tagged r = tg::ax(f.rhs(), y, tb);
    Tagged inv = tg::tensor(l, x, r, y, q);
    int keep = fresh();
    Tagged src = tg::renumber(t, p, keep);
    return tg::cut(src, keep, inv, q);
  }

  // Moves context tags 0..k-1 to kShift + i.
  static constexpr int kShift = 500'000;
  Tagged shift(Tagged t) {
    for (int& g : t.tags)
      if (g >= 0 && g < kShift) g += kShift;
    return t;
  }

  Tagged contract_shifted(Tagged t, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      int a = static_cast<int>(i);
      t = tg::contr(t, a, kShift + a, a);
    }
    return t;
  }

  Tagged rec(const TCtx& ctx, const TTerm& s) {
    const std::size_t k = ctx.size();
    TType sigma = typecheck(ctx, s->kids[1]);
    Formula S = translate_type(sigma), N = nat_formula();
    Formula bS = Formula::bang(S), bN = Formula::bang(N);
    Formula C = Formula::tensor(bN, bS);

    // phi: |- G, !Nat * !S
    Tagged u = go(ctx, s->kids[1]);
    int pu = fresh();
    u = tg::prom(u, kResult, pu);
    int z = fresh(), pz = fresh(), c_base = fresh();
    Tagged zero = tg::prom(tg::retag({zero_proof(), {}}, {z}), z, pz);
    Tagged phi = tg::tensor(zero, pz, u, pu, c_base);

    // psi: |- G, (!Nat^ par !S^), !Nat * !S
    Tagged v = go(ctx, s->kids[2]);
    int yn = fresh(), rest = fresh(), ys = fresh(), res = fresh();
    v = unpar(v, kResult, yn, rest);
    v = unpar(v, rest, ys, res);
    int pres = fresh();
    v = tg::prom(v, res, pres);
    int sn = fresh(), sp = fresh(), sd = fresh(), sprom = fresh();
    Tagged succ = tg::ax(N, sn, sp);
    succ = {succ_proof(succ.p, succ.at(sp)), {sn, sp}};
    succ = tg::der(succ, sn, sd);
    succ = tg::prom(succ, sp, sprom);
    int c_step = fresh();
    Tagged psi = tg::tensor(succ, sprom, v, pres, c_step);
    int y = fresh(), c_in = fresh();
    psi = tg::contr(psi, sd, yn, y);
    psi = tg::par(psi, y, ys, c_in);

    // theta: |- G, Nat^, !Nat * !S
    std::vector<int> g = ctx_tags(k, 0, c_base);
    Proof base = tg::order(phi, g);
    std::vector<int> gs = ctx_tags(k, 0, c_in);
    gs.push_back(c_step);
    Proof step = tg::order(psi, gs);
    std::vector<int> theta_tags = ctx_tags(k, 0, fresh());
    int nat_in = theta_tags.back();
    int c_out = fresh();
    theta_tags.push_back(c_out);
    Tagged theta{nat_iter(base, step), theta_tags};

    // |- (!Nat^ par !S^), S
    int a1 = fresh(), a2 = fresh(), a3 = fresh(), a4 = fresh(), proj = fresh();
    Tagged pj = tg::ax(S, a1, a2);
    pj = tg::der(pj, a1, a3);
    pj = tg::weak(pj, negate(N), a4);
    pj = tg::par(pj, a4, a3, proj);
    Tagged out = tg::cut(theta, c_out, pj, proj);

    Tagged t = shift(go(ctx, s->kids[0]));
    out = tg::cut(out, nat_in, t, kResult);
    return contract_shifted(tg::renumber(out, a2, kResult), k);
  }

  int next_ = 1'000'100;
};

}  // namespace

Proof translate(const TCtx& ctx, const TTerm& s) {
  typecheck(ctx, s);
  Proof p = Translator().run(ctx, s);
  check(p);
  return p;
}

Proof apply_numeral(const Proof& f, std::size_t n) {
  if (f->seq.size() != 1 || !same_sequent(f->seq, {translate_type(t_arrow(t_nat(), t_nat()))}))
    throw CheckError("apply_numeral expects a proof of |- !Nat -o Nat");
  // |- !Nat^, Nat by cutting the par against a tensor of axioms.
  const Formula& par = f->seq[0];
  Proof inv = pr::tensor(pr::ax(par.lhs()), 0, pr::ax(par.rhs()), 0);
  Proof open = pr::cut(f, 0, inv, 2);
  Proof arg = pr::prom(numeral_proof(n), 0);
  return pr::cut(open, 0, arg, 0);
}

// ---------------------------------------------------------------------------
// Corpus.

const std::vector<CorpusTerm>& t_corpus() {
  static const std::vector<CorpusTerm> corpus = [] {
    std::vector<std::pair<std::string, std::string>> src = {
        {"add", "(abs x nat (abs y nat (rec (var x) (var y) (abs k nat (abs r nat (succ (var r)))))))"},
        {"mult",
         "(abs x nat (abs y nat (rec (var x) (num 0) (abs k nat (abs r nat"
         " (rec (var y) (var r) (abs k2 nat (abs r2 nat (succ (var r2))))))))))"},
        {"pred", "(abs x nat (rec (var x) (num 0) (abs k nat (abs r nat (var k)))))"},
        {"double", "(abs x nat (rec (var x) (num 0) (abs k nat (abs r nat (succ (succ (var r)))))))"},
        {"succ3", "(abs x nat (succ (succ (succ (var x)))))"},
        {"letsq",
         "(abs x nat (let a (succ (var x)) (let b (rec (var a) (num 0) (abs k nat (abs r nat"
         " (succ (var r))))) (let c (var b) (succ (var c))))))"},
        {"iszero", "(abs x nat (rec (var x) (num 0) (abs k nat (abs r nat (num 1)))))"},
        {"twice",
         "(abs f (-> nat nat) (abs x nat (app (var f) (app (var f) (var x)))))"},
    };
    std::vector<CorpusTerm> out;
    for (auto& [name, text] : src) out.push_back({name, text, parse_term(text)});
    return out;
  }();
  return corpus;
}

TTerm corpus_term(const std::string& name) {
  for (const auto& c : t_corpus())
    if (c.name == name) return c.term;
  throw Error("no corpus term named " + name);
}

}  // namespace mull

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
#include "mull/totality.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "mull/errors.hpp"
#include "mull/kernels.hpp"

namespace mull {

namespace {

constexpr std::size_t kMaxFinWeb = 64;

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

// Web sorted canonically, with coherence given on original positions.
FinSpace build(std::vector<Token> web, const std::function<bool(std::size_t, std::size_t)>& coh) {
  if (web.size() > kMaxFinWeb)
    throw SizeGuardError("finite web has " + std::to_string(web.size()) + " tokens, above " +
                         std::to_string(kMaxFinWeb));
  std::vector<std::size_t> order(web.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return compare(web[a], web[b]) < 0; });
  FinSpace out;
  for (std::size_t i : order) out.web.push_back(web[i]);
  out.coh.assign(web.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      if (i == j || coh(order[i], order[j])) out.coh[i] |= bit(j);
  return out;
}

bool coh_at(const FinSpace& e, std::size_t i, std::size_t j) { return e.coh[i] >> j & 1; }

template <class F>
void for_bits(std::uint64_t m, F f) {
  while (m) {
    std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
    f(i);
    m &= m - 1;
  }
}

void guard(const FinSpace& e, const TotalityConfig& cfg) {
  if (e.size() > cfg.max_web)
    throw SizeGuardError("web of " + std::to_string(e.size()) + " tokens exceeds the guard of " +
                         std::to_string(cfg.max_web));
}

}  // namespace

std::optional<std::size_t> FinSpace::find(Token t) const {
  auto it = std::lower_bound(web.begin(), web.end(), t,
                             [](Token a, Token b) { return compare(a, b) < 0; });
  if (it == web.end() || !(*it == t)) return std::nullopt;
  return static_cast<std::size_t>(it - web.begin());
}

bool FinSpace::is_clique(std::uint64_t mask) const {
  bool ok = true;
  for_bits(mask, [&](std::size_t i) {
    if ((coh[i] & mask) != mask) ok = false;
  });
  return ok;
}

std::uint64_t FinSpace::full() const { return web.size() == 64 ? ~std::uint64_t{0} : bit(web.size()) - 1; }

std::size_t FinSpace::max_token_size() const {
  std::size_t m = 0;
  for (Token t : web) m = std::max(m, t.size());
  return m;
}

Space FinSpace::space() const {
  FinSpace self = *this;
  return finite_space(web, [self](Token a, Token b) {
    auto i = self.find(a), j = self.find(b);
    return i && j && coh_at(self, *i, *j);
  });
}

FinSpace fin_space(const Space& e, std::size_t max_web) {
  auto w = e->finite_web();
  if (!w) throw Error("space " + e->describe() + " has no finite web");
  if (w->size() > max_web)
    throw SizeGuardError("web of " + std::to_string(w->size()) + " tokens exceeds the guard of " +
                         std::to_string(max_web));
  std::vector<Token> web = *w;
  return build(web, [&](std::size_t i, std::size_t j) { return e->coh(web[i], web[j]); });
}

FinSpace fin_space(std::vector<Token> web, const std::function<bool(Token, Token)>& coh) {
  canonicalize(web);
  return build(web, [&](std::size_t i, std::size_t j) { return coh(web[i], web[j]); });
}

FinSpace fin_dual(const FinSpace& e) {
  FinSpace out = e;
  for (std::size_t i = 0; i < e.size(); ++i) out.coh[i] = ((~e.coh[i]) & e.full()) | bit(i);
  return out;
}

FinSpace fin_tensor(const FinSpace& e, const FinSpace& f) {
  std::vector<Token> web;
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) {
      web.push_back(Token::pair(e.web[i], f.web[j]));
      parts.emplace_back(i, j);
    }
  return build(web, [&](std::size_t x, std::size_t y) {
    return coh_at(e, parts[x].first, parts[y].first) && coh_at(f, parts[x].second, parts[y].second);
  });
}

FinSpace fin_par(const FinSpace& e, const FinSpace& f) {
  return fin_dual(fin_tensor(fin_dual(e), fin_dual(f)));
}

FinSpace fin_plus(const FinSpace& e, const FinSpace& f) {
  std::vector<Token> web;
  std::vector<std::pair<int, std::size_t>> parts;
  for (std::size_t i = 0; i < e.size(); ++i) {
    web.push_back(Token::in(1, e.web[i]));
    parts.emplace_back(1, i);
  }
  for (std::size_t j = 0; j < f.size(); ++j) {
    web.push_back(Token::in(2, f.web[j]));
    parts.emplace_back(2, j);
  }
  return build(web, [&](std::size_t x, std::size_t y) {
    if (parts[x].first != parts[y].first) return false;
    const FinSpace& s = parts[x].first == 1 ? e : f;
    return coh_at(s, parts[x].second, parts[y].second);
  });
}

FinSpace fin_with(const FinSpace& e, const FinSpace& f) {
  return fin_dual(fin_plus(fin_dual(e), fin_dual(f)));
}

CliqueSet all_cliques(const FinSpace& e, const TotalityConfig& cfg) {
  CliqueSet out;
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t cur, std::uint64_t cand) {
    out.push_back(cur);
    if (out.size() > cfg.max_cliques)
      throw SizeGuardError("more than " + std::to_string(cfg.max_cliques) + " cliques");
    for_bits(cand, [&](std::size_t v) {
      std::uint64_t higher = v + 1 >= 64 ? 0 : ~(bit(v + 1) - 1);
      rec(cur | bit(v), cand & e.coh[v] & higher);
    });
  };
  rec(0, e.full());
  std::sort(out.begin(), out.end());
  return out;
}

FinSpace fin_bang(const FinSpace& e) {
  TotalityConfig cfg;
  cfg.max_web = kMaxFinWeb;
  CliqueSet cl = all_cliques(e, cfg);
  if (cl.size() > kMaxFinWeb)
    throw SizeGuardError("exponential web has " + std::to_string(cl.size()) + " tokens, above " +
                         std::to_string(kMaxFinWeb));
  std::vector<Token> web;
  for (std::uint64_t m : cl) web.push_back(Token::set(mask_tokens(e, m)));
  return build(web, [&](std::size_t x, std::size_t y) { return e.is_clique(cl[x] | cl[y]); });
}

FinSpace fin_whynot(const FinSpace& e) { return fin_dual(fin_bang(fin_dual(e))); }

FinSpace fin_unit() { return build({Token::unit()}, [](std::size_t, std::size_t) { return true; }); }

FinSpace fin_empty() { return FinSpace{}; }

std::vector<Token> mask_tokens(const FinSpace& e, std::uint64_t mask) {
  std::vector<Token> out;
  for_bits(mask, [&](std::size_t i) { out.push_back(e.web[i]); });
  return out;
}

std::uint64_t token_mask(const FinSpace& e, std::span<const Token> ts) {
  std::uint64_t m = 0;
  for (Token t : ts) {
    auto i = e.find(t);
    if (!i) throw Error("token " + t.str() + " is not in the web");
    m |= bit(*i);
  }
  return m;
}

std::string clique_str(const FinSpace& e, std::uint64_t mask) {
  return "{" + tokens_str(mask_tokens(e, mask), ",") + "}";
}

std::string clique_set_str(const FinSpace& e, const CliqueSet& s) {
  std::vector<std::uint64_t> v = s;
  // Listed by clique size, then canonically.
  std::vector<std::pair<std::vector<Token>, std::uint64_t>> items;
  for (std::uint64_t m : v) items.emplace_back(mask_tokens(e, m), m);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return std::lexicographical_compare(a.first.begin(), a.first.end(), b.first.begin(), b.first.end(),
                                        [](Token x, Token y) { return compare(x, y) < 0; });
  });
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += clique_str(e, items[i].second);
  }
  return out + "}";
}

void normalize(CliqueSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool subset(const CliqueSet& a, const CliqueSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

CliqueSet orthogonal(const CliqueSet& t, const FinSpace& e, const TotalityConfig& cfg) {
  guard(e, cfg);
  CliqueSet cand = all_cliques(fin_dual(e), cfg);
  if (std::find(t.begin(), t.end(), std::uint64_t{0}) != t.end()) return {};
  std::vector<std::uint8_t> keep(cand.size());
  kernels::meets_all()(t.data(), t.size(), cand.data(), cand.size(), keep.data());
  CliqueSet out;
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (keep[i]) out.push_back(cand[i]);
  return out;
}

FinTotality biorthogonal(const CliqueSet& t, const FinSpace& e, const TotalityConfig& cfg) {
  FinTotality out;
  out.space = e;
  out.members = orthogonal(orthogonal(t, e, cfg), fin_dual(e), cfg);
  out.closed = true;
  return out;
}

CliqueSet all_cliques(const Space& e, const TotalityConfig& cfg) {
  return all_cliques(fin_space(e, cfg.max_web), cfg);
}

CliqueSet orthogonal(const CliqueSet& t, const Space& e, const TotalityConfig& cfg) {
  return orthogonal(t, fin_space(e, cfg.max_web), cfg);
}

FinTotality biorthogonal(const CliqueSet& t, const Space& e, const TotalityConfig& cfg) {
  return biorthogonal(t, fin_space(e, cfg.max_web), cfg);
}

// ---------------------------------------------------------------------------

FinTotality dual_totality(const FinTotality& x, const TotalityConfig& cfg) {
  FinTotality out;
  out.space = fin_dual(x.space);
  out.members = orthogonal(x.members, x.space, cfg);
  out.closed = true;
  return out;
}

namespace {

FinTotality tensor_totality(const FinTotality& x1, const FinTotality& x2, const TotalityConfig& cfg) {
  FinSpace e = fin_tensor(x1.space, x2.space);
  CliqueSet gen;
  for (std::uint64_t a : x1.members)
    for (std::uint64_t b : x2.members) {
      std::vector<Token> ts;
      for (Token s : mask_tokens(x1.space, a))
        for (Token t : mask_tokens(x2.space, b)) ts.push_back(Token::pair(s, t));
      gen.push_back(token_mask(e, ts));
    }
  normalize(gen);
  return biorthogonal(gen, e, cfg);
}

std::uint64_t tag_mask(const FinSpace& e, const FinSpace& part, std::uint64_t m, int side) {
  std::vector<Token> ts;
  for (Token t : mask_tokens(part, m)) ts.push_back(Token::in(side, t));
  return token_mask(e, ts);
}

}  // namespace

FinTotality connective_totality(TotKind k, const FinTotality& x1, const FinTotality& x2,
                                const TotalityConfig& cfg) {
  switch (k) {
    case TotKind::Tensor:
      return tensor_totality(x1, x2, cfg);
    case TotKind::Par:
      return dual_totality(
          tensor_totality(dual_totality(x1, cfg), dual_totality(x2, cfg), cfg), cfg);
    case TotKind::Lolli:
      return dual_totality(tensor_totality(x1, dual_totality(x2, cfg), cfg), cfg);
    case TotKind::Plus: {
      FinSpace e = fin_plus(x1.space, x2.space);
      CliqueSet gen;
      for (std::uint64_t a : x1.members) gen.push_back(tag_mask(e, x1.space, a, 1));
      for (std::uint64_t b : x2.members) gen.push_back(tag_mask(e, x2.space, b, 2));
      normalize(gen);
      return biorthogonal(gen, e, cfg);
    }
    case TotKind::With: {
      FinSpace e = fin_with(x1.space, x2.space);
      CliqueSet gen;
      for (std::uint64_t a : x1.members)
        for (std::uint64_t b : x2.members)
          gen.push_back(tag_mask(e, x1.space, a, 1) | tag_mask(e, x2.space, b, 2));
      normalize(gen);
      return biorthogonal(gen, e, cfg);
    }
  }
  throw Error("unknown connective");
}

FinTotality bang_totality(const FinTotality& x, const TotalityConfig& cfg) {
  FinSpace e = fin_bang(x.space);
  std::vector<std::uint64_t> sub;
  for (Token t : e.web) sub.push_back(token_mask(x.space, t.elems()));
  CliqueSet gen;
  for (std::uint64_t m : x.members) {
    std::uint64_t prom = 0;
    for (std::size_t k = 0; k < sub.size(); ++k)
      if ((sub[k] & ~m) == 0) prom |= bit(k);
    gen.push_back(prom);
  }
  normalize(gen);
  return biorthogonal(gen, e, cfg);
}

FinTotality whynot_totality(const FinTotality& x, const TotalityConfig& cfg) {
  return dual_totality(bang_totality(dual_totality(x, cfg), cfg), cfg);
}

FinTotality one_totality() { return {fin_unit(), {1}, true}; }
FinTotality bot_totality() { return {fin_unit(), {1}, true}; }
FinTotality top_totality() { return {fin_empty(), {0}, true}; }
FinTotality zero_totality() { return {fin_empty(), {}, true}; }

// ---------------------------------------------------------------------------

namespace {

LatticeResult iterate(const TotalityOp& op, const FinSpace& e, const TotalityConfig& cfg, bool least) {
  LatticeResult r;
  CliqueSet cur = least ? CliqueSet{} : all_cliques(e, cfg);
  r.chain.push_back(cur);
  CliqueSet prev_image;
  bool have_prev = false;
  for (std::size_t n = 0;; ++n) {
    CliqueSet img = op(cur);
    normalize(img);
    if (have_prev && !(least ? subset(prev_image, img) : subset(img, prev_image)))
      throw Error("totality operator is not monotone on the iteration chain");
    CliqueSet joined;
    if (least) {
      std::set_union(cur.begin(), cur.end(), img.begin(), img.end(), std::back_inserter(joined));
    } else {
      std::set_intersection(cur.begin(), cur.end(), img.begin(), img.end(),
                            std::back_inserter(joined));
    }
    CliqueSet next = biorthogonal(joined, e, cfg).members;
    if (next == cur) {
      r.stabilized_at = n;
      break;
    }
    if (least ? !subset(cur, next) : !subset(next, cur))
      throw Error("totality chain is not monotone");
    r.chain.push_back(next);
    cur = std::move(next);
    prev_image = std::move(img);
    have_prev = true;
  }
  r.fixed = {e, cur, true};
  return r;
}

}  // namespace

LatticeResult lattice_lfp(const TotalityOp& op, const FinSpace& e, const TotalityConfig& cfg) {
  return iterate(op, e, cfg, true);
}

LatticeResult lattice_gfp(const TotalityOp& op, const FinSpace& e, const TotalityConfig& cfg) {
  return iterate(op, e, cfg, false);
}

// ---------------------------------------------------------------------------

namespace {

template <class T>
using Env = std::vector<std::pair<std::string, T>>;

template <class T>
const T& lookup(const Env<T>& env, const std::string& name) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == name) return it->second;
  throw Error("free variable " + name + " in a closed formula");
}

FinSpace web_rec(const Formula& a, std::size_t depth, const Env<FinSpace>& env) {
  switch (a.kind()) {
    case FKind::One:
    case FKind::Bot:
      return fin_unit();
    case FKind::Zero:
    case FKind::Top:
      return fin_empty();
    case FKind::Tensor:
      return fin_tensor(web_rec(a.lhs(), depth, env), web_rec(a.rhs(), depth, env));
    case FKind::Par:
      return fin_par(web_rec(a.lhs(), depth, env), web_rec(a.rhs(), depth, env));
    case FKind::Plus:
      return fin_plus(web_rec(a.lhs(), depth, env), web_rec(a.rhs(), depth, env));
    case FKind::With:
      return fin_with(web_rec(a.lhs(), depth, env), web_rec(a.rhs(), depth, env));
    case FKind::Bang:
      return fin_bang(web_rec(a.body(), depth, env));
    case FKind::WhyNot:
      return fin_whynot(web_rec(a.body(), depth, env));
    case FKind::Var:
      return lookup(env, a.name());
    case FKind::Mu:
    case FKind::Nu: {
      FinSpace w = fin_empty();
      for (std::size_t n = 0; n < depth; ++n) {
        Env<FinSpace> e2 = env;
        e2.emplace_back(a.name(), w);
        w = web_rec(a.body(), depth, e2);
      }
      return w;
    }
  }
  throw Error("unknown formula");
}

// Least points keep the members inside the smaller web, greatest points
// project every member onto it.
FinTotality restrict_to(const CliqueSet& t, const FinSpace& from, const FinSpace& to, bool least,
                        const TotalityConfig& cfg) {
  CliqueSet r;
  for (std::uint64_t m : t) {
    std::vector<Token> ts = mask_tokens(from, m), kept;
    for (Token x : ts)
      if (to.find(x)) kept.push_back(x);
    if (!least || kept.size() == ts.size()) r.push_back(token_mask(to, kept));
  }
  normalize(r);
  return biorthogonal(r, to, cfg);
}

FinTotality tot_rec(const Formula& a, std::size_t depth, BinderPolicy pol,
                    const TotalityConfig& cfg, const Env<FinTotality>& env,
                    LatticeResult* chain_out);

LatticeResult binder(const Formula& a, std::size_t depth, BinderPolicy pol, const TotalityConfig& cfg,
                     const Env<FinTotality>& env) {
  Env<FinSpace> wenv;
  for (const auto& [n, t] : env) wenv.emplace_back(n, t.space);
  FinSpace prev = fin_empty(), w = fin_empty();
  for (std::size_t n = 0; n < depth; ++n) {
    prev = w;
    Env<FinSpace> e2 = wenv;
    e2.emplace_back(a.name(), w);
    w = web_rec(a.body(), depth, e2);
  }
  bool least = a.kind() == FKind::Mu ? pol.mu_as_lfp : !pol.nu_as_gfp;
  TotalityOp op;
  if (depth == 0) {
    op = [](const CliqueSet& t) { return t; };
  } else {
    op = [&, prev, w, least](const CliqueSet& t) {
      FinTotality x = restrict_to(t, w, prev, least, cfg);
      Env<FinTotality> e2 = env;
      e2.emplace_back(a.name(), x);
      FinTotality r = tot_rec(a.body(), depth, pol, cfg, e2, nullptr);
      if (r.space.web != w.web) throw Error("internal: truncated webs do not match");
      return r.members;
    };
  }
  return least ? lattice_lfp(op, w, cfg) : lattice_gfp(op, w, cfg);
}

FinTotality tot_rec(const Formula& a, std::size_t depth, BinderPolicy pol,
                    const TotalityConfig& cfg, const Env<FinTotality>& env,
                    LatticeResult* chain_out) {
  auto sub = [&](const Formula& f) { return tot_rec(f, depth, pol, cfg, env, nullptr); };
  switch (a.kind()) {
    case FKind::One:
      return one_totality();
    case FKind::Bot:
      return bot_totality();
    case FKind::Zero:
      return zero_totality();
    case FKind::Top:
      return top_totality();
    case FKind::Tensor:
      return connective_totality(TotKind::Tensor, sub(a.lhs()), sub(a.rhs()), cfg);
    case FKind::Par:
      return connective_totality(TotKind::Par, sub(a.lhs()), sub(a.rhs()), cfg);
    case FKind::Plus:
      return connective_totality(TotKind::Plus, sub(a.lhs()), sub(a.rhs()), cfg);
    case FKind::With:
      return connective_totality(TotKind::With, sub(a.lhs()), sub(a.rhs()), cfg);
    case FKind::Bang:
      return bang_totality(sub(a.body()), cfg);
    case FKind::WhyNot:
      return whynot_totality(sub(a.body()), cfg);
    case FKind::Var:
      return lookup(env, a.name());
    case FKind::Mu:
    case FKind::Nu: {
      LatticeResult r = binder(a, depth, pol, cfg, env);
      FinTotality out = r.fixed;
      if (chain_out) *chain_out = std::move(r);
      return out;
    }
  }
  throw Error("unknown formula");
}

}  // namespace

FinSpace formula_web(const Formula& a, std::size_t depth) {
  if (!is_closed(a)) throw Error("formula " + print(a) + " is not closed");
  return web_rec(a, depth, {});
}

FinTotality formula_totality(const Formula& a, std::size_t depth, BinderPolicy policy,
                             const TotalityConfig& cfg) {
  if (!is_closed(a)) throw Error("formula " + print(a) + " is not closed");
  return tot_rec(a, depth, policy, cfg, {}, nullptr);
}

LatticeResult binder_chain(const Formula& fix, std::size_t depth, BinderPolicy policy,
                           const TotalityConfig& cfg) {
  if (!fix.is_binder()) throw Error("formula " + print(fix) + " is not a fixed point");
  if (!is_closed(fix)) throw Error("formula " + print(fix) + " is not closed");
  LatticeResult r;
  tot_rec(fix, depth, policy, cfg, {}, &r);
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::TotalAtDepth:
      return "total-at-depth";
    case Verdict::NotTotal:
      return "not-total";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

TotalityReport check_total(const Clique& c, const Formula& a, BinderPolicy policy,
                           std::size_t depth, const TotalityConfig& cfg) {
  TotalityReport rep;
  FinTotality t = formula_totality(a, depth, policy, cfg);
  std::vector<Token> ts;
  try {
    ts = c.enumerate(t.space.max_token_size());
  } catch (const BudgetError& e) {
    rep.note = e.what();
    return rep;
  }
  for (Token x : ts)
    if (t.space.find(x)) rep.truncated.push_back(x);
  std::uint64_t x = token_mask(t.space, rep.truncated);
  if (!t.space.is_clique(x)) {
    rep.note = "the truncation is not a clique";
    return rep;
  }
  for (std::uint64_t y : orthogonal(t.members, t.space, cfg)) {
    if ((x & y) == 0) {
      rep.verdict = Verdict::NotTotal;
      rep.witness = mask_tokens(fin_dual(t.space), y);
      return rep;
    }
  }
  rep.verdict = Verdict::TotalAtDepth;
  return rep;
}

}  // namespace mull

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
#include <algorithm>
#include <numeric>

#include "mull/errors.hpp"
#include "mull/proof.hpp"

namespace mull {

namespace {

std::vector<std::size_t> iota_perm(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

// |- G, X, Y with X, Y the last two; swaps them.
Proof swap_last(const Proof& p) {
  std::size_t n = p->seq.size();
  auto pm = iota_perm(n);
  std::swap(pm[n - 2], pm[n - 1]);
  return pr::perm(p, pm);
}

// |- X, G, Y gives |- G, Y, X.
Proof first_to_last(const Proof& p) {
  std::vector<std::size_t> pm;
  for (std::size_t q = 1; q < p->seq.size(); ++q) pm.push_back(q);
  pm.push_back(0);
  return pr::perm(p, pm);
}

Tagged tagged(const Proof& p, int base) {
  std::vector<int> t(p->seq.size());
  std::iota(t.begin(), t.end(), base);
  return {p, t};
}

}  // namespace

Proof zero_proof() {
  Formula nat = nat_formula();
  return pr::mu(pr::plus_l(pr::one(), 0, nat), 0, nat);
}

Proof succ_proof(const Proof& p, std::size_t i) {
  Formula nat = nat_formula();
  if (i >= p->seq.size() || !alpha_equal(p->seq[i], nat))
    throw CheckError("succ: premise position does not hold Nat");
  Proof q = pr::plus_r(p, i, Formula::one());
  return pr::mu(q, q->seq.size() - 1, nat);
}

Proof succ_proof(const Proof& p) { return succ_proof(p, p->seq.size() - 1); }

Proof numeral_proof(std::size_t n) {
  Proof p = zero_proof();
  for (std::size_t k = 0; k < n; ++k) p = succ_proof(p);
  return p;
}

Proof nat_iter(const Proof& base, const Proof& step) {
  std::size_t g = base->seq.size() - 1;
  if (step->seq.size() != g + 2) throw CheckError("natiter: step must be |- ?G, C^, C");
  // |- ?G, C, bot  and  |- ?G, C, C^
  Proof b = pr::bot(base);
  Proof s = swap_last(step);
  Proof w = pr::with(b, g + 1, s, g + 1);
  Proof n = pr::nu_bis(negate(nat_formula()), w, g, g + 1);
  return first_to_last(n);
}

Proof lazy_zero_proof() {
  Formula ln = lazy_nat_formula();
  return pr::mu(pr::plus_l(pr::one(), 0, Formula::bang(ln)), 0, ln);
}

Proof lazy_succ_proof(const Proof& p, std::size_t i) {
  Formula ln = lazy_nat_formula();
  if (i >= p->seq.size() || !alpha_equal(p->seq[i], ln))
    throw CheckError("lsucc: premise position does not hold Lnat");
  Proof q = pr::prom(p, i);
  q = pr::plus_r(q, q->seq.size() - 1, Formula::one());
  return pr::mu(q, q->seq.size() - 1, ln);
}

Proof lazy_iter(const Proof& base, const Proof& step) {
  std::size_t g = base->seq.size() - 1;
  const Formula& a = base->seq[g];
  Formula want = Formula::lolli(Formula::bang(a), a);
  if (step->seq.size() != g + 1 || !alpha_equal(step->seq[g], want))
    throw CheckError("liter: step must be |- ?G, !A -o A");
  // |- ?G, ?A^, A
  Proof open;
  if (step->rule == Rule::Par) {
    const Proof& q = step->premises[0];
    std::vector<std::size_t> pm;
    for (std::size_t k = 0; k < q->seq.size(); ++k)
      if (k != step->idx[0] && k != step->idx[1]) pm.push_back(k);
    pm.push_back(step->idx[0]);
    pm.push_back(step->idx[1]);
    open = pr::perm(q, pm);
  } else {
    Proof t = pr::tensor(pr::ax(Formula::bang(a)), 1, pr::ax(a), 0);
    open = pr::cut(step, g, t, 2);
  }
  Proof b = pr::bot(base);
  Proof s = swap_last(open);
  Proof w = pr::with(b, g + 1, s, g + 1);
  Proof n = pr::nu_bis(negate(lazy_nat_formula()), w, g, g + 1);
  n = first_to_last(n);
  return pr::par(n, g, g + 1);
}

Proof is_zero_proof() {
  Formula one = Formula::one();
  Formula two = Formula::plus(one, one);
  Proof base = pr::plus_l(pr::one(), 0, one);
  Proof s = pr::plus_r(pr::one(), 0, one);
  s = pr::weak(s, negate(two));
  s = pr::par(s, 1, 0);
  return lazy_iter(base, s);
}

// ---------------------------------------------------------------------------

namespace {

Formula apply_bang_env(Formula f, const FormulaEnv& env) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) f = subst(f, Formula::bang(it->second), it->first);
  return f;
}

Formula apply_env(Formula f, const FormulaEnv& env) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) f = subst(f, it->second, it->first);
  return f;
}

// |- ?X^, !X ... for X = !A : |- ?A^, !!A
Proof bang_storage(const Formula& bx) { return pr::prom(pr::ax(bx), 1); }

// From |- X^, Y gives |- ?X^, !Y.
Proof lift(const Proof& f) { return pr::prom(pr::der(f, 0), 0); }

}  // namespace

Proof pprom(const Formula& p, const FormulaEnv& env) {
  Formula pp = apply_bang_env(p, env);
  switch (p.kind()) {
    case FKind::Zero:
      return pr::arrange(pr::top({Formula::bang(pp)}), {negate(pp), Formula::bang(pp)});
    case FKind::One:
      return swap_last(pr::bot(pr::prom(pr::one(), 0)));
    case FKind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == p.name()) return bang_storage(pp);
      throw CheckError("pprom: free variable " + p.name() + " has no binding");
    }
    case FKind::Bang:
      if (!is_closed(pp)) throw CheckError("pprom: formula " + print(pp) + " is not closed");
      return bang_storage(pp);
    case FKind::Plus: {
      Formula a = apply_bang_env(p.lhs(), env), b = apply_bang_env(p.rhs(), env);
      Proof l = pr::cut(pprom(p.lhs(), env), 1, lift(pr::plus_l(pr::ax(a), 1, b)), 0);
      Proof r = pr::cut(pprom(p.rhs(), env), 1, lift(pr::plus_r(pr::ax(b), 1, a)), 0);
      // |- X^, !P  for each side; with on the X^ positions.
      return swap_last(pr::with(l, 0, r, 0));
    }
    case FKind::Tensor: {
      Formula a = apply_bang_env(p.lhs(), env), b = apply_bang_env(p.rhs(), env);
      // |- a^, b^, a*b  then  |- ?a^, ?b^, !(a*b)
      Tagged t = tg::tensor(tg::ax(a, 0, 1), 1, tg::ax(b, 2, 3), 3, 4);
      t = tg::der(t, 0, 5);
      t = tg::der(t, 2, 6);
      t = tg::prom(t, 4, 7);
      Tagged l = tg::retag({pprom(p.lhs(), env), {}}, {10, 11});
      Tagged r = tg::retag({pprom(p.rhs(), env), {}}, {12, 13});
      t = tg::cut(l, 11, t, 5);
      t = tg::cut(r, 13, t, 6);
      t = tg::par(t, 10, 12, 14);
      return tg::order(t, {14, 7});
    }
    case FKind::Mu: {
      if (!is_closed(pp)) throw CheckError("pprom: formula " + print(pp) + " is not closed");
      const std::string& z = pp.name();
      const Formula& body = pp.body();
      Formula unf = subst(body, Formula::bang(pp), z);
      Proof st = pprom(body, {{z, pp}});  // |- unf^, !unf
      Proof d = pr::der(pr::ax(pp), 0);    // |- mu, ?mu^
      d = swap_last(d);                    // |- ?mu^, mu
      Proof f = functor_proof(body, z, d, 0, 1);  // |- unf^, body[mu]
      f = pr::mu(f, 1, pp);                        // |- unf^, mu
      Proof g = lift(f);                           // |- ?unf^, !mu
      Proof step = pr::cut(st, 1, g, 0);           // |- unf^, !mu
      Proof n = pr::nu_bis(negate(pp), step, 1, 0);
      return swap_last(n);
    }
    default:
      throw CheckError("pprom: formula " + print(pp) + " is not positive");
  }
}

Proof pprom_nat() {
  Formula nat = nat_formula();
  Proof l = pr::bot(pr::prom(zero_proof(), 0));            // |- !Nat, bot
  Proof r = pr::prom(pr::der(succ_proof(pr::ax(nat), 1), 0), 0);  // |- ?Nat^, !Nat
  r = swap_last(r);
  Proof w = pr::with(l, 1, r, 1);  // |- !Nat, bot & ?Nat^
  return swap_last(pr::nu_bis(negate(nat), w, 0, 1));
}

Proof gen_prom(const Proof& p, const std::vector<std::size_t>& ns, std::size_t a) {
  Tagged t = tagged(p, 0);
  const int n = static_cast<int>(p->seq.size());
  std::vector<int> order;
  for (int q = 0; q < n; ++q)
    if (q != static_cast<int>(a)) order.push_back(q);
  for (std::size_t i : ns) t = tg::der(t, static_cast<int>(i), n + static_cast<int>(i));
  t = tg::prom(t, static_cast<int>(a), 3 * n);
  for (std::size_t i : ns) {
    Tagged s = tg::retag({pprom(negate(p->seq[i])), {}}, {static_cast<int>(i), 2 * n + static_cast<int>(i)});
    t = tg::cut(t, n + static_cast<int>(i), s, 2 * n + static_cast<int>(i));
  }
  order.push_back(3 * n);
  return tg::order(t, order);
}

Proof gen_weak(const Proof& p, const Formula& n) {
  Proof w = pr::weak(p, n);
  return pr::cut(w, w->seq.size() - 1, pprom(negate(n)), 1);
}

Proof gen_contr(const Proof& p, std::size_t i, std::size_t j) {
  Tagged t = tagged(p, 0);
  const int n = static_cast<int>(p->seq.size());
  t = tg::der(t, static_cast<int>(i), n);
  t = tg::der(t, static_cast<int>(j), n + 1);
  t = tg::contr(t, n, n + 1, n + 2);
  Tagged s = tg::retag({pprom(negate(p->seq[i])), {}}, {n + 3, n + 4});
  t = tg::cut(t, n + 2, s, n + 4);
  std::vector<int> order;
  for (int q = 0; q < n; ++q)
    if (q != static_cast<int>(i) && q != static_cast<int>(j)) order.push_back(q);
  order.push_back(n + 3);
  return tg::order(t, order);
}

// ---------------------------------------------------------------------------

namespace {

// A derivation |- ?G, X^, Y with tagged context and the two ends.
struct Arrow {
  Tagged t;
  std::vector<int> g;
  int a;
  int b;
};

class Functor {
 public:
  Functor(std::string z, Formula a, Formula b) : z_(std::move(z)), a_(std::move(a)), b_(std::move(b)) {}

  int fresh() { return next_++; }

  Arrow copy(const Arrow& x) {
    std::vector<int> tags;
    Arrow y = x;
    for (int& gt : y.g) gt = fresh();
    y.a = fresh();
    y.b = fresh();
    for (int t : x.t.tags) {
      if (t == x.a) {
        tags.push_back(y.a);
      } else if (t == x.b) {
        tags.push_back(y.b);
      } else {
        auto it = std::find(x.g.begin(), x.g.end(), t);
        tags.push_back(y.g[static_cast<std::size_t>(it - x.g.begin())]);
      }
    }
    y.t = tg::retag(x.t, tags);
    return y;
  }

  Formula inst(const Formula& f, const Formula& x, const FormulaEnv& env) const {
    return apply_env(subst(f, x, z_), env);
  }

  // Contracts the contexts of l into those of r, keeping r's tags.
  Tagged merge(Tagged t, const std::vector<int>& keep, const std::vector<int>& drop) {
    for (std::size_t q = 0; q < keep.size(); ++q) {
      int out = fresh();
      t = tg::contr(t, keep[q], drop[q], out);
      t = tg::renumber(t, out, keep[q]);
    }
    return t;
  }

  Arrow run(const Formula& f, const FormulaEnv& env, const Arrow& tau) {
    if (!free_vars(f).count(z_)) {
      Formula c = inst(f, a_, env);
      Arrow r;
      r.g = tau.g;
      r.a = fresh();
      r.b = fresh();
      Tagged t = tg::ax(c, r.a, r.b);
      for (int gt : tau.g) {
        const Formula& gf = tau.t.formula(gt);
        t = tg::weak(t, gf.body(), gt);
      }
      r.t = t;
      return r;
    }
    switch (f.kind()) {
      case FKind::Var:
        return copy(tau);
      case FKind::Tensor:
      case FKind::Par:
      case FKind::Plus:
      case FKind::With: {
        Arrow l = run(f.lhs(), env, copy(tau));
        Arrow r = run(f.rhs(), env, copy(tau));
        Arrow out;
        out.g = l.g;
        out.a = fresh();
        out.b = fresh();
        Tagged t;
        if (f.kind() == FKind::Tensor || f.kind() == FKind::Par) {
          t = f.kind() == FKind::Tensor ? tg::tensor(l.t, l.b, r.t, r.b, out.b)
                                        : tg::tensor(l.t, l.a, r.t, r.a, out.a);
          t = f.kind() == FKind::Tensor ? tg::par(t, l.a, r.a, out.a) : tg::par(t, l.b, r.b, out.b);
          t = merge(t, l.g, r.g);
        } else if (f.kind() == FKind::Plus) {
          Formula fl = inst(f.lhs(), b_, env), fr = inst(f.rhs(), b_, env);
          Tagged lt = tg::plus_l(l.t, l.b, fr, out.b);
          Tagged rt = tg::plus_r(r.t, r.b, fl, out.b);
          rt = tg::retag(rt, rename(rt.tags, r.g, l.g));
          t = tg::with(lt, l.a, rt, r.a, out.a);
        } else {
          Formula fl = inst(f.lhs(), a_, env), fr = inst(f.rhs(), a_, env);
          Tagged lt = tg::plus_l(l.t, l.a, negate(fr), out.a);
          Tagged rt = tg::plus_r(r.t, r.a, negate(fl), out.a);
          rt = tg::retag(rt, rename(rt.tags, r.g, l.g));
          t = tg::with(lt, l.b, rt, r.b, out.b);
        }
        out.t = t;
        return out;
      }
      case FKind::Bang: {
        Arrow x = run(f.body(), env, tau);
        Arrow out{{}, x.g, fresh(), fresh()};
        Tagged t = tg::der(x.t, x.a, out.a);
        out.t = tg::prom(t, x.b, out.b);
        return out;
      }
      case FKind::WhyNot: {
        Arrow x = run(f.body(), env, tau);
        Arrow out{{}, x.g, fresh(), fresh()};
        Tagged t = tg::der(x.t, x.b, out.b);
        out.t = tg::prom(t, x.a, out.a);
        return out;
      }
      case FKind::Mu: {
        Formula mb = inst(f, b_, env);
        Formula na = negate(inst(f, a_, env));
        FormulaEnv e2 = env;
        e2.emplace_back(f.name(), mb);
        Arrow x = run(f.body(), e2, tau);  // |- ?G, G[A,mb]^, G[B,mb]
        int m = fresh();
        Tagged t = tg::mu(x.t, x.b, mb, m);
        Arrow out{{}, x.g, fresh(), fresh()};
        int d = fresh();
        out.t = tg::nu(na, tg::ax(mb, d, out.b), d, t, m, x.a, out.a);
        return out;
      }
      case FKind::Nu: {
        Formula na = inst(f, a_, env);
        Formula nb = inst(f, b_, env);
        FormulaEnv e2 = env;
        e2.emplace_back(f.name(), na);
        Arrow x = run(f.body(), e2, tau);  // |- ?G, G[A,na]^, G[B,na]
        int m = fresh();
        Tagged t = tg::mu(x.t, x.a, negate(na), m);
        Arrow out{{}, x.g, fresh(), fresh()};
        int d = fresh();
        out.t = tg::nu(nb, tg::ax(negate(na), d, out.a), d, t, m, x.b, out.b);
        return out;
      }
      default:
        throw CheckError("functor: unexpected formula " + print(f));
    }
  }

 private:
  static std::vector<int> rename(std::vector<int> tags, const std::vector<int>& from,
                                 const std::vector<int>& to) {
    for (int& t : tags) {
      auto it = std::find(from.begin(), from.end(), t);
      if (it != from.end()) t = to[static_cast<std::size_t>(it - from.begin())];
    }
    return tags;
  }

  std::string z_;
  Formula a_, b_;
  int next_ = 1000000;
};

}  // namespace

Proof functor_proof(const Formula& f, const std::string& z, const Proof& tau, std::size_t ia,
                    std::size_t ib, const FormulaEnv& env) {
  const Sequent& s = tau->seq;
  if (ia >= s.size() || ib >= s.size() || ia == ib) throw CheckError("functor: bad positions");
  Arrow x;
  x.t = tagged(tau, 0);
  for (std::size_t q = 0; q < s.size(); ++q) {
    if (q == ia || q == ib) continue;
    if (s[q].kind() != FKind::WhyNot)
      throw CheckError("functor: context formula " + print(s[q]) + " is not a ?-formula");
    x.g.push_back(static_cast<int>(q));
  }
  x.a = static_cast<int>(ia);
  x.b = static_cast<int>(ib);
  Functor fn(z, negate(s[ia]), s[ib]);
  Arrow r = fn.run(f, env, x);
  std::vector<int> order = r.g;
  order.push_back(r.a);
  order.push_back(r.b);
  return tg::order(r.t, order);
}

}  // namespace mull

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
#include <functional>
#include <unordered_map>

#include "mull/errors.hpp"
#include "mull/proof.hpp"

namespace mull {

std::string to_string(RedexKind k) { return k == RedexKind::MuNu ? "mu/nu" : "mu/nufold"; }

namespace {

bool principal(const Proof& p, std::size_t i, Rule r) {
  return p->rule == r && i + 1 == p->seq.size();
}

std::vector<int> range(int base, std::size_t n) {
  std::vector<int> v;
  for (std::size_t q = 0; q < n; ++q) v.push_back(base + static_cast<int>(q));
  return v;
}

Tagged tag_from(const Proof& p, int base) { return {p, range(base, p->seq.size())}; }

// Cut of a mu introduction against a nu rule, both principal. Returns the
// reduct with conclusion  mu-side context ++ nu-side context.
Proof reduce_mu_nu(const Proof& m, const Proof& n) {
  const Proof& pi = m->premises[0];
  const std::size_t pi_i = m->idx[0];
  const Proof& lambda = n->premises[0];
  const Proof& rho = n->premises[1];
  const std::size_t li = n->idx[0], rj = n->idx[1], rk = n->idx[2];
  const Formula& nf = n->formula;
  const Formula& a = n->inv;

  Tagged tpi = tag_from(pi, 1000);
  Tagged tl = tag_from(lambda, 2000);
  Tagged tr = tag_from(rho, 3000);
  const int P = 1000 + static_cast<int>(pi_i);
  const int L = 2000 + static_cast<int>(li);
  const int Rj = 3000 + static_cast<int>(rj), Rk = 3000 + static_cast<int>(rk);

  std::vector<int> gamma;
  for (std::size_t q = 0; q < rho->seq.size(); ++q)
    if (q != rj && q != rk) gamma.push_back(3000 + static_cast<int>(q));

  // |- A^, ?G, N
  Proof rho1 = pr::nu(nf, pr::ax(a), 1, rho, rj, rk);
  // |- ?G, (F[A])^, F[N]  over the body of N
  Proof fp = functor_proof(nf.body(), nf.name(), rho1, 0, rho1->seq.size() - 1);
  std::vector<int> ftags;
  for (std::size_t q = 0; q < gamma.size(); ++q) ftags.push_back(4000 + static_cast<int>(q));
  ftags.push_back(5000);
  ftags.push_back(5001);
  Tagged t = tg::retag({fp, {}}, ftags);
  t = tg::cut(t, 5001, tpi, P);
  t = tg::cut(t, 5000, tr, Rk);
  for (std::size_t q = 0; q < gamma.size(); ++q) {
    t = tg::contr(t, gamma[q], 4000 + static_cast<int>(q), 6000);
    t = tg::renumber(t, 6000, gamma[q]);
  }
  t = tg::cut(t, Rj, tl, L);

  std::vector<int> order;
  for (std::size_t q = 0; q < pi->seq.size(); ++q)
    if (q != pi_i) order.push_back(1000 + static_cast<int>(q));
  for (std::size_t q = 0; q < lambda->seq.size(); ++q)
    if (q != li) order.push_back(2000 + static_cast<int>(q));
  for (int g : gamma) order.push_back(g);
  return tg::order(t, order);
}

// Swaps the two context blocks |- X(a), Y(b) into |- Y, X.
Proof swap_blocks(const Proof& p, std::size_t a) {
  std::vector<std::size_t> pm;
  for (std::size_t q = a; q < p->seq.size(); ++q) pm.push_back(q);
  for (std::size_t q = 0; q < a; ++q) pm.push_back(q);
  return pr::perm(p, pm);
}

}  // namespace

namespace {

// A cut premise seen through any permutations above it.
struct View {
  Proof inner;
  std::size_t i;
  std::vector<std::size_t> map;  // outer position -> inner position
};

View unwrap(const Proof& p, std::size_t i) {
  View v{p, i, {}};
  for (std::size_t q = 0; q < p->seq.size(); ++q) v.map.push_back(q);
  while (v.inner->rule == Rule::Perm) {
    for (std::size_t& q : v.map) q = v.inner->perm[q];
    v.inner = v.inner->premises[0];
  }
  v.i = v.map[i];
  return v;
}

std::optional<Proof> reduce_views(const View& l, const View& r, RedexKind* kind) {
  for (int side = 0; side < 2; ++side) {
    const View& m = side == 0 ? l : r;
    const View& n = side == 0 ? r : l;
    if (!principal(m.inner, m.i, Rule::Mu)) continue;
    if (principal(n.inner, n.i, Rule::NuFold)) {
      if (kind) *kind = RedexKind::MuNuFold;
      const Proof &mp = m.inner->premises[0], &np = n.inner->premises[0];
      return side == 0 ? pr::cut(mp, m.inner->idx[0], np, n.inner->idx[0])
                       : pr::cut(np, n.inner->idx[0], mp, m.inner->idx[0]);
    }
    if (principal(n.inner, n.i, Rule::Nu)) {
      if (kind) *kind = RedexKind::MuNu;
      Proof out = reduce_mu_nu(m.inner, n.inner);
      if (side == 1) out = swap_blocks(out, m.inner->seq.size() - 1);
      return out;
    }
  }
  return std::nullopt;
}

bool is_redex(const Proof& p) {
  if (p->rule != Rule::Cut) return false;
  View l = unwrap(p->premises[0], p->idx[0]), r = unwrap(p->premises[1], p->idx[1]);
  auto fix = [](const View& v, Rule ru) { return principal(v.inner, v.i, ru); };
  auto dual = [&](const View& a, const View& b) {
    return fix(a, Rule::Mu) && (fix(b, Rule::Nu) || fix(b, Rule::NuFold));
  };
  return dual(l, r) || dual(r, l);
}

}  // namespace

std::optional<Proof> reduce_root(const Proof& p, RedexKind* kind) {
  if (p->rule != Rule::Cut) return std::nullopt;
  View l = unwrap(p->premises[0], p->idx[0]);
  View r = unwrap(p->premises[1], p->idx[1]);
  auto out = reduce_views(l, r, kind);
  if (!out) return out;
  // The reduct follows the inner orders; restore the cut's conclusion order.
  const std::size_t nl = l.map.size() - 1;
  std::vector<std::size_t> pm;
  for (std::size_t q = 0; q < l.map.size(); ++q)
    if (q != p->idx[0]) pm.push_back(l.map[q] - (l.map[q] > l.i ? 1 : 0));
  for (std::size_t q = 0; q < r.map.size(); ++q)
    if (q != p->idx[1]) pm.push_back(nl + r.map[q] - (r.map[q] > r.i ? 1 : 0));
  return pr::perm(*out, pm);
}

std::optional<Proof> reduce(const Proof& p, RedexKind* kind) {
  if (auto r = reduce_root(p, kind)) return r;
  for (std::size_t k = 0; k < p->premises.size(); ++k) {
    if (auto r = reduce(p->premises[k], kind)) {
      ProofNode n = *p;
      n.premises[k] = *r;
      return make_raw(std::move(n));
    }
  }
  return std::nullopt;
}

std::size_t count_redexes(const Proof& root) {
  std::unordered_map<const ProofNode*, std::size_t> memo;
  std::function<std::size_t(const Proof&)> go = [&](const Proof& p) -> std::size_t {
    auto it = memo.find(p.get());
    if (it != memo.end()) return it->second;
    std::size_t c = is_redex(p) ? 1 : 0;
    for (const Proof& q : p->premises) c += go(q);
    memo[p.get()] = c;
    return c;
  };
  return go(root);
}

}  // namespace mull

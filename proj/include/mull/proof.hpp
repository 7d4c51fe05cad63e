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
#ifndef MULL_PROOF_HPP
#define MULL_PROOF_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mull/formula.hpp"
#include "mull/sexp.hpp"

namespace mull {

enum class Rule {
  Ax,
  Cut,
  One,
  Tensor,
  Bot,
  Par,
  Top,
  PlusL,
  PlusR,
  With,
  Weak,
  Contr,
  Der,
  Prom,
  Mu,
  NuFold,
  Nu,
  Perm,
};

std::string rule_name(Rule r);

struct ProofNode;
using Proof = std::shared_ptr<const ProofNode>;
using Sequent = std::vector<Formula>;

// One inference. The principal formula of every introduction rule is
// appended at the end of the conclusion; premise positions are explicit.
//
//   Ax A                       |- A^, A
//   Cut l i r j                l \ i ++ r \ j          (r[j] = l[i]^)
//   One                        |- 1
//   Tensor l i r j             l \ i ++ r \ j ++ [l[i] * r[j]]
//   Bot p                      p ++ [bot]
//   Par p i j                  p \ {i,j} ++ [p[i] par p[j]]
//   Top ctx                    ctx ++ [top]
//   PlusL p i B                p \ i ++ [p[i] + B]
//   PlusR p i A                p \ i ++ [A + p[i]]
//   With l i r j               l \ i ++ [l[i] & r[j]]  (l \ i = r \ j)
//   Weak p A                   p ++ [?A]
//   Contr p i j                p \ {i,j} ++ [p[i]]     (p[i] = p[j] = ?A)
//   Der p i                    p \ i ++ [?p[i]]
//   Prom p i                   p \ i ++ [!p[i]]        (p \ i all ?-formulas)
//   Mu p i M                   p \ i ++ [M]            (p[i] = unfold M)
//   NuFold p i N               p \ i ++ [N]            (p[i] = unfold N)
//   Nu N d i s j k             d \ i ++ s \ {j,k} ++ [N]
//                              (d[i] = B, s[j] = B^, s[k] = F[B/z] for N = nu z F,
//                               s \ {j,k} all ?-formulas)
//   Perm p perm                conclusion[q] = p[perm[q]]
struct ProofNode {
  Rule rule;
  Sequent seq;
  Formula formula;  // Ax, Weak, PlusL/PlusR side formula, Mu/NuFold/Nu principal
  Formula inv;      // Nu invariant
  std::vector<Proof> premises;
  std::vector<std::size_t> idx;
  std::vector<std::size_t> perm;
  Sequent ctx;  // Top
};

// Builders validate the rule schema and throw CheckError on violation.
namespace pr {
Proof ax(const Formula& a);
Proof cut(const Proof& l, std::size_t i, const Proof& r, std::size_t j);
Proof one();
Proof tensor(const Proof& l, std::size_t i, const Proof& r, std::size_t j);
Proof bot(const Proof& p);
Proof par(const Proof& p, std::size_t i, std::size_t j);
Proof top(Sequent ctx);
Proof plus_l(const Proof& p, std::size_t i, const Formula& b);
Proof plus_r(const Proof& p, std::size_t i, const Formula& a);
Proof with(const Proof& l, std::size_t i, const Proof& r, std::size_t j);
Proof weak(const Proof& p, const Formula& a);
Proof contr(const Proof& p, std::size_t i, std::size_t j);
Proof der(const Proof& p, std::size_t i);
Proof prom(const Proof& p, std::size_t i);
Proof mu(const Proof& p, std::size_t i, const Formula& m);
Proof nufold(const Proof& p, std::size_t i, const Formula& n);
Proof nu(const Formula& n, const Proof& delta, std::size_t i, const Proof& step, std::size_t j,
         std::size_t k);
Proof perm(const Proof& p, std::vector<std::size_t> perm);
// Derived Park rule: |- ?G, B^, F[B/z]  gives  |- B^, ?G, nu z F.
Proof nu_bis(const Formula& n, const Proof& step, std::size_t j, std::size_t k);
// Reorders the conclusion to `target` (alpha-equal formulas, matched left to right).
Proof arrange(const Proof& p, const Sequent& target);
// Moves position i to the end, keeping the order of the others.
Proof to_last(const Proof& p, std::size_t i);
}  // namespace pr

// Unchecked node, for tests and the checker.
Proof make_raw(ProofNode node);

// Recomputes every annotation; returns the conclusion or throws CheckError
// naming the offending node.
Sequent check(const Proof& p);

std::size_t proof_size(const Proof& p);
std::string print_sequent(const Sequent& s);
bool same_sequent(const Sequent& a, const Sequent& b);
Sequent remove_positions(const Sequent& s, std::vector<std::size_t> pos);

// Proof file format.
Proof proof_from_sexp(const Sexp& e);
Proof parse_proof(std::string_view text);
std::string print_proof(const Proof& p);

// Conclusion positions tracked by tags, for derivations that must keep
// track of which copy of a formula is which.
struct Tagged {
  Proof p;
  std::vector<int> tags;

  std::size_t at(int tag) const;
  const Formula& formula(int tag) const { return p->seq[at(tag)]; }
};

namespace tg {
Tagged ax(const Formula& a, int t_neg, int t_pos);
Tagged cut(const Tagged& l, int tl, const Tagged& r, int tr);
Tagged tensor(const Tagged& l, int tl, const Tagged& r, int tr, int out);
Tagged par(const Tagged& p, int a, int b, int out);
Tagged contr(const Tagged& p, int a, int b, int out);
Tagged der(const Tagged& p, int a, int out);
Tagged prom(const Tagged& p, int a, int out);
Tagged weak(const Tagged& p, const Formula& a, int out);
Tagged bot(const Tagged& p, int out);
Tagged plus_l(const Tagged& p, int a, const Formula& b, int out);
Tagged plus_r(const Tagged& p, int a, const Formula& b, int out);
Tagged with(const Tagged& l, int tl, const Tagged& r, int tr, int out);
Tagged mu(const Tagged& p, int a, const Formula& m, int out);
Tagged nufold(const Tagged& p, int a, const Formula& n, int out);
Tagged nu(const Formula& n, const Tagged& delta, int td, const Tagged& step, int tj, int tk,
          int out);
Tagged retag(const Tagged& p, std::vector<int> tags);
Tagged renumber(const Tagged& p, int from, int to);
// Permutes so that the tags appear in exactly this order.
Proof order(const Tagged& p, const std::vector<int>& tags);
Tagged reorder(const Tagged& p, const std::vector<int>& tags);
}  // namespace tg

// ---------------------------------------------------------------------------
// Derived rules.

Proof zero_proof();
// p[i] = Nat; the successor is appended last.
Proof succ_proof(const Proof& p, std::size_t i);
Proof succ_proof(const Proof& p);
Proof numeral_proof(std::size_t n);
// base |- ?G, C (C last), step |- ?G, C^, C (C^ and C last two, same ?G order)
// gives |- ?G, Nat^, C.
Proof nat_iter(const Proof& base, const Proof& step);

// Lazy integers.
Proof lazy_zero_proof();
Proof lazy_succ_proof(const Proof& p, std::size_t i);
// base |- ?G, A (A last), step |- ?G, (!A -o A) last; gives |- ?G, Lnat -o A.
Proof lazy_iter(const Proof& base, const Proof& step);
Proof is_zero_proof();

// |- P'^, !P' for positive P with P' = P[!A/z]; env maps the free variables.
using FormulaEnv = std::vector<std::pair<std::string, Formula>>;
Proof pprom(const Formula& p, const FormulaEnv& env = {});
// The compact storage proof of Nat.
Proof pprom_nat();

// Generalized structural rules for closed negative formulas.
// p |- N1..Nk, A with the N's at positions ns and A at a.
Proof gen_prom(const Proof& p, const std::vector<std::size_t>& ns, std::size_t a);
// p |- G gives |- G, N.
Proof gen_weak(const Proof& p, const Formula& n);
// p |- ..N(i)..N(j).. gives the contraction appended last.
Proof gen_contr(const Proof& p, std::size_t i, std::size_t j);

// Functorial action of F on tau |- ?G, A^, B (A^ at ia, B at ib):
// |- ?G, (F[A/z, env])^, F[B/z, env] with ?G in tau's order.
Proof functor_proof(const Formula& f, const std::string& z, const Proof& tau, std::size_t ia,
                    std::size_t ib, const FormulaEnv& env = {});

// ---------------------------------------------------------------------------
// Cut reduction.

enum class RedexKind { MuNu, MuNuFold };
std::string to_string(RedexKind k);

// The displayed reduct when the root is a mu/nu or mu/nufold cut.
std::optional<Proof> reduce_root(const Proof& p, RedexKind* kind = nullptr);
// Reduces the first redex found in depth-first, left-to-right order.
std::optional<Proof> reduce(const Proof& p, RedexKind* kind = nullptr);
std::size_t count_redexes(const Proof& p);

}  // namespace mull

#endif  // MULL_PROOF_HPP

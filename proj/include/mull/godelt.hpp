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
#ifndef MULL_GODELT_HPP
#define MULL_GODELT_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mull/clique.hpp"
#include "mull/proof.hpp"
#include "mull/sexp.hpp"

namespace mull {

// System T with strict integers.

struct TTypeNode;
using TType = std::shared_ptr<const TTypeNode>;

struct TTypeNode {
  bool arrow = false;
  TType dom, cod;
};

TType t_nat();
TType t_arrow(TType a, TType b);
bool type_eq(const TType& a, const TType& b);
std::string print_type(const TType& a);
TType type_from_sexp(const Sexp& e);

enum class TKind { Num, Var, App, Abs, Succ, Rec, Let };

struct TTermNode;
using TTerm = std::shared_ptr<const TTermNode>;

//   Num n | Var x | App s t | Abs x ty s | Succ s | Rec s t u | Let x s t
struct TTermNode {
  TKind kind;
  std::size_t n = 0;
  std::string x;
  TType ty;
  std::vector<TTerm> kids;
};

namespace tt {
TTerm num(std::size_t n);
TTerm var(std::string x);
TTerm app(TTerm s, TTerm t);
TTerm apps(TTerm s, std::vector<TTerm> args);
TTerm abs(std::string x, TType ty, TTerm s);
TTerm succ(TTerm s);
TTerm rec(TTerm s, TTerm t, TTerm u);
TTerm let(std::string x, TTerm s, TTerm t);
}  // namespace tt

TTerm term_from_sexp(const Sexp& e);
TTerm parse_term(std::string_view text);
std::string print_term(const TTerm& s);

// Ordered; later entries shadow earlier ones.
using TCtx = std::vector<std::pair<std::string, TType>>;

// Throws TypeError.
TType typecheck(const TCtx& ctx, const TTerm& s);

std::vector<std::string> free_vars(const TTerm& s);
// Capture-avoiding s[t/x].
TTerm subst(const TTerm& s, const TTerm& t, const std::string& x);

// One weak-head step, or nothing when s is normal.
std::optional<TTerm> step(const TTerm& s);

struct EvalResult {
  TTerm value;
  std::size_t steps;
};
constexpr std::size_t kDefaultFuel = 1'000'000;
// Throws FuelExhausted.
EvalResult eval(const TTerm& s, std::size_t fuel = kDefaultFuel);
// Value of a closed term of type Nat.
std::size_t eval_nat_term(const TTerm& s, std::size_t fuel = kDefaultFuel);

// Nat* = Nat, (a -> b)* = !a* -o b*.
Formula translate_type(const TType& a);
// ?(a1*)^, ..., ?(ak*)^, tau*.
Sequent translate_sequent(const TCtx& ctx, const TType& tau);

// The direct relational semantics, as a clique of the translated sequent's
// space. Rows are computed with every component of size <= max(budget,
// min_bound) and filtered to tuple tokens of size <= budget.
Clique denote_t(const TCtx& ctx, const TTerm& s, std::size_t min_bound = 0);

// Value of a closed Nat term read off its denotation, doubling the bound
// from 2 up to max_bound; throws BudgetError.
std::size_t eval_nat_denote(const TTerm& s, std::size_t max_bound = 256);

// A checked proof of the translated sequent.
Proof translate(const TCtx& ctx, const TTerm& s);
// translate(f) cut against the promoted numeral n, for f : Nat -> Nat.
Proof apply_numeral(const Proof& f, std::size_t n);

struct CorpusTerm {
  std::string name;
  std::string source;
  TTerm term;
};
const std::vector<CorpusTerm>& t_corpus();
TTerm corpus_term(const std::string& name);

}  // namespace mull

#endif  // MULL_GODELT_HPP

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
#ifndef MULL_TOTALITY_HPP
#define MULL_TOTALITY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mull/clique.hpp"
#include "mull/formula.hpp"

namespace mull {

// Finite coherence space with an explicit web of at most 64 tokens; cliques
// are bitmasks over the web positions.
struct FinSpace {
  std::vector<Token> web;          // canonical order
  std::vector<std::uint64_t> coh;  // bit j of coh[i]: web[i] coherent with web[j]

  std::size_t size() const { return web.size(); }
  std::optional<std::size_t> find(Token t) const;
  bool is_clique(std::uint64_t mask) const;
  std::uint64_t full() const;
  std::size_t max_token_size() const;
  Space space() const;
};

using CliqueSet = std::vector<std::uint64_t>;  // sorted, duplicate-free masks

struct TotalityConfig {
  std::size_t max_web = 20;           // guard for exhaustive clique enumeration
  std::size_t max_cliques = 1 << 22;  // guard on the number of cliques
};

FinSpace fin_space(const Space& e, std::size_t max_web = 64);
FinSpace fin_space(std::vector<Token> web, const std::function<bool(Token, Token)>& coh);
FinSpace fin_dual(const FinSpace& e);
FinSpace fin_tensor(const FinSpace& e, const FinSpace& f);
FinSpace fin_par(const FinSpace& e, const FinSpace& f);
FinSpace fin_plus(const FinSpace& e, const FinSpace& f);
FinSpace fin_with(const FinSpace& e, const FinSpace& f);
FinSpace fin_bang(const FinSpace& e);
FinSpace fin_whynot(const FinSpace& e);
FinSpace fin_unit();
FinSpace fin_empty();

std::vector<Token> mask_tokens(const FinSpace& e, std::uint64_t mask);
// Throws Error when a token lies outside the web.
std::uint64_t token_mask(const FinSpace& e, std::span<const Token> ts);
std::string clique_str(const FinSpace& e, std::uint64_t mask);
std::string clique_set_str(const FinSpace& e, const CliqueSet& s);
void normalize(CliqueSet& s);
bool subset(const CliqueSet& a, const CliqueSet& b);

// Every clique of e, in increasing mask order.
CliqueSet all_cliques(const FinSpace& e, const TotalityConfig& cfg = {});
// Cliques of e^ meeting every member of t.
CliqueSet orthogonal(const CliqueSet& t, const FinSpace& e, const TotalityConfig& cfg = {});

struct FinTotality {
  FinSpace space;
  CliqueSet members;
  bool closed = false;

  std::string str() const { return clique_set_str(space, members); }
};

FinTotality biorthogonal(const CliqueSet& t, const FinSpace& e, const TotalityConfig& cfg = {});
// Overloads on finite CoherenceSpaces.
CliqueSet all_cliques(const Space& e, const TotalityConfig& cfg = {});
CliqueSet orthogonal(const CliqueSet& t, const Space& e, const TotalityConfig& cfg = {});
FinTotality biorthogonal(const CliqueSet& t, const Space& e, const TotalityConfig& cfg = {});

enum class TotKind { Tensor, Par, Plus, With, Lolli };
FinTotality connective_totality(TotKind k, const FinTotality& x1, const FinTotality& x2,
                                const TotalityConfig& cfg = {});
FinTotality bang_totality(const FinTotality& x, const TotalityConfig& cfg = {});
FinTotality whynot_totality(const FinTotality& x, const TotalityConfig& cfg = {});
FinTotality dual_totality(const FinTotality& x, const TotalityConfig& cfg = {});
FinTotality one_totality();
FinTotality bot_totality();
FinTotality top_totality();
FinTotality zero_totality();

using TotalityOp = std::function<CliqueSet(const CliqueSet&)>;

struct LatticeResult {
  FinTotality fixed;
  std::vector<CliqueSet> chain;  // T_0, T_1, ... up to the fixed point
  std::size_t stabilized_at = 0;  // first n with T_n = T_{n+1}
};

// Least fixed point by iteration from the empty candidate, closing every join
// under the biorthogonal. Throws Error when the chain is not monotone.
LatticeResult lattice_lfp(const TotalityOp& op, const FinSpace& e, const TotalityConfig& cfg = {});
// Greatest fixed point by iteration from the set of all cliques.
LatticeResult lattice_gfp(const TotalityOp& op, const FinSpace& e, const TotalityConfig& cfg = {});

struct BinderPolicy {
  bool mu_as_lfp = true;
  bool nu_as_gfp = true;
};

// Truncated carrier of a closed formula: every binder is unfolded `depth`
// times from the empty space.
FinSpace formula_web(const Formula& a, std::size_t depth);
FinTotality formula_totality(const Formula& a, std::size_t depth, BinderPolicy policy = {},
                             const TotalityConfig& cfg = {});
// The Knaster-Tarski chain of the outermost binder of a closed formula.
LatticeResult binder_chain(const Formula& fix, std::size_t depth, BinderPolicy policy = {},
                           const TotalityConfig& cfg = {});

enum class Verdict { TotalAtDepth, NotTotal, Inconclusive };
std::string to_string(Verdict v);

struct TotalityReport {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Token> truncated;               // the clique restricted to the truncated web
  std::optional<std::vector<Token>> witness;  // orthogonal clique missed by the truncation
  std::string note;
};

TotalityReport check_total(const Clique& c, const Formula& a, BinderPolicy policy,
                           std::size_t depth, const TotalityConfig& cfg = {});

}  // namespace mull

#endif  // MULL_TOTALITY_HPP

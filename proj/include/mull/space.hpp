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

#ifndef MULL_SPACE_HPP
#define MULL_SPACE_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mull/token.hpp"

namespace mull {

class CoherenceSpace;
using Space = std::shared_ptr<const CoherenceSpace>;

enum class SpaceKind {
  Empty,
  Unit,
  Finite,
  Nat,
  Truncate,
  Dual,
  Tensor,
  Par,
  Plus,
  With,
  Lolli,
  Bang,
  Other,
};

enum class Connective { Tensor, Par, Plus, With };

// A coherence space given by a membership predicate and a coherence
// predicate on web members, with a size-bounded enumerator.
class CoherenceSpace {
 public:
  virtual ~CoherenceSpace() = default;

  virtual bool contains(Token a) const = 0;
  // Defined on web members; reflexive and symmetric.
  virtual bool coh(Token a, Token b) const = 0;
  virtual std::string describe() const = 0;
  virtual SpaceKind kind() const { return SpaceKind::Other; }
  virtual std::span<const Space> operands() const { return {}; }
  // Upper bound on the size of any web token, when the web is finite.
  virtual std::optional<std::size_t> max_token_size() const { return std::nullopt; }

  bool strict_coh(Token a, Token b) const { return !(a == b) && coh(a, b); }

  // Every web token of size <= bound, canonically ordered. Memoized.
  std::vector<Token> enumerate(std::size_t bound) const;
  std::optional<std::vector<Token>> finite_web() const;

 protected:
  // May return tokens in any order, without duplicates.
  virtual std::vector<Token> generate(std::size_t bound) const = 0;

 private:
  mutable std::mutex memo_mu_;
  mutable std::map<std::size_t, std::vector<Token>> memo_;
};

Space one_space();
Space bot_space();
Space top_space();
Space zero_space();
Space nat_space();
Space finite_space(std::vector<Token> web, std::function<bool(Token, Token)> coh,
                   std::string name = "finite");
// Web {0..n-1} (numeral tokens); edges are the strictly coherent pairs.
Space graph_space(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

Space dual(Space e);
Space connective(Connective k, Space e, Space f);
Space tensor(Space e, Space f);
Space par(Space e, Space f);
Space plus(Space e, Space f);
Space with(Space e, Space f);
Space lolli(Space e, Space f);
Space bang(Space e);
Space whynot(Space e);
Space truncate(Space e, std::size_t size_bound);

bool is_clique(const CoherenceSpace& e, std::span<const Token> tokens);
std::vector<Token> enumerate_web(const Space& e, std::size_t size_bound);

// (E, F) when s is E -o F, either as lolli or as par(dual E, F).
std::optional<std::pair<Space, Space>> lolli_parts(const Space& s);

}  // namespace mull

#endif  // MULL_SPACE_HPP

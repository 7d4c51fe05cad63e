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
#ifndef MULL_INTERP_HPP
#define MULL_INTERP_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "mull/clique.hpp"
#include "mull/proof.hpp"

namespace mull {

struct InterpOptions {
  // Component bound used for every internal row computation is at least this.
  std::size_t min_bound = 0;
  // Maximal number of nu-chain stages; 0 iterates until the chain is stable.
  std::size_t nu_depth = 0;
  // Row count above which a node raises BudgetError.
  std::size_t max_rows = 4'000'000;
};

// One element of a proof's denotation, one token per conclusion position.
using Row = std::vector<Token>;

// Space of |- A1, ..., An: A1 par (A2 par ...), bot when empty.
Space sequent_space(const Sequent& s);
Token row_token(const Row& r);

// Eager evaluation of the relational interpretation, restricted to rows
// whose tokens all have size <= bound. Memoized per node and bound.
class Interpreter {
 public:
  explicit Interpreter(InterpOptions opts = {});

  std::vector<Row> rows(const Proof& p, std::size_t bound);
  // Stages g_0, g_1, ... of the chain of a Nu node, each a set of rows
  // (?G, B^, nu) over the step's context.
  std::vector<std::vector<Row>> nu_chain(const Proof& nu, std::size_t bound);
  const InterpOptions& options() const { return opts_; }

 private:
  const std::vector<Row>& eval(const Proof& p, std::size_t bound);
  std::vector<Row> compute(const Proof& p, std::size_t bound);
  std::vector<Row> nu_rows(const Proof& p, std::size_t bound,
                           std::vector<std::vector<Row>>* stages);

  InterpOptions opts_;
  std::recursive_mutex mu_;
  std::map<std::pair<const ProofNode*, std::size_t>, std::vector<Row>> memo_;
  std::vector<Proof> keep_;
};

// The clique of the proof's sequent space; enumerate(b) lists the tuple
// tokens of size <= b computed at component bound max(b, min_bound).
Clique interpret(const Proof& p, InterpOptions opts = {});
// Interpretation of the Nu rule on the given premises.
Clique interpret_nu(const Formula& n, const Proof& delta, std::size_t i, const Proof& step,
                    std::size_t j, std::size_t k, InterpOptions opts = {});

struct EvalNatResult {
  std::size_t value;
  std::size_t bound;  // the bound at which the numeral appeared
};
// Value of a proof of |- Nat, searching bounds up to max_bound.
EvalNatResult eval_nat_ex(const Proof& p, std::size_t max_bound = 256, InterpOptions opts = {});
std::size_t eval_nat(const Proof& p, std::size_t max_bound = 256);

}  // namespace mull

#endif  // MULL_INTERP_HPP

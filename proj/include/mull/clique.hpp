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

#ifndef MULL_CLIQUE_HPP
#define MULL_CLIQUE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mull/space.hpp"

namespace mull {

enum class Membership { Yes, No, Unknown };

std::string to_string(Membership m);

// Budget-indexed producer of clique members.
class CliqueSource {
 public:
  virtual ~CliqueSource() = default;
  // Members found with search budget `budget`; monotone in the budget.
  virtual std::vector<Token> generate(std::size_t budget) const = 0;
  // True when generate(budget) holds every member of size <= budget.
  virtual bool exact(std::size_t) const { return false; }
};

// A lazily enumerable clique of a coherence space.
class Clique {
 public:
  Clique(Space space, std::shared_ptr<const CliqueSource> source);

  static Clique of(Space space, std::vector<Token> tokens);
  static Clique empty(Space space);
  static Clique generated(Space space, std::function<std::vector<Token>(std::size_t)> gen,
                          bool exact);

  const Space& space() const { return space_; }
  // Canonically ordered; memoized per budget.
  std::vector<Token> enumerate(std::size_t budget) const;
  Membership member(Token t, std::size_t budget) const;

 private:
  struct Memo;
  Space space_;
  std::shared_ptr<const CliqueSource> source_;
  std::shared_ptr<Memo> memo_;
};

enum class ExpMap { Der, Digg, Weak, Contr };

struct EmbRet {
  Clique emb;
  Clique ret;
};

Clique identity(Space e);
Clique compose(const Clique& s, const Clique& t);
Clique apply(const Clique& t, const Clique& u);
Clique transpose(const Clique& t);
Clique exp_structure(Space e, ExpMap which);
// Functorial action of ! on t : E -o F.
Clique bang_mor(const Clique& t);
std::pair<Clique, Clique> seely_iso(Space e1, Space e2);
// Diagonal embedding-retraction when Web E <= Web F with the same coherence,
// checked over tokens of size <= bound (exhaustive when E is finite).
std::optional<EmbRet> subcoh(Space e, Space f, std::size_t bound);

// Tokens of c of size <= limit found at budget.
std::vector<Token> restrict_size(const std::vector<Token>& ts, std::size_t limit);

}  // namespace mull

#endif  // MULL_CLIQUE_HPP

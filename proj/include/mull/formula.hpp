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

#ifndef MULL_FORMULA_HPP
#define MULL_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mull/sexp.hpp"
#include "mull/space.hpp"
#include "mull/vcs.hpp"

namespace mull {

enum class FKind { One, Bot, Zero, Top, Tensor, Par, Plus, With, Bang, WhyNot, Var, Mu, Nu };

struct FNode;

// muLL formula. Immutable; binder names matter only up to alpha-equivalence.
class Formula {
 public:
  Formula();  // one

  static Formula one();
  static Formula bot();
  static Formula zero();
  static Formula top();
  static Formula tensor(Formula a, Formula b);
  static Formula par(Formula a, Formula b);
  static Formula plus(Formula a, Formula b);
  static Formula with(Formula a, Formula b);
  static Formula bang(Formula a);
  static Formula whynot(Formula a);
  static Formula var(std::string name);
  static Formula mu(std::string name, Formula body);
  static Formula nu(std::string name, Formula body);
  // A -o B, i.e. (A)^ par B.
  static Formula lolli(Formula a, Formula b);

  FKind kind() const;
  const Formula& lhs() const;   // binary connectives; body of unary ones and binders
  const Formula& rhs() const;   // binary connectives
  const Formula& body() const;  // Bang, WhyNot, Mu, Nu
  const std::string& name() const;  // Var, Mu, Nu
  bool is_binary() const;
  bool is_binder() const { return kind() == FKind::Mu || kind() == FKind::Nu; }

  std::string str() const;  // canonical printing
  const FNode* node() const { return node_.get(); }

 private:
  friend struct FNode;
  struct NullTag {};
  explicit Formula(NullTag) {}
  explicit Formula(std::shared_ptr<const FNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const FNode> node_;
};

struct FNode {
  FKind kind;
  std::string name;
  Formula a{Formula::NullTag{}};
  Formula b{Formula::NullTag{}};
};

enum class Polarity { Positive, Negative, Both, Neither };
std::string to_string(Polarity p);

Formula parse_formula(std::string_view text);
Formula formula_from_sexp(const Sexp& e);
std::vector<Formula> parse_formula_file(std::string_view text);
std::string print(const Formula& a);

Formula negate(const Formula& a);
// a[b/z], capture-avoiding.
Formula subst(const Formula& a, const Formula& b, const std::string& z);
std::set<std::string> free_vars(const Formula& a);
bool is_closed(const Formula& a);
bool alpha_equal(const Formula& a, const Formula& b);
Polarity polarity(const Formula& a);
// Unfolding of a binder: body[self/z].
Formula unfold(const Formula& fix);

// Throws Error if a free variable is missing from vars.
Vcs denote(const Formula& a, const std::vector<std::string>& vars);
// Space of a closed formula, cached by canonical text.
Space space_of(const Formula& a);

Formula nat_formula();          // mu z. 1 + z
Formula lazy_nat_formula();     // mu z. 1 + !z
Formula stream_formula();       // nu z. 1 & (z + z)
Formula empty_stream_formula(); // nu z. z + z

inline bool operator==(const Formula& a, const Formula& b) { return alpha_equal(a, b); }

}  // namespace mull

#endif  // MULL_FORMULA_HPP

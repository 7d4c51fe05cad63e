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

#include "mull/formula.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

#include "mull/errors.hpp"

namespace mull {

namespace {

std::shared_ptr<const FNode> leaf(FKind k) {
  return std::make_shared<const FNode>(FNode{k, ""});
}

}  // namespace

Formula::Formula() {
  static const std::shared_ptr<const FNode> one_node = [] {
    auto n = std::make_shared<FNode>();
    n->kind = FKind::One;
    return std::shared_ptr<const FNode>(n);
  }();
  node_ = one_node;
}

Formula Formula::one() { return Formula(); }
Formula Formula::bot() {
  static const Formula f(leaf(FKind::Bot));
  return f;
}
Formula Formula::zero() {
  static const Formula f(leaf(FKind::Zero));
  return f;
}
Formula Formula::top() {
  static const Formula f(leaf(FKind::Top));
  return f;
}

Formula Formula::tensor(Formula a, Formula b) {
  return Formula(std::make_shared<const FNode>(FNode{FKind::Tensor, "", a, b}));
}
Formula Formula::par(Formula a, Formula b) {
  return Formula(std::make_shared<const FNode>(FNode{FKind::Par, "", a, b}));
}
Formula Formula::plus(Formula a, Formula b) {
  return Formula(std::make_shared<const FNode>(FNode{FKind::Plus, "", a, b}));
}
Formula Formula::with(Formula a, Formula b) {
  return Formula(std::make_shared<const FNode>(FNode{FKind::With, "", a, b}));
}
Formula Formula::bang(Formula a) {
  return Formula(std::make_shared<const FNode>(FNode{FKind::Bang, "", a}));
}
Formula Formula::whynot(Formula a) {
  return Formula(std::make_shared<const FNode>(FNode{FKind::WhyNot, "", a}));
}
Formula Formula::var(std::string name) {
  return Formula(std::make_shared<const FNode>(FNode{FKind::Var, std::move(name)}));
}
Formula Formula::mu(std::string name, Formula body) {
  return Formula(std::make_shared<const FNode>(FNode{FKind::Mu, std::move(name), body}));
}
Formula Formula::nu(std::string name, Formula body) {
  return Formula(std::make_shared<const FNode>(FNode{FKind::Nu, std::move(name), body}));
}
Formula Formula::lolli(Formula a, Formula b) { return par(negate(a), b); }

namespace {
Formula binary(FKind k, Formula a, Formula b) {
  switch (k) {
    case FKind::Tensor:
      return Formula::tensor(a, b);
    case FKind::Par:
      return Formula::par(a, b);
    case FKind::Plus:
      return Formula::plus(a, b);
    default:
      return Formula::with(a, b);
  }
}

Formula rebuild(const Formula& f, Formula a, Formula b) {
  switch (f.kind()) {
    case FKind::Tensor:
    case FKind::Par:
    case FKind::Plus:
    case FKind::With:
      return binary(f.kind(), a, b);
    case FKind::Bang:
      return Formula::bang(a);
    case FKind::WhyNot:
      return Formula::whynot(a);
    case FKind::Mu:
      return Formula::mu(f.name(), a);
    case FKind::Nu:
      return Formula::nu(f.name(), a);
    default:
      return f;
  }
}
}  // namespace

FKind Formula::kind() const { return node_->kind; }
const Formula& Formula::lhs() const { return node_->a; }
const Formula& Formula::rhs() const { return node_->b; }
const Formula& Formula::body() const { return node_->a; }
const std::string& Formula::name() const { return node_->name; }
bool Formula::is_binary() const {
  FKind k = kind();
  return k == FKind::Tensor || k == FKind::Par || k == FKind::Plus || k == FKind::With;
}
std::string Formula::str() const { return print(*this); }

std::string to_string(Polarity p) {
  switch (p) {
    case Polarity::Positive:
      return "positive";
    case Polarity::Negative:
      return "negative";
    case Polarity::Both:
      return "both";
    case Polarity::Neither:
      return "neither";
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {

const std::map<std::string, FKind>& binary_heads() {
  static const std::map<std::string, FKind> m{{"tensor", FKind::Tensor},
                                              {"par", FKind::Par},
                                              {"plus", FKind::Plus},
                                              {"with", FKind::With}};
  return m;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

std::string expect_name(const Sexp& e) {
  if (!e.atom || !valid_name(e.text)) throw ParseError("expected a variable name", e.pos);
  return e.text;
}

void arity(const Sexp& e, std::size_t n) {
  if (e.items.size() != n)
    throw ParseError("'" + e.items[0].text + "' expects " + std::to_string(n - 1) + " argument(s)",
                     e.pos);
}

}  // namespace

Formula formula_from_sexp(const Sexp& e) {
  if (e.atom) {
    if (e.text == "one") return Formula::one();
    if (e.text == "bot") return Formula::bot();
    if (e.text == "zero") return Formula::zero();
    if (e.text == "top") return Formula::top();
    if (e.text == "nat") return nat_formula();
    if (e.text == "lnat") return lazy_nat_formula();
    throw ParseError("unknown formula atom '" + e.text + "'", e.pos);
  }
  if (e.items.empty() || !e.items[0].atom) throw ParseError("expected a formula constructor", e.pos);
  const std::string& h = e.items[0].text;
  if (auto it = binary_heads().find(h); it != binary_heads().end()) {
    arity(e, 3);
    return binary(it->second, formula_from_sexp(e.items[1]), formula_from_sexp(e.items[2]));
  }
  if (h == "lolli") {
    arity(e, 3);
    return Formula::lolli(formula_from_sexp(e.items[1]), formula_from_sexp(e.items[2]));
  }
  if (h == "bang" || h == "whynot" || h == "neg") {
    arity(e, 2);
    Formula a = formula_from_sexp(e.items[1]);
    if (h == "bang") return Formula::bang(a);
    if (h == "whynot") return Formula::whynot(a);
    return negate(a);
  }
  if (h == "var") {
    arity(e, 2);
    return Formula::var(expect_name(e.items[1]));
  }
  if (h == "mu" || h == "nu") {
    arity(e, 3);
    std::string z = expect_name(e.items[1]);
    Formula body = formula_from_sexp(e.items[2]);
    return h == "mu" ? Formula::mu(z, body) : Formula::nu(z, body);
  }
  throw ParseError("unknown formula constructor '" + h + "'", e.pos);
}

Formula parse_formula(std::string_view text) { return formula_from_sexp(read_sexp(text)); }

std::vector<Formula> parse_formula_file(std::string_view text) {
  std::vector<Formula> out;
  for (const Sexp& e : read_sexps(text)) out.push_back(formula_from_sexp(e));
  return out;
}

namespace {

void print_rec(const Formula& f, const std::set<std::string>& avoid,
               std::vector<std::pair<std::string, std::string>>& scope, std::string& out) {
  switch (f.kind()) {
    case FKind::One:
      out += "one";
      return;
    case FKind::Bot:
      out += "bot";
      return;
    case FKind::Zero:
      out += "zero";
      return;
    case FKind::Top:
      out += "top";
      return;
    case FKind::Tensor:
    case FKind::Par:
    case FKind::Plus:
    case FKind::With: {
      static const char* names[] = {"tensor", "par", "plus", "with"};
      out += '(';
      out += names[static_cast<int>(f.kind()) - static_cast<int>(FKind::Tensor)];
      out += ' ';
      print_rec(f.lhs(), avoid, scope, out);
      out += ' ';
      print_rec(f.rhs(), avoid, scope, out);
      out += ')';
      return;
    }
    case FKind::Bang:
    case FKind::WhyNot:
      out += f.kind() == FKind::Bang ? "(bang " : "(whynot ";
      print_rec(f.body(), avoid, scope, out);
      out += ')';
      return;
    case FKind::Var: {
      std::string shown = f.name();
      for (auto it = scope.rbegin(); it != scope.rend(); ++it)
        if (it->first == f.name()) {
          shown = it->second;
          break;
        }
      out += "(var " + shown + ")";
      return;
    }
    case FKind::Mu:
    case FKind::Nu: {
      std::string fresh = "x" + std::to_string(scope.size());
      while (avoid.count(fresh)) fresh += "_";
      out += f.kind() == FKind::Mu ? "(mu " : "(nu ";
      out += fresh + ' ';
      scope.emplace_back(f.name(), fresh);
      print_rec(f.body(), avoid, scope, out);
      scope.pop_back();
      out += ')';
      return;
    }
  }
}

void free_rec(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case FKind::Var:
      for (const auto& b : bound)
        if (b == f.name()) return;
      out.insert(f.name());
      return;
    case FKind::Mu:
    case FKind::Nu:
      bound.push_back(f.name());
      free_rec(f.body(), bound, out);
      bound.pop_back();
      return;
    case FKind::Bang:
    case FKind::WhyNot:
      free_rec(f.body(), bound, out);
      return;
    default:
      if (f.is_binary()) {
        free_rec(f.lhs(), bound, out);
        free_rec(f.rhs(), bound, out);
      }
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Formula& a) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  free_rec(a, bound, out);
  return out;
}

bool is_closed(const Formula& a) { return free_vars(a).empty(); }

std::string print(const Formula& a) {
  std::string out;
  std::vector<std::pair<std::string, std::string>> scope;
  print_rec(a, free_vars(a), scope, out);
  return out;
}

Formula negate(const Formula& a) {
  switch (a.kind()) {
    case FKind::One:
      return Formula::bot();
    case FKind::Bot:
      return Formula::one();
    case FKind::Zero:
      return Formula::top();
    case FKind::Top:
      return Formula::zero();
    case FKind::Tensor:
      return Formula::par(negate(a.lhs()), negate(a.rhs()));
    case FKind::Par:
      return Formula::tensor(negate(a.lhs()), negate(a.rhs()));
    case FKind::Plus:
      return Formula::with(negate(a.lhs()), negate(a.rhs()));
    case FKind::With:
      return Formula::plus(negate(a.lhs()), negate(a.rhs()));
    case FKind::Bang:
      return Formula::whynot(negate(a.body()));
    case FKind::WhyNot:
      return Formula::bang(negate(a.body()));
    case FKind::Var:
      return a;
    case FKind::Mu:
      return Formula::nu(a.name(), negate(a.body()));
    case FKind::Nu:
      return Formula::mu(a.name(), negate(a.body()));
  }
  return a;
}

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (std::size_t i = 1;; ++i) {
    std::string c = base + std::to_string(i);
    if (!avoid.count(c)) return c;
  }
}

Formula rename_free(const Formula& a, const std::string& from, const std::string& to) {
  return subst(a, Formula::var(to), from);
}

}  // namespace

Formula subst(const Formula& a, const Formula& b, const std::string& z) {
  switch (a.kind()) {
    case FKind::Var:
      return a.name() == z ? b : a;
    case FKind::Mu:
    case FKind::Nu: {
      if (a.name() == z) return a;
      std::set<std::string> fb = free_vars(b);
      if (!free_vars(a.body()).count(z)) return a;
      if (fb.count(a.name())) {
        std::set<std::string> avoid = fb;
        auto fa = free_vars(a.body());
        avoid.insert(fa.begin(), fa.end());
        avoid.insert(z);
        std::string y = fresh_name(a.name(), avoid);
        Formula body = subst(rename_free(a.body(), a.name(), y), b, z);
        return a.kind() == FKind::Mu ? Formula::mu(y, body) : Formula::nu(y, body);
      }
      return rebuild(a, subst(a.body(), b, z), {});
    }
    case FKind::Bang:
    case FKind::WhyNot:
      return rebuild(a, subst(a.body(), b, z), {});
    default:
      if (a.is_binary()) return rebuild(a, subst(a.lhs(), b, z), subst(a.rhs(), b, z));
      return a;
  }
}

Formula unfold(const Formula& fix) {
  if (!fix.is_binder()) throw Error("unfold expects a fixed point formula");
  return subst(fix.body(), fix, fix.name());
}

namespace {

bool alpha_rec(const Formula& a, const Formula& b, std::vector<std::string>& sa,
               std::vector<std::string>& sb) {
  if (a.node() == b.node() && sa.empty() && sb.empty()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FKind::Var: {
      std::size_t ia = sa.size(), ib = sb.size();
      for (std::size_t i = sa.size(); i-- > 0;)
        if (sa[i] == a.name()) {
          ia = i;
          break;
        }
      for (std::size_t i = sb.size(); i-- > 0;)
        if (sb[i] == b.name()) {
          ib = i;
          break;
        }
      if (ia == sa.size() && ib == sb.size()) return a.name() == b.name();
      return ia == ib;
    }
    case FKind::Mu:
    case FKind::Nu: {
      sa.push_back(a.name());
      sb.push_back(b.name());
      bool r = alpha_rec(a.body(), b.body(), sa, sb);
      sa.pop_back();
      sb.pop_back();
      return r;
    }
    case FKind::Bang:
    case FKind::WhyNot:
      return alpha_rec(a.body(), b.body(), sa, sb);
    default:
      if (a.is_binary()) return alpha_rec(a.lhs(), b.lhs(), sa, sb) && alpha_rec(a.rhs(), b.rhs(), sa, sb);
      return true;
  }
}

bool positive(const Formula& a) {
  switch (a.kind()) {
    case FKind::Zero:
    case FKind::One:
    case FKind::Bang:
    case FKind::Var:
      return true;
    case FKind::Plus:
    case FKind::Tensor:
      return positive(a.lhs()) && positive(a.rhs());
    case FKind::Mu:
      return positive(a.body());
    default:
      return false;
  }
}

bool negative(const Formula& a) {
  switch (a.kind()) {
    case FKind::Top:
    case FKind::Bot:
    case FKind::WhyNot:
    case FKind::Var:
      return true;
    case FKind::With:
    case FKind::Par:
      return negative(a.lhs()) && negative(a.rhs());
    case FKind::Nu:
      return negative(a.body());
    default:
      return false;
  }
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  std::vector<std::string> sa, sb;
  return alpha_rec(a, b, sa, sb);
}

Polarity polarity(const Formula& a) {
  bool p = positive(a), n = negative(a);
  if (p && n) return Polarity::Both;
  if (p) return Polarity::Positive;
  if (n) return Polarity::Negative;
  return Polarity::Neither;
}

// ---------------------------------------------------------------------------

namespace {

Vcs denote_rec(const Formula& a, std::vector<std::string>& vars) {
  std::size_t n = vars.size();
  switch (a.kind()) {
    case FKind::One:
      return vcs_const(one_space(), n);
    case FKind::Bot:
      return vcs_const(bot_space(), n);
    case FKind::Zero:
      return vcs_const(zero_space(), n);
    case FKind::Top:
      return vcs_const(top_space(), n);
    case FKind::Tensor:
      return vcs_connective(Connective::Tensor, denote_rec(a.lhs(), vars), denote_rec(a.rhs(), vars));
    case FKind::Par:
      return vcs_connective(Connective::Par, denote_rec(a.lhs(), vars), denote_rec(a.rhs(), vars));
    case FKind::Plus:
      return vcs_connective(Connective::Plus, denote_rec(a.lhs(), vars), denote_rec(a.rhs(), vars));
    case FKind::With:
      return vcs_connective(Connective::With, denote_rec(a.lhs(), vars), denote_rec(a.rhs(), vars));
    case FKind::Bang:
      return vcs_bang(denote_rec(a.body(), vars));
    case FKind::WhyNot:
      return vcs_whynot(denote_rec(a.body(), vars));
    case FKind::Var:
      for (std::size_t i = n; i-- > 0;)
        if (vars[i] == a.name()) return vcs_var(i, n);
      throw Error("free variable '" + a.name() + "' not bound in denotation context");
    case FKind::Mu:
    case FKind::Nu: {
      vars.push_back(a.name());
      Vcs body = denote_rec(a.body(), vars);
      vars.pop_back();
      return vcs_fix(body);
    }
  }
  throw Error("unreachable formula kind");
}

}  // namespace

Vcs denote(const Formula& a, const std::vector<std::string>& vars) {
  std::vector<std::string> v = vars;
  return denote_rec(a, v);
}

Space space_of(const Formula& a) {
  static std::mutex mu;
  static std::unordered_map<std::string, Space> cache;
  std::string key = print(a);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  if (!is_closed(a)) throw Error("space_of expects a closed formula: " + key);
  Space s = denote(a, {}).obj();
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(key, s).first->second;
}

Formula nat_formula() {
  static const Formula f = Formula::mu("z", Formula::plus(Formula::one(), Formula::var("z")));
  return f;
}

Formula lazy_nat_formula() {
  static const Formula f =
      Formula::mu("z", Formula::plus(Formula::one(), Formula::bang(Formula::var("z"))));
  return f;
}

Formula stream_formula() {
  static const Formula f = Formula::nu(
      "z", Formula::with(Formula::one(), Formula::plus(Formula::var("z"), Formula::var("z"))));
  return f;
}

Formula empty_stream_formula() {
  static const Formula f =
      Formula::nu("z", Formula::plus(Formula::var("z"), Formula::var("z")));
  return f;
}

}  // namespace mull

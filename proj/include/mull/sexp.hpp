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

#ifndef MULL_SEXP_HPP
#define MULL_SEXP_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mull {

// Minimal s-expression reader shared by the formula, proof and term formats.
// Atoms are maximal runs of characters other than whitespace, parentheses
// and ';'. A ';' starts a comment running to the end of the line.
struct Sexp {
  bool atom = false;
  std::string text;
  std::vector<Sexp> items;
  std::size_t pos = 0;

  bool is(std::string_view a) const { return atom && text == a; }
  bool head_is(std::string_view a) const { return !atom && !items.empty() && items[0].is(a); }
  std::string str() const;
};

std::vector<Sexp> read_sexps(std::string_view text);
// Exactly one expression; throws ParseError otherwise.
Sexp read_sexp(std::string_view text);

}  // namespace mull

#endif  // MULL_SEXP_HPP

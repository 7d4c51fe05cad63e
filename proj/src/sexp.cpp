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

#include "mull/sexp.hpp"

#include <cctype>

#include "mull/errors.hpp"

namespace mull {

std::string Sexp::str() const {
  if (atom) return text;
  std::string out = "(";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += items[i].str();
  }
  return out + ")";
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }

  Sexp read() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    Sexp e;
    e.pos = pos_;
    char c = s_[pos_];
    if (c == ')') throw ParseError("unexpected ')'", pos_);
    if (c == '(') {
      ++pos_;
      for (;;) {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unbalanced '(' opened", e.pos);
        if (s_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(read());
      }
    }
    e.atom = true;
    while (pos_ < s_.size() && !is_delim(s_[pos_])) e.text += s_[pos_++];
    return e;
  }

  std::size_t pos() const { return pos_; }

 private:
  static bool is_delim(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';';
  }

  void skip() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Sexp> read_sexps(std::string_view text) {
  Reader r(text);
  std::vector<Sexp> out;
  while (!r.at_end()) out.push_back(r.read());
  return out;
}

Sexp read_sexp(std::string_view text) {
  Reader r(text);
  Sexp e = r.read();
  if (!r.at_end()) throw ParseError("trailing input after expression", r.pos());
  return e;
}

}  // namespace mull

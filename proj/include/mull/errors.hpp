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

#ifndef MULL_ERRORS_HPP
#define MULL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mull {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

// A proof node does not instantiate its rule schema.
class CheckError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::size_t reached)
      : Error(what + " (budget reached: " + std::to_string(reached) + ")"), reached_(reached) {}
  std::size_t reached() const { return reached_; }

 private:
  std::size_t reached_;
};

// The operational evaluator ran out of steps.
class FuelExhausted : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

}  // namespace mull

#endif  // MULL_ERRORS_HPP

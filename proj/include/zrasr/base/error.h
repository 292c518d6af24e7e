// include/zrasr/base/error.h

// Copyright 2026  The zrasr Authors

// See the top-level COPYING file for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ZRASR_BASE_ERROR_H_
#define ZRASR_BASE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zrasr {

enum class ErrorKind {
  kInvalidArgument,
  kIo,
  kParse,
  kValidation,
  kEmptyOutput,
  kUncoveredGrapheme,
  kUnknownSymbol,
  kBudgetExceeded,
  kNoPath,
};

const char *ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by apply_g2p when a word holds a grapheme no rule covers.
class UncoveredGraphemeError : public Error {
 public:
  UncoveredGraphemeError(const std::string &grapheme, const std::string &word);
  const std::string &grapheme() const { return grapheme_; }
  const std::string &word() const { return word_; }

 private:
  std::string grapheme_;
  std::string word_;
};

// Raised the moment a composition (static or on-the-fly) visits more states
// or arcs than its SizeBudget allows.  Counts are those at abort time.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::size_t states, std::size_t arcs,
                      std::size_t max_states, std::size_t max_arcs);
  std::size_t states() const { return states_; }
  std::size_t arcs() const { return arcs_; }

 private:
  std::size_t states_;
  std::size_t arcs_;
};

}  // namespace zrasr

#endif  // ZRASR_BASE_ERROR_H_

// src/base/error.cc

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

#include "zrasr/base/error.h"

namespace zrasr {

const char *ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kEmptyOutput: return "empty-output";
    case ErrorKind::kUncoveredGrapheme: return "uncovered-grapheme";
    case ErrorKind::kUnknownSymbol: return "unknown-symbol";
    case ErrorKind::kBudgetExceeded: return "budget-exceeded";
    case ErrorKind::kNoPath: return "no-path";
  }
  return "unknown";
}

UncoveredGraphemeError::UncoveredGraphemeError(const std::string &grapheme,
                                               const std::string &word)
    : Error(ErrorKind::kUncoveredGrapheme,
            "grapheme '" + grapheme + "' in word '" + word +
                "' is not covered by the G2P table"),
      grapheme_(grapheme),
      word_(word) {}

BudgetExceededError::BudgetExceededError(std::size_t states, std::size_t arcs,
                                         std::size_t max_states,
                                         std::size_t max_arcs)
    : Error(ErrorKind::kBudgetExceeded,
            "size budget exceeded: " + std::to_string(states) + " states (max " +
                std::to_string(max_states) + "), " + std::to_string(arcs) +
                " arcs (max " + std::to_string(max_arcs) +
                "); prune the language model"),
      states_(states),
      arcs_(arcs) {}

}  // namespace zrasr

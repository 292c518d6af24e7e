// include/zrasr/fst/fst-ops.h

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

#ifndef ZRASR_FST_FST_OPS_H_
#define ZRASR_FST_FST_OPS_H_

#include <string>
#include <vector>

#include "zrasr/fst/wfst.h"

namespace zrasr {

// Composition a o b over the accessible part of the product.  Labels are
// matched by symbol string (a's output table against b's input table).
// Failure arcs of `b` are followed only when no other arc matches.
// Throws BudgetExceededError as soon as the result outgrows `budget`.
Wfst Compose(const Wfst &a, const Wfst &b, const SizeBudget &budget = SizeBudget());

struct PathResult {
  std::vector<Label> ilabels;        // epsilons removed
  std::vector<Label> olabels;        // epsilons removed
  std::vector<std::string> output;   // olabels as symbols
  double weight = kInfinity;
};

// Minimum-weight accepting path.  Uses Dijkstra when every arc weight is
// non-negative and label-correcting search otherwise.  Throws kNoPath when
// nothing is accepted and kValidation on a reachable negative cycle.
PathResult ShortestPath(const Wfst &fst);

}  // namespace zrasr

#endif  // ZRASR_FST_FST_OPS_H_

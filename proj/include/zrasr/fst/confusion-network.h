// include/zrasr/fst/confusion-network.h

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

#ifndef ZRASR_FST_CONFUSION_NETWORK_H_
#define ZRASR_FST_CONFUSION_NETWORK_H_

#include <string>
#include <utility>
#include <vector>

#include "zrasr/fst/wfst.h"
#include "zrasr/g2p/g2p.h"

namespace zrasr {

// Phone alternatives per slot with costs (-log10 probability).  The phone
// "<eps>" skips the slot.
struct ConfusionNetwork {
  using Slot = std::vector<std::pair<std::string, double>>;
  std::vector<Slot> slots;

  // Throws kValidation on an empty slot, a negative or non-finite cost, or
  // slot probabilities summing above 1 + tolerance.
  void Validate(double tolerance = 1e-6) const;

  // Cheapest alternative per slot, epsilons dropped.
  PhoneSeq BestPhones() const;

  static ConfusionNetwork FromPhones(const PhoneSeq &phones);
};

// Relabels every non-epsilon alternative through `pm`.
ConfusionNetwork MapConfusionNetwork(const ConfusionNetwork &cn, const PhoneMap &pm);

// Linear chain of |slots| + 1 states with one arc per alternative.
Wfst CnToFst(const ConfusionNetwork &cn);

// One slot per line as `phone:cost phone:cost ...`; blank lines separate
// utterances.
std::vector<ConfusionNetwork> ReadConfusionNetworks(const std::string &path);
void WriteConfusionNetworks(const std::string &path,
                            const std::vector<ConfusionNetwork> &cns);

}  // namespace zrasr

#endif  // ZRASR_FST_CONFUSION_NETWORK_H_

// src/scoring/normalize.cc

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

#include "zrasr/scoring/normalize.h"

#include "zrasr/base/text-utils.h"

namespace zrasr {

std::string NormalizeWord(const std::string &word) {
  std::vector<std::string> kept;
  for (auto &g : SplitCodepoints(StripAccents(ToLower(word))))
    if (IsApostrophe(g) || !IsPunctuation(g)) kept.push_back(std::move(g));
  std::size_t begin = 0, end = kept.size();
  while (begin < end && IsApostrophe(kept[begin])) ++begin;
  while (end > begin && IsApostrophe(kept[end - 1])) --end;
  std::string out;
  for (std::size_t i = begin; i < end; ++i) out += kept[i];
  return out;
}

std::vector<std::string> NormalizeTokens(const std::vector<std::string> &tokens) {
  std::vector<std::string> out;
  for (const auto &t : tokens) {
    std::string n = NormalizeWord(t);
    if (!n.empty()) out.push_back(std::move(n));
  }
  return out;
}

}  // namespace zrasr

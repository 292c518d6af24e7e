// src/lm/language-model.cc

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

#include "zrasr/lm/language-model.h"

#include <cmath>

#include "zrasr/base/error.h"

namespace zrasr {

double ScoreSentence(const LanguageModel &lm,
                     const std::vector<std::string> &sentence) {
  std::vector<std::string> history;
  history.reserve(sentence.size() + 1);
  history.push_back(kBos);
  const std::size_t context = lm.order() > 1 ? lm.order() - 1 : 0;
  double total = 0.0;
  auto step = [&](const std::string &word) {
    std::size_t n = std::min(context, history.size());
    std::span<const std::string> h(history.data() + history.size() - n, n);
    total += lm.LogProb(h, word);
    history.push_back(word);
  };
  for (const auto &word : sentence) step(word);
  step(kEos);
  return total;
}

double Perplexity(const LanguageModel &lm,
                  const std::vector<std::vector<std::string>> &dev) {
  if (dev.empty())
    throw Error(ErrorKind::kInvalidArgument, "perplexity: empty dev set");
  double total = 0.0;
  std::size_t tokens = 0;
  for (const auto &sentence : dev) {
    total += ScoreSentence(lm, sentence);
    tokens += sentence.size() + 1;
  }
  return std::pow(10.0, -total / static_cast<double>(tokens));
}

}  // namespace zrasr

// include/zrasr/lm/language-model.h

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

#ifndef ZRASR_LM_LANGUAGE_MODEL_H_
#define ZRASR_LM_LANGUAGE_MODEL_H_

#include <span>
#include <string>
#include <vector>

namespace zrasr {

inline const std::string kBos = "<s>";
inline const std::string kEos = "</s>";
inline const std::string kUnk = "<unk>";

// log10 of zero probability, following the ARPA convention.
inline constexpr double kLogZero = -99.0;

// Word-level conditional model.  All probabilities are log10.
class LanguageModel {
 public:
  virtual ~LanguageModel() = default;

  virtual int order() const = 0;

  // log10 p(word | history).  `history` lists the preceding tokens, most
  // recent last, and may begin with <s>; implementations consult at most the
  // last order()-1 of them.  Unknown words score as <unk>.
  virtual double LogProb(std::span<const std::string> history,
                         const std::string &word) const = 0;

  // Every token the model can predict: the regular words, </s>, and <unk>
  // when the model has it.  Never contains <s>.
  virtual std::vector<std::string> PredictedVocab() const = 0;
};

// Total log10 probability of a sentence, including the </s> transition.
double ScoreSentence(const LanguageModel &lm, const std::vector<std::string> &sentence);

// 10^(-total / tokens), with one </s> per sentence counted as a token.
double Perplexity(const LanguageModel &lm,
                  const std::vector<std::vector<std::string>> &dev);

}  // namespace zrasr

#endif  // ZRASR_LM_LANGUAGE_MODEL_H_

// include/zrasr/fst/on-demand-fst.h

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

#ifndef ZRASR_FST_ON_DEMAND_FST_H_
#define ZRASR_FST_ON_DEMAND_FST_H_

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "zrasr/fst/wfst.h"
#include "zrasr/lm/language-model.h"

namespace zrasr {

// Word acceptor expanded on demand.  Instances are not thread-safe.
class DeterministicFst {
 public:
  virtual ~DeterministicFst() = default;
  virtual StateId Start() = 0;
  virtual double Final(StateId s) = 0;  // kInfinity if not final
  // Reads `word` from s; false if it cannot be read there.
  virtual bool Step(StateId s, Label word, StateId *next, double *weight) = 0;
  virtual Label FindWord(const std::string &word) const = 0;  // kNoLabel if unknown
};

// A compiled grammar with its failure arcs resolved on the fly.
class BackoffFstView : public DeterministicFst {
 public:
  explicit BackoffFstView(const Wfst &fst);

  StateId Start() override { return fst_.start(); }
  double Final(StateId s) override;
  bool Step(StateId s, Label word, StateId *next, double *weight) override;
  Label FindWord(const std::string &word) const override;

 private:
  const Wfst &fst_;
  ArcIndex index_;
};

// Any language model as an acceptor whose states are word histories.
class LanguageModelFst : public DeterministicFst {
 public:
  explicit LanguageModelFst(const LanguageModel &lm);

  StateId Start() override { return 0; }
  double Final(StateId s) override;
  bool Step(StateId s, Label word, StateId *next, double *weight) override;
  Label FindWord(const std::string &word) const override;

 private:
  StateId Intern(std::vector<std::string> history);

  const LanguageModel &lm_;
  SymbolTable words_;
  std::vector<std::vector<std::string>> histories_;
  std::map<std::vector<std::string>, StateId> state_of_;
};

// -log10 of a word sequence's probability read through `g`, sentence end
// included; kInfinity if the sequence is rejected.
double SentenceCost(DeterministicFst &g, const std::vector<std::string> &words);

}  // namespace zrasr

#endif  // ZRASR_FST_ON_DEMAND_FST_H_

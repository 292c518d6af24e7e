// src/fst/on-demand-fst.cc

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

#include "zrasr/fst/on-demand-fst.h"

#include <algorithm>

namespace zrasr {

BackoffFstView::BackoffFstView(const Wfst &fst) : fst_(fst), index_(fst) {}

double BackoffFstView::Final(StateId s) {
  double acc = 0.0;
  const Label phi = fst_.phi_label();
  for (std::size_t steps = 0; steps <= fst_.NumStates(); ++steps) {
    if (fst_.IsFinal(s)) return acc + fst_.Final(s);
    if (phi == kNoLabel) return kInfinity;
    auto [lo, hi] = index_.Find(s, phi);
    if (lo == hi) return kInfinity;
    const Arc &arc = fst_.Arcs(s)[*lo];
    acc += arc.weight;
    s = arc.nextstate;
  }
  return kInfinity;
}

bool BackoffFstView::Step(StateId s, Label word, StateId *next, double *weight) {
  double acc = 0.0;
  const Label phi = fst_.phi_label();
  for (std::size_t steps = 0; steps <= fst_.NumStates(); ++steps) {
    auto [lo, hi] = index_.Find(s, word);
    if (lo != hi) {
      const Arc *best = &fst_.Arcs(s)[*lo];
      for (auto it = lo + 1; it != hi; ++it)
        if (fst_.Arcs(s)[*it].weight < best->weight) best = &fst_.Arcs(s)[*it];
      *next = best->nextstate;
      *weight = acc + best->weight;
      return true;
    }
    if (phi == kNoLabel) return false;
    auto [flo, fhi] = index_.Find(s, phi);
    if (flo == fhi) return false;
    const Arc &arc = fst_.Arcs(s)[*flo];
    acc += arc.weight;
    s = arc.nextstate;
  }
  return false;
}

Label BackoffFstView::FindWord(const std::string &word) const {
  Label l = fst_.isyms()->Find(word);
  return l == fst_.phi_label() ? kNoLabel : l;
}

LanguageModelFst::LanguageModelFst(const LanguageModel &lm) : lm_(lm) {
  auto vocab = lm.PredictedVocab();
  std::sort(vocab.begin(), vocab.end());
  for (const auto &w : vocab)
    if (w != kEos && w != kBos) words_.AddSymbol(w);
  Intern({kBos});
}

StateId LanguageModelFst::Intern(std::vector<std::string> history) {
  const std::size_t keep = static_cast<std::size_t>(std::max(lm_.order() - 1, 0));
  if (history.size() > keep) history.erase(history.begin(), history.end() - keep);
  auto it = state_of_.find(history);
  if (it != state_of_.end()) return it->second;
  StateId s = static_cast<StateId>(histories_.size());
  histories_.push_back(history);
  state_of_.emplace(std::move(history), s);
  return s;
}

double LanguageModelFst::Final(StateId s) {
  return -lm_.LogProb(histories_[s], kEos);
}

bool LanguageModelFst::Step(StateId s, Label word, StateId *next, double *weight) {
  if (word <= kEpsilon || static_cast<std::size_t>(word) >= words_.size()) return false;
  const std::string &w = words_.Symbol(word);
  *weight = -lm_.LogProb(histories_[s], w);
  std::vector<std::string> h = histories_[s];
  h.push_back(w);
  *next = Intern(std::move(h));
  return true;
}

Label LanguageModelFst::FindWord(const std::string &word) const {
  return word == kEpsilonSymbol ? kNoLabel : words_.Find(word);
}

double SentenceCost(DeterministicFst &g, const std::vector<std::string> &words) {
  StateId s = g.Start();
  double cost = 0.0;
  for (const auto &w : words) {
    Label l = g.FindWord(w);
    StateId next;
    double weight;
    if (l == kNoLabel || !g.Step(s, l, &next, &weight)) return kInfinity;
    cost += weight;
    s = next;
  }
  return cost + g.Final(s);
}

}  // namespace zrasr

// src/fst/fst-builders.cc

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

#include "zrasr/fst/fst-builders.h"

#include <algorithm>
#include <map>

#include "zrasr/base/error.h"

namespace zrasr {

Wfst LexiconToFst(const Lexicon &lex, double sil_penalty, const std::string &sil_phone) {
  if (lex.empty()) throw Error(ErrorKind::kInvalidArgument, "empty lexicon");
  Wfst fst;
  auto isyms = fst.isyms();
  auto osyms = fst.osyms();
  for (const auto &phone : lex.PhoneInventory()) isyms->AddSymbol(phone);
  for (const auto &[word, prons] : lex.entries) osyms->AddSymbol(word);

  std::map<PhoneSeq, std::vector<std::string>> homophones;
  for (const auto &[word, prons] : lex.entries)
    for (const auto &pron : prons)
      if (!pron.empty()) homophones[pron].push_back(word);
  std::size_t max_disambig = 0;
  for (const auto &[pron, words] : homophones)
    if (words.size() > 1) max_disambig = std::max(max_disambig, words.size());
  for (std::size_t k = 1; k <= max_disambig; ++k) isyms->AddSymbol("#" + std::to_string(k));

  StateId start = fst.AddState();
  fst.SetStart(start);
  fst.SetFinal(start, 0.0);
  if (sil_penalty != kInfinity)
    fst.AddArc(start, {isyms->AddSymbol(sil_phone), kEpsilon, sil_penalty, start});

  for (const auto &[word, prons] : lex.entries)
    for (const auto &pron : prons) {
      if (pron.empty()) continue;
      const auto &group = homophones[pron];
      std::size_t k = 0;
      if (group.size() > 1)
        k = std::find(group.begin(), group.end(), word) - group.begin() + 1;
      std::vector<Label> ilabels;
      for (const auto &phone : pron) ilabels.push_back(isyms->Find(phone));
      if (k > 0) ilabels.push_back(isyms->Find("#" + std::to_string(k)));
      StateId cur = start;
      for (std::size_t i = 0; i < ilabels.size(); ++i) {
        StateId next = i + 1 == ilabels.size() ? start : fst.AddState();
        fst.AddArc(cur, {ilabels[i], i == 0 ? osyms->Find(word) : kEpsilon, 0.0, next});
        cur = next;
      }
    }
  return fst;
}

Wfst LmToFst(const NgramLm &lm) {
  Wfst fst;
  auto syms = std::make_shared<SymbolTable>();
  fst.set_isyms(syms);
  fst.set_osyms(syms);
  const WordId bos = lm.bos(), eos = lm.eos();
  std::vector<Label> label_of(lm.vocab_size(), kNoLabel);
  std::vector<std::string> sorted_words;
  for (WordId w = 0; w < static_cast<WordId>(lm.vocab_size()); ++w)
    if (w != bos && w != eos) sorted_words.push_back(lm.Word(w));
  std::sort(sorted_words.begin(), sorted_words.end());
  for (const auto &w : sorted_words) label_of[lm.FindWord(w)] = syms->AddSymbol(w);
  const Label phi = syms->AddSymbol(kBackoffSymbol);
  fst.set_phi_label(phi);

  // History states: the empty history, every stored n-gram below the top
  // order, and every history prefix of a stored n-gram.
  std::map<std::vector<WordId>, StateId> state_of;
  auto add_state = [&](const std::vector<WordId> &h) {
    auto it = state_of.find(h);
    if (it != state_of.end()) return it->second;
    StateId s = fst.AddState();
    state_of.emplace(h, s);
    return s;
  };
  add_state({});
  for (int n = 1; n <= lm.order(); ++n)
    for (const auto &ngram : lm.SortedNgrams(n)) {
      if (n < lm.order()) add_state(ngram);
      for (int k = 1; k < n; ++k) add_state({ngram.begin(), ngram.begin() + k});
    }
  auto longest_suffix_state = [&](std::vector<WordId> h) {
    if (static_cast<int>(h.size()) > lm.order() - 1)
      h.erase(h.begin(), h.end() - (lm.order() - 1));
    while (true) {
      auto it = state_of.find(h);
      if (it != state_of.end()) return it->second;
      h.erase(h.begin());
    }
  };

  for (int n = 1; n <= lm.order(); ++n)
    for (const auto &ngram : lm.SortedNgrams(n)) {
      const WordId w = ngram.back();
      if (w == bos) continue;
      const NgramEntry *e = lm.FindEntry(ngram);
      std::vector<WordId> h(ngram.begin(), ngram.end() - 1);
      StateId src = state_of.at(h);
      if (w == eos) {
        fst.SetFinal(src, -e->log_prob);
        continue;
      }
      StateId dst = longest_suffix_state(ngram);
      fst.AddArc(src, {label_of[w], label_of[w], -e->log_prob, dst});
    }
  for (const auto &[h, s] : state_of) {
    if (h.empty()) continue;
    const NgramEntry *e = lm.FindEntry(h);
    double bow = e != nullptr ? e->log_backoff : 0.0;
    StateId dst = longest_suffix_state({h.begin() + 1, h.end()});
    fst.AddArc(s, {phi, kEpsilon, -bow, dst});
  }
  if (bos != kNoWord) {
    fst.SetStart(state_of.count({bos}) ? state_of.at({bos}) : state_of.at({}));
  } else {
    fst.SetStart(state_of.at({}));
  }
  return fst;
}

}  // namespace zrasr

// include/zrasr/fst/fst-decoder.h

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

#ifndef ZRASR_FST_FST_DECODER_H_
#define ZRASR_FST_FST_DECODER_H_

#include <memory>
#include <string>
#include <vector>

#include "zrasr/fst/confusion-network.h"
#include "zrasr/fst/on-demand-fst.h"
#include "zrasr/fst/wfst.h"
#include "zrasr/lm/language-model.h"
#include "zrasr/matcher/pron-trie.h"
#include "zrasr/matcher/trie-decoder.h"

namespace zrasr {

struct DecodeResult {
  std::vector<std::string> words;
  double weight = kInfinity;
  // Set when no path existed and the words come from greedy trie matching
  // over the per-slot best phones.
  bool fallback = false;
  std::vector<UnmatchedPhone> unmatched;
};

// CN o L o G by explicit composition (CN o L first) and shortest path.
// Disambiguation symbols of L are treated as epsilons.  Throws kNoPath or
// BudgetExceededError.
DecodeResult DecodeStatic(const ConfusionNetwork &cn, const Wfst &lexicon,
                          const Wfst &grammar, const SizeBudget &budget);

// Decodes against a precompiled L o G graph.
DecodeResult DecodeWithGraph(const ConfusionNetwork &cn, const Wfst &graph,
                             const SizeBudget &budget);

// Slot-synchronous Viterbi search over (lexicon state, grammar state)
// pairs, expanding the grammar on demand.  `budget` caps the search
// tokens (states) and transitions (arcs) per utterance; `beam` prunes
// tokens worse than the best by more than that cost.  Exact when the beam
// is infinite.  Throws kNoPath or BudgetExceededError.
DecodeResult DecodeLazy(const ConfusionNetwork &cn, const Wfst &lexicon,
                        DeterministicFst &grammar, const SizeBudget &budget,
                        double beam = kInfinity);

struct DecoderOptions {
  SizeBudget budget;
  double beam = kInfinity;
  double sil_penalty = kInfinity;
  bool fallback_to_trie = true;
  TrieTunings fallback_tunings;
  int num_workers = 1;
};

// Lexicon plus grammar, decoding utterances independently.
class FstDecoder {
 public:
  // On-demand grammar from any language model.
  FstDecoder(const Lexicon &lex, std::shared_ptr<const LanguageModel> lm,
             const DecoderOptions &opts);
  // Compiled grammar (failure arcs allowed).
  FstDecoder(const Lexicon &lex, std::shared_ptr<const Wfst> grammar,
             const DecoderOptions &opts);

  DecodeResult Decode(const ConfusionNetwork &cn) const;
  // Parallel over utterances; output order follows input order.
  std::vector<DecodeResult> DecodeAll(const std::vector<ConfusionNetwork> &cns) const;

  const Wfst &lexicon_fst() const { return lexicon_fst_; }

 private:
  std::unique_ptr<DeterministicFst> MakeGrammar() const;

  Wfst lexicon_fst_;
  PronTrie trie_;
  std::shared_ptr<const LanguageModel> lm_;
  std::shared_ptr<const Wfst> grammar_;
  DecoderOptions opts_;
};

}  // namespace zrasr

#endif  // ZRASR_FST_FST_DECODER_H_

// src/fst/fst-decoder.cc

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

#include "zrasr/fst/fst-decoder.h"

#include <deque>
#include <map>

#include <spdlog/spdlog.h>

#include "zrasr/base/error.h"
#include "zrasr/base/parallel.h"
#include "zrasr/fst/fst-builders.h"
#include "zrasr/fst/fst-ops.h"

namespace zrasr {

namespace {

std::vector<bool> DisambiguationMask(const Wfst &fst) {
  const auto &syms = *fst.isyms();
  std::vector<bool> mask(syms.size(), false);
  for (std::size_t i = 1; i < syms.size(); ++i)
    mask[i] = syms.Symbol(static_cast<Label>(i)).starts_with("#");
  return mask;
}

DecodeResult FromPath(const PathResult &path) {
  DecodeResult r;
  r.words = path.output;
  r.weight = path.weight;
  return r;
}

}  // namespace

DecodeResult DecodeStatic(const ConfusionNetwork &cn, const Wfst &lexicon,
                          const Wfst &grammar, const SizeBudget &budget) {
  Wfst lex = lexicon;
  StripDisambiguation(&lex);
  Wfst cl = Compose(CnToFst(cn), lex, budget);
  return FromPath(ShortestPath(Compose(cl, grammar, budget)));
}

DecodeResult DecodeWithGraph(const ConfusionNetwork &cn, const Wfst &graph,
                             const SizeBudget &budget) {
  Wfst g = graph;
  StripDisambiguation(&g);
  return FromPath(ShortestPath(Compose(CnToFst(cn), g, budget)));
}

DecodeResult DecodeLazy(const ConfusionNetwork &cn, const Wfst &lexicon,
                        DeterministicFst &grammar, const SizeBudget &budget, double beam) {
  struct Trace {
    int prev;
    Label word;  // lexicon output label
  };
  struct Token {
    double cost;
    int trace;
  };
  using Key = std::pair<StateId, StateId>;
  using Tokens = std::map<Key, Token>;

  const std::vector<bool> disambig = DisambiguationMask(lexicon);
  std::vector<Label> to_grammar(lexicon.osyms()->size(), kNoLabel);
  for (std::size_t l = 1; l < to_grammar.size(); ++l)
    to_grammar[l] = grammar.FindWord(lexicon.osyms()->Symbol(static_cast<Label>(l)));
  ArcIndex index(lexicon);

  std::vector<Trace> traces;
  std::size_t num_tokens = 0, num_transitions = 0;
  auto charge = [&](bool new_token) {
    ++num_transitions;
    if (new_token) ++num_tokens;
    if (num_tokens > budget.max_states || num_transitions > budget.max_arcs)
      throw BudgetExceededError(num_tokens, num_transitions, budget.max_states,
                                budget.max_arcs);
  };

  // Follows lexicon arc `arc` from token (l, g); returns false if the
  // grammar rejects the word.
  auto advance = [&](const Token &tok, StateId g, const Arc &arc, double extra,
                     Key *key, Token *out) {
    double cost = tok.cost + arc.weight + extra;
    int trace = tok.trace;
    StateId g2 = g;
    if (arc.olabel != kEpsilon) {
      Label w = to_grammar[arc.olabel];
      double gw;
      if (w == kNoLabel || !grammar.Step(g, w, &g2, &gw)) return false;
      cost += gw;
      traces.push_back({trace, arc.olabel});
      trace = static_cast<int>(traces.size()) - 1;
    }
    *key = {arc.nextstate, g2};
    *out = {cost, trace};
    return true;
  };
  auto relax = [&](Tokens *tokens, const Key &key, const Token &tok) {
    auto it = tokens->find(key);
    charge(it == tokens->end());
    if (it == tokens->end()) {
      tokens->emplace(key, tok);
      return true;
    }
    if (tok.cost < it->second.cost) {
      it->second = tok;
      return true;
    }
    return false;
  };
  auto closure = [&](Tokens *tokens) {
    std::deque<Key> queue;
    for (const auto &[key, tok] : *tokens) queue.push_back(key);
    while (!queue.empty()) {
      Key key = queue.front();
      queue.pop_front();
      const Token tok = tokens->at(key);
      const auto &arcs = lexicon.Arcs(key.first);
      for (const Arc &arc : arcs) {
        if (arc.ilabel != kEpsilon && !disambig[arc.ilabel]) continue;
        Key k2;
        Token t2;
        if (advance(tok, key.second, arc, 0.0, &k2, &t2) && relax(tokens, k2, t2))
          queue.push_back(k2);
      }
    }
  };
  auto prune = [&](Tokens *tokens) {
    if (beam == kInfinity || tokens->empty()) return;
    double best = kInfinity;
    for (const auto &[k, t] : *tokens) best = std::min(best, t.cost);
    for (auto it = tokens->begin(); it != tokens->end();)
      it = it->second.cost > best + beam ? tokens->erase(it) : std::next(it);
  };

  Tokens tokens;
  relax(&tokens, {lexicon.start(), grammar.Start()}, {0.0, -1});
  closure(&tokens);
  for (const auto &slot : cn.slots) {
    Tokens next;
    for (const auto &[key, tok] : tokens) {
      for (const auto &[phone, slot_cost] : slot) {
        if (phone == kEpsilonSymbol) {
          relax(&next, key, {tok.cost + slot_cost, tok.trace});
          continue;
        }
        Label x = lexicon.isyms()->Find(phone);
        if (x == kNoLabel) continue;
        auto [lo, hi] = index.Find(key.first, x);
        for (auto it = lo; it != hi; ++it) {
          Key k2;
          Token t2;
          if (advance(tok, key.second, lexicon.Arcs(key.first)[*it], slot_cost, &k2, &t2))
            relax(&next, k2, t2);
        }
      }
    }
    closure(&next);
    prune(&next);
    tokens = std::move(next);
    if (tokens.empty()) break;
  }

  const Token *best = nullptr;
  double best_cost = kInfinity;
  for (const auto &[key, tok] : tokens) {
    double c = tok.cost + lexicon.Final(key.first) + grammar.Final(key.second);
    if (c < best_cost) {
      best_cost = c;
      best = &tok;
    }
  }
  if (best == nullptr) throw Error(ErrorKind::kNoPath, "no path through lexicon and grammar");
  DecodeResult result;
  result.weight = best_cost;
  for (int t = best->trace; t >= 0; t = traces[t].prev)
    result.words.push_back(lexicon.osyms()->Symbol(traces[t].word));
  std::reverse(result.words.begin(), result.words.end());
  return result;
}

FstDecoder::FstDecoder(const Lexicon &lex, std::shared_ptr<const LanguageModel> lm,
                       const DecoderOptions &opts)
    : lexicon_fst_(LexiconToFst(lex, opts.sil_penalty)),
      trie_(PronTrie::Build(lex)),
      lm_(std::move(lm)),
      opts_(opts) {}

FstDecoder::FstDecoder(const Lexicon &lex, std::shared_ptr<const Wfst> grammar,
                       const DecoderOptions &opts)
    : lexicon_fst_(LexiconToFst(lex, opts.sil_penalty)),
      trie_(PronTrie::Build(lex)),
      grammar_(std::move(grammar)),
      opts_(opts) {}

std::unique_ptr<DeterministicFst> FstDecoder::MakeGrammar() const {
  if (grammar_) return std::make_unique<BackoffFstView>(*grammar_);
  return std::make_unique<LanguageModelFst>(*lm_);
}

DecodeResult FstDecoder::Decode(const ConfusionNetwork &cn) const {
  auto grammar = MakeGrammar();
  try {
    return DecodeLazy(cn, lexicon_fst_, *grammar, opts_.budget, opts_.beam);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::kNoPath || !opts_.fallback_to_trie) throw;
  }
  MatchResult m = TrieDecode(cn.BestPhones(), trie_, opts_.fallback_tunings);
  DecodeResult r;
  r.words = std::move(m.words);
  r.unmatched = std::move(m.unmatched);
  r.fallback = true;
  return r;
}

std::vector<DecodeResult> FstDecoder::DecodeAll(const std::vector<ConfusionNetwork> &cns) const {
  std::vector<DecodeResult> results(cns.size());
  ParallelFor(cns.size(), opts_.num_workers,
              [&](std::size_t i, int) { results[i] = Decode(cns[i]); });
  std::size_t fallbacks = 0;
  for (const auto &r : results) fallbacks += r.fallback;
  if (fallbacks > 0)
    spdlog::warn("{} of {} utterances had no path and fell back to trie matching",
                 fallbacks, cns.size());
  return results;
}

}  // namespace zrasr

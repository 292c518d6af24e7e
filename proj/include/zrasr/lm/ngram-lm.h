// include/zrasr/lm/ngram-lm.h

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

#ifndef ZRASR_LM_NGRAM_LM_H_
#define ZRASR_LM_NGRAM_LM_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "zrasr/lm/language-model.h"
#include "zrasr/textprep/text-prep.h"

namespace zrasr {

using WordId = std::int32_t;
inline constexpr WordId kNoWord = -1;
inline constexpr int kMaxNgramOrder = 3;

struct NgramEntry {
  double log_prob = kLogZero;
  double log_backoff = 0.0;
};

enum class Discounting { kNone, kKneserNey };

struct TrainOptions {
  int order = 3;
  Discounting discounting = Discounting::kKneserNey;
  // Interpolated Kneser-Ney discount for orders 1..3.
  std::array<double, kMaxNgramOrder> kn_discount{0.5, 0.5, 0.5};
  // Share of unigram mass reserved for <unk>.
  double unk_floor = 1e-7;
};

struct LMLimits {
  std::size_t max_unigrams = 120000;
  std::size_t max_bigrams = 30000000;
  std::size_t max_trigrams = 150000;
};

// Backoff n-gram model of order 1..3, directly representable in ARPA form:
// p(w | h) = P(h w) if stored, else B(h) * p(w | h minus its first word),
// with B(h) = 1 when h itself is not stored.
class NgramLm : public LanguageModel {
 public:
  explicit NgramLm(int order = 1);

  int order() const override { return order_; }
  void set_order(int order);

  WordId AddWord(const std::string &word);
  WordId FindWord(const std::string &word) const;
  const std::string &Word(WordId id) const { return words_[id]; }
  std::size_t vocab_size() const { return words_.size(); }
  WordId bos() const { return FindWord(kBos); }
  WordId eos() const { return FindWord(kEos); }
  WordId unk() const { return FindWord(kUnk); }

  void SetEntry(std::span<const WordId> ngram, const NgramEntry &entry);
  const NgramEntry *FindEntry(std::span<const WordId> ngram) const;
  NgramEntry *MutableEntry(std::span<const WordId> ngram);
  bool RemoveEntry(std::span<const WordId> ngram);
  std::size_t NumNgrams(int n) const { return tables_[n - 1].size(); }

  // Stored n-grams of order n, sorted by their word strings.
  std::vector<std::vector<WordId>> SortedNgrams(int n) const;

  // Backoff-resolved log10 p(word | history) over word ids.  kNoWord and
  // words without a unigram entry are scored as <unk>; a model without
  // <unk> gives them kLogZero.
  double LogProbIds(std::span<const WordId> history, WordId word) const;

  double LogProb(std::span<const std::string> history,
                 const std::string &word) const override;
  std::vector<std::string> PredictedVocab() const override;

  // Order-local key of an n-gram (21 bits per word id).
  static std::uint64_t Pack(std::span<const WordId> ngram);

  // Ids of the words LogProbIds can predict (every unigram but <s>).
  std::vector<WordId> PredictedIds() const;

  // Word ids for a token sequence, unknown tokens mapped to <unk> (or
  // kNoWord if the model has none).
  std::vector<WordId> MapTokens(const std::vector<std::string> &tokens) const;

 private:
  int order_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId> index_;
  std::array<std::unordered_map<std::uint64_t, NgramEntry>, kMaxNgramOrder> tables_;
};

// Counts n-grams over <s> w1 .. wn </s> and estimates either maximum
// likelihood (backoff only for unseen histories) or interpolated
// Kneser-Ney with continuation counts below the top order.  <unk> receives
// `unk_floor` of the unigram mass.
NgramLm TrainNgramLm(const CleanCorpus &corpus, const TrainOptions &opts);

inline NgramLm TrainTrigram(const CleanCorpus &corpus, const TrainOptions &opts) {
  TrainOptions o = opts;
  o.order = 3;
  return TrainNgramLm(corpus, o);
}

// Keeps the highest-probability n-grams of each order within `limits`
// (ties by word-string order) and recomputes backoff weights so every
// history stays normalized.  A level pruned to zero lowers the order.
NgramLm PruneToLimits(const NgramLm &lm, const LMLimits &limits);

// Recomputes B(h) for every stored history so that sum_w p(w|h) = 1.
void RenormalizeBackoffs(NgramLm *lm);

// ARPA I/O.  Values are written in shortest round-trip form, so reading a
// written model reproduces it exactly.  Parse errors carry line numbers.
NgramLm ReadArpa(const std::string &path);
NgramLm ParseArpa(std::istream &in, const std::string &name = "<arpa>");
void WriteArpa(const NgramLm &lm, const std::string &path);
void WriteArpa(const NgramLm &lm, std::ostream &out);

// Entry-by-entry equality on word strings, within `tolerance`.
bool SameNgramLm(const NgramLm &a, const NgramLm &b, double tolerance = 0.0);

}  // namespace zrasr

#endif  // ZRASR_LM_NGRAM_LM_H_

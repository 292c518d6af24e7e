// src/lm/ngram-lm.cc

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

#include "zrasr/lm/ngram-lm.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "zrasr/base/error.h"

namespace zrasr {

namespace {

constexpr int kIdBits = 21;
constexpr std::uint64_t kIdMask = (std::uint64_t{1} << kIdBits) - 1;

using CountTable = std::unordered_map<std::uint64_t, std::int64_t>;

std::vector<WordId> Unpack(std::uint64_t key, int n) {
  std::vector<WordId> ngram(n);
  for (int i = 0; i < n; ++i)
    ngram[i] = static_cast<WordId>((key >> (kIdBits * i)) & kIdMask);
  return ngram;
}

double SafeLog10(double p) { return p > 0.0 ? std::log10(p) : kLogZero; }

}  // namespace

NgramLm::NgramLm(int order) { set_order(order); }

void NgramLm::set_order(int order) {
  if (order < 1 || order > kMaxNgramOrder)
    throw Error(ErrorKind::kInvalidArgument,
                "n-gram order must be 1..3, got " + std::to_string(order));
  order_ = order;
}

std::uint64_t NgramLm::Pack(std::span<const WordId> ngram) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < ngram.size(); ++i)
    key |= static_cast<std::uint64_t>(ngram[i]) << (kIdBits * i);
  return key;
}

WordId NgramLm::AddWord(const std::string &word) {
  auto it = index_.find(word);
  if (it != index_.end()) return it->second;
  if (words_.size() > kIdMask)
    throw Error(ErrorKind::kInvalidArgument, "vocabulary too large");
  WordId id = static_cast<WordId>(words_.size());
  words_.push_back(word);
  index_.emplace(word, id);
  return id;
}

WordId NgramLm::FindWord(const std::string &word) const {
  auto it = index_.find(word);
  return it == index_.end() ? kNoWord : it->second;
}

void NgramLm::SetEntry(std::span<const WordId> ngram, const NgramEntry &entry) {
  if (ngram.empty() || ngram.size() > kMaxNgramOrder)
    throw Error(ErrorKind::kInvalidArgument, "bad n-gram length");
  tables_[ngram.size() - 1][Pack(ngram)] = entry;
}

const NgramEntry *NgramLm::FindEntry(std::span<const WordId> ngram) const {
  if (ngram.empty() || ngram.size() > kMaxNgramOrder) return nullptr;
  for (WordId w : ngram)
    if (w < 0) return nullptr;
  const auto &table = tables_[ngram.size() - 1];
  auto it = table.find(Pack(ngram));
  return it == table.end() ? nullptr : &it->second;
}

NgramEntry *NgramLm::MutableEntry(std::span<const WordId> ngram) {
  return const_cast<NgramEntry *>(std::as_const(*this).FindEntry(ngram));
}

bool NgramLm::RemoveEntry(std::span<const WordId> ngram) {
  if (ngram.empty() || ngram.size() > kMaxNgramOrder) return false;
  return tables_[ngram.size() - 1].erase(Pack(ngram)) > 0;
}

std::vector<std::vector<WordId>> NgramLm::SortedNgrams(int n) const {
  std::vector<std::vector<WordId>> out;
  out.reserve(tables_[n - 1].size());
  for (const auto &kv : tables_[n - 1]) out.push_back(Unpack(kv.first, n));
  std::sort(out.begin(), out.end(),
            [this](const std::vector<WordId> &a, const std::vector<WordId> &b) {
              for (std::size_t i = 0; i < a.size(); ++i) {
                int c = words_[a[i]].compare(words_[b[i]]);
                if (c != 0) return c < 0;
              }
              return false;
            });
  return out;
}

double NgramLm::LogProbIds(std::span<const WordId> history, WordId word) const {
  WordId single[1] = {word};
  if (word < 0 || !FindEntry(single)) {
    word = unk();
    single[0] = word;
    if (word < 0 || !FindEntry(single)) return kLogZero;
  }
  std::size_t context = std::min<std::size_t>(history.size(), order_ - 1);
  WordId ngram[kMaxNgramOrder];
  double backoff = 0.0;
  for (std::size_t n = context;; --n) {
    std::span<const WordId> h = history.subspan(history.size() - n, n);
    std::copy(h.begin(), h.end(), ngram);
    ngram[n] = word;
    if (const NgramEntry *e = FindEntry(std::span<const WordId>(ngram, n + 1)))
      return backoff + e->log_prob;
    if (n == 0) break;
    if (const NgramEntry *b = FindEntry(h)) backoff += b->log_backoff;
  }
  return kLogZero;
}

std::vector<WordId> NgramLm::MapTokens(const std::vector<std::string> &tokens) const {
  std::vector<WordId> ids;
  ids.reserve(tokens.size());
  const WordId unk_id = unk();
  for (const auto &t : tokens) {
    WordId id = FindWord(t);
    WordId single[1] = {id};
    if (id < 0 || !FindEntry(single)) id = unk_id;
    ids.push_back(id);
  }
  return ids;
}

double NgramLm::LogProb(std::span<const std::string> history,
                        const std::string &word) const {
  std::vector<WordId> h = MapTokens(std::vector<std::string>(history.begin(), history.end()));
  WordId w = MapTokens({word})[0];
  return LogProbIds(h, w);
}

std::vector<WordId> NgramLm::PredictedIds() const {
  std::vector<WordId> ids;
  const WordId bos_id = bos();
  for (const auto &kv : tables_[0]) {
    WordId id = static_cast<WordId>(kv.first & kIdMask);
    if (id != bos_id) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::string> NgramLm::PredictedVocab() const {
  std::vector<std::string> out;
  for (WordId id : PredictedIds()) out.push_back(words_[id]);
  std::sort(out.begin(), out.end());
  return out;
}

NgramLm TrainNgramLm(const CleanCorpus &corpus, const TrainOptions &opts) {
  if (corpus.sentences.empty())
    throw Error(ErrorKind::kEmptyOutput, "train_trigram: empty corpus");
  const bool kn = opts.discounting == Discounting::kKneserNey;
  for (int n = 0; n < opts.order && kn; ++n)
    if (!(opts.kn_discount[n] >= 0.0 && opts.kn_discount[n] < 1.0))
      throw Error(ErrorKind::kInvalidArgument,
                  "Kneser-Ney discount must lie in [0, 1)");
  if (!(opts.unk_floor >= 0.0 && opts.unk_floor < 1.0))
    throw Error(ErrorKind::kInvalidArgument, "unk floor must lie in [0, 1)");

  NgramLm lm(opts.order);
  const int order = opts.order;
  const WordId bos = lm.AddWord(kBos);
  const WordId eos = lm.AddWord(kEos);
  const WordId unk = lm.AddWord(kUnk);
  {
    std::map<std::string, int> words;
    for (const auto &sentence : corpus.sentences)
      for (const auto &t : sentence) {
        if (t == kBos || t == kEos)
          throw Error(ErrorKind::kInvalidArgument,
                      "corpus contains reserved token '" + t + "'");
        words.emplace(t, 0);
      }
    for (const auto &kv : words) lm.AddWord(kv.first);
  }

  // Raw counts; raw[n-1] holds n-grams.  <s> is context only.
  std::array<CountTable, kMaxNgramOrder> raw;
  std::vector<WordId> seq;
  for (const auto &sentence : corpus.sentences) {
    seq.assign(1, bos);
    for (const auto &t : sentence) seq.push_back(lm.FindWord(t));
    seq.push_back(eos);
    for (std::size_t i = 1; i < seq.size(); ++i)
      for (int n = 1; n <= order && static_cast<std::size_t>(n) <= i + 1; ++n)
        ++raw[n - 1][NgramLm::Pack(std::span<const WordId>(&seq[i + 1 - n], n))];
  }

  // Counts used for estimation: raw at the top order (and everywhere for
  // maximum likelihood); below it, Kneser-Ney continuation counts, except
  // for n-grams starting with <s>, which have no left context.
  std::array<CountTable, kMaxNgramOrder> counts;
  counts[order - 1] = raw[order - 1];
  for (int n = order - 1; n >= 1; --n) {
    if (!kn) {
      counts[n - 1] = raw[n - 1];
      continue;
    }
    CountTable &cc = counts[n - 1];
    for (const auto &kv : raw[n]) {
      std::vector<WordId> longer = Unpack(kv.first, n + 1);
      ++cc[NgramLm::Pack(std::span<const WordId>(longer.data() + 1, n))];
    }
    for (const auto &kv : raw[n - 1])
      if (Unpack(kv.first, n)[0] == bos) cc[kv.first] = kv.second;
  }

  // Unigrams.
  {
    const CountTable &c1 = counts[0];
    const double d = kn ? opts.kn_discount[0] : 0.0;
    std::int64_t total = 0;
    for (const auto &kv : c1) total += kv.second;
    const double types = static_cast<double>(c1.size());
    const bool unk_seen = c1.count(static_cast<std::uint64_t>(unk)) > 0;
    const double scale = unk_seen ? 1.0 : 1.0 - opts.unk_floor;
    for (const auto &kv : c1) {
      double p = (std::max(kv.second - d, 0.0) + d * types / types) / total;
      WordId id = static_cast<WordId>(kv.first);
      lm.SetEntry(std::span<const WordId>(&id, 1), {SafeLog10(p * scale), 0.0});
    }
    if (!unk_seen)
      lm.SetEntry(std::span<const WordId>(&unk, 1), {SafeLog10(opts.unk_floor), 0.0});
    lm.SetEntry(std::span<const WordId>(&bos, 1), {kLogZero, 0.0});
  }

  // Orders 2..order: backoff weights of the histories, then probabilities
  // interpolated with the already finished lower order.
  for (int n = 2; n <= order; ++n) {
    const CountTable &cn = counts[n - 1];
    const double d = kn ? opts.kn_discount[n - 1] : 0.0;
    std::unordered_map<std::uint64_t, std::pair<std::int64_t, std::int64_t>> stats;
    for (const auto &kv : cn) {
      std::vector<WordId> g = Unpack(kv.first, n);
      auto &s = stats[NgramLm::Pack(std::span<const WordId>(g.data(), n - 1))];
      s.first += kv.second;
      s.second += 1;
    }
    for (const auto &[hkey, s] : stats) {
      std::vector<WordId> h = Unpack(hkey, n - 1);
      NgramEntry *entry = lm.MutableEntry(h);
      if (!entry) throw Error(ErrorKind::kValidation, "internal: missing history");
      entry->log_backoff = SafeLog10(d * s.second / static_cast<double>(s.first));
    }
    for (const auto &kv : cn) {
      std::vector<WordId> g = Unpack(kv.first, n);
      const auto &s = stats.at(NgramLm::Pack(std::span<const WordId>(g.data(), n - 1)));
      double lower = std::pow(
          10.0, lm.LogProbIds(std::span<const WordId>(g.data() + 1, n - 2), g[n - 1]));
      double p = (std::max(kv.second - d, 0.0) + d * s.second * lower) / s.first;
      lm.SetEntry(g, {SafeLog10(p), 0.0});
    }
  }
  return lm;
}

void RenormalizeBackoffs(NgramLm *lm) {
  const int order = lm->order();
  for (const auto &g : lm->SortedNgrams(order)) lm->MutableEntry(g)->log_backoff = 0.0;
  for (int n = 1; n < order; ++n) {
    std::map<std::vector<WordId>, std::pair<double, double>> sums;
    for (const auto &g : lm->SortedNgrams(n + 1)) {
      std::vector<WordId> h(g.begin(), g.end() - 1);
      auto &s = sums[h];
      s.first += std::pow(10.0, lm->FindEntry(g)->log_prob);
      s.second += std::pow(
          10.0, lm->LogProbIds(std::span<const WordId>(g.data() + 1, n - 1), g.back()));
    }
    for (const auto &h : lm->SortedNgrams(n)) {
      NgramEntry *entry = lm->MutableEntry(h);
      auto it = sums.find(h);
      if (it == sums.end()) {
        entry->log_backoff = 0.0;
        continue;
      }
      double numerator = 1.0 - it->second.first;
      double denominator = 1.0 - it->second.second;
      entry->log_backoff = (numerator <= 1e-12 || denominator <= 1e-12)
                               ? kLogZero
                               : std::log10(numerator / denominator);
    }
  }
}

NgramLm PruneToLimits(const NgramLm &lm, const LMLimits &limits) {
  NgramLm out = lm;
  bool changed = false;
  const WordId bos = out.bos(), eos = out.eos(), unk = out.unk();
  auto by_prob = [&out](const std::vector<WordId> &a, const std::vector<WordId> &b) {
    double pa = out.FindEntry(a)->log_prob, pb = out.FindEntry(b)->log_prob;
    if (pa != pb) return pa > pb;
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = out.Word(a[i]).compare(out.Word(b[i]));
      if (c != 0) return c < 0;
    }
    return false;
  };

  // Unigrams: specials always stay; the rest are rescaled to sum to one.
  if (out.NumNgrams(1) > limits.max_unigrams) {
    std::vector<std::vector<WordId>> regular;
    std::size_t specials = 0;
    for (auto &g : out.SortedNgrams(1)) {
      if (g[0] == bos || g[0] == eos || g[0] == unk) {
        ++specials;
      } else {
        regular.push_back(std::move(g));
      }
    }
    if (limits.max_unigrams < specials)
      throw Error(ErrorKind::kInvalidArgument,
                  "max_unigrams is smaller than the number of reserved symbols");
    std::stable_sort(regular.begin(), regular.end(), by_prob);
    for (std::size_t i = limits.max_unigrams - specials; i < regular.size(); ++i)
      out.RemoveEntry(regular[i]);
    double mass = 0.0;
    for (WordId id : out.PredictedIds())
      mass += std::pow(10.0, out.FindEntry(std::span<const WordId>(&id, 1))->log_prob);
    for (WordId id : out.PredictedIds()) {
      NgramEntry *e = out.MutableEntry(std::span<const WordId>(&id, 1));
      if (e->log_prob > kLogZero) e->log_prob -= std::log10(mass);
    }
    changed = true;
  }

  auto words_kept = [&out](const std::vector<WordId> &g) {
    for (WordId w : g)
      if (!out.FindEntry(std::span<const WordId>(&w, 1))) return false;
    return true;
  };
  const std::size_t max_by_order[] = {limits.max_unigrams, limits.max_bigrams,
                                      limits.max_trigrams};
  for (int n = 2; n <= out.order(); ++n) {
    std::vector<std::vector<WordId>> candidates;
    for (auto &g : out.SortedNgrams(n)) {
      bool keep = words_kept(g) &&
                  out.FindEntry(std::span<const WordId>(g.data(), n - 1)) != nullptr;
      if (keep) {
        candidates.push_back(std::move(g));
      } else {
        out.RemoveEntry(g);
        changed = true;
      }
    }
    if (candidates.size() > max_by_order[n - 1]) {
      std::stable_sort(candidates.begin(), candidates.end(), by_prob);
      for (std::size_t i = max_by_order[n - 1]; i < candidates.size(); ++i)
        out.RemoveEntry(candidates[i]);
      changed = true;
    }
  }

  int order = out.order();
  while (order > 1 && out.NumNgrams(order) == 0) --order;
  if (order != out.order()) {
    out.set_order(order);
    changed = true;
  }
  if (changed) RenormalizeBackoffs(&out);
  return out;
}

bool SameNgramLm(const NgramLm &a, const NgramLm &b, double tolerance) {
  if (a.order() != b.order()) return false;
  for (int n = 1; n <= a.order(); ++n) {
    if (a.NumNgrams(n) != b.NumNgrams(n)) return false;
    for (const auto &g : a.SortedNgrams(n)) {
      std::vector<WordId> mapped;
      for (WordId w : g) mapped.push_back(b.FindWord(a.Word(w)));
      const NgramEntry *eb = b.FindEntry(mapped);
      if (!eb) return false;
      const NgramEntry *ea = a.FindEntry(g);
      if (std::fabs(ea->log_prob - eb->log_prob) > tolerance ||
          std::fabs(ea->log_backoff - eb->log_backoff) > tolerance)
        return false;
    }
  }
  return true;
}

}  // namespace zrasr

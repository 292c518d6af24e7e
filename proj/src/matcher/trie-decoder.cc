// src/matcher/trie-decoder.cc

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

#include "zrasr/matcher/trie-decoder.h"

#include <cmath>
#include <limits>

#include <spdlog/spdlog.h>

#include "zrasr/base/error.h"
#include "zrasr/base/rng.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {

void TrieTunings::Validate() const {
  if (!(shorter_match_bias >= 0.0 && shorter_match_bias <= 1.0))
    throw Error(ErrorKind::kValidation, "shorter_match_bias outside [0, 1]");
  if (!target_length_dist.empty()) {
    double sum = 0.0;
    for (double p : target_length_dist) {
      if (p < 0.0) throw Error(ErrorKind::kValidation, "negative length probability");
      sum += p;
    }
    if (std::fabs(sum - 1.0) > 1e-6)
      throw Error(ErrorKind::kValidation, "word-length histogram does not sum to 1");
  }
}

namespace {

class PhoneMatcher {
 public:
  explicit PhoneMatcher(const TrieTunings &t) : t_(t) {}

  const std::string &Simplify(const std::string &phone) const {
    if (t_.phone_simplification.Contains(phone)) return t_.phone_simplification.Map(phone);
    return phone;
  }

  bool Match(const std::string &input, const std::string &key) const {
    const std::string &a = Simplify(input), &b = Simplify(key);
    if (a == b) return true;
    const auto &sc = t_.soundex_classes;
    if (sc.empty() || !sc.Contains(a) || !sc.Contains(b)) return false;
    return sc.Classify(a) == sc.Classify(b);
  }

 private:
  const TrieTunings &t_;
};

std::string ResolveHomonyms(const std::set<std::string> &words, const TrieTunings &t) {
  std::vector<std::string> pool;
  for (const auto &w : words)
    if (t.preferred_vocab.count(w)) pool.push_back(w);
  if (pool.empty()) pool.assign(words.begin(), words.end());
  auto count = [&](const std::string &w) -> std::int64_t {
    auto it = t.homonym_unigram.find(w);
    return it == t.homonym_unigram.end() ? 0 : it->second;
  };
  std::string best = pool.front();  // pool is in lexicographic order
  for (const auto &w : pool)
    if (count(w) > count(best)) best = w;
  return best;
}

double HistogramDistance(const std::vector<std::int64_t> &counts, std::int64_t total,
                         const std::vector<double> &target) {
  double d = 0.0;
  std::size_t n = std::max(counts.size(), target.size());
  for (std::size_t i = 0; i < n; ++i) {
    double p = i < counts.size() && total > 0 ? static_cast<double>(counts[i]) / total : 0.0;
    double q = i < target.size() ? target[i] : 0.0;
    d += std::fabs(p - q);
  }
  return d;
}

}  // namespace

MatchResult TrieDecode(const PhoneSeq &phones, const PronTrie &trie,
                       const TrieTunings &tunings) {
  tunings.Validate();
  PhoneMatcher matcher(tunings);
  Rng rng(tunings.seed);
  MatchResult result;
  std::vector<std::int64_t> length_counts;
  std::int64_t emitted = 0;

  std::size_t pos = 0;
  while (pos < phones.size()) {
    // Word sets reachable after consuming each number of phones.
    std::map<std::size_t, std::set<std::string>> ends;
    std::vector<int> frontier{trie.root()};
    for (std::size_t len = 1; pos + len <= phones.size() && !frontier.empty(); ++len) {
      std::vector<int> next;
      for (int node : frontier)
        for (const auto &[key, child] : trie.node(node).children)
          if (matcher.Match(phones[pos + len - 1], key)) next.push_back(child);
      for (int node : next) {
        const auto &words = trie.node(node).words;
        if (!words.empty()) ends[len].insert(words.begin(), words.end());
      }
      frontier = std::move(next);
    }
    if (ends.empty()) {
      spdlog::debug("trie decode: no match at position {} ({})", pos, phones[pos]);
      result.unmatched.push_back({pos, phones[pos]});
      ++pos;
      continue;
    }

    std::size_t take = ends.rbegin()->first;
    std::string word = ResolveHomonyms(ends.rbegin()->second, tunings);
    if (ends.size() > 1 && !tunings.target_length_dist.empty() &&
        tunings.shorter_match_bias > 0.0 && rng.Bernoulli(tunings.shorter_match_bias)) {
      double best = std::numeric_limits<double>::infinity();
      for (auto it = ends.rbegin(); it != ends.rend(); ++it) {
        std::string w = ResolveHomonyms(it->second, tunings);
        std::size_t wl = CodepointLength(w);
        auto counts = length_counts;
        if (counts.size() <= wl) counts.resize(wl + 1, 0);
        ++counts[wl];
        double d = HistogramDistance(counts, emitted + 1, tunings.target_length_dist);
        if (d < best) {
          best = d;
          take = it->first;
          word = w;
        }
      }
    }
    std::size_t wl = CodepointLength(word);
    if (length_counts.size() <= wl) length_counts.resize(wl + 1, 0);
    ++length_counts[wl];
    ++emitted;
    result.words.push_back(word);
    pos += take;
  }
  return result;
}

}  // namespace zrasr

// src/classlm/brown-cluster.cc

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

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include <spdlog/spdlog.h>

#include "zrasr/base/error.h"
#include "zrasr/base/parallel.h"
#include "zrasr/classlm/clustering.h"
#include "zrasr/lm/language-model.h"

namespace zrasr {

namespace {

constexpr int kBosClass = 0;
constexpr int kEosClass = 1;

// Sparse class bigram counts with left/right marginals.
class ClassBigrams {
 public:
  explicit ClassBigrams(int num_classes)
      : row_(num_classes), col_(num_classes), left_(num_classes, 0),
        right_(num_classes, 0) {}

  void Add(int l, int r, std::int64_t n) {
    row_[l][r] += n;
    col_[r][l] += n;
    left_[l] += n;
    right_[r] += n;
    total_ += n;
  }

  double Term(std::int64_t n, std::int64_t nl, std::int64_t nr) const {
    if (n == 0) return 0.0;
    double t = static_cast<double>(total_);
    return n / t * std::log2(n * t / (static_cast<double>(nl) * nr));
  }

  std::int64_t Count(int l, int r) const {
    auto it = row_[l].find(r);
    return it == row_[l].end() ? 0 : it->second;
  }

  double MutualInformation() const {
    double mi = 0.0;
    for (std::size_t l = 0; l < row_.size(); ++l)
      for (const auto &[r, n] : row_[l]) mi += Term(n, left_[l], right_[r]);
    return mi;
  }

  // Change in mutual information if b were merged into a.
  double MergeDelta(int a, int b) const {
    double removed = 0.0;
    for (const auto &[r, n] : row_[a]) removed += Term(n, left_[a], right_[r]);
    for (const auto &[r, n] : row_[b]) removed += Term(n, left_[b], right_[r]);
    for (const auto &[l, n] : col_[a]) removed += Term(n, left_[l], right_[a]);
    for (const auto &[l, n] : col_[b]) removed += Term(n, left_[l], right_[b]);
    for (int x : {a, b})
      for (int y : {a, b}) removed -= Term(Count(x, y), left_[x], right_[y]);

    const std::int64_t ml = left_[a] + left_[b], mr = right_[a] + right_[b];
    double added = 0.0;
    for (const auto &[r, n] : row_[a]) {
      if (r == a || r == b) continue;
      added += Term(n + Count(b, r), ml, right_[r]);
    }
    for (const auto &[r, n] : row_[b]) {
      if (r == a || r == b || row_[a].count(r)) continue;
      added += Term(n, ml, right_[r]);
    }
    for (const auto &[l, n] : col_[a]) {
      if (l == a || l == b) continue;
      added += Term(n + Count(l, b), left_[l], mr);
    }
    for (const auto &[l, n] : col_[b]) {
      if (l == a || l == b || col_[a].count(l)) continue;
      added += Term(n, left_[l], mr);
    }
    added += Term(Count(a, a) + Count(a, b) + Count(b, a) + Count(b, b), ml, mr);
    return added - removed;
  }

  void Merge(int a, int b) {
    std::vector<std::tuple<int, int, std::int64_t>> moved;
    for (const auto &[r, n] : row_[b]) moved.emplace_back(b, r, n);
    for (const auto &[l, n] : col_[b])
      if (l != b) moved.emplace_back(l, b, n);
    for (const auto &[l, r, n] : moved) {
      row_[l].erase(r);
      col_[r].erase(l);
      left_[l] -= n;
      right_[r] -= n;
      total_ -= n;
    }
    for (const auto &[l, r, n] : moved) Add(l == b ? a : l, r == b ? a : r, n);
  }

 private:
  std::vector<std::unordered_map<int, std::int64_t>> row_, col_;
  std::vector<std::int64_t> left_, right_;
  std::int64_t total_ = 0;
};

template <typename ClassOf>
ClassBigrams CountBigrams(const CleanCorpus &corpus, int num_classes,
                          ClassOf class_of) {
  ClassBigrams counts(num_classes);
  for (const auto &sentence : corpus.sentences) {
    int prev = kBosClass;
    for (const auto &w : sentence) {
      int c = class_of(w);
      counts.Add(prev, c, 1);
      prev = c;
    }
    counts.Add(prev, kEosClass, 1);
  }
  return counts;
}

}  // namespace

double ClassBigramMutualInformation(const CleanCorpus &corpus,
                                    const Clustering &clustering) {
  int max_id = -1;
  for (const auto &[w, c] : clustering.cluster_of) max_id = std::max(max_id, c);
  auto counts = CountBigrams(corpus, max_id + 3, [&](const std::string &w) {
    int c = clustering.Of(w);
    if (c < 0)
      throw Error(ErrorKind::kValidation, "word '" + w + "' has no cluster");
    return c + 2;
  });
  return counts.MutualInformation();
}

BrownResult BrownCluster(const CleanCorpus &corpus, const BrownOptions &opts) {
  CleanCorpus counted = corpus;
  counted.RecountVocab();
  for (const auto &reserved : {kBos, kEos})
    if (counted.vocab.count(reserved))
      throw Error(ErrorKind::kValidation,
                  "corpus contains reserved token " + reserved);

  // Initial items: seed groups first, then the remaining words.
  std::map<std::string, int> item_of;
  std::vector<std::vector<std::string>> items;
  for (const auto &seed : opts.seeds) {
    std::vector<std::string> group;
    for (const auto &w : seed) {
      if (!counted.vocab.count(w)) continue;
      if (item_of.count(w))
        throw Error(ErrorKind::kValidation, "seed clusters overlap on '" + w + "'");
      group.push_back(w);
    }
    if (group.empty()) continue;
    for (const auto &w : group) item_of[w] = static_cast<int>(items.size());
    items.push_back(std::move(group));
  }
  for (const auto &[w, n] : counted.vocab)
    if (!item_of.count(w)) {
      item_of[w] = static_cast<int>(items.size());
      items.push_back({w});
    }

  const int num_items = static_cast<int>(items.size());
  if (opts.num_clusters < 1 || opts.num_clusters > num_items)
    throw Error(ErrorKind::kInvalidArgument,
                "cluster count " + std::to_string(opts.num_clusters) +
                    " outside [1, " + std::to_string(num_items) + "]");

  // Activation order: frequency descending, then smallest word.
  std::vector<std::int64_t> freq(num_items, 0);
  for (const auto &[w, n] : counted.vocab) freq[item_of[w]] += n;
  std::vector<int> order(num_items);
  for (int i = 0; i < num_items; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (freq[x] != freq[y]) return freq[x] > freq[y];
    return items[x].front() < items[y].front();
  });

  auto counts = CountBigrams(counted, num_items + 2, [&](const std::string &w) {
    return item_of.at(w) + 2;
  });

  BrownResult result;
  result.objective.push_back(counts.MutualInformation());

  std::vector<int> active;
  auto merge_best = [&]() {
    const std::size_t n = active.size();
    std::vector<double> best_delta(n, -std::numeric_limits<double>::infinity());
    std::vector<std::size_t> best_partner(n, 0);
    ParallelFor(n, opts.num_workers, [&](std::size_t i, int) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double d = counts.MergeDelta(active[i], active[j]);
        if (d > best_delta[i]) {
          best_delta[i] = d;
          best_partner[i] = j;
        }
      }
    });
    std::size_t bi = 0;
    for (std::size_t i = 1; i + 1 < n; ++i)
      if (best_delta[i] > best_delta[bi]) bi = i;
    std::size_t bj = best_partner[bi];
    counts.Merge(active[bi], active[bj]);
    for (const auto &w : items[active[bj] - 2]) items[active[bi] - 2].push_back(w);
    items[active[bj] - 2].clear();
    active.erase(active.begin() + bj);
    result.objective.push_back(counts.MutualInformation());
  };

  const int window =
      opts.window <= 0 ? opts.num_clusters : std::max(opts.window, opts.num_clusters);
  std::size_t next = 0;
  while (next < order.size() && static_cast<int>(active.size()) < window)
    active.push_back(order[next++] + 2);
  while (next < order.size()) {
    active.push_back(order[next++] + 2);
    merge_best();
  }
  while (static_cast<int>(active.size()) > opts.num_clusters) merge_best();
  spdlog::debug("brown clustering: {} items into {} clusters, MI {:.4f} -> {:.4f}",
                num_items, opts.num_clusters, result.objective.front(),
                result.objective.back());

  for (std::size_t c = 0; c < active.size(); ++c)
    for (const auto &w : items[active[c] - 2])
      result.clustering.cluster_of[w] = static_cast<int>(c);
  result.clustering.Canonicalize();
  return result;
}

}  // namespace zrasr

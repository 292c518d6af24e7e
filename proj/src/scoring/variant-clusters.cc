// src/scoring/variant-clusters.cc

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

#include "zrasr/scoring/variant-clusters.h"

#include <algorithm>
#include <limits>

#include "zrasr/base/error.h"
#include "zrasr/base/parallel.h"
#include "zrasr/base/text-utils.h"
#include "zrasr/scoring/normalize.h"

namespace zrasr {

namespace {

bool NeighborLess(const Neighbor &x, const Neighbor &y) {
  if (x.distance != y.distance) return x.distance < y.distance;
  return x.word < y.word;
}

}  // namespace

double NeighborArray::Distance(const std::string &a, const std::string &b) const {
  if (a == b) return 0.0;
  auto it = neighbors.find(a);
  if (it != neighbors.end())
    for (const auto &n : it->second)
      if (n.word == b) return n.distance;
  return WeightedEditDistance(a, b, costs);
}

std::size_t NeighborArray::NumPairs() const {
  std::size_t n = 0;
  for (const auto &[w, list] : neighbors) n += list.size();
  return n / 2;
}

NeighborArray PairwiseDistances(const std::set<std::string> &words, std::size_t min_len,
                                double cutoff, const CostTable &costs, int num_workers) {
  NeighborArray na;
  na.cutoff = cutoff;
  na.costs = costs;
  std::vector<std::vector<std::string>> units;
  for (const auto &w : words)
    if (CodepointLength(w) >= min_len) {
      na.words.push_back(w);
      units.push_back(SplitCodepoints(w));
    }
  const std::size_t n = na.words.size();
  // Reweighting never lowers a distance below 0.05 per edit, but any plain
  // distance of 3 or more is kept as is, so pairs that far apart can be
  // skipped whenever the cutoff is below 3.
  const std::size_t limit = cutoff < 3.0 ? 3 : static_cast<std::size_t>(-1);
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(n);
  ParallelFor(n, num_workers, [&](std::size_t i, int) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (limit != static_cast<std::size_t>(-1) &&
          BoundedEditDistance(units[i], units[j], limit) >= limit)
        continue;
      double d = WeightedEditDistance(na.words[i], na.words[j], costs);
      if (d <= cutoff) rows[i].emplace_back(j, d);
    }
  }, 16);
  for (const auto &w : na.words) na.neighbors[w];
  for (std::size_t i = 0; i < n; ++i)
    for (const auto &[j, d] : rows[i]) {
      na.neighbors[na.words[i]].push_back({d, na.words[j]});
      na.neighbors[na.words[j]].push_back({d, na.words[i]});
    }
  for (auto &[w, list] : na.neighbors) std::sort(list.begin(), list.end(), NeighborLess);
  return na;
}

const std::string &VariantClusters::Canonical(const std::string &word) const {
  auto it = centroid_of_.find(word);
  return it == centroid_of_.end() ? word : it->second;
}

void VariantClusters::Index() {
  centroid_of_.clear();
  for (const auto &c : clusters)
    for (const auto &m : c.members) centroid_of_[m] = c.centroid;
}

std::string ClusterCentroid(const std::vector<std::string> &members, const NeighborArray &na) {
  std::string best;
  double best_median = std::numeric_limits<double>::infinity();
  for (const auto &w : members) {
    std::vector<double> d;
    for (const auto &v : members)
      if (v != w) d.push_back(na.Distance(w, v));
    double median = 0.0;
    if (!d.empty()) {
      std::sort(d.begin(), d.end());
      std::size_t k = d.size() / 2;
      median = d.size() % 2 == 1 ? d[k] : 0.5 * (d[k - 1] + d[k]);
    }
    if (median < best_median || (median == best_median && w < best)) {
      best_median = median;
      best = w;
    }
  }
  return best;
}

VariantClusters GrowClusters(const NeighborArray &na, double threshold) {
  // (1) one candidate per seed word, seeds in word order.
  std::vector<std::set<std::string>> candidates;
  for (const auto &w : na.words) {
    std::vector<std::string> members{w};
    auto it = na.neighbors.find(w);
    if (it != na.neighbors.end())
      for (const auto &nb : it->second) {
        if (nb.distance > threshold) break;
        bool ok = true;
        for (const auto &m : members)
          if (na.Distance(nb.word, m) > threshold) {
            ok = false;
            break;
          }
        if (ok) members.push_back(nb.word);
      }
    // (2) singletons go.
    if (members.size() >= 2) candidates.emplace_back(members.begin(), members.end());
  }
  // (3) drop duplicates and subsets of other candidates.
  std::vector<std::set<std::string>> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < candidates.size() && !drop; ++j) {
      if (i == j) continue;
      const auto &a = candidates[i], &b = candidates[j];
      if (a.size() > b.size() || !std::includes(b.begin(), b.end(), a.begin(), a.end()))
        continue;
      // Equal sets: keep the first copy only.
      drop = a.size() < b.size() || j < i;
    }
    if (!drop) kept.push_back(candidates[i]);
  }
  // (4) a word in several clusters stays only with the nearest centroid.
  std::vector<std::string> centroids;
  for (const auto &c : kept) centroids.push_back(ClusterCentroid({c.begin(), c.end()}, na));
  std::map<std::string, std::vector<std::size_t>> owners;
  for (std::size_t c = 0; c < kept.size(); ++c)
    for (const auto &w : kept[c]) owners[w].push_back(c);
  std::vector<std::set<std::string>> resolved(kept.size());
  for (const auto &[w, list] : owners) {
    std::size_t best = list.front();
    double best_d = na.Distance(w, centroids[best]);
    for (std::size_t c : list) {
      double d = na.Distance(w, centroids[c]);
      if (d < best_d || (d == best_d && centroids[c] < centroids[best])) {
        best = c;
        best_d = d;
      }
    }
    resolved[best].insert(w);
  }
  // (5) drop clusters reduced to one word and settle the centroids.
  VariantClusters out;
  for (const auto &c : resolved) {
    if (c.size() < 2) continue;
    VariantCluster vc;
    vc.members.assign(c.begin(), c.end());
    vc.centroid = ClusterCentroid(vc.members, na);
    out.clusters.push_back(std::move(vc));
  }
  std::sort(out.clusters.begin(), out.clusters.end(),
            [](const VariantCluster &x, const VariantCluster &y) { return x.centroid < y.centroid; });
  out.Index();
  return out;
}

void WriteVariantClusters(const std::string &path, const VariantClusters &vc) {
  std::string text;
  for (const auto &c : vc.clusters) {
    text += c.centroid;
    for (const auto &m : c.members)
      if (m != c.centroid) text += " " + m;
    text += "\n";
  }
  WriteFile(path, text);
}

VariantClusters ReadVariantClusters(const std::string &path) {
  VariantClusters vc;
  std::set<std::string> seen;
  auto lines = ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto words = SplitWhitespace(lines[i]);
    if (words.empty()) continue;
    if (words.size() < 2)
      throw Error(ErrorKind::kParse, path + ":" + std::to_string(i + 1) + ": cluster of one word");
    for (const auto &w : words)
      if (!seen.insert(w).second)
        throw Error(ErrorKind::kParse,
                    path + ":" + std::to_string(i + 1) + ": '" + w + "' in two clusters");
    VariantCluster c;
    c.centroid = words.front();
    c.members = words;
    std::sort(c.members.begin(), c.members.end());
    vc.clusters.push_back(std::move(c));
  }
  vc.Index();
  return vc;
}

namespace {

std::vector<std::string> Canonicalize(const std::vector<std::string> &tokens,
                                      const VariantClusters &vc) {
  std::vector<std::string> out;
  for (const auto &t : NormalizeTokens(tokens)) out.push_back(vc.Canonical(t));
  return out;
}

}  // namespace

WerReport NormalizedWer(const std::vector<std::string> &ref,
                        const std::vector<std::string> &hyp, const VariantClusters &vc) {
  return ComputeWer(Canonicalize(ref, vc), Canonicalize(hyp, vc));
}

WerReport NormalizedCorpusWer(const std::vector<std::vector<std::string>> &refs,
                              const std::vector<std::vector<std::string>> &hyps,
                              const VariantClusters &vc) {
  std::vector<std::vector<std::string>> r, h;
  for (const auto &x : refs) r.push_back(Canonicalize(x, vc));
  for (const auto &x : hyps) h.push_back(Canonicalize(x, vc));
  return CorpusWer(r, h);
}

}  // namespace zrasr

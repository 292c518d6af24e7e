// include/zrasr/scoring/variant-clusters.h

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

#ifndef ZRASR_SCORING_VARIANT_CLUSTERS_H_
#define ZRASR_SCORING_VARIANT_CLUSTERS_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "zrasr/scoring/wer.h"
#include "zrasr/scoring/weighted-edit-distance.h"

namespace zrasr {

struct Neighbor {
  double distance = 0.0;
  std::string word;
  bool operator==(const Neighbor &) const = default;
};

// A(w): neighbours of w within the cutoff, nearest first (ties by word).
struct NeighborArray {
  std::vector<std::string> words;  // participating words, sorted
  std::map<std::string, std::vector<Neighbor>> neighbors;
  double cutoff = 0.0;
  CostTable costs;

  // Stored distance, or the distance computed on demand.
  double Distance(const std::string &a, const std::string &b) const;
  std::size_t NumPairs() const;
};

// Weighted distances between all pairs of words at least `min_len` code
// points long, keeping pairs within `cutoff`.  Rows are computed in
// parallel.
NeighborArray PairwiseDistances(const std::set<std::string> &words, std::size_t min_len,
                                double cutoff, const CostTable &costs = CostTable(),
                                int num_workers = 1);

struct VariantCluster {
  std::string centroid;
  std::vector<std::string> members;  // sorted, centroid included
};

struct VariantClusters {
  std::vector<VariantCluster> clusters;  // ordered by centroid

  // Centroid of the word's cluster, or the word itself.
  const std::string &Canonical(const std::string &word) const;
  void Index();

 private:
  std::map<std::string, std::string> centroid_of_;
};

// Member whose median distance to the other members is smallest, ties by
// word order.
std::string ClusterCentroid(const std::vector<std::string> &members, const NeighborArray &na);

// Grows a cluster from each word over its neighbour list, admitting a word
// only within `threshold` of every member so far; then drops singletons
// and subsets, and keeps a word claimed by several clusters only in the one
// whose centroid is nearest.
VariantClusters GrowClusters(const NeighborArray &na, double threshold = 1.5);

// One cluster per line, centroid first.
void WriteVariantClusters(const std::string &path, const VariantClusters &vc);
VariantClusters ReadVariantClusters(const std::string &path);

// WER after normalizing every token and mapping it to its cluster centroid.
WerReport NormalizedWer(const std::vector<std::string> &ref,
                        const std::vector<std::string> &hyp, const VariantClusters &vc);
WerReport NormalizedCorpusWer(const std::vector<std::vector<std::string>> &refs,
                              const std::vector<std::vector<std::string>> &hyps,
                              const VariantClusters &vc);

}  // namespace zrasr

#endif  // ZRASR_SCORING_VARIANT_CLUSTERS_H_

// include/zrasr/classlm/clustering.h

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

#ifndef ZRASR_CLASSLM_CLUSTERING_H_
#define ZRASR_CLASSLM_CLUSTERING_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "zrasr/textprep/text-prep.h"

namespace zrasr {

// Hard word clustering.  Cluster ids are dense, 0..num_clusters()-1.
struct Clustering {
  std::map<std::string, int> cluster_of;

  int num_clusters() const;
  int Of(const std::string &word) const;  // -1 when absent
  std::map<int, std::vector<std::string>> Members() const;

  // Renumbers ids densely in order of each cluster's smallest word.
  void Canonicalize();
};

struct BrownOptions {
  int num_clusters = 750;
  // Size of the active merge window; 0 means num_clusters.  Values below
  // num_clusters are raised to it.  A window at least as large as the number
  // of initial items gives exact greedy merging.
  int window = 0;
  // Threads used to score candidate merges.
  int num_workers = 1;
  // Disjoint word groups that start out as single clusters.
  std::vector<std::set<std::string>> seeds;
};

struct BrownResult {
  Clustering clustering;
  // Average mutual information (bits) of the class bigram model before the
  // first merge and after each merge.  Never increases.
  std::vector<double> objective;
};

// Greedy agglomerative clustering maximizing class-bigram mutual
// information.  Sentence boundaries act as two fixed classes outside the
// k being built.  Items enter the active window in decreasing frequency.
BrownResult BrownCluster(const CleanCorpus &corpus, const BrownOptions &opts);

// Mutual information (bits) of the class bigram model induced by
// `clustering` on `corpus`, boundaries included as fixed classes.
double ClassBigramMutualInformation(const CleanCorpus &corpus,
                                    const Clustering &clustering);

// Adds every new term to the existing cluster with the highest fraction of
// NE words; ties go to the larger cluster, then to the smaller id.
Clustering ExpandClusters(const Clustering &clustering,
                          const std::set<std::string> &new_terms,
                          const std::set<std::string> &ne_vocab);

// One cluster per NE type (types in name order), then a singleton per
// remaining vocabulary word.  Throws when a word carries two NE types.
Clustering SupervisedClasses(
    const std::map<std::string, std::set<std::string>> &ne_classes,
    const std::set<std::string> &vocab);

Clustering ReadClustering(const std::string &path);  // `word<TAB>id`
void WriteClustering(const std::string &path, const Clustering &clustering);

// `word<TAB>type` per line, as used for NE class lists and seed groups.
std::map<std::string, std::set<std::string>> ReadTypedWordList(const std::string &path);

}  // namespace zrasr

#endif  // ZRASR_CLASSLM_CLUSTERING_H_

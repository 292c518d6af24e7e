// src/classlm/clustering.cc

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

#include "zrasr/classlm/clustering.h"

#include <algorithm>
#include <fstream>

#include "zrasr/base/error.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {

int Clustering::num_clusters() const {
  std::set<int> ids;
  for (const auto &[w, c] : cluster_of) ids.insert(c);
  return static_cast<int>(ids.size());
}

int Clustering::Of(const std::string &word) const {
  auto it = cluster_of.find(word);
  return it == cluster_of.end() ? -1 : it->second;
}

std::map<int, std::vector<std::string>> Clustering::Members() const {
  std::map<int, std::vector<std::string>> members;
  for (const auto &[w, c] : cluster_of) members[c].push_back(w);
  return members;
}

void Clustering::Canonicalize() {
  std::map<int, int> remap;
  // cluster_of iterates in word order, so the first sighting of an id is its
  // smallest word.
  for (const auto &[w, c] : cluster_of)
    if (!remap.count(c)) {
      int next = static_cast<int>(remap.size());
      remap[c] = next;
    }
  for (auto &[w, c] : cluster_of) c = remap[c];
}

Clustering ExpandClusters(const Clustering &clustering,
                          const std::set<std::string> &new_terms,
                          const std::set<std::string> &ne_vocab) {
  if (new_terms.empty()) return clustering;
  auto members = clustering.Members();
  if (members.empty())
    throw Error(ErrorKind::kInvalidArgument, "cannot expand an empty clustering");
  int best = -1;
  double best_density = -1.0;
  std::size_t best_size = 0;
  for (const auto &[id, words] : members) {
    std::size_t ne = 0;
    for (const auto &w : words) ne += ne_vocab.count(w);
    double density = static_cast<double>(ne) / words.size();
    if (density > best_density ||
        (density == best_density && words.size() > best_size)) {
      best = id;
      best_density = density;
      best_size = words.size();
    }
  }
  Clustering out = clustering;
  for (const auto &term : new_terms) {
    if (out.cluster_of.count(term))
      throw Error(ErrorKind::kInvalidArgument,
                  "expansion term '" + term + "' is already clustered");
    out.cluster_of[term] = best;
  }
  return out;
}

Clustering SupervisedClasses(
    const std::map<std::string, std::set<std::string>> &ne_classes,
    const std::set<std::string> &vocab) {
  Clustering out;
  int next = 0;
  for (const auto &[type, words] : ne_classes) {
    if (words.empty()) continue;
    for (const auto &w : words) {
      auto [it, inserted] = out.cluster_of.emplace(w, next);
      if (!inserted)
        throw Error(ErrorKind::kValidation,
                    "word '" + w + "' belongs to more than one NE class");
    }
    ++next;
  }
  for (const auto &w : vocab)
    if (!out.cluster_of.count(w)) out.cluster_of[w] = next++;
  return out;
}

Clustering ReadClustering(const std::string &path) {
  Clustering out;
  auto lines = ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = Trim(lines[i]);
    if (line.empty()) continue;
    auto fields = SplitOn(line, '\t');
    if (fields.size() != 2)
      throw Error(ErrorKind::kParse, path + ":" + std::to_string(i + 1) +
                                         ": expected word<TAB>cluster_id");
    long long id = ParseInt(fields[1]);
    if (id < 0)
      throw Error(ErrorKind::kParse,
                  path + ":" + std::to_string(i + 1) + ": negative cluster id");
    if (!out.cluster_of.emplace(fields[0], static_cast<int>(id)).second)
      throw Error(ErrorKind::kParse, path + ":" + std::to_string(i + 1) +
                                         ": word '" + fields[0] + "' listed twice");
  }
  return out;
}

void WriteClustering(const std::string &path, const Clustering &clustering) {
  std::string text;
  for (const auto &[w, c] : clustering.cluster_of)
    text += w + "\t" + std::to_string(c) + "\n";
  WriteFile(path, text);
}

std::map<std::string, std::set<std::string>> ReadTypedWordList(const std::string &path) {
  std::map<std::string, std::set<std::string>> out;
  auto lines = ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = Trim(lines[i]);
    if (line.empty()) continue;
    auto fields = SplitOn(line, '\t');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
      throw Error(ErrorKind::kParse,
                  path + ":" + std::to_string(i + 1) + ": expected word<TAB>type");
    out[fields[1]].insert(fields[0]);
  }
  return out;
}

}  // namespace zrasr

// src/classlm/class-lm.cc

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

#include "zrasr/classlm/class-lm.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "zrasr/base/error.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {

ClassLm::ClassLm(Clustering clustering, NgramLm class_model,
                 std::map<std::string, double> log_emission)
    : clustering_(std::move(clustering)),
      class_model_(std::move(class_model)),
      log_emission_(std::move(log_emission)) {}

std::string ClassLm::ClassToken(int id) { return "<c" + std::to_string(id) + ">"; }

double ClassLm::LogEmission(const std::string &word) const {
  auto it = log_emission_.find(word);
  return it == log_emission_.end() ? kLogZero : it->second;
}

std::string ClassLm::TokenOf(const std::string &word) const {
  if (word == kBos || word == kEos) return word;
  int c = clustering_.Of(word);
  if (c < 0) return kUnk;
  std::string token = ClassToken(c);
  // A class never seen in training is as unknown as its words.
  if (class_model_.FindWord(token) == kNoWord) return kUnk;
  return token;
}

double ClassLm::LogProb(std::span<const std::string> history,
                        const std::string &word) const {
  std::size_t keep = std::min<std::size_t>(history.size(), order() - 1);
  std::vector<std::string> classes;
  for (std::size_t i = history.size() - keep; i < history.size(); ++i)
    classes.push_back(TokenOf(history[i]));
  std::string token = TokenOf(word);
  double lp = class_model_.LogProb(classes, token);
  if (token == kUnk || token == kEos) return lp;
  return lp + LogEmission(word);
}

std::vector<std::string> ClassLm::PredictedVocab() const {
  std::vector<std::string> vocab;
  for (const auto &[w, c] : clustering_.cluster_of)
    if (TokenOf(w) != kUnk) vocab.push_back(w);
  vocab.push_back(kEos);
  if (class_model_.unk() != kNoWord) vocab.push_back(kUnk);
  return vocab;
}

ClassLm BuildClassLm(const CleanCorpus &corpus, const Clustering &clustering,
                     const TrainOptions &opts) {
  CleanCorpus mapped;
  std::map<std::string, std::int64_t> word_count;
  mapped.sentences.reserve(corpus.sentences.size());
  for (const auto &sentence : corpus.sentences) {
    Sentence classes;
    classes.reserve(sentence.size());
    for (const auto &w : sentence) {
      int c = clustering.Of(w);
      if (c < 0)
        throw Error(ErrorKind::kValidation,
                    "clustering does not cover corpus word '" + w + "'");
      classes.push_back(ClassLm::ClassToken(c));
      ++word_count[w];
    }
    mapped.sentences.push_back(std::move(classes));
  }
  mapped.RecountVocab();
  NgramLm class_model = TrainNgramLm(mapped, opts);

  std::map<std::string, double> log_emission;
  for (const auto &[id, members] : clustering.Members()) {
    std::int64_t total = 0;
    std::vector<std::int64_t> counts;
    for (const auto &w : members) {
      auto it = word_count.find(w);
      counts.push_back(it == word_count.end() ? 1 : it->second);
      total += counts.back();
    }
    for (std::size_t i = 0; i < members.size(); ++i)
      log_emission[members[i]] =
          std::log10(static_cast<double>(counts[i]) / static_cast<double>(total));
  }
  return ClassLm(clustering, std::move(class_model), std::move(log_emission));
}

void WriteClassLm(const std::string &prefix, const ClassLm &lm) {
  WriteClustering(prefix + ".clusters", lm.clustering());
  WriteArpa(lm.class_model(), prefix + ".arpa");
  std::string text;
  for (const auto &[id, members] : lm.clustering().Members())
    for (const auto &w : members)
      text += ClassLm::ClassToken(id) + "\t" + w + "\t" +
              FormatDouble(lm.LogEmission(w)) + "\n";
  WriteFile(prefix + ".emissions", text);
}

ClassLm ReadClassLm(const std::string &prefix) {
  Clustering clustering = ReadClustering(prefix + ".clusters");
  NgramLm class_model = ReadArpa(prefix + ".arpa");
  const std::string path = prefix + ".emissions";
  std::map<std::string, double> log_emission;
  auto lines = ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = Trim(lines[i]);
    if (line.empty()) continue;
    auto f = SplitOn(line, '\t');
    std::string where = path + ":" + std::to_string(i + 1);
    if (f.size() != 3)
      throw Error(ErrorKind::kParse, where + ": expected class<TAB>word<TAB>log10prob");
    int c = clustering.Of(f[1]);
    if (c < 0 || ClassLm::ClassToken(c) != f[0])
      throw Error(ErrorKind::kParse,
                  where + ": emission for '" + f[1] + "' disagrees with the clustering");
    log_emission[f[1]] = ParseDouble(f[2]);
  }
  if (log_emission.size() != clustering.cluster_of.size())
    throw Error(ErrorKind::kParse, path + ": emissions do not cover every clustered word");
  return ClassLm(std::move(clustering), std::move(class_model), std::move(log_emission));
}

InterpolatedLm::InterpolatedLm(std::shared_ptr<const LanguageModel> a,
                               std::shared_ptr<const LanguageModel> b, double lambda)
    : a_(std::move(a)), b_(std::move(b)), lambda_(lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw Error(ErrorKind::kInvalidArgument, "interpolation weight outside [0, 1]");
  if (!a_ || !b_) throw Error(ErrorKind::kInvalidArgument, "null interpolation component");
}

int InterpolatedLm::order() const { return std::max(a_->order(), b_->order()); }

double InterpolatedLm::LogProb(std::span<const std::string> history,
                               const std::string &word) const {
  if (lambda_ == 1.0) return a_->LogProb(history, word);
  if (lambda_ == 0.0) return b_->LogProb(history, word);
  double pa = std::pow(10.0, a_->LogProb(history, word));
  double pb = std::pow(10.0, b_->LogProb(history, word));
  double p = lambda_ * pa + (1.0 - lambda_) * pb;
  return p > 0.0 ? std::log10(p) : kLogZero;
}

std::vector<std::string> InterpolatedLm::PredictedVocab() const {
  std::set<std::string> vocab;
  for (const auto &w : a_->PredictedVocab()) vocab.insert(w);
  for (const auto &w : b_->PredictedVocab()) vocab.insert(w);
  return {vocab.begin(), vocab.end()};
}

}  // namespace zrasr

// include/zrasr/classlm/class-lm.h

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

#ifndef ZRASR_CLASSLM_CLASS_LM_H_
#define ZRASR_CLASSLM_CLASS_LM_H_

#include <map>
#include <memory>
#include <string>

#include "zrasr/classlm/clustering.h"
#include "zrasr/lm/ngram-lm.h"

namespace zrasr {

// p(w | h) = p(class(w) | classes of h) * p(w | class(w)).
class ClassLm : public LanguageModel {
 public:
  ClassLm(Clustering clustering, NgramLm class_model,
          std::map<std::string, double> log_emission);

  int order() const override { return class_model_.order(); }
  double LogProb(std::span<const std::string> history,
                 const std::string &word) const override;
  std::vector<std::string> PredictedVocab() const override;

  const Clustering &clustering() const { return clustering_; }
  const NgramLm &class_model() const { return class_model_; }
  // log10 p(word | its class); kLogZero for unclustered words.
  double LogEmission(const std::string &word) const;

  // Class-sequence token for cluster `id`.
  static std::string ClassToken(int id);

 private:
  std::string TokenOf(const std::string &word) const;

  Clustering clustering_;
  NgramLm class_model_;
  std::map<std::string, double> log_emission_;
};

// Trains the class-sequence model on the class-mapped corpus and estimates
// p(w | c) by relative frequency.  Cluster members absent from the corpus
// (for example expansion terms) get a pseudo-count of one.
ClassLm BuildClassLm(const CleanCorpus &corpus, const Clustering &clustering,
                     const TrainOptions &opts);

// Serialized as <prefix>.clusters, <prefix>.arpa and <prefix>.emissions
// (`class<TAB>word<TAB>log10prob`).
void WriteClassLm(const std::string &prefix, const ClassLm &lm);
ClassLm ReadClassLm(const std::string &prefix);

// Linear interpolation lambda * a + (1 - lambda) * b.  Words known to only
// one component are scored by the other through its unknown-word mass.
class InterpolatedLm : public LanguageModel {
 public:
  InterpolatedLm(std::shared_ptr<const LanguageModel> a,
                 std::shared_ptr<const LanguageModel> b, double lambda);

  int order() const override;
  double LogProb(std::span<const std::string> history,
                 const std::string &word) const override;
  std::vector<std::string> PredictedVocab() const override;
  double lambda() const { return lambda_; }

 private:
  std::shared_ptr<const LanguageModel> a_, b_;
  double lambda_;
};

}  // namespace zrasr

#endif  // ZRASR_CLASSLM_CLASS_LM_H_

// include/zrasr/pipeline/config.h

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

#ifndef ZRASR_PIPELINE_CONFIG_H_
#define ZRASR_PIPELINE_CONFIG_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zrasr/fst/wfst.h"
#include "zrasr/lm/ngram-lm.h"
#include "zrasr/textprep/text-prep.h"

namespace zrasr {

enum class DecoderKind { kFst, kTrie, kLcs };
enum class ClassLmStrategy { kNone, kExpand, kSeed, kSupervised, kAugment };

const char *DecoderKindName(DecoderKind k);
const char *ClassLmStrategyName(ClassLmStrategy s);

struct PipelineConfig {
  std::string work_dir = "work";
  std::uint64_t seed = 1;
  int num_workers = 1;

  // Text and lexicon.
  std::string corpus;  // raw text, one line per sentence
  std::string g2p;
  std::string g2p_extra;  // loanword rules overriding `g2p`
  bool fold_case = true;
  CleanOptions clean;
  std::string stoplist;
  double bible_threshold = 0.3;
  std::size_t max_sentence_len = 0;  // 0: no segmentation
  std::string gazetteer;
  int gazetteer_copies = 12;

  // Language models.
  TrainOptions train;
  LMLimits limits;
  ClassLmStrategy class_lm = ClassLmStrategy::kNone;
  int num_clusters = 750;
  int brown_window = 0;
  double lambda = 0.5;
  std::string ne_classes;      // `word<TAB>type`
  std::string new_terms;       // one word per line
  std::string ne_annotations;  // spans over the cleaned corpus
  double augment_rate = 0.1;

  // Decoding.
  std::string input;  // confusion networks or phone lines
  bool input_is_phones = false;
  std::string phone_map;
  DecoderKind decoder = DecoderKind::kFst;
  bool static_graph = false;
  SizeBudget budget;
  double beam = kInfinity;
  double sil_penalty = kInfinity;
  std::string preferred_vocab;
  std::string soundex_classes;
  std::string phone_simplification;
  double shorter_match_bias = 0.0;
  double lcs_coverage = 0.8;
  std::size_t lcs_min_match = 2;
  std::string durations;  // seconds per utterance, one per line

  // Scoring.
  std::string reference;
  std::string cost_table;
  std::size_t variant_min_len = 6;
  double variant_cutoff = 1.5;
  double variant_threshold = 1.5;

  // Applies `key = value` settings; unknown keys and bad values throw
  // kValidation.
  void Set(const std::string &key, const std::string &value);
  void Apply(const std::map<std::string, std::string> &settings);

  // Checks enum choices, ranges and that every referenced file exists.
  void Validate() const;
  // As Validate, without requiring corpus, g2p and input; for single stages.
  void ValidateSettings() const;
  // Throws kValidation unless the path-valued `key` names an existing file.
  void Require(const std::string &key) const;
  std::string Get(const std::string &key) const;

  // Canonical `key = value` dump of the settings that affect a stage.
  std::string Describe(const std::string &stage) const;
};

std::vector<std::string> ConfigKeys();
bool IsPathKey(const std::string &key);

// `key = value` lines; '#' starts a comment.
std::map<std::string, std::string> ReadConfigFile(const std::string &path);

}  // namespace zrasr

#endif  // ZRASR_PIPELINE_CONFIG_H_

// include/zrasr/classlm/ne-augment.h

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

#ifndef ZRASR_CLASSLM_NE_AUGMENT_H_
#define ZRASR_CLASSLM_NE_AUGMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "zrasr/lm/ngram-lm.h"
#include "zrasr/textprep/text-prep.h"

namespace zrasr {

// Token span [start, end) of a named entity in one corpus sentence.
struct NeSpan {
  std::size_t sentence = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string type;
};

struct NeAnnotation {
  enum class Source { kGazetteerMatch, kRecognizerFile };
  std::vector<NeSpan> spans;
  Source source = Source::kRecognizerFile;

  // Throws kValidation unless every span is non-empty, inside its sentence,
  // and disjoint from the other spans of that sentence.
  void Validate(const CleanCorpus &corpus) const;
};

// `sentence_index<TAB>start<TAB>end<TAB>type`, 0-based, end exclusive.
NeAnnotation ReadNeAnnotation(const std::string &path);

// Exact-phrase matches of gazetteer entries, longest first, left to right.
NeAnnotation AnnotateWithGazetteer(const CleanCorpus &corpus, const Gazetteer &gaz);

struct NeAugmentResult {
  CleanCorpus corpus;
  // Source sentence index of every appended sentence, in order.
  std::vector<std::size_t> sources;
};

// Appends rate * |corpus| sentences (stochastically rounded) generated by
// copying a uniformly drawn NE-bearing sentence and replacing each span
// with a uniformly drawn gazetteer phrase of the same type.  Spans whose
// type has no gazetteer phrase are left alone.  Fully determined by `seed`.
NeAugmentResult AugmentNeData(const CleanCorpus &corpus, const NeAnnotation &annotation,
                              const Gazetteer &gazetteer, double rate,
                              std::uint64_t seed);

// 0.05, 0.10, ..., 0.50
std::vector<double> DefaultRateGrid();

struct RateSearchResult {
  double best_rate = 0.0;
  std::vector<std::pair<double, double>> objective;  // (rate, mean log10 ppl)
};

// Grid search for the augmentation rate: trains a trigram on each
// augmented corpus and minimizes the mean log perplexity over the
// NE-dense and general dev sets.
RateSearchResult TuneAugmentationRate(const CleanCorpus &corpus,
                                      const NeAnnotation &annotation,
                                      const Gazetteer &gazetteer,
                                      const CleanCorpus &dev_ne,
                                      const CleanCorpus &dev_general,
                                      const TrainOptions &train,
                                      std::uint64_t seed,
                                      const std::vector<double> &grid = DefaultRateGrid());


}  // namespace zrasr

#endif  // ZRASR_CLASSLM_NE_AUGMENT_H_

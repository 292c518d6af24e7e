// src/classlm/ne-augment.cc

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

#include "zrasr/classlm/ne-augment.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <spdlog/spdlog.h>

#include "zrasr/base/error.h"
#include "zrasr/base/rng.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {

void NeAnnotation::Validate(const CleanCorpus &corpus) const {
  std::map<std::size_t, std::vector<const NeSpan *>> by_sentence;
  for (const auto &span : spans) {
    if (span.sentence >= corpus.sentences.size())
      throw Error(ErrorKind::kValidation,
                  "NE span refers to sentence " + std::to_string(span.sentence) +
                      " of a " + std::to_string(corpus.sentences.size()) +
                      "-sentence corpus");
    if (span.start >= span.end ||
        span.end > corpus.sentences[span.sentence].size())
      throw Error(ErrorKind::kValidation,
                  "NE span [" + std::to_string(span.start) + ", " +
                      std::to_string(span.end) + ") out of bounds in sentence " +
                      std::to_string(span.sentence));
    by_sentence[span.sentence].push_back(&span);
  }
  for (auto &[s, list] : by_sentence) {
    std::sort(list.begin(), list.end(),
              [](const NeSpan *x, const NeSpan *y) { return x->start < y->start; });
    for (std::size_t i = 1; i < list.size(); ++i)
      if (list[i]->start < list[i - 1]->end)
        throw Error(ErrorKind::kValidation,
                    "overlapping NE spans in sentence " + std::to_string(s));
  }
}

NeAnnotation ReadNeAnnotation(const std::string &path) {
  NeAnnotation out;
  out.source = NeAnnotation::Source::kRecognizerFile;
  auto lines = ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = Trim(lines[i]);
    if (line.empty()) continue;
    auto f = SplitOn(line, '\t');
    if (f.size() != 4)
      throw Error(ErrorKind::kParse, path + ":" + std::to_string(i + 1) +
                                         ": expected sentence<TAB>start<TAB>end<TAB>type");
    long long s = ParseInt(f[0]), b = ParseInt(f[1]), e = ParseInt(f[2]);
    if (s < 0 || b < 0 || e < 0)
      throw Error(ErrorKind::kParse,
                  path + ":" + std::to_string(i + 1) + ": negative index");
    out.spans.push_back({static_cast<std::size_t>(s), static_cast<std::size_t>(b),
                         static_cast<std::size_t>(e), f[3]});
  }
  return out;
}

NeAnnotation AnnotateWithGazetteer(const CleanCorpus &corpus, const Gazetteer &gaz) {
  NeAnnotation out;
  out.source = NeAnnotation::Source::kGazetteerMatch;
  std::vector<const GazetteerEntry *> by_length;
  for (const auto &e : gaz.entries)
    if (!e.tag.empty()) by_length.push_back(&e);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [](const GazetteerEntry *x, const GazetteerEntry *y) {
                     return x->phrase.size() > y->phrase.size();
                   });
  for (std::size_t s = 0; s < corpus.sentences.size(); ++s) {
    const auto &sent = corpus.sentences[s];
    std::size_t pos = 0;
    while (pos < sent.size()) {
      const GazetteerEntry *hit = nullptr;
      for (const auto *e : by_length) {
        if (pos + e->phrase.size() > sent.size()) continue;
        if (std::equal(e->phrase.begin(), e->phrase.end(), sent.begin() + pos)) {
          hit = e;
          break;
        }
      }
      if (hit == nullptr) {
        ++pos;
        continue;
      }
      out.spans.push_back({s, pos, pos + hit->phrase.size(), hit->tag});
      pos += hit->phrase.size();
    }
  }
  return out;
}

NeAugmentResult AugmentNeData(const CleanCorpus &corpus, const NeAnnotation &annotation,
                              const Gazetteer &gazetteer, double rate,
                              std::uint64_t seed) {
  if (!(rate >= 0.0))
    throw Error(ErrorKind::kInvalidArgument, "augmentation rate must be non-negative");
  annotation.Validate(corpus);
  NeAugmentResult result;
  result.corpus = corpus;
  if (rate == 0.0) {
    result.corpus.RecountVocab();
    return result;
  }

  std::map<std::size_t, std::vector<NeSpan>> spans;
  for (const auto &span : annotation.spans) spans[span.sentence].push_back(span);
  if (spans.empty())
    throw Error(ErrorKind::kValidation,
                "augmentation requested but no sentence carries an NE annotation");
  std::vector<std::size_t> bearing;
  for (auto &[s, list] : spans) {
    std::sort(list.begin(), list.end(),
              [](const NeSpan &x, const NeSpan &y) { return x.start < y.start; });
    bearing.push_back(s);
  }
  std::map<std::string, std::vector<const Sentence *>> phrases;
  for (const auto &e : gazetteer.entries) phrases[e.tag].push_back(&e.phrase);

  Rng rng(seed);
  const double target = rate * static_cast<double>(corpus.sentences.size());
  double whole = std::floor(target);
  std::size_t count = static_cast<std::size_t>(whole);
  if (rng.Bernoulli(target - whole)) ++count;

  for (std::size_t i = 0; i < count; ++i) {
    std::size_t src = bearing[rng.UniformInt(bearing.size())];
    const Sentence &orig = corpus.sentences[src];
    Sentence generated;
    std::size_t pos = 0;
    for (const auto &span : spans[src]) {
      generated.insert(generated.end(), orig.begin() + pos, orig.begin() + span.start);
      auto it = phrases.find(span.type);
      if (it == phrases.end()) {
        generated.insert(generated.end(), orig.begin() + span.start,
                         orig.begin() + span.end);
      } else {
        const Sentence &p = *it->second[rng.UniformInt(it->second.size())];
        generated.insert(generated.end(), p.begin(), p.end());
      }
      pos = span.end;
    }
    generated.insert(generated.end(), orig.begin() + pos, orig.end());
    result.corpus.sentences.push_back(std::move(generated));
    result.sources.push_back(src);
  }
  result.corpus.RecountVocab();
  return result;
}

std::vector<double> DefaultRateGrid() {
  return {0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};
}

RateSearchResult TuneAugmentationRate(const CleanCorpus &corpus,
                                      const NeAnnotation &annotation,
                                      const Gazetteer &gazetteer,
                                      const CleanCorpus &dev_ne,
                                      const CleanCorpus &dev_general,
                                      const TrainOptions &train, std::uint64_t seed,
                                      const std::vector<double> &grid) {
  if (grid.empty()) throw Error(ErrorKind::kInvalidArgument, "empty rate grid");
  RateSearchResult result;
  double best = std::numeric_limits<double>::infinity();
  for (double rate : grid) {
    auto augmented = AugmentNeData(corpus, annotation, gazetteer, rate, seed);
    NgramLm lm = TrainNgramLm(augmented.corpus, train);
    double objective = 0.5 * (std::log10(Perplexity(lm, dev_ne.sentences)) +
                              std::log10(Perplexity(lm, dev_general.sentences)));
    spdlog::info("augmentation rate {}: mean log10 perplexity {:.5f}", rate, objective);
    result.objective.emplace_back(rate, objective);
    if (objective < best) {
      best = objective;
      result.best_rate = rate;
    }
  }
  return result;
}

}  // namespace zrasr

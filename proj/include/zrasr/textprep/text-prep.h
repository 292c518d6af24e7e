// include/zrasr/textprep/text-prep.h

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

#ifndef ZRASR_TEXTPREP_TEXT_PREP_H_
#define ZRASR_TEXTPREP_TEXT_PREP_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace zrasr {

using Sentence = std::vector<std::string>;

struct RawCorpus {
  std::vector<std::string> lines;
};

// Tokenized LM training text.  `vocab` always equals the token multiset of
// `sentences`; every mutating operation below ends with RecountVocab().
struct CleanCorpus {
  std::vector<Sentence> sentences;
  std::map<std::string, std::int64_t> vocab;

  void RecountVocab();
  std::size_t NumTokens() const;
};

enum class Casing { kKeepMixed, kLowercase, kTruecase };
enum class PunctuationPolicy { kKeep, kStrip, kSplit };
enum class ForeignGraphemeAction { kDropLine, kDropToken };

// Rewrite rule for clitic prefixes such as Kinyarwanda "n'".  kAttach glues a
// token equal to `prefix` onto the following token; kDetach splits a token
// starting with `prefix` into the prefix and the remainder.
struct PrefixRule {
  enum class Mode { kAttach, kDetach };
  std::string prefix;
  Mode mode = Mode::kAttach;
};

struct CleanOptions {
  Casing casing = Casing::kKeepMixed;
  PunctuationPolicy punctuation = PunctuationPolicy::kStrip;
  // Graphemes treated as punctuation.  Apostrophes are deliberately absent
  // from the default set: they are word-internal in many orthographies.
  std::set<std::string> punctuation_marks = DefaultPunctuation();
  ForeignGraphemeAction foreign_action = ForeignGraphemeAction::kDropLine;
  std::vector<PrefixRule> prefix_rules;
  int num_workers = 1;

  static std::set<std::string> DefaultPunctuation();
};

struct GazetteerEntry {
  Sentence phrase;
  std::string tag;
  bool operator==(const GazetteerEntry &other) const = default;
};

struct Gazetteer {
  std::vector<GazetteerEntry> entries;

  // Appends unless the (phrase, tag) pair is already present.  Empty phrases
  // are rejected.  Returns true when the entry was added.
  bool Add(GazetteerEntry entry);
  std::size_t size() const { return entries.size(); }
};

// Tokenizes, applies the punctuation, prefix and casing policies, and drops
// graphemes outside `alphabet` (whole lines or single tokens, per options).
// With kKeep/kSplit punctuation the configured marks join the alphabet.
// Throws kEmptyOutput when nothing survives, which usually means the corpus
// and the G2P table are in different scripts.
CleanCorpus CleanText(const RawCorpus &raw, const std::set<std::string> &alphabet,
                      const CleanOptions &opts);

// Removes sentences whose fraction of stoplist tokens is >= hit_threshold.
CleanCorpus CullBible(const CleanCorpus &corpus,
                      const std::set<std::string> &stoplist,
                      double hit_threshold);

// Splits each sentence after every boundary mark and after every max_len
// tokens.  Marks are removed, whether they stand alone or trail a token.
CleanCorpus SegmentSentences(const CleanCorpus &corpus, std::size_t max_len,
                             const std::set<std::string> &boundary_marks);

// Appends `copies` copies of every gazetteer phrase as extra sentences.
CleanCorpus AugmentGazetteer(const CleanCorpus &corpus, const Gazetteer &gaz,
                             int copies);

// Runs each phrase through CleanText; phrases that do not survive are dropped.
Gazetteer CleanGazetteer(const Gazetteer &gaz,
                         const std::set<std::string> &alphabet,
                         const CleanOptions &opts);

// I/O.  Corpus files hold one sentence per line, tokens separated by
// spaces.  Gazetteer lines are `phrase[<TAB>tag]`; stoplists one token per
// line.  Blank lines are skipped everywhere.
RawCorpus ReadRawCorpus(const std::string &path);
CleanCorpus ReadCorpus(const std::string &path);
void WriteCorpus(const std::string &path, const CleanCorpus &corpus);
Gazetteer ReadGazetteer(const std::string &path);
std::set<std::string> ReadStoplist(const std::string &path);
std::vector<PrefixRule> ParsePrefixRules(const std::string &spec);

}  // namespace zrasr

#endif  // ZRASR_TEXTPREP_TEXT_PREP_H_

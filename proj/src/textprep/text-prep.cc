// src/textprep/text-prep.cc

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

#include "zrasr/textprep/text-prep.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <optional>

#include "zrasr/base/error.h"
#include "zrasr/base/parallel.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {

void CleanCorpus::RecountVocab() {
  vocab.clear();
  for (const auto &sentence : sentences)
    for (const auto &token : sentence) ++vocab[token];
}

std::size_t CleanCorpus::NumTokens() const {
  std::size_t n = 0;
  for (const auto &sentence : sentences) n += sentence.size();
  return n;
}

std::set<std::string> CleanOptions::DefaultPunctuation() {
  return {".", ",", ";", ":", "!", "?", "\"", "(", ")", "[", "]", "{", "}",
          "«", "»", "“", "”", "„", "…", "–", "—", "-", "/", "*", "#", "|",
          "¿", "¡", "।", "؟", "،"};
}

bool Gazetteer::Add(GazetteerEntry entry) {
  if (entry.phrase.empty()) return false;
  if (std::find(entries.begin(), entries.end(), entry) != entries.end())
    return false;
  entries.push_back(std::move(entry));
  return true;
}

namespace {

Sentence ApplyPunctuation(const Sentence &tokens, const CleanOptions &opts) {
  if (opts.punctuation == PunctuationPolicy::kKeep) return tokens;
  Sentence out;
  for (const auto &token : tokens) {
    std::string current;
    for (const auto &g : SplitCodepoints(token)) {
      if (!opts.punctuation_marks.count(g)) {
        current += g;
        continue;
      }
      if (opts.punctuation == PunctuationPolicy::kSplit) {
        if (!current.empty()) out.push_back(std::move(current));
        current.clear();
        out.push_back(g);
      }
    }
    if (!current.empty()) out.push_back(std::move(current));
  }
  return out;
}

Sentence ApplyPrefixRules(const Sentence &tokens,
                          const std::vector<PrefixRule> &rules) {
  Sentence current = tokens;
  for (const auto &rule : rules) {
    if (rule.prefix.empty()) continue;
    Sentence next;
    for (std::size_t i = 0; i < current.size(); ++i) {
      const std::string &token = current[i];
      if (rule.mode == PrefixRule::Mode::kAttach) {
        if (token == rule.prefix && i + 1 < current.size()) {
          next.push_back(token + current[i + 1]);
          ++i;
        } else {
          next.push_back(token);
        }
      } else if (token.size() > rule.prefix.size() &&
                 token.compare(0, rule.prefix.size(), rule.prefix) == 0) {
        next.push_back(rule.prefix);
        next.push_back(token.substr(rule.prefix.size()));
      } else {
        next.push_back(token);
      }
    }
    current = std::move(next);
  }
  return current;
}

bool IsCovered(const std::string &token, const std::set<std::string> &alphabet) {
  for (const auto &g : SplitCodepoints(token))
    if (!alphabet.count(g)) return false;
  return true;
}

// Picks, for every lowercase form, its most frequent surface form.  Ties go
// to the all-lowercase spelling when it is among the tied forms, otherwise
// to the smallest form in byte order.
std::map<std::string, std::string> MajorityCasing(
    const std::vector<Sentence> &sentences) {
  std::map<std::string, std::map<std::string, std::int64_t>> counts;
  for (const auto &sentence : sentences)
    for (const auto &token : sentence) ++counts[ToLower(token)][token];
  std::map<std::string, std::string> best;
  for (const auto &[lower, forms] : counts) {
    std::int64_t top = 0;
    for (const auto &[form, n] : forms) top = std::max(top, n);
    std::optional<std::string> choice;
    for (const auto &[form, n] : forms) {
      if (n != top) continue;
      if (form == lower) {
        choice = form;
        break;
      }
      if (!choice) choice = form;
    }
    best[lower] = *choice;
  }
  return best;
}

}  // namespace

CleanCorpus CleanText(const RawCorpus &raw, const std::set<std::string> &alphabet,
                      const CleanOptions &opts) {
  if (alphabet.empty())
    throw Error(ErrorKind::kInvalidArgument, "clean_corpus: empty alphabet");
  std::set<std::string> allowed = alphabet;
  if (opts.punctuation != PunctuationPolicy::kStrip)
    allowed.insert(opts.punctuation_marks.begin(), opts.punctuation_marks.end());

  std::vector<Sentence> lines(raw.lines.size());
  ParallelFor(raw.lines.size(), opts.num_workers, [&](std::size_t i, int) {
    Sentence tokens = SplitWhitespace(raw.lines[i]);
    tokens = ApplyPunctuation(tokens, opts);
    tokens = ApplyPrefixRules(tokens, opts.prefix_rules);
    if (opts.casing == Casing::kLowercase)
      for (auto &token : tokens) token = ToLower(token);
    lines[i] = std::move(tokens);
  }, 256);

  if (opts.casing == Casing::kTruecase) {
    std::map<std::string, std::string> casing = MajorityCasing(lines);
    for (auto &tokens : lines)
      for (auto &token : tokens) token = casing.at(ToLower(token));
  }

  CleanCorpus out;
  std::size_t dropped_lines = 0, dropped_tokens = 0;
  for (auto &tokens : lines) {
    Sentence kept;
    bool drop_line = false;
    for (auto &token : tokens) {
      if (IsCovered(token, allowed)) {
        kept.push_back(std::move(token));
      } else if (opts.foreign_action == ForeignGraphemeAction::kDropLine) {
        drop_line = true;
        break;
      } else {
        ++dropped_tokens;
      }
    }
    if (drop_line) {
      ++dropped_lines;
      continue;
    }
    if (!kept.empty()) out.sentences.push_back(std::move(kept));
  }
  if (out.sentences.empty())
    throw Error(ErrorKind::kEmptyOutput,
                "clean_corpus: every line was discarded (" +
                    std::to_string(raw.lines.size()) +
                    " lines in); does the corpus use the G2P table's script?");
  spdlog::debug("clean_corpus: {} lines in, {} kept, {} lines and {} tokens "
                "dropped for foreign graphemes",
                raw.lines.size(), out.sentences.size(), dropped_lines,
                dropped_tokens);
  out.RecountVocab();
  return out;
}

CleanCorpus CullBible(const CleanCorpus &corpus,
                      const std::set<std::string> &stoplist,
                      double hit_threshold) {
  if (stoplist.empty())
    throw Error(ErrorKind::kInvalidArgument, "cull_bible: empty stoplist");
  if (!(hit_threshold > 0.0 && hit_threshold <= 1.0))
    throw Error(ErrorKind::kInvalidArgument,
                "cull_bible: hit threshold must lie in (0, 1]");
  CleanCorpus out;
  for (const auto &sentence : corpus.sentences) {
    std::size_t hits = 0;
    for (const auto &token : sentence) hits += stoplist.count(token);
    double fraction = sentence.empty()
                          ? 0.0
                          : static_cast<double>(hits) / sentence.size();
    if (fraction >= hit_threshold) continue;
    out.sentences.push_back(sentence);
  }
  out.RecountVocab();
  return out;
}

CleanCorpus SegmentSentences(const CleanCorpus &corpus, std::size_t max_len,
                             const std::set<std::string> &boundary_marks) {
  if (max_len < 1)
    throw Error(ErrorKind::kInvalidArgument, "segment_sentences: max_len < 1");
  CleanCorpus out;
  for (const auto &sentence : corpus.sentences) {
    Sentence current;
    auto flush = [&]() {
      if (!current.empty()) out.sentences.push_back(std::move(current));
      current.clear();
    };
    for (const auto &token : sentence) {
      // Peel trailing marks off the token; a token made only of marks is
      // a pure boundary.
      std::vector<std::string> graphemes = SplitCodepoints(token);
      std::size_t end = graphemes.size();
      while (end > 0 && boundary_marks.count(graphemes[end - 1])) --end;
      const bool boundary = end < graphemes.size();
      if (end > 0) {
        std::string word;
        for (std::size_t i = 0; i < end; ++i) word += graphemes[i];
        current.push_back(std::move(word));
        if (current.size() >= max_len) flush();
      }
      if (boundary) flush();
    }
    flush();
  }
  out.RecountVocab();
  return out;
}

CleanCorpus AugmentGazetteer(const CleanCorpus &corpus, const Gazetteer &gaz,
                             int copies) {
  if (copies < 1)
    throw Error(ErrorKind::kInvalidArgument, "augment_gazetteer: copies < 1");
  CleanCorpus out;
  out.sentences = corpus.sentences;
  out.sentences.reserve(corpus.sentences.size() + copies * gaz.size());
  for (int c = 0; c < copies; ++c)
    for (const auto &entry : gaz.entries) out.sentences.push_back(entry.phrase);
  out.RecountVocab();
  return out;
}

Gazetteer CleanGazetteer(const Gazetteer &gaz,
                         const std::set<std::string> &alphabet,
                         const CleanOptions &opts) {
  Gazetteer out;
  for (const auto &entry : gaz.entries) {
    RawCorpus raw{{Join(entry.phrase, " ")}};
    try {
      CleanCorpus cleaned = CleanText(raw, alphabet, opts);
      out.Add({cleaned.sentences.front(), entry.tag});
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::kEmptyOutput) throw;
    }
  }
  return out;
}

RawCorpus ReadRawCorpus(const std::string &path) {
  RawCorpus raw;
  for (auto &line : ReadLines(path))
    if (!Trim(line).empty()) raw.lines.push_back(std::move(line));
  return raw;
}

CleanCorpus ReadCorpus(const std::string &path) {
  CleanCorpus corpus;
  for (const auto &line : ReadLines(path)) {
    Sentence tokens = SplitWhitespace(line);
    if (!tokens.empty()) corpus.sentences.push_back(std::move(tokens));
  }
  corpus.RecountVocab();
  return corpus;
}

void WriteCorpus(const std::string &path, const CleanCorpus &corpus) {
  std::string text;
  for (const auto &sentence : corpus.sentences) {
    text += Join(sentence, " ");
    text += '\n';
  }
  WriteFile(path, text);
}

Gazetteer ReadGazetteer(const std::string &path) {
  Gazetteer gaz;
  std::size_t duplicates = 0;
  for (const auto &line : ReadLines(path)) {
    if (Trim(line).empty()) continue;
    std::vector<std::string> fields = SplitOn(line, '\t');
    GazetteerEntry entry;
    entry.phrase = SplitWhitespace(fields[0]);
    if (fields.size() > 1) entry.tag = Trim(fields[1]);
    if (entry.phrase.empty()) continue;
    if (!gaz.Add(std::move(entry))) ++duplicates;
  }
  if (duplicates > 0)
    spdlog::warn("gazetteer '{}': {} duplicate entries ignored", path, duplicates);
  return gaz;
}

std::set<std::string> ReadStoplist(const std::string &path) {
  std::set<std::string> stoplist;
  for (const auto &line : ReadLines(path))
    for (auto &token : SplitWhitespace(line)) stoplist.insert(std::move(token));
  if (stoplist.empty())
    throw Error(ErrorKind::kValidation, "stoplist '" + path + "' is empty");
  return stoplist;
}

std::vector<PrefixRule> ParsePrefixRules(const std::string &spec) {
  std::vector<PrefixRule> rules;
  if (Trim(spec).empty()) return rules;
  for (const auto &item : SplitOn(spec, ',')) {
    std::string field = Trim(item);
    std::size_t colon = field.find(':');
    if (colon == std::string::npos || colon + 1 == field.size())
      throw Error(ErrorKind::kParse,
                  "prefix rule '" + field + "' is not mode:prefix");
    std::string mode = field.substr(0, colon);
    PrefixRule rule;
    rule.prefix = field.substr(colon + 1);
    if (mode == "attach") {
      rule.mode = PrefixRule::Mode::kAttach;
    } else if (mode == "detach") {
      rule.mode = PrefixRule::Mode::kDetach;
    } else {
      throw Error(ErrorKind::kParse, "unknown prefix rule mode '" + mode + "'");
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

}  // namespace zrasr

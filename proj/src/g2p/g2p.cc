// src/g2p/g2p.cc

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

#include "zrasr/g2p/g2p.h"

#include <spdlog/spdlog.h>

#include <algorithm>

#include "zrasr/base/error.h"
#include "zrasr/base/parallel.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {

bool G2PTable::AddRule(const std::string &graphemes, PhoneSeq phones) {
  if (graphemes.empty())
    throw Error(ErrorKind::kInvalidArgument, "G2P rule with empty grapheme key");
  max_key_length_ = std::max(max_key_length_, CodepointLength(graphemes));
  auto [it, inserted] = rules_.insert_or_assign(graphemes, std::move(phones));
  return !inserted;
}

void G2PTable::Merge(const G2PTable &overrides) {
  for (const auto &[key, phones] : overrides.rules_) AddRule(key, phones);
}

std::set<std::string> G2PTable::Alphabet() const {
  std::set<std::string> alphabet;
  for (const auto &rule : rules_) {
    for (const auto &g : SplitCodepoints(rule.first)) {
      alphabet.insert(g);
      if (fold_case_)
        for (auto &v : CaseVariants(g)) alphabet.insert(std::move(v));
    }
  }
  return alphabet;
}

std::set<std::string> G2PTable::PhoneInventory() const {
  std::set<std::string> phones;
  for (const auto &rule : rules_) phones.insert(rule.second.begin(), rule.second.end());
  return phones;
}

PhoneSeq G2PTable::Apply(const std::string &word) const {
  const std::string folded = fold_case_ ? ToLower(word) : word;
  const std::vector<std::string> graphemes = SplitCodepoints(folded);
  PhoneSeq out;
  std::size_t pos = 0;
  while (pos < graphemes.size()) {
    std::size_t longest = std::min(max_key_length_, graphemes.size() - pos);
    bool matched = false;
    for (std::size_t len = longest; len >= 1; --len) {
      std::string key;
      for (std::size_t i = pos; i < pos + len; ++i) key += graphemes[i];
      auto it = rules_.find(key);
      if (it == rules_.end()) continue;
      out.insert(out.end(), it->second.begin(), it->second.end());
      pos += len;
      matched = true;
      break;
    }
    if (!matched) throw UncoveredGraphemeError(graphemes[pos], word);
  }
  return out;
}

G2PTable G2PTable::Read(const std::string &path) {
  G2PTable table;
  std::size_t line_no = 0;
  for (const auto &line : ReadLines(path)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string> fields = SplitOn(line, '\t');
    std::string key = fields[0];
    if (key.empty())
      throw Error(ErrorKind::kParse, path + ":" + std::to_string(line_no) +
                                         ": empty grapheme key");
    PhoneSeq phones;
    if (fields.size() > 1) phones = SplitWhitespace(fields[1]);
    if (table.AddRule(key, std::move(phones)))
      spdlog::warn("{}:{}: duplicate rule for '{}', last one wins", path,
                   line_no, key);
  }
  if (table.rules_.empty())
    throw Error(ErrorKind::kValidation, "G2P table '" + path + "' has no rules");
  return table;
}

bool Lexicon::Add(const std::string &word, PhoneSeq pron) {
  if (word.empty())
    throw Error(ErrorKind::kInvalidArgument, "lexicon entry with empty word");
  auto &prons = entries[word];
  if (std::find(prons.begin(), prons.end(), pron) != prons.end()) return false;
  prons.push_back(std::move(pron));
  return true;
}

std::set<std::string> Lexicon::PhoneInventory() const {
  std::set<std::string> phones;
  for (const auto &entry : entries)
    for (const auto &pron : entry.second) phones.insert(pron.begin(), pron.end());
  return phones;
}

std::size_t Lexicon::NumPronunciations() const {
  std::size_t n = 0;
  for (const auto &entry : entries) n += entry.second.size();
  return n;
}

LexiconBuildResult BuildLexicon(const std::set<std::string> &vocab,
                                const G2PTable &table, int num_workers) {
  if (vocab.empty())
    throw Error(ErrorKind::kInvalidArgument, "build_lexicon: empty vocabulary");
  std::vector<std::string> words(vocab.begin(), vocab.end());
  std::vector<PhoneSeq> prons(words.size());
  std::vector<std::string> reasons(words.size());
  ParallelFor(words.size(), num_workers, [&](std::size_t i, int) {
    try {
      prons[i] = table.Apply(words[i]);
      if (prons[i].empty()) reasons[i] = "empty-pronunciation";
    } catch (const UncoveredGraphemeError &e) {
      reasons[i] = "uncovered-grapheme:" + e.grapheme();
    }
  }, 512);

  LexiconBuildResult result;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (reasons[i].empty()) {
      result.lexicon.Add(words[i], std::move(prons[i]));
    } else {
      result.rejections.push_back({words[i], reasons[i]});
    }
  }
  if (result.lexicon.empty())
    throw Error(ErrorKind::kEmptyOutput,
                "build_lexicon: none of " + std::to_string(vocab.size()) +
                    " words is coverable by the G2P table");
  return result;
}

void PhoneMap::Set(const std::string &source, const std::string &target) {
  map_[source] = target;
}

const std::string &PhoneMap::Map(const std::string &source) const {
  auto it = map_.find(source);
  if (it == map_.end())
    throw Error(ErrorKind::kUnknownSymbol,
                "phone '" + source + "' is not in the phone map");
  return it->second;
}

PhoneMap PhoneMap::Identity(const std::set<std::string> &inventory) {
  PhoneMap pm;
  for (const auto &p : inventory) pm.Set(p, p);
  return pm;
}

PhoneMap PhoneMap::Read(const std::string &path) {
  PhoneMap pm;
  std::size_t line_no = 0;
  for (const auto &line : ReadLines(path)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string> fields = SplitWhitespace(line);
    if (fields.size() != 2)
      throw Error(ErrorKind::kParse, path + ":" + std::to_string(line_no) +
                                         ": expected 'src<TAB>dst'");
    if (pm.Contains(fields[0]))
      throw Error(ErrorKind::kParse, path + ":" + std::to_string(line_no) +
                                         ": phone '" + fields[0] +
                                         "' mapped twice");
    pm.Set(fields[0], fields[1]);
  }
  return pm;
}

PhoneSeq MapPhones(const PhoneSeq &seq, const PhoneMap &pm) {
  PhoneSeq out;
  out.reserve(seq.size());
  for (const auto &phone : seq) out.push_back(pm.Map(phone));
  return out;
}

Lexicon ReadLexicon(const std::string &path) {
  Lexicon lex;
  std::size_t line_no = 0;
  for (const auto &line : ReadLines(path)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string> fields = SplitOn(line, '\t');
    PhoneSeq pron;
    if (fields.size() >= 2) pron = SplitWhitespace(fields[1]);
    if (fields[0].empty() || pron.empty())
      throw Error(ErrorKind::kParse, path + ":" + std::to_string(line_no) +
                                         ": expected 'word<TAB>phones'");
    lex.Add(fields[0], std::move(pron));
  }
  return lex;
}

void WriteLexicon(const std::string &path, const Lexicon &lex) {
  std::string text;
  for (const auto &[word, prons] : lex.entries) {
    for (const auto &pron : prons) {
      text += word;
      text += '\t';
      text += Join(pron, " ");
      text += '\n';
    }
  }
  WriteFile(path, text);
}

void WriteRejections(const std::string &path,
                     const std::vector<LexiconRejection> &rejections) {
  std::string text;
  for (const auto &r : rejections) text += r.word + '\t' + r.reason + '\n';
  WriteFile(path, text);
}

}  // namespace zrasr

// src/matcher/pron-trie.cc

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

#include "zrasr/matcher/pron-trie.h"

#include "zrasr/base/error.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {

PronTrie PronTrie::Build(const Lexicon &lex) {
  if (lex.empty()) throw Error(ErrorKind::kInvalidArgument, "cannot build a trie from an empty lexicon");
  PronTrie trie;
  trie.nodes_.emplace_back();
  for (const auto &[word, prons] : lex.entries)
    for (const auto &pron : prons) {
      if (pron.empty()) continue;
      int cur = 0;
      for (const auto &phone : pron) {
        auto it = trie.nodes_[cur].children.find(phone);
        if (it != trie.nodes_[cur].children.end()) {
          cur = it->second;
        } else {
          int id = static_cast<int>(trie.nodes_.size());
          trie.nodes_[cur].children.emplace(phone, id);
          trie.nodes_.emplace_back();
          cur = id;
        }
      }
      trie.nodes_[cur].words.insert(word);
    }
  return trie;
}

int PronTrie::Child(int id, const std::string &phone) const {
  auto it = nodes_[id].children.find(phone);
  return it == nodes_[id].children.end() ? -1 : it->second;
}

std::set<std::string> PronTrie::Lookup(const PhoneSeq &phones) const {
  if (phones.empty()) return {};
  int cur = root();
  for (const auto &phone : phones) {
    cur = Child(cur, phone);
    if (cur < 0) return {};
  }
  return nodes_[cur].words;
}

SoundexClasses SoundexClasses::Identity(const std::set<std::string> &inventory) {
  SoundexClasses out;
  for (const auto &p : inventory) out.class_of_[p] = static_cast<int>(out.num_classes_++);
  return out;
}

SoundexClasses SoundexClasses::FromPartition(const std::vector<std::set<std::string>> &groups) {
  SoundexClasses out;
  for (const auto &group : groups) {
    if (group.empty()) continue;
    for (const auto &p : group)
      if (!out.class_of_.emplace(p, static_cast<int>(out.num_classes_)).second)
        throw Error(ErrorKind::kValidation, "phone '" + p + "' is in two soundex classes");
    ++out.num_classes_;
  }
  return out;
}

SoundexClasses SoundexClasses::Read(const std::string &path) {
  std::vector<std::set<std::string>> groups;
  for (const auto &line : ReadLines(path)) {
    auto phones = SplitWhitespace(line);
    if (!phones.empty()) groups.emplace_back(phones.begin(), phones.end());
  }
  return FromPartition(groups);
}

int SoundexClasses::Classify(const std::string &phone) const {
  auto it = class_of_.find(phone);
  if (it == class_of_.end())
    throw Error(ErrorKind::kUnknownSymbol, "phone '" + phone + "' has no soundex class");
  return it->second;
}

std::vector<PhoneSeq> ReadPhoneUtterances(const std::string &path) {
  std::vector<PhoneSeq> utts;
  for (const auto &line : ReadLines(path)) utts.push_back(SplitWhitespace(line));
  return utts;
}

void WriteWordHypotheses(const std::string &path,
                         const std::vector<std::vector<std::string>> &hyps) {
  std::string text;
  for (const auto &h : hyps) text += Join(h, " ") + "\n";
  WriteFile(path, text);
}

void WriteUnmatchedReport(const std::string &path, const std::vector<MatchResult> &results) {
  std::string text;
  for (std::size_t u = 0; u < results.size(); ++u)
    for (const auto &m : results[u].unmatched)
      text += std::to_string(u) + "\t" + std::to_string(m.position) + "\t" + m.phone + "\n";
  WriteFile(path, text);
}

}  // namespace zrasr

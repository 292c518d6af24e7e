// include/zrasr/g2p/g2p.h

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

#ifndef ZRASR_G2P_G2P_H_
#define ZRASR_G2P_G2P_H_

#include <map>
#include <set>
#include <string>
#include <vector>

namespace zrasr {

using PhoneSeq = std::vector<std::string>;

// Grapheme-to-phoneme rewrite table applied by greedy left-to-right
// longest match.  Keys are non-empty grapheme strings; values are phone
// sequences, possibly empty for silent graphemes.
class G2PTable {
 public:
  // Replaces any existing rule for `graphemes`.  Returns true if it did.
  bool AddRule(const std::string &graphemes, PhoneSeq phones);

  // Rules from `overrides` take precedence (loanword extensions).
  void Merge(const G2PTable &overrides);

  // When set, words are lowercased before matching, and the alphabet also
  // lists the upper/title-case variants of each key grapheme.
  void set_fold_case(bool fold) { fold_case_ = fold; }
  bool fold_case() const { return fold_case_; }

  // Single graphemes appearing in rule keys.
  std::set<std::string> Alphabet() const;
  std::set<std::string> PhoneInventory() const;

  // Throws UncoveredGraphemeError at the first position no key matches.
  PhoneSeq Apply(const std::string &word) const;

  const std::map<std::string, PhoneSeq> &rules() const { return rules_; }
  std::size_t max_key_length() const { return max_key_length_; }

  // `grapheme<TAB>phone phone ...` per line.  Duplicate keys: the last rule
  // wins and a warning is logged.
  static G2PTable Read(const std::string &path);

 private:
  std::map<std::string, PhoneSeq> rules_;
  std::size_t max_key_length_ = 0;  // in graphemes
  bool fold_case_ = false;
};

inline PhoneSeq ApplyG2p(const std::string &word, const G2PTable &table) {
  return table.Apply(word);
}

struct Lexicon {
  std::map<std::string, std::vector<PhoneSeq>> entries;

  // Ignores exact duplicate (word, pronunciation) pairs; returns true if added.
  bool Add(const std::string &word, PhoneSeq pron);
  std::set<std::string> PhoneInventory() const;
  std::size_t NumPronunciations() const;
  bool empty() const { return entries.empty(); }
};

struct LexiconRejection {
  std::string word;
  std::string reason;  // "uncovered-grapheme:<g>" or "empty-pronunciation"
};

struct LexiconBuildResult {
  Lexicon lexicon;
  std::vector<LexiconRejection> rejections;  // sorted by word
};

// One pronunciation per coverable word.  Entries and rejections partition
// `vocab`.  Throws kEmptyOutput if no word is coverable.
LexiconBuildResult BuildLexicon(const std::set<std::string> &vocab,
                                const G2PTable &table, int num_workers = 1);

// Many-to-one map from source phones to L-phones: the single-best-path
// reduction of the cross-language mismatch channel.
class PhoneMap {
 public:
  void Set(const std::string &source, const std::string &target);
  bool Contains(const std::string &source) const { return map_.count(source) > 0; }
  // Throws kUnknownSymbol for a phone outside the source inventory.
  const std::string &Map(const std::string &source) const;
  const std::map<std::string, std::string> &map() const { return map_; }
  bool empty() const { return map_.empty(); }

  static PhoneMap Identity(const std::set<std::string> &inventory);
  static PhoneMap Read(const std::string &path);  // `src<TAB>dst` per line

 private:
  std::map<std::string, std::string> map_;
};

PhoneSeq MapPhones(const PhoneSeq &seq, const PhoneMap &pm);

Lexicon ReadLexicon(const std::string &path);  // `word<TAB>phone phone ...`
void WriteLexicon(const std::string &path, const Lexicon &lex);
void WriteRejections(const std::string &path,
                     const std::vector<LexiconRejection> &rejections);

}  // namespace zrasr

#endif  // ZRASR_G2P_G2P_H_

// include/zrasr/matcher/pron-trie.h

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

#ifndef ZRASR_MATCHER_PRON_TRIE_H_
#define ZRASR_MATCHER_PRON_TRIE_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "zrasr/g2p/g2p.h"

namespace zrasr {

// Prefix tree over phones.  Node 0 is the root.
class PronTrie {
 public:
  struct Node {
    std::map<std::string, int> children;
    std::set<std::string> words;  // words whose pronunciation ends here
  };

  // Throws kInvalidArgument for an empty lexicon.
  static PronTrie Build(const Lexicon &lex);

  int root() const { return 0; }
  const Node &node(int id) const { return nodes_[id]; }
  std::size_t num_nodes() const { return nodes_.size(); }
  int Child(int id, const std::string &phone) const;  // -1 if absent

  // Words pronounced exactly `phones`; empty for the empty sequence.
  std::set<std::string> Lookup(const PhoneSeq &phones) const;

 private:
  std::vector<Node> nodes_;
};

// Partition of a phone inventory into equivalence classes.
class SoundexClasses {
 public:
  static SoundexClasses Identity(const std::set<std::string> &inventory);
  // Throws kValidation if a phone appears in two groups.
  static SoundexClasses FromPartition(const std::vector<std::set<std::string>> &groups);
  // One class per line, phones separated by spaces.
  static SoundexClasses Read(const std::string &path);

  bool empty() const { return class_of_.empty(); }
  bool Contains(const std::string &phone) const { return class_of_.count(phone) > 0; }
  // Throws kUnknownSymbol outside the inventory.
  int Classify(const std::string &phone) const;
  std::size_t num_classes() const { return num_classes_; }

 private:
  std::map<std::string, int> class_of_;
  std::size_t num_classes_ = 0;
};

inline int SoundexClassify(const std::string &phone, const SoundexClasses &classes) {
  return classes.Classify(phone);
}

struct UnmatchedPhone {
  std::size_t position = 0;
  std::string phone;
  bool operator==(const UnmatchedPhone &) const = default;
};

struct MatchResult {
  std::vector<std::string> words;
  std::vector<UnmatchedPhone> unmatched;
};

// One utterance per line, phones separated by whitespace.
std::vector<PhoneSeq> ReadPhoneUtterances(const std::string &path);
// Words of each result on one line.
void WriteWordHypotheses(const std::string &path,
                         const std::vector<std::vector<std::string>> &hyps);
// `utt_index<TAB>position<TAB>phone` per unmatched phone.
void WriteUnmatchedReport(const std::string &path, const std::vector<MatchResult> &results);

}  // namespace zrasr

#endif  // ZRASR_MATCHER_PRON_TRIE_H_

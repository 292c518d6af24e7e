// include/zrasr/matcher/trie-decoder.h

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

#ifndef ZRASR_MATCHER_TRIE_DECODER_H_
#define ZRASR_MATCHER_TRIE_DECODER_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "zrasr/matcher/pron-trie.h"

namespace zrasr {

struct TrieTunings {
  // Words known to the downstream consumer; preferred among homonyms.
  std::set<std::string> preferred_vocab;
  // Applied to input and trie phones before comparison; unmapped phones
  // pass through.
  PhoneMap phone_simplification;
  // Phones in one class match each other.  Empty means exact matching.
  SoundexClasses soundex_classes;
  std::map<std::string, std::int64_t> homonym_unigram;
  // Target distribution of word lengths in code points, indexed by length.
  // Empty disables the length bias.
  std::vector<double> target_length_dist;
  double shorter_match_bias = 0.0;
  std::uint64_t seed = 0;

  // Throws kValidation on a histogram not summing to 1 or a bias outside
  // [0, 1].
  void Validate() const;
};

// Greedy longest-match decoding.  Never fails: a position with no match
// is skipped and reported.
MatchResult TrieDecode(const PhoneSeq &phones, const PronTrie &trie,
                       const TrieTunings &tunings);

}  // namespace zrasr

#endif  // ZRASR_MATCHER_TRIE_DECODER_H_

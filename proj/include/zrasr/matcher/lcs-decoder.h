// include/zrasr/matcher/lcs-decoder.h

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

#ifndef ZRASR_MATCHER_LCS_DECODER_H_
#define ZRASR_MATCHER_LCS_DECODER_H_

#include <cstddef>

#include "zrasr/matcher/pron-trie.h"

namespace zrasr {

struct LcsParams {
  // Share of a pronunciation its common substring must cover.
  double coverage_threshold = 0.8;
  // Shortest substring worth matching; runs shorter than this are left over.
  std::size_t min_match_len = 2;
  // A candidate whose substring is at most relax_lcs shorter than the
  // global maximum wins when its residue is smaller by at least relax_gain.
  std::size_t relax_lcs = 1;
  std::size_t relax_gain = 2;
  int num_workers = 1;
};

// Longest common contiguous substring of two phone sequences.
struct CommonSubstring {
  std::size_t length = 0;
  std::size_t a_start = 0;
  std::size_t b_start = 0;
};
// Earliest occurrence in `a`, then earliest in `b`.
CommonSubstring LongestCommonSubstring(const PhoneSeq &a, const PhoneSeq &b);

std::size_t Levenshtein(const PhoneSeq &a, const PhoneSeq &b);

// Iterative longest-common-substring matching against every
// pronunciation, selecting by smallest Levenshtein residue.
MatchResult LcsDecode(const PhoneSeq &phones, const Lexicon &lex, const LcsParams &params);

}  // namespace zrasr

#endif  // ZRASR_MATCHER_LCS_DECODER_H_

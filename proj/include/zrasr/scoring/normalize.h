// include/zrasr/scoring/normalize.h

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

#ifndef ZRASR_SCORING_NORMALIZE_H_
#define ZRASR_SCORING_NORMALIZE_H_

#include <string>
#include <vector>

namespace zrasr {

// Lowercases, strips accents and removes punctuation.  Apostrophes survive
// only between other characters of the word, in their original code point.
std::string NormalizeWord(const std::string &word);

// Normalizes each token, dropping those that become empty.
std::vector<std::string> NormalizeTokens(const std::vector<std::string> &tokens);

}  // namespace zrasr

#endif  // ZRASR_SCORING_NORMALIZE_H_

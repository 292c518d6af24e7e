// include/zrasr/scoring/wer.h

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

#ifndef ZRASR_SCORING_WER_H_
#define ZRASR_SCORING_WER_H_

#include <cstddef>
#include <string>
#include <vector>

namespace zrasr {

struct WerReport {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t ref_tokens = 0;

  std::size_t errors() const { return substitutions + deletions + insertions; }
  double wer() const;  // may exceed 1
  WerReport &operator+=(const WerReport &other);
};

// Edit operation of one alignment column.
enum class EditOp { kMatch, kSubstitute, kDelete, kInsert };

// Minimum unit-cost alignment of hypothesis against reference.  Among
// optimal alignments the fewest insertions plus deletions win (so the most
// substitutions); remaining ties prefer, from the end backwards, a diagonal
// step, then a deletion, then an insertion.  Throws kInvalidArgument on an empty
// reference.
WerReport ComputeWer(const std::vector<std::string> &ref,
                     const std::vector<std::string> &hyp,
                     std::vector<EditOp> *alignment = nullptr);

// Sum over utterance pairs; the total reference must be non-empty.
WerReport CorpusWer(const std::vector<std::vector<std::string>> &refs,
                    const std::vector<std::vector<std::string>> &hyps);

// key=value lines: substitutions, deletions, insertions, ref_tokens,
// errors, wer (percent, one decimal), wer_fraction.
std::string FormatWerReport(const WerReport &report);

}  // namespace zrasr

#endif  // ZRASR_SCORING_WER_H_

// include/zrasr/fst/fst-builders.h

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

#ifndef ZRASR_FST_FST_BUILDERS_H_
#define ZRASR_FST_FST_BUILDERS_H_

#include <string>

#include "zrasr/fst/wfst.h"
#include "zrasr/g2p/g2p.h"
#include "zrasr/lm/ngram-lm.h"

namespace zrasr {

inline const std::string kSilencePhone = "SIL";

// Lexicon transducer: phones in, words out, closed under concatenation
// through the start state.  The word is emitted on the first arc of its
// pronunciation.  Homophones end with distinct #1, #2, ... input symbols.
// A finite `sil_penalty` adds a silence self-loop at the start state.
Wfst LexiconToFst(const Lexicon &lex, double sil_penalty = kInfinity,
                  const std::string &sil_phone = kSilencePhone);

// Grammar acceptor with one state per history, word arcs weighted by
// -log10 p, and failure arcs (#0) weighted by -log10 backoff.  Sentence
// end becomes the final weight.
Wfst LmToFst(const NgramLm &lm);

}  // namespace zrasr

#endif  // ZRASR_FST_FST_BUILDERS_H_

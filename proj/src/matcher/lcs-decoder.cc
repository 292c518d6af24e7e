// src/matcher/lcs-decoder.cc

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

#include "zrasr/matcher/lcs-decoder.h"

#include <algorithm>

#include "zrasr/base/parallel.h"

namespace zrasr {

CommonSubstring LongestCommonSubstring(const PhoneSeq &a, const PhoneSeq &b) {
  CommonSubstring best;
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : 0;
      if (cur[j] == 0) continue;
      std::size_t as = i - cur[j], bs = j - cur[j];
      if (cur[j] > best.length ||
          (cur[j] == best.length &&
           (as < best.a_start || (as == best.a_start && bs < best.b_start))))
        best = {cur[j], as, bs};
    }
    std::swap(prev, cur);
  }
  return best;
}

std::size_t Levenshtein(const PhoneSeq &a, const PhoneSeq &b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1,
                         prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

namespace {

struct Candidate {
  const std::string *word = nullptr;
  const PhoneSeq *pron = nullptr;
  std::size_t length = 0;     // common substring length
  std::size_t position = 0;   // start in the transcription
  std::size_t residue = 0;    // Levenshtein(substring, pronunciation)
  bool qualified = false;
};

// Better of two candidates at equal standing: smaller residue, longer
// pronunciation, then word order.
bool Preferred(const Candidate &x, const Candidate &y) {
  if (x.residue != y.residue) return x.residue < y.residue;
  if (x.pron->size() != y.pron->size()) return x.pron->size() > y.pron->size();
  if (*x.word != *y.word) return *x.word < *y.word;
  return x.position < y.position;
}

}  // namespace

MatchResult LcsDecode(const PhoneSeq &phones, const Lexicon &lex, const LcsParams &params) {
  std::vector<std::pair<const std::string *, const PhoneSeq *>> units;
  for (const auto &[word, prons] : lex.entries)
    for (const auto &pron : prons)
      if (!pron.empty()) units.emplace_back(&word, &pron);

  const std::size_t min_len = std::max<std::size_t>(params.min_match_len, 1);
  std::vector<bool> used(phones.size(), false);
  std::vector<std::pair<std::size_t, std::string>> matches;

  while (true) {
    // Unused contiguous runs long enough to host a match.
    std::vector<std::pair<std::size_t, PhoneSeq>> runs;
    for (std::size_t i = 0; i < phones.size();) {
      if (used[i]) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < phones.size() && !used[j]) ++j;
      if (j - i >= min_len)
        runs.emplace_back(i, PhoneSeq(phones.begin() + i, phones.begin() + j));
      i = j;
    }
    if (runs.empty()) break;

    std::vector<Candidate> cands(units.size());
    ParallelFor(units.size(), params.num_workers, [&](std::size_t u, int) {
      Candidate c;
      c.word = units[u].first;
      c.pron = units[u].second;
      for (const auto &[start, run] : runs) {
        CommonSubstring cs = LongestCommonSubstring(run, *c.pron);
        if (cs.length > c.length) {
          c.length = cs.length;
          c.position = start + cs.a_start;
          PhoneSeq sub(c.pron->begin() + cs.b_start,
                       c.pron->begin() + cs.b_start + cs.length);
          c.residue = Levenshtein(sub, *c.pron);
        }
      }
      c.qualified = c.length >= min_len &&
                    static_cast<double>(c.length) >=
                        params.coverage_threshold * static_cast<double>(c.pron->size());
      cands[u] = c;
    });

    std::size_t global = 0;
    for (const auto &c : cands)
      if (c.qualified) global = std::max(global, c.length);
    if (global == 0) break;

    const Candidate *winner = nullptr;
    for (const auto &c : cands)
      if (c.qualified && c.length == global && (!winner || Preferred(c, *winner)))
        winner = &c;
    const Candidate *relaxed = nullptr;
    for (const auto &c : cands) {
      if (!c.qualified || c.length >= global || c.length + params.relax_lcs < global)
        continue;
      if (c.residue + params.relax_gain > winner->residue) continue;
      if (!relaxed || c.residue < relaxed->residue ||
          (c.residue == relaxed->residue &&
           (c.length > relaxed->length ||
            (c.length == relaxed->length && Preferred(c, *relaxed)))))
        relaxed = &c;
    }
    if (relaxed) winner = relaxed;

    for (std::size_t i = 0; i < winner->length; ++i) used[winner->position + i] = true;
    matches.emplace_back(winner->position, *winner->word);
  }

  std::sort(matches.begin(), matches.end());
  MatchResult result;
  for (auto &[pos, word] : matches) result.words.push_back(std::move(word));
  for (std::size_t i = 0; i < phones.size(); ++i)
    if (!used[i]) result.unmatched.push_back({i, phones[i]});
  return result;
}

}  // namespace zrasr

// src/scoring/wer.cc

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

#include "zrasr/scoring/wer.h"

#include <algorithm>
#include <cstdio>
#include <utility>

#include "zrasr/base/error.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {

double WerReport::wer() const {
  return ref_tokens == 0 ? 0.0 : static_cast<double>(errors()) / ref_tokens;
}

WerReport &WerReport::operator+=(const WerReport &other) {
  substitutions += other.substitutions;
  deletions += other.deletions;
  insertions += other.insertions;
  ref_tokens += other.ref_tokens;
  return *this;
}

WerReport ComputeWer(const std::vector<std::string> &ref,
                     const std::vector<std::string> &hyp, std::vector<EditOp> *alignment) {
  if (ref.empty()) throw Error(ErrorKind::kInvalidArgument, "empty reference");
  const std::size_t n = ref.size(), m = hyp.size();
  // Cost is (errors, insertions + deletions): among minimal alignments,
  // substitutions beat insert/delete pairs.
  using Cost = std::pair<std::size_t, std::size_t>;
  auto plus = [](Cost c, std::size_t e, std::size_t indel) {
    return Cost(c.first + e, c.second + indel);
  };
  std::vector<std::vector<Cost>> d(n + 1, std::vector<Cost>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = Cost(i, i);
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = Cost(j, j);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      d[i][j] = std::min({plus(d[i - 1][j - 1], ref[i - 1] == hyp[j - 1] ? 0 : 1, 0),
                          plus(d[i - 1][j], 1, 1), plus(d[i][j - 1], 1, 1)});

  WerReport report;
  report.ref_tokens = n;
  std::vector<EditOp> ops;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      bool same = ref[i - 1] == hyp[j - 1];
      if (d[i][j] == plus(d[i - 1][j - 1], same ? 0 : 1, 0)) {
        ops.push_back(same ? EditOp::kMatch : EditOp::kSubstitute);
        report.substitutions += !same;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && d[i][j] == plus(d[i - 1][j], 1, 1)) {
      ops.push_back(EditOp::kDelete);
      ++report.deletions;
      --i;
    } else {
      ops.push_back(EditOp::kInsert);
      ++report.insertions;
      --j;
    }
  }
  if (alignment != nullptr) alignment->assign(ops.rbegin(), ops.rend());
  return report;
}

WerReport CorpusWer(const std::vector<std::vector<std::string>> &refs,
                    const std::vector<std::vector<std::string>> &hyps) {
  if (refs.size() != hyps.size())
    throw Error(ErrorKind::kValidation,
                "reference has " + std::to_string(refs.size()) + " utterances, hypothesis " +
                    std::to_string(hyps.size()));
  WerReport total;
  for (std::size_t u = 0; u < refs.size(); ++u) {
    if (refs[u].empty()) {
      total.insertions += hyps[u].size();
      continue;
    }
    total += ComputeWer(refs[u], hyps[u]);
  }
  if (total.ref_tokens == 0) throw Error(ErrorKind::kInvalidArgument, "empty reference");
  return total;
}

std::string FormatWerReport(const WerReport &r) {
  std::string out;
  out += "substitutions=" + std::to_string(r.substitutions) + "\n";
  out += "deletions=" + std::to_string(r.deletions) + "\n";
  out += "insertions=" + std::to_string(r.insertions) + "\n";
  out += "ref_tokens=" + std::to_string(r.ref_tokens) + "\n";
  out += "errors=" + std::to_string(r.errors()) + "\n";
  char pct[64];
  std::snprintf(pct, sizeof(pct), "%.1f%%", 100.0 * r.wer());
  out += std::string("wer=") + pct + "\n";
  out += "wer_fraction=" + FormatDouble(r.wer()) + "\n";
  return out;
}

}  // namespace zrasr

// src/scoring/weighted-edit-distance.cc

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

#include "zrasr/scoring/weighted-edit-distance.h"

#include <algorithm>

#include "zrasr/base/error.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {

namespace {

constexpr std::size_t kReweightLimit = 3;

bool IsNasal(const std::string &x) { return x == "m" || x == "n" || x == "ng"; }

bool IsConsonant(const std::string &x, const CostTable &costs) {
  if (x.empty() || costs.vowels.count(x) || IsApostrophe(x)) return false;
  return x == "ng" || IsLetter(x);
}

std::vector<std::vector<std::size_t>> DistanceTable(const std::vector<std::string> &a,
                                                    const std::vector<std::string> &b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1), d[i - 1][j] + 1,
                          d[i][j - 1] + 1});
  return d;
}

// Cheapest reweighted script among the minimal-length ones, by dynamic
// programming over the moves that lie on some optimal alignment.
double CheapestMinimalScript(const std::vector<std::string> &a,
                             const std::vector<std::string> &b, const CostTable &costs) {
  const std::size_t n = a.size(), m = b.size();
  auto fwd = DistanceTable(a, b);
  std::vector<std::string> ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
  auto bwd = DistanceTable(ra, rb);  // bwd[n-i][m-j] = distance of suffixes
  const std::size_t total = fwd[n][m];
  auto on_path = [&](std::size_t i, std::size_t j) {
    return fwd[i][j] + bwd[n - i][m - j] == total;
  };
  auto at = [](const std::vector<std::string> &s, std::ptrdiff_t k) -> std::string {
    return k < 0 || k >= static_cast<std::ptrdiff_t>(s.size()) ? std::string() : s[k];
  };

  std::vector<std::vector<double>> best(n + 1, std::vector<double>(m + 1, kReweightLimit * 2.0));
  best[0][0] = 0.0;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= m; ++j) {
      if (!on_path(i, j) || (i == 0 && j == 0)) continue;
      double v = best[i][j];
      if (i > 0 && j > 0 && on_path(i - 1, j - 1)) {
        bool same = a[i - 1] == b[j - 1];
        if (fwd[i][j] == fwd[i - 1][j - 1] + (same ? 0 : 1))
          v = std::min(v, best[i - 1][j - 1] +
                              (same ? 0.0 : SubstituteCost(a[i - 1], b[j - 1], costs)));
      }
      if (i > 0 && on_path(i - 1, j) && fwd[i][j] == fwd[i - 1][j] + 1) {
        auto k = static_cast<std::ptrdiff_t>(i - 1);
        v = std::min(v, best[i - 1][j] +
                            InsertDeleteCost(a[i - 1], at(a, k - 1), at(a, k + 1), costs));
      }
      if (j > 0 && on_path(i, j - 1) && fwd[i][j] == fwd[i][j - 1] + 1) {
        auto k = static_cast<std::ptrdiff_t>(j - 1);
        v = std::min(v, best[i][j - 1] +
                            InsertDeleteCost(b[j - 1], at(b, k - 1), at(b, k + 1), costs));
      }
      best[i][j] = v;
    }
  return best[n][m];
}

}  // namespace

void CostTable::Validate() const {
  for (double c : {apostrophe_indel, apostrophe_sub, vowel_insert_between_consonants,
                   vowel_append, vowel_prepend_before_consonant, vowel_sub, l_r_sub, nasal_sub})
    if (!(c > 0.0 && c <= 1.0))
      throw Error(ErrorKind::kValidation, "edit cost outside (0, 1]: " + FormatDouble(c));
  if (vowels.empty()) throw Error(ErrorKind::kValidation, "empty vowel set");
}

CostTable CostTable::Read(const std::string &path) {
  CostTable t;
  const std::pair<const char *, double *> fields[] = {
      {"apostrophe_indel", &t.apostrophe_indel},
      {"apostrophe_sub", &t.apostrophe_sub},
      {"vowel_insert_between_consonants", &t.vowel_insert_between_consonants},
      {"vowel_append", &t.vowel_append},
      {"vowel_prepend_before_consonant", &t.vowel_prepend_before_consonant},
      {"vowel_sub", &t.vowel_sub},
      {"l_r_sub", &t.l_r_sub},
      {"nasal_sub", &t.nasal_sub},
  };
  auto lines = ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = Trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    auto f = SplitOn(line, '\t');
    std::string where = path + ":" + std::to_string(i + 1);
    if (f.size() != 2) throw Error(ErrorKind::kParse, where + ": expected rule_name<TAB>cost");
    if (f[0] == "vowels") {
      auto v = SplitWhitespace(f[1]);
      t.vowels = {v.begin(), v.end()};
      continue;
    }
    bool found = false;
    for (const auto &[name, field] : fields)
      if (f[0] == name) {
        *field = ParseDouble(f[1]);
        found = true;
      }
    if (!found) throw Error(ErrorKind::kParse, where + ": unknown rule '" + f[0] + "'");
  }
  t.Validate();
  return t;
}

double InsertDeleteCost(const std::string &x, const std::string &left,
                        const std::string &right, const CostTable &costs) {
  double c = 1.0;
  if (IsApostrophe(x)) c = std::min(c, costs.apostrophe_indel);
  if (costs.vowels.count(x)) {
    if (IsConsonant(left, costs) && IsConsonant(right, costs))
      c = std::min(c, costs.vowel_insert_between_consonants);
    if (right.empty() && !left.empty()) c = std::min(c, costs.vowel_append);
    if (left.empty() && IsConsonant(right, costs))
      c = std::min(c, costs.vowel_prepend_before_consonant);
  }
  return c;
}

double SubstituteCost(const std::string &x, const std::string &y, const CostTable &costs) {
  if (x == y) return 0.0;
  double c = 1.0;
  if (IsApostrophe(x) && IsApostrophe(y)) c = std::min(c, costs.apostrophe_sub);
  if (costs.vowels.count(x) && costs.vowels.count(y)) c = std::min(c, costs.vowel_sub);
  if ((x == "l" && y == "r") || (x == "r" && y == "l")) c = std::min(c, costs.l_r_sub);
  if (IsNasal(x) && IsNasal(y)) c = std::min(c, costs.nasal_sub);
  return c;
}

std::vector<std::string> TokenizeUnits(const std::string &word) {
  auto cps = SplitCodepoints(word);
  std::vector<std::string> units;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] == "n" && i + 1 < cps.size() && cps[i + 1] == "g") {
      units.push_back("ng");
      ++i;
    } else {
      units.push_back(cps[i]);
    }
  }
  return units;
}

std::size_t PlainEditDistance(const std::string &a, const std::string &b) {
  auto ca = SplitCodepoints(a), cb = SplitCodepoints(b);
  return DistanceTable(ca, cb)[ca.size()][cb.size()];
}

std::size_t BoundedEditDistance(const std::vector<std::string> &a,
                                const std::vector<std::string> &b, std::size_t limit) {
  const std::size_t n = a.size(), m = b.size();
  if ((n > m ? n - m : m - n) >= limit) return limit;
  // Only cells within `limit` of the diagonal can stay below the limit.
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = std::min(j, limit);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t lo = i > limit ? i - limit : 0, hi = std::min(m, i + limit);
    std::size_t row_min = limit;
    std::fill(cur.begin(), cur.end(), limit);
    if (lo == 0) cur[0] = std::min(i, limit);
    for (std::size_t j = std::max<std::size_t>(lo, 1); j <= hi; ++j) {
      std::size_t v = std::min({prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1), prev[j] + 1,
                                cur[j - 1] + 1});
      cur[j] = std::min(v, limit);
    }
    for (std::size_t j = lo; j <= hi; ++j) row_min = std::min(row_min, cur[j]);
    if (row_min >= limit) return limit;
    std::swap(prev, cur);
  }
  return std::min(prev[m], limit);
}

double WeightedEditDistance(const std::string &a, const std::string &b,
                            const CostTable &costs) {
  auto ca = SplitCodepoints(a), cb = SplitCodepoints(b);
  const std::size_t d = BoundedEditDistance(ca, cb, kReweightLimit);
  if (d >= kReweightLimit) return static_cast<double>(PlainEditDistance(a, b));
  if (d == 0) return 0.0;
  double best = std::min(static_cast<double>(d), CheapestMinimalScript(ca, cb, costs));
  auto ua = TokenizeUnits(a), ub = TokenizeUnits(b);
  if (ua.size() != ca.size() || ub.size() != cb.size())
    if (BoundedEditDistance(ua, ub, kReweightLimit) < kReweightLimit)
      best = std::min(best, CheapestMinimalScript(ua, ub, costs));
  return best;
}

}  // namespace zrasr

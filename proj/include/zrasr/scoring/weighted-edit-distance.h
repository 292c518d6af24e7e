// include/zrasr/scoring/weighted-edit-distance.h

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

#ifndef ZRASR_SCORING_WEIGHTED_EDIT_DISTANCE_H_
#define ZRASR_SCORING_WEIGHTED_EDIT_DISTANCE_H_

#include <set>
#include <string>
#include <vector>

namespace zrasr {

// Reduced costs for particular edits.  Insertion rules apply equally to
// the mirror deletion.
struct CostTable {
  double apostrophe_indel = 0.05;
  double apostrophe_sub = 0.05;
  double vowel_insert_between_consonants = 0.1;
  double vowel_append = 0.4;
  double vowel_prepend_before_consonant = 0.8;
  double vowel_sub = 0.5;
  double l_r_sub = 0.15;
  double nasal_sub = 0.3;  // among m, n and ng
  std::set<std::string> vowels{"a", "e", "i", "o", "u"};

  // `rule_name<TAB>cost` per line, rule names as the fields above; unlisted
  // rules keep their defaults.  Costs must lie in (0, 1].
  static CostTable Read(const std::string &path);
  void Validate() const;
};

// Plain unit-cost Levenshtein distance over code points.
std::size_t PlainEditDistance(const std::string &a, const std::string &b);

// Plain distance if below `limit`, otherwise any value >= limit.
std::size_t BoundedEditDistance(const std::vector<std::string> &a,
                                const std::vector<std::string> &b, std::size_t limit);

// Reweighted distance.  For plain distance d >= 3 this is d.  Otherwise it
// is the cheapest minimal-length edit script under the cost table, taken
// over code points and over units with "ng" fused, and never above d.
double WeightedEditDistance(const std::string &a, const std::string &b,
                            const CostTable &costs = CostTable());

// Code points with "ng" fused into one unit.
std::vector<std::string> TokenizeUnits(const std::string &word);

// Cost of one edit given neighbouring units (empty string at a word edge).
// For an insertion or deletion, `left`/`right` flank `x` in the word that
// contains it.
double InsertDeleteCost(const std::string &x, const std::string &left,
                        const std::string &right, const CostTable &costs);
double SubstituteCost(const std::string &x, const std::string &y, const CostTable &costs);

}  // namespace zrasr

#endif  // ZRASR_SCORING_WEIGHTED_EDIT_DISTANCE_H_

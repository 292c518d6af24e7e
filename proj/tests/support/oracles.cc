// tests/support/oracles.cc

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

#include "support/oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "zrasr/base/text-utils.h"

namespace zrasr {
namespace testing {

namespace {

const std::string kBosToken = "<s>";
const std::string kEosToken = "</s>";
const std::string kUnkToken = "<unk>";

std::vector<std::string> Framed(const std::vector<std::string> &sentence) {
  std::vector<std::string> seq{kBosToken};
  seq.insert(seq.end(), sentence.begin(), sentence.end());
  seq.push_back(kEosToken);
  return seq;
}

}  // namespace

KneserNeyOracle::KneserNeyOracle(const std::vector<std::vector<std::string>> &sentences,
                                 int order, double discount, double unk_floor)
    : order_(order), discount_(discount), unk_floor_(unk_floor) {
  std::map<int, std::map<Gram, double>> raw;
  for (const auto &s : sentences) {
    for (const auto &w : s) words_.insert(w);
    auto seq = Framed(s);
    for (std::size_t i = 1; i < seq.size(); ++i)
      for (int n = 1; n <= order && static_cast<std::size_t>(n) <= i + 1; ++n)
        raw[n][Gram(seq.begin() + (i + 1 - n), seq.begin() + i + 1)] += 1.0;
  }
  counts_[order] = raw[order];
  for (int n = order - 1; n >= 1; --n) {
    std::map<Gram, std::set<std::string>> left_contexts;
    for (const auto &[g, c] : raw[n + 1])
      left_contexts[Gram(g.begin() + 1, g.end())].insert(g.front());
    for (const auto &[g, lefts] : left_contexts) counts_[n][g] = lefts.size();
    for (const auto &[g, c] : raw[n])
      if (g.front() == kBosToken) counts_[n][g] = c;
  }
}

std::vector<std::string> KneserNeyOracle::Vocab() const {
  std::vector<std::string> v(words_.begin(), words_.end());
  v.push_back(kEosToken);
  v.push_back(kUnkToken);
  return v;
}

double KneserNeyOracle::ProbN(std::vector<std::string> context, const std::string &word,
                              int n) const {
  if (n == 1) {
    if (word == kUnkToken) return unk_floor_;
    double total = 0.0;
    for (const auto &[g, c] : counts_.at(1)) total += c;
    auto it = counts_.at(1).find(Gram{word});
    double c = it == counts_.at(1).end() ? 0.0 : it->second;
    return (1.0 - unk_floor_) * c / total;
  }
  double context_total = 0.0, types = 0.0, c = 0.0;
  for (const auto &[g, count] : counts_.at(n)) {
    if (!std::equal(context.begin(), context.end(), g.begin())) continue;
    context_total += count;
    types += 1.0;
    if (g.back() == word) c = count;
  }
  std::vector<std::string> shorter(context.begin() + 1, context.end());
  double lower = ProbN(shorter, word, n - 1);
  if (context_total == 0.0) return lower;
  return (std::max(c - discount_, 0.0) + discount_ * types * lower) / context_total;
}

double KneserNeyOracle::Prob(const std::vector<std::string> &history,
                             const std::string &word) const {
  auto known = [&](const std::string &w) {
    return (words_.count(w) || w == kBosToken || w == kEosToken) ? w : kUnkToken;
  };
  std::vector<std::string> context;
  std::size_t keep = std::min<std::size_t>(history.size(), order_ - 1);
  for (std::size_t i = history.size() - keep; i < history.size(); ++i)
    context.push_back(known(history[i]));
  return ProbN(context, known(word), static_cast<int>(context.size()) + 1);
}

double MleTrigramProb(const std::vector<std::vector<std::string>> &sentences,
                      const std::vector<std::string> &history, const std::string &word) {
  double joint = 0.0, context = 0.0;
  for (const auto &s : sentences) {
    auto seq = Framed(s);
    for (std::size_t i = history.size(); i < seq.size(); ++i) {
      if (!std::equal(history.begin(), history.end(), seq.begin() + (i - history.size())))
        continue;
      context += 1.0;
      if (seq[i] == word) joint += 1.0;
    }
  }
  return context == 0.0 ? std::nan("") : joint / context;
}

WerOracleResult ExhaustiveWer(const std::vector<std::string> &ref,
                              const std::vector<std::string> &hyp) {
  WerOracleResult best{std::numeric_limits<std::size_t>::max(), 0};
  std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)> walk =
      [&](std::size_t i, std::size_t j, std::size_t errors, std::size_t subs) {
        if (i == ref.size() && j == hyp.size()) {
          if (errors < best.min_errors) {
            best = {errors, subs};
          } else if (errors == best.min_errors) {
            best.max_substitutions = std::max(best.max_substitutions, subs);
          }
          return;
        }
        if (i < ref.size() && j < hyp.size()) {
          bool same = ref[i] == hyp[j];
          walk(i + 1, j + 1, errors + !same, subs + !same);
        }
        if (i < ref.size()) walk(i + 1, j, errors + 1, subs);
        if (j < hyp.size()) walk(i, j + 1, errors + 1, subs);
      };
  walk(0, 0, 0, 0);
  return best;
}

namespace {

// The variant-spelling cost rules, restated independently.
bool OracleApostrophe(const std::string &x) {
  static const std::set<std::string> marks = {"'", "’", "‘", "ʼ", "`", "´"};
  return marks.count(x) > 0;
}

bool OracleVowel(const std::string &x) {
  return x == "a" || x == "e" || x == "i" || x == "o" || x == "u";
}

bool OracleConsonant(const std::string &x) {
  if (x.empty() || OracleVowel(x) || OracleApostrophe(x)) return false;
  return x == "ng" || IsLetter(x);
}

double OracleSubstitute(const std::string &x, const std::string &y) {
  auto nasal = [](const std::string &s) { return s == "m" || s == "n" || s == "ng"; };
  if (OracleApostrophe(x) && OracleApostrophe(y)) return 0.05;
  if (OracleVowel(x) && OracleVowel(y)) return 0.5;
  if ((x == "l" && y == "r") || (x == "r" && y == "l")) return 0.15;
  if (nasal(x) && nasal(y)) return 0.3;
  return 1.0;
}

double OracleIndel(const std::string &x, const std::string &left, const std::string &right) {
  if (OracleApostrophe(x)) return 0.05;
  if (!OracleVowel(x)) return 1.0;
  double cost = 1.0;
  if (OracleConsonant(left) && OracleConsonant(right)) cost = std::min(cost, 0.1);
  if (right.empty() && !left.empty()) cost = std::min(cost, 0.4);
  if (left.empty() && OracleConsonant(right)) cost = std::min(cost, 0.8);
  return cost;
}

std::vector<std::string> OracleUnits(const std::string &word) {
  std::vector<std::string> cps = SplitCodepoints(word), units;
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

// Cheapest reweighted script among all scripts of exactly `budget` unit
// edits, by explicit enumeration.
double CheapestEnumerated(const std::vector<std::string> &a, const std::vector<std::string> &b,
                          std::size_t budget) {
  auto at = [](const std::vector<std::string> &s, std::ptrdiff_t k) {
    return k < 0 || k >= static_cast<std::ptrdiff_t>(s.size()) ? std::string() : s[k];
  };
  double best = kInfinity;
  std::function<void(std::size_t, std::size_t, std::size_t, double)> walk =
      [&](std::size_t i, std::size_t j, std::size_t used, double cost) {
        if (used > budget) return;
        std::size_t ra = a.size() - i, rb = b.size() - j;
        if (used + (ra > rb ? ra - rb : rb - ra) > budget) return;
        if (i == a.size() && j == b.size()) {
          if (used == budget) best = std::min(best, cost);
          return;
        }
        if (i < a.size() && j < b.size()) {
          if (a[i] == b[j]) {
            walk(i + 1, j + 1, used, cost);
          } else {
            walk(i + 1, j + 1, used + 1, cost + OracleSubstitute(a[i], b[j]));
          }
        }
        if (i < a.size()) {
          auto k = static_cast<std::ptrdiff_t>(i);
          walk(i + 1, j, used + 1, cost + OracleIndel(a[i], at(a, k - 1), at(a, k + 1)));
        }
        if (j < b.size()) {
          auto k = static_cast<std::ptrdiff_t>(j);
          walk(i, j + 1, used + 1, cost + OracleIndel(b[j], at(b, k - 1), at(b, k + 1)));
        }
      };
  walk(0, 0, 0, 0.0);
  return best;
}

}  // namespace

std::size_t NaiveLevenshtein(const std::vector<std::string> &a,
                             const std::vector<std::string> &b) {
  std::function<std::size_t(std::size_t, std::size_t)> rec;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  rec = [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::size_t v = std::min({rec(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1), rec(i + 1, j) + 1,
                              rec(i, j + 1) + 1});
    memo[key] = v;
    return v;
  };
  return rec(0, 0);
}

double EnumeratedWeightedDistance(const std::string &a, const std::string &b) {
  auto ca = SplitCodepoints(a), cb = SplitCodepoints(b);
  std::size_t d = NaiveLevenshtein(ca, cb);
  if (d >= 3 || d == 0) return static_cast<double>(d);
  double best = std::min(static_cast<double>(d), CheapestEnumerated(ca, cb, d));
  auto ua = OracleUnits(a), ub = OracleUnits(b);
  if (ua != ca || ub != cb) {
    std::size_t du = NaiveLevenshtein(ua, ub);
    if (du < 3) best = std::min(best, CheapestEnumerated(ua, ub, du));
  }
  return best;
}

namespace {

template <typename Visit>
void WalkPaths(const Wfst &fst, std::size_t max_arcs, Visit visit) {
  std::vector<std::string> in, out;
  std::function<void(StateId, double, std::size_t)> walk = [&](StateId s, double w,
                                                               std::size_t depth) {
    if (fst.IsFinal(s)) visit(in, out, w + fst.Final(s));
    if (depth == max_arcs) return;
    for (const Arc &arc : fst.Arcs(s)) {
      if (arc.ilabel != kEpsilon) in.push_back(fst.isyms()->Symbol(arc.ilabel));
      if (arc.olabel != kEpsilon) out.push_back(fst.osyms()->Symbol(arc.olabel));
      walk(arc.nextstate, w + arc.weight, depth + 1);
      if (arc.ilabel != kEpsilon) in.pop_back();
      if (arc.olabel != kEpsilon) out.pop_back();
    }
  };
  if (fst.start() != kNoState) walk(fst.start(), 0.0, 0);
}

}  // namespace

Relation EnumerateRelation(const Wfst &fst, std::size_t max_arcs) {
  Relation rel;
  WalkPaths(fst, max_arcs, [&](const auto &in, const auto &out, double w) {
    auto key = std::make_pair(in, out);
    auto it = rel.find(key);
    if (it == rel.end() || w < it->second) rel[key] = w;
  });
  return rel;
}

PathOracleResult EnumerateShortestPath(const Wfst &fst, std::size_t max_arcs) {
  std::vector<std::pair<double, std::vector<std::string>>> all;
  WalkPaths(fst, max_arcs,
            [&](const auto &, const auto &out, double w) { all.emplace_back(w, out); });
  PathOracleResult r;
  for (const auto &[w, out] : all) r.weight = std::min(r.weight, w);
  for (const auto &[w, out] : all)
    if (w <= r.weight + 1e-9) r.best_outputs.insert(out);
  return r;
}

DecodeOracleResult BruteForceDecode(const ConfusionNetwork &cn, const Lexicon &lex,
                                    const LanguageModel &lm) {
  std::set<std::string> known;
  for (const auto &w : lm.PredictedVocab()) known.insert(w);
  std::vector<std::pair<std::string, PhoneSeq>> prons;
  for (const auto &[word, ps] : lex.entries)
    if (known.count(word))
      for (const auto &p : ps) prons.emplace_back(word, p);

  auto sentence_cost = [&](const std::vector<std::string> &words) {
    std::vector<std::string> history{kBosToken};
    double cost = 0.0;
    for (const auto &w : words) {
      cost -= lm.LogProb(history, w);
      history.push_back(w);
    }
    return cost - lm.LogProb(history, kEosToken);
  };

  std::vector<std::pair<std::vector<std::string>, double>> scored;
  std::function<void(const PhoneSeq &, std::size_t, std::vector<std::string> &, double)>
      segment = [&](const PhoneSeq &phones, std::size_t pos, std::vector<std::string> &words,
                    double cn_cost) {
        if (pos == phones.size()) {
          scored.emplace_back(words, cn_cost + sentence_cost(words));
          return;
        }
        for (const auto &[word, p] : prons) {
          if (p.empty() || pos + p.size() > phones.size()) continue;
          if (!std::equal(p.begin(), p.end(), phones.begin() + pos)) continue;
          words.push_back(word);
          segment(phones, pos + p.size(), words, cn_cost);
          words.pop_back();
        }
      };
  PhoneSeq phones;
  std::function<void(std::size_t, double)> paths = [&](std::size_t slot, double cost) {
    if (slot == cn.slots.size()) {
      std::vector<std::string> words;
      segment(phones, 0, words, cost);
      return;
    }
    for (const auto &[phone, c] : cn.slots[slot]) {
      bool eps = phone == kEpsilonSymbol;
      if (!eps) phones.push_back(phone);
      paths(slot + 1, cost + c);
      if (!eps) phones.pop_back();
    }
  };
  paths(0, 0.0);

  DecodeOracleResult r;
  for (const auto &[w, c] : scored) r.weight = std::min(r.weight, c);
  for (const auto &[w, c] : scored)
    if (c <= r.weight + 1e-9) r.best.insert(w);
  return r;
}

MatchResult BruteForceLcs(const PhoneSeq &phones, const Lexicon &lex, double coverage,
                          std::size_t min_match_len, std::size_t relax_lcs,
                          std::size_t relax_gain) {
  struct Cand {
    std::string word;
    std::size_t pron_len = 0, length = 0, position = 0, residue = 0;
  };
  // Lower residue, longer pronunciation, smaller word.
  auto preferred = [](const Cand &x, const Cand &y) {
    if (x.residue != y.residue) return x.residue < y.residue;
    if (x.pron_len != y.pron_len) return x.pron_len > y.pron_len;
    return x.word < y.word;
  };
  std::vector<bool> used(phones.size(), false);
  std::vector<std::pair<std::size_t, std::string>> matches;
  while (true) {
    std::vector<Cand> quals;
    for (const auto &[word, ps] : lex.entries)
      for (const auto &pron : ps) {
        Cand c{word, pron.size(), 0, 0, 0};
        for (std::size_t p = 0; p < phones.size(); ++p)
          for (std::size_t q = 0; q < pron.size(); ++q) {
            std::size_t k = 0;
            while (p + k < phones.size() && q + k < pron.size() && !used[p + k] &&
                   phones[p + k] == pron[q + k])
              ++k;
            if (k > c.length) {
              c.length = k;
              c.position = p;
            }
          }
        // A common substring of length L leaves |pron| - L edits.
        c.residue = pron.size() - c.length;
        if (c.length >= std::max<std::size_t>(min_match_len, 1) &&
            c.length >= coverage * pron.size())
          quals.push_back(c);
      }
    // The run a match sits in must itself be long enough.
    std::erase_if(quals, [&](const Cand &c) {
      std::size_t lo = c.position, hi = c.position + c.length;
      while (lo > 0 && !used[lo - 1]) --lo;
      while (hi < phones.size() && !used[hi]) ++hi;
      return hi - lo < min_match_len;
    });
    if (quals.empty()) break;
    std::size_t global = 0;
    for (const auto &c : quals) global = std::max(global, c.length);
    const Cand *winner = nullptr;
    for (const auto &c : quals)
      if (c.length == global && (!winner || preferred(c, *winner))) winner = &c;
    const Cand *relaxed = nullptr;
    for (const auto &c : quals) {
      if (c.length >= global || c.length + relax_lcs < global) continue;
      if (c.residue + relax_gain > winner->residue) continue;
      if (!relaxed || c.residue < relaxed->residue ||
          (c.residue == relaxed->residue &&
           (c.length > relaxed->length ||
            (c.length == relaxed->length && preferred(c, *relaxed)))))
        relaxed = &c;
    }
    if (relaxed) winner = relaxed;
    for (std::size_t i = 0; i < winner->length; ++i) used[winner->position + i] = true;
    matches.emplace_back(winner->position, winner->word);
  }
  std::sort(matches.begin(), matches.end());
  MatchResult r;
  for (auto &[p, w] : matches) r.words.push_back(w);
  for (std::size_t i = 0; i < phones.size(); ++i)
    if (!used[i]) r.unmatched.push_back({i, phones[i]});
  return r;
}

double NaiveClassMutualInformation(const std::vector<std::vector<std::string>> &sentences,
                                   const std::map<std::string, int> &cluster_of) {
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> left, right;
  double total = 0.0;
  for (const auto &s : sentences) {
    std::vector<int> classes{-1};
    for (const auto &w : s) classes.push_back(cluster_of.at(w));
    classes.push_back(-2);
    for (std::size_t i = 1; i < classes.size(); ++i) {
      joint[{classes[i - 1], classes[i]}] += 1;
      left[classes[i - 1]] += 1;
      right[classes[i]] += 1;
      total += 1;
    }
  }
  double mi = 0.0;
  for (const auto &[lr, n] : joint) {
    double p = n / total;
    mi += p * std::log2(p / ((left[lr.first] / total) * (right[lr.second] / total)));
  }
  return mi;
}

std::vector<std::vector<int>> SetPartitions(std::size_t n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> labels(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == n) {
      if (used == k) out.push_back(labels);
      return;
    }
    for (int c = 0; c <= used && c < k; ++c) {
      labels[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace testing
}  // namespace zrasr

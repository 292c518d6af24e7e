// tests/ngram-lm-test.cc

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

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "support/oracles.h"
#include "support/test-util.h"
#include "zrasr/base/error.h"
#include "zrasr/lm/ngram-lm.h"

namespace zrasr {
namespace {

using testing::KneserNeyOracle;
using testing::MakeCorpus;
using testing::TempDir;

double P(const LanguageModel &lm, std::vector<std::string> h, const std::string &w) {
  return std::pow(10.0, lm.LogProb(h, w));
}

TrainOptions Mle(int order = 3) {
  TrainOptions o;
  o.order = order;
  o.discounting = Discounting::kNone;
  return o;
}

const std::vector<std::string> kToyCorpus = {
    "the cat sat", "the dog sat", "a cat ran", "the cat ran away", "a dog sat down",
    "dog and cat", "the dog ran", "cat sat on the mat", "a mat", "the cat"};

// Every stored history of order < n plus the empty one, each checked
// against the full predicted vocabulary.
void ExpectNormalized(const NgramLm &lm, double tol = 1e-6) {
  std::vector<WordId> predicted = lm.PredictedIds();
  std::vector<std::vector<WordId>> histories = {{}};
  for (int n = 1; n < lm.order(); ++n)
    for (auto &g : lm.SortedNgrams(n)) histories.push_back(g);
  for (const auto &h : histories) {
    if (!h.empty() && h.back() == lm.eos()) continue;
    double sum = 0.0;
    for (WordId w : predicted) sum += std::pow(10.0, lm.LogProbIds(h, w));
    std::string name;
    for (WordId id : h) name += lm.Word(id) + " ";
    EXPECT_NEAR(sum, 1.0, tol) << "history: " << name;
  }
}

TEST(TrainNgramLm, MaximumLikelihoodExamples) {
  std::vector<std::string> lines(5, "a b");
  NgramLm lm = TrainNgramLm(MakeCorpus(lines), Mle());
  EXPECT_NEAR(P(lm, {"a"}, "b"), 1.0, 1e-12);
  EXPECT_NEAR(P(lm, {"<s>"}, "a"), 1.0, 1e-12);
  EXPECT_NEAR(P(lm, {"a", "b"}, "</s>"), 1.0, 1e-12);
  EXPECT_NEAR(ScoreSentence(lm, {"a", "b"}), 0.0, 1e-12);
  EXPECT_NEAR(Perplexity(lm, MakeCorpus(lines).sentences), 1.0, 1e-12);

  lm = TrainNgramLm(MakeCorpus({"a b", "a c"}), Mle());
  EXPECT_NEAR(P(lm, {"a"}, "b"), 0.5, 1e-12);
}

TEST(TrainNgramLm, MaximumLikelihoodMatchesCounts) {
  CleanCorpus c = MakeCorpus(kToyCorpus);
  NgramLm lm = TrainNgramLm(c, Mle());
  for (const auto &s : c.sentences) {
    std::vector<std::string> padded = {"<s>"};
    padded.insert(padded.end(), s.begin(), s.end());
    padded.push_back("</s>");
    for (std::size_t i = 2; i < padded.size(); ++i) {
      std::vector<std::string> h = {padded[i - 2], padded[i - 1]};
      double expected = testing::MleTrigramProb(c.sentences, h, padded[i]);
      EXPECT_NEAR(P(lm, h, padded[i]), expected, 1e-12);
    }
  }
}

TEST(TrainNgramLm, EmptyCorpusIsAnError) {
  EXPECT_THROW(TrainNgramLm(CleanCorpus(), TrainOptions()), Error);
  TrainOptions bad;
  bad.kn_discount = {1.0, 0.5, 0.5};
  EXPECT_THROW(TrainNgramLm(MakeCorpus({"a"}), bad), Error);
}

void ExpectMatchesOracle(const std::vector<std::string> &lines, int order) {
  CleanCorpus c = MakeCorpus(lines);
  TrainOptions opts;
  opts.order = order;
  NgramLm lm = TrainNgramLm(c, opts);
  KneserNeyOracle oracle(c.sentences, order, 0.5, opts.unk_floor);
  std::vector<std::string> contexts = oracle.Vocab();
  contexts.push_back("<s>");
  for (const auto &w : oracle.Vocab()) {
    EXPECT_NEAR(P(lm, {}, w), oracle.Prob({}, w), 1e-9) << w;
    for (const auto &h1 : contexts) {
      if (h1 == "</s>") continue;
      EXPECT_NEAR(P(lm, {h1}, w), oracle.Prob({h1}, w), 1e-9) << h1 << " " << w;
      if (order < 3) continue;
      for (const auto &h0 : contexts) {
        if (h0 == "</s>" || (h1 == "<s>" && h0 != "<s>")) continue;
        EXPECT_NEAR(P(lm, {h0, h1}, w), oracle.Prob({h0, h1}, w), 1e-9)
            << h0 << " " << h1 << " " << w;
      }
    }
  }
}

TEST(TrainNgramLm, KneserNeyMatchesOracle) {
  ExpectMatchesOracle({"a b", "a c", "b c"}, 3);
  ExpectMatchesOracle({"a b", "a c", "b c"}, 2);
  ExpectMatchesOracle(kToyCorpus, 3);
}

TEST(Perplexity, KneserNeyMatchesOracle) {
  CleanCorpus c = MakeCorpus(kToyCorpus);
  NgramLm lm = TrainNgramLm(c, TrainOptions());
  KneserNeyOracle oracle(c.sentences, 3, 0.5, 1e-7);
  std::vector<std::vector<std::string>> dev = {{"the", "cat", "sat", "down"},
                                               {"a", "zebra", "ran"}};
  double total = 0.0;
  std::size_t tokens = 0;
  for (const auto &s : dev) {
    std::vector<std::string> h = {"<s>"};
    std::vector<std::string> words = s;
    words.push_back("</s>");
    for (const auto &w : words) {
      std::string token = (w == "zebra") ? "<unk>" : w;
      std::vector<std::string> ctx(h.end() - std::min<std::size_t>(2, h.size()), h.end());
      total += std::log10(oracle.Prob(ctx, token));
      h.push_back(token);
      ++tokens;
    }
  }
  double expected = std::pow(10.0, -total / tokens);
  EXPECT_NEAR(Perplexity(lm, dev) / expected, 1.0, 1e-9);
}

TEST(Perplexity, UniformUnigram) {
  NgramLm lm(1);
  const double lp = std::log10(1.0 / 4);
  for (const std::string w : {"a", "b", "c", "</s>"}) {
    WordId id = lm.AddWord(w);
    lm.SetEntry(std::vector<WordId>{id}, {lp, 0.0});
  }
  WordId bos = lm.AddWord("<s>");
  lm.SetEntry(std::vector<WordId>{bos}, {kLogZero, 0.0});
  EXPECT_NEAR(Perplexity(lm, {{"a", "c", "c"}, {"b"}}), 4.0, 1e-9);
}

TEST(ScoreSentence, EmptyAndUnknown) {
  NgramLm lm = TrainNgramLm(MakeCorpus(kToyCorpus), TrainOptions());
  EXPECT_DOUBLE_EQ(ScoreSentence(lm, {}), lm.LogProb(std::vector<std::string>{"<s>"}, "</s>"));
  double s = ScoreSentence(lm, {"the", "qqq"});
  EXPECT_TRUE(std::isfinite(s));
  EXPECT_GT(s, -50.0);
}

TEST(NgramLm, NormalizedOnAllHistories) {
  for (int order = 1; order <= 3; ++order) {
    ExpectNormalized(TrainNgramLm(MakeCorpus(kToyCorpus), [&] {
      TrainOptions o;
      o.order = order;
      return o;
    }()));
    ExpectNormalized(TrainNgramLm(MakeCorpus(kToyCorpus), Mle(order)));
  }
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::string> lines;
    for (int i = 0; i < 15; ++i) {
      std::string line;
      for (int j = 0, n = 1 + rng() % 6; j < n; ++j)
        line += std::string(1, static_cast<char>('a' + rng() % 6)) + " ";
      lines.push_back(line);
    }
    ExpectNormalized(TrainNgramLm(MakeCorpus(lines), TrainOptions()));
  }
}

TEST(NgramLm, AddingASentenceKeepsNgrams) {
  std::vector<std::string> lines(kToyCorpus.begin(), kToyCorpus.end() - 1);
  NgramLm small = TrainNgramLm(MakeCorpus(lines), TrainOptions());
  NgramLm big = TrainNgramLm(MakeCorpus(kToyCorpus), TrainOptions());
  for (int n = 1; n <= 3; ++n)
    for (const auto &g : small.SortedNgrams(n)) {
      std::vector<WordId> mapped;
      for (WordId id : g) mapped.push_back(big.FindWord(small.Word(id)));
      EXPECT_NE(big.FindEntry(mapped), nullptr);
    }
}

TEST(PruneToLimits, WithinLimitsIsUnchanged) {
  NgramLm lm = TrainNgramLm(MakeCorpus(kToyCorpus), TrainOptions());
  EXPECT_TRUE(SameNgramLm(PruneToLimits(lm, LMLimits()), lm, 1e-12));
}

TEST(PruneToLimits, ZeroTrigramsGivesBigramModel) {
  NgramLm lm = TrainNgramLm(MakeCorpus(kToyCorpus), TrainOptions());
  LMLimits lim;
  lim.max_trigrams = 0;
  NgramLm pruned = PruneToLimits(lm, lim);
  EXPECT_EQ(pruned.order(), 2);
  ExpectNormalized(pruned);
}

TEST(PruneToLimits, KeepsTopTrigrams) {
  // Five distinct trigrams after <s> x.
  NgramLm lm = TrainNgramLm(MakeCorpus({"x a", "x a", "x a", "x b", "x b", "x c", "x d", "x e e"}),
                            TrainOptions());
  std::vector<std::pair<double, std::string>> trigram_probs;
  for (const auto &g : lm.SortedNgrams(3)) {
    std::string key;
    for (WordId id : g) key += lm.Word(id) + " ";
    trigram_probs.push_back({-lm.FindEntry(g)->log_prob, key});
  }
  std::sort(trigram_probs.begin(), trigram_probs.end());
  LMLimits lim;
  lim.max_trigrams = 3;
  NgramLm pruned = PruneToLimits(lm, lim);
  ASSERT_EQ(pruned.NumNgrams(3), 3u);
  std::set<std::string> kept, expected;
  for (const auto &g : pruned.SortedNgrams(3)) {
    std::string key;
    for (WordId id : g) key += pruned.Word(id) + " ";
    kept.insert(key);
  }
  for (int i = 0; i < 3; ++i) expected.insert(trigram_probs[i].second);
  EXPECT_EQ(kept, expected);
  ExpectNormalized(pruned);
}

TEST(PruneToLimits, RespectsAllLevels) {
  NgramLm lm = TrainNgramLm(MakeCorpus(kToyCorpus), TrainOptions());
  LMLimits lim;
  lim.max_unigrams = 8;
  lim.max_bigrams = 10;
  lim.max_trigrams = 6;
  NgramLm pruned = PruneToLimits(lm, lim);
  EXPECT_LE(pruned.NumNgrams(1), 8u);
  EXPECT_LE(pruned.NumNgrams(2), 10u);
  EXPECT_LE(pruned.NumNgrams(3), 6u);
  ExpectNormalized(pruned);
}

TEST(Arpa, RoundTripIsLossless) {
  TempDir dir;
  for (auto opts : {TrainOptions(), Mle()}) {
    NgramLm lm = TrainNgramLm(MakeCorpus(kToyCorpus), opts);
    WriteArpa(lm, dir.File("lm.arpa"));
    NgramLm back = ReadArpa(dir.File("lm.arpa"));
    EXPECT_TRUE(SameNgramLm(lm, back, 0.0));
  }
}

TEST(Arpa, HandWrittenUnigramModel) {
  std::istringstream in(
      "\\data\\\nngram 1=3\n\n\\1-grams:\n-0.30103\ta\n-0.30103\t</s>\n-99\t<s>\n\n\\end\\\n");
  NgramLm lm = ParseArpa(in);
  EXPECT_EQ(lm.order(), 1);
  EXPECT_EQ(lm.NumNgrams(1), 3u);
  EXPECT_NEAR(P(lm, {}, "a"), 0.5, 1e-5);
  EXPECT_NEAR(P(lm, {"<s>"}, "</s>"), 0.5, 1e-5);
  EXPECT_EQ(lm.FindEntry(std::vector<WordId>{lm.FindWord("a")})->log_prob, -0.30103);
}

TEST(Arpa, HeaderCountMismatchIsAnError) {
  std::istringstream in(
      "\\data\\\nngram 1=4\n\n\\1-grams:\n-0.30103\ta\n-0.30103\t</s>\n-99\t<s>\n\n\\end\\\n");
  try {
    ParseArpa(in);
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
  }
  std::istringstream bad("\\data\\\nngram 1=1\n\n\\1-grams:\nnotanumber\ta\n\\end\\\n");
  try {
    ParseArpa(bad);
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find(":5"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace zrasr

// tests/matcher-test.cc

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

#include <random>

#include <gtest/gtest.h>

#include "support/oracles.h"
#include "support/test-util.h"
#include "zrasr/base/error.h"
#include "zrasr/base/text-utils.h"
#include "zrasr/matcher/lcs-decoder.h"
#include "zrasr/matcher/pron-trie.h"
#include "zrasr/matcher/trie-decoder.h"

namespace zrasr {
namespace {

using testing::TempDir;

Lexicon MakeLexicon(const std::vector<std::pair<std::string, std::string>> &entries) {
  Lexicon lex;
  for (const auto &[w, p] : entries) lex.Add(w, SplitWhitespace(p));
  return lex;
}

// Emitted words come from the lexicon and every report entry names a
// distinct input position with its phone.
void ExpectCoverage(const PhoneSeq &phones, const MatchResult &r, const Lexicon &lex) {
  for (const auto &w : r.words) ASSERT_TRUE(lex.entries.count(w)) << w;
  std::set<std::size_t> positions;
  for (const auto &u : r.unmatched) {
    ASSERT_LT(u.position, phones.size());
    EXPECT_EQ(u.phone, phones[u.position]);
    EXPECT_TRUE(positions.insert(u.position).second);
  }
}

TEST(PronTrie, Structure) {
  Lexicon lex = MakeLexicon({{"a", "a"}, {"ab", "a b"}, {"ba", "b a"}});
  PronTrie trie = PronTrie::Build(lex);
  int a = trie.Child(trie.root(), "a");
  ASSERT_GE(a, 0);
  EXPECT_EQ(trie.node(a).words, (std::set<std::string>{"a"}));
  int ab = trie.Child(a, "b");
  ASSERT_GE(ab, 0);
  EXPECT_EQ(trie.node(ab).words, (std::set<std::string>{"ab"}));
  EXPECT_TRUE(trie.Lookup({}).empty());
  EXPECT_TRUE(trie.node(trie.root()).words.empty());
  EXPECT_LE(trie.num_nodes(), 5u + 1u);
  // Every phone string up to length 3 over {a, b}: found exactly when it is
  // a pronunciation.
  std::vector<PhoneSeq> all = {{}};
  for (int len = 0; len < 3; ++len) {
    std::vector<PhoneSeq> next;
    for (const auto &s : all)
      if (static_cast<int>(s.size()) == len)
        for (const std::string p : {"a", "b"}) {
          PhoneSeq t = s;
          t.push_back(p);
          next.push_back(t);
        }
    all.insert(all.end(), next.begin(), next.end());
  }
  for (const auto &s : all) {
    std::set<std::string> expected;
    for (const auto &[w, prons] : lex.entries)
      for (const auto &p : prons)
        if (p == s) expected.insert(w);
    EXPECT_EQ(trie.Lookup(s), expected);
  }
  EXPECT_THROW(PronTrie::Build(Lexicon()), Error);
}

TEST(TrieDecode, GreedyOvershoot) {
  Lexicon lex = MakeLexicon({{"a", "a"}, {"ab", "a b"}, {"ba", "b a"}});
  PronTrie trie = PronTrie::Build(lex);
  MatchResult r = TrieDecode({"a", "b", "a"}, trie, TrieTunings());
  EXPECT_EQ(r.words, (std::vector<std::string>{"ab", "a"}));
  EXPECT_TRUE(r.unmatched.empty());
  r = TrieDecode({"b", "a"}, trie, TrieTunings());
  EXPECT_EQ(r.words, (std::vector<std::string>{"ba"}));
  EXPECT_TRUE(r.unmatched.empty());
}

TEST(TrieDecode, SkipsUnmatchedPhones) {
  Lexicon lex = MakeLexicon({{"ab", "a b"}});
  MatchResult r = TrieDecode({"x", "a", "b", "a"}, PronTrie::Build(lex), TrieTunings());
  EXPECT_EQ(r.words, (std::vector<std::string>{"ab"}));
  EXPECT_EQ(r.unmatched, (std::vector<UnmatchedPhone>{{0, "x"}, {3, "a"}}));
}

TEST(TrieDecode, Homonyms) {
  Lexicon lex = MakeLexicon({{"w1", "k a"}, {"w2", "k a"}});
  PronTrie trie = PronTrie::Build(lex);
  TrieTunings t;
  t.homonym_unigram = {{"w1", 5}, {"w2", 9}};
  EXPECT_EQ(TrieDecode({"k", "a"}, trie, t).words, (std::vector<std::string>{"w2"}));
  t.preferred_vocab = {"w1"};
  EXPECT_EQ(TrieDecode({"k", "a"}, trie, t).words, (std::vector<std::string>{"w1"}));
}

TEST(TrieDecode, SimplificationAndSoundex) {
  Lexicon lex = MakeLexicon({{"ba", "b a"}});
  PronTrie trie = PronTrie::Build(lex);
  TrieTunings t;
  EXPECT_TRUE(TrieDecode({"p", "a"}, trie, t).words.empty());
  t.soundex_classes = SoundexClasses::FromPartition({{"p", "b"}, {"a"}});
  EXPECT_EQ(TrieDecode({"p", "a"}, trie, t).words, (std::vector<std::string>{"ba"}));
  TrieTunings s;
  s.phone_simplification.Set("aa", "a");
  EXPECT_EQ(TrieDecode({"b", "aa"}, trie, s).words, (std::vector<std::string>{"ba"}));
}

TEST(TrieDecode, ShorterMatchBias) {
  Lexicon lex = MakeLexicon({{"a", "a"}, {"ab", "a b"}, {"b", "b"}});
  PronTrie trie = PronTrie::Build(lex);
  TrieTunings t;
  t.target_length_dist = {0.0, 1.0};
  t.shorter_match_bias = 1.0;
  EXPECT_EQ(TrieDecode({"a", "b"}, trie, t).words, (std::vector<std::string>{"a", "b"}));
  t.shorter_match_bias = 0.0;
  EXPECT_EQ(TrieDecode({"a", "b"}, trie, t).words, (std::vector<std::string>{"ab"}));
  t.target_length_dist = {0.5, 0.6};
  EXPECT_THROW(TrieDecode({"a"}, trie, t), Error);
}

TEST(TrieDecode, UnambiguousLexiconRoundTrips) {
  std::mt19937 rng(8);
  // Prefix-free code: every pronunciation is two phones.
  Lexicon lex;
  std::vector<std::string> words;
  const std::vector<std::string> ph = {"a", "b", "c", "d"};
  for (const auto &x : ph)
    for (const auto &y : ph) {
      words.push_back(x + y);
      lex.Add(x + y, {x, y});
    }
  PronTrie trie = PronTrie::Build(lex);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> source;
    PhoneSeq phones;
    for (int i = 0, n = 1 + rng() % 8; i < n; ++i) {
      source.push_back(words[rng() % words.size()]);
      const auto &p = lex.entries.at(source.back())[0];
      phones.insert(phones.end(), p.begin(), p.end());
    }
    MatchResult r = TrieDecode(phones, trie, TrieTunings());
    EXPECT_EQ(r.words, source);
    EXPECT_TRUE(r.unmatched.empty());
  }
}

TEST(TrieDecode, EveryPhoneCoveredOrReported) {
  Lexicon lex = MakeLexicon({{"a", "a"}, {"ab", "a b"}, {"bc", "b c"}, {"cca", "c c a"}});
  PronTrie trie = PronTrie::Build(lex);
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    PhoneSeq phones;
    for (int i = 0, n = rng() % 10; i < n; ++i) phones.push_back(std::string(1, "abcx"[rng() % 4]));
    MatchResult r = TrieDecode(phones, trie, TrieTunings());
    std::size_t covered = 0;
    for (const auto &w : r.words) covered += lex.entries.at(w)[0].size();
    EXPECT_EQ(covered + r.unmatched.size(), phones.size());
    ExpectCoverage(phones, r, lex);
  }
}

LcsParams Params(double coverage = 0.8) {
  LcsParams p;
  p.coverage_threshold = coverage;
  return p;
}

TEST(LcsDecode, Examples) {
  Lexicon lex = MakeLexicon({{"kata", "k a t a"}});
  MatchResult r = LcsDecode({"k", "a", "t", "a"}, lex, Params());
  EXPECT_EQ(r.words, (std::vector<std::string>{"kata"}));
  EXPECT_TRUE(r.unmatched.empty());

  lex = MakeLexicon({{"kat", "k a t"}});
  r = LcsDecode({"x", "k", "a", "t", "y"}, lex, Params(1.0));
  EXPECT_EQ(r.words, (std::vector<std::string>{"kat"}));
  EXPECT_EQ(r.unmatched, (std::vector<UnmatchedPhone>{{0, "x"}, {4, "y"}}));
}

TEST(LcsDecode, SmallerResidueWins) {
  // Both share /m a n o/ with the input; "manos" leaves residue 1.
  Lexicon lex = MakeLexicon({{"manos", "m a n o s"}, {"mano", "m a n o"}});
  MatchResult r = LcsDecode({"m", "a", "n", "o"}, lex, Params());
  EXPECT_EQ(r.words, (std::vector<std::string>{"mano"}));
}

TEST(LcsDecode, WordsInPositionOrder) {
  Lexicon lex = MakeLexicon({{"dog", "d o g"}, {"cats", "k a t s"}});
  MatchResult r = LcsDecode({"d", "o", "g", "k", "a", "t", "s"}, lex, Params());
  EXPECT_EQ(r.words, (std::vector<std::string>{"dog", "cats"}));
}

TEST(LcsDecode, MatchesBruteForceOracle) {
  std::mt19937 rng(99);
  const std::string alphabet = "abcd";
  for (int trial = 0; trial < 300; ++trial) {
    Lexicon lex;
    for (int i = 0, n = 2 + rng() % 4; i < n; ++i) {
      PhoneSeq p;
      std::string w;
      for (int j = 0, m = 1 + rng() % 4; j < m; ++j) {
        char c = alphabet[rng() % alphabet.size()];
        p.push_back(std::string(1, c));
        w += c;
      }
      lex.Add(w, p);
    }
    PhoneSeq phones;
    for (int i = 0, n = rng() % 10; i < n; ++i)
      phones.push_back(std::string(1, alphabet[rng() % alphabet.size()]));
    LcsParams p = Params(trial % 3 == 0 ? 1.0 : 0.6);
    p.relax_lcs = trial % 2;
    p.relax_gain = 1 + trial % 3;
    MatchResult got = LcsDecode(phones, lex, p);
    MatchResult want = testing::BruteForceLcs(phones, lex, p.coverage_threshold, p.min_match_len,
                                              p.relax_lcs, p.relax_gain);
    EXPECT_EQ(got.words, want.words) << "trial " << trial;
    EXPECT_EQ(got.unmatched, want.unmatched) << "trial " << trial;
    ExpectCoverage(phones, got, lex);
  }
}

TEST(LcsDecode, ParallelScanAgrees) {
  Lexicon lex = MakeLexicon({{"ab", "a b"}, {"bcd", "b c d"}, {"da", "d a"}, {"cab", "c a b"}});
  PhoneSeq phones = {"c", "a", "b", "c", "d", "a", "a", "b"};
  LcsParams one = Params(), four = Params();
  four.num_workers = 4;
  MatchResult a = LcsDecode(phones, lex, one), b = LcsDecode(phones, lex, four);
  EXPECT_EQ(a.words, b.words);
  EXPECT_EQ(a.unmatched, b.unmatched);
}

TEST(LongestCommonSubstring, EarliestOccurrence) {
  CommonSubstring cs = LongestCommonSubstring({"x", "a", "b", "a", "b"}, {"a", "b"});
  EXPECT_EQ(cs.length, 2u);
  EXPECT_EQ(cs.a_start, 1u);
  EXPECT_EQ(cs.b_start, 0u);
  EXPECT_EQ(LongestCommonSubstring({"x"}, {"y"}).length, 0u);
}

TEST(Levenshtein, AgreesWithNaiveRecursion) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    PhoneSeq a, b;
    for (int i = 0, n = rng() % 6; i < n; ++i) a.push_back(std::string(1, "abc"[rng() % 3]));
    for (int i = 0, n = rng() % 6; i < n; ++i) b.push_back(std::string(1, "abc"[rng() % 3]));
    EXPECT_EQ(Levenshtein(a, b), testing::NaiveLevenshtein(a, b));
  }
}

TEST(SoundexClasses, Lookup) {
  std::set<std::string> inventory = {"p", "b", "t", "d", "a"};
  SoundexClasses id = SoundexClasses::Identity(inventory);
  std::set<int> ids;
  for (const auto &p : inventory) ids.insert(SoundexClassify(p, id));
  EXPECT_EQ(ids.size(), inventory.size());

  std::vector<std::set<std::string>> groups = {{"p", "b"}, {"t", "d"}, {"a"}};
  SoundexClasses merged = SoundexClasses::FromPartition(groups);
  EXPECT_EQ(merged.Classify("p"), merged.Classify("b"));
  EXPECT_THROW(merged.Classify("z"), Error);
  EXPECT_THROW(SoundexClasses::FromPartition({{"p", "b"}, {"b"}}), Error);

  TempDir dir;
  SoundexClasses read = SoundexClasses::Read(dir.Write("sx.txt", "p b\nt d\na\n"));
  for (const auto &x : inventory)
    for (const auto &y : inventory)
      EXPECT_EQ(read.Classify(x) == read.Classify(y), merged.Classify(x) == merged.Classify(y));
  EXPECT_EQ(read.num_classes(), 3u);
}

TEST(MatcherIo, Reports) {
  TempDir dir;
  auto utts = ReadPhoneUtterances(dir.Write("p.txt", "a b\n\nc\n"));
  ASSERT_EQ(utts.size(), 3u);
  EXPECT_TRUE(utts[1].empty());
  std::vector<MatchResult> results(2);
  results[1].unmatched.push_back({3, "x"});
  WriteUnmatchedReport(dir.File("u.txt"), results);
  EXPECT_EQ(ReadLines(dir.File("u.txt")), (std::vector<std::string>{"1\t3\tx"}));
}

}  // namespace
}  // namespace zrasr

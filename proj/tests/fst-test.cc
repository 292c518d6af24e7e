// tests/fst-test.cc

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
#include <memory>
#include <random>

#include <gtest/gtest.h>

#include "support/oracles.h"
#include "support/test-util.h"
#include "zrasr/base/error.h"
#include "zrasr/base/text-utils.h"
#include "zrasr/fst/confusion-network.h"
#include "zrasr/fst/fst-builders.h"
#include "zrasr/fst/fst-decoder.h"
#include "zrasr/fst/fst-ops.h"
#include "zrasr/fst/on-demand-fst.h"
#include "zrasr/fst/wfst.h"

namespace zrasr {
namespace {

using testing::EnumerateRelation;
using testing::MakeCorpus;
using testing::Relation;
using testing::TempDir;

using Strings = std::vector<std::string>;

Lexicon MakeLexicon(const std::vector<std::pair<std::string, std::string>> &entries) {
  Lexicon lex;
  for (const auto &[w, p] : entries) lex.Add(w, SplitWhitespace(p));
  return lex;
}

// Relation restricted to pairs whose input has at most `max_in` symbols,
// with '#' disambiguation symbols dropped from the input side.
Relation Project(const Relation &rel, std::size_t max_in) {
  Relation out;
  for (const auto &[key, w] : rel) {
    Strings in;
    for (const auto &s : key.first)
      if (s[0] != '#') in.push_back(s);
    if (in.size() > max_in) continue;
    auto k = std::make_pair(in, key.second);
    if (!out.count(k) || w < out[k]) out[k] = w;
  }
  return out;
}

std::shared_ptr<NgramLm> UnigramLm(const std::map<std::string, double> &probs) {
  auto lm = std::make_shared<NgramLm>(1);
  for (const auto &[w, p] : probs) {
    WordId id = lm->AddWord(w);
    lm->SetEntry(std::vector<WordId>{id}, {std::log10(p), 0.0});
  }
  WordId bos = lm->AddWord(kBos);
  lm->SetEntry(std::vector<WordId>{bos}, {kLogZero, 0.0});
  return lm;
}

// Linear acceptor over `syms` spelling `tokens`.
Wfst Chain(const Strings &tokens, std::shared_ptr<SymbolTable> syms) {
  Wfst fst;
  fst.set_isyms(syms);
  fst.set_osyms(syms);
  StateId s = fst.AddState();
  fst.SetStart(s);
  for (const auto &t : tokens) {
    StateId n = fst.AddState();
    Label l = syms->AddSymbol(t);
    fst.AddArc(s, {l, l, 0.0, n});
    s = n;
  }
  fst.SetFinal(s, 0.0);
  return fst;
}

TEST(LexiconToFst, ClosureOfOneWord) {
  Wfst l = LexiconToFst(MakeLexicon({{"ka", "k a"}}));
  Relation rel = EnumerateRelation(l, 6);
  EXPECT_TRUE(rel.count({Strings{"k", "a"}, Strings{"ka"}}));
  EXPECT_TRUE(rel.count({Strings{"k", "a", "k", "a"}, Strings{"ka", "ka"}}));
  EXPECT_FALSE(rel.count({Strings{"k"}, Strings{"ka"}}));
}

TEST(LexiconToFst, InputLanguageIsClosureOfPronunciations) {
  Lexicon lex = MakeLexicon({{"a", "a"}, {"ab", "a b"}, {"bba", "b b a"}});
  Relation rel = Project(EnumerateRelation(LexiconToFst(lex), 12), 6);
  // Concatenations of pronunciations up to 6 phones, each with its words.
  std::set<std::pair<Strings, Strings>> expected;
  std::function<void(Strings &, Strings &)> grow = [&](Strings &phones, Strings &words) {
    expected.insert({phones, words});
    for (const auto &[w, prons] : lex.entries) {
      const auto &p = prons[0];
      if (phones.size() + p.size() > 6) continue;
      phones.insert(phones.end(), p.begin(), p.end());
      words.push_back(w);
      grow(phones, words);
      words.pop_back();
      phones.resize(phones.size() - p.size());
    }
  };
  Strings p, w;
  grow(p, w);
  std::set<std::pair<Strings, Strings>> got;
  for (const auto &[key, weight] : rel) {
    got.insert(key);
    EXPECT_EQ(weight, 0.0);
  }
  EXPECT_EQ(got, expected);
}

TEST(LexiconToFst, HomophonesGetDisambiguationSymbols) {
  Wfst l = LexiconToFst(MakeLexicon({{"w1", "k a"}, {"w2", "k a"}}));
  Relation rel = EnumerateRelation(l, 3);
  EXPECT_TRUE(rel.count({Strings{"k", "a", "#1"}, Strings{"w1"}}));
  EXPECT_TRUE(rel.count({Strings{"k", "a", "#2"}, Strings{"w2"}}));
  EXPECT_FALSE(rel.count({Strings{"k", "a"}, Strings{"w1"}}));
}

TEST(LexiconToFst, SilenceLoop) {
  Wfst l = LexiconToFst(MakeLexicon({{"ka", "k a"}}), 0.5);
  Relation rel = EnumerateRelation(l, 4);
  EXPECT_DOUBLE_EQ(rel.at({Strings{"SIL", "k", "a"}, Strings{"ka"}}), 0.5);
}

TEST(LmToFst, UniformUnigramArcs) {
  auto lm = UnigramLm({{"a", 0.5}, {"b", 0.5}, {"</s>", 1.0}});
  Wfst g = LmToFst(*lm);
  int word_arcs = 0;
  for (StateId s = 0; s < static_cast<StateId>(g.NumStates()); ++s)
    for (const Arc &arc : g.Arcs(s)) {
      if (arc.ilabel == g.phi_label()) continue;
      const std::string &w = g.isyms()->Symbol(arc.ilabel);
      if (w == "a" || w == "b") {
        EXPECT_NEAR(arc.weight, -std::log10(0.5), 1e-12);
        ++word_arcs;
      }
    }
  EXPECT_EQ(word_arcs, 2);
}

const std::vector<std::string> kToyCorpus = {
    "the cat sat", "the dog sat", "a cat ran", "the cat ran away", "a dog sat down",
    "dog and cat", "the dog ran", "cat sat on the mat", "a mat", "the cat"};

TEST(LmToFst, PathCostEqualsScore) {
  CleanCorpus corpus = MakeCorpus(kToyCorpus);
  std::vector<std::string> vocab;
  for (const auto &[w, n] : corpus.vocab) vocab.push_back(w);
  std::mt19937 rng(31);
  for (auto opts : {TrainOptions(), [] {
                      TrainOptions o;
                      o.discounting = Discounting::kNone;
                      return o;
                    }()}) {
    NgramLm lm = TrainNgramLm(corpus, opts);
    Wfst g = LmToFst(lm);
    BackoffFstView view(g);
    for (int trial = 0; trial < 100; ++trial) {
      Strings s;
      for (int i = 0, n = rng() % 6; i < n; ++i) s.push_back(vocab[rng() % vocab.size()]);
      double expected = -ScoreSentence(lm, s);
      if (!std::isfinite(expected) || expected > 90.0) continue;
      EXPECT_NEAR(SentenceCost(view, s), expected, 1e-9);
      auto syms = std::make_shared<SymbolTable>(*g.isyms());
      PathResult p = ShortestPath(Compose(Chain(s, syms), g));
      EXPECT_NEAR(p.weight, expected, 1e-9);
      EXPECT_EQ(p.output, s);
    }
  }
  // Deterministic corpus: "a b" costs nothing.
  NgramLm det = TrainNgramLm(MakeCorpus(Strings(5, "a b")), [] {
    TrainOptions o;
    o.discounting = Discounting::kNone;
    return o;
  }());
  PathResult best = ShortestPath(LmToFst(det));
  EXPECT_EQ(best.output, (Strings{"a", "b"}));
  EXPECT_NEAR(best.weight, 0.0, 1e-12);
}

// Random acyclic transducer over small alphabets; epsilons allowed on
// either side.
Wfst RandomFst(std::mt19937 &rng, std::shared_ptr<SymbolTable> in,
               std::shared_ptr<SymbolTable> out, const Strings &in_alpha,
               const Strings &out_alpha, int states) {
  Wfst fst;
  fst.set_isyms(in);
  fst.set_osyms(out);
  for (int i = 0; i < states; ++i) fst.AddState();
  fst.SetStart(0);
  for (int s = 0; s < states; ++s) {
    if (rng() % 3 == 0 || s == states - 1) fst.SetFinal(s, (rng() % 10) / 10.0);
    for (int k = 0, n = rng() % 3; k < n && s + 1 < states; ++k) {
      int dst = s + 1 + rng() % (states - s - 1);
      std::size_t ii = rng() % (in_alpha.size() + 1), oo = rng() % (out_alpha.size() + 1);
      Label il = ii == in_alpha.size() ? kEpsilon : in->AddSymbol(in_alpha[ii]);
      Label ol = oo == out_alpha.size() ? kEpsilon : out->AddSymbol(out_alpha[oo]);
      fst.AddArc(s, {il, ol, (1 + rng() % 20) / 10.0, dst});
    }
  }
  return fst;
}

TEST(Compose, RelationIsCompositionOfRelations) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = std::make_shared<SymbolTable>(), y = std::make_shared<SymbolTable>(),
         z = std::make_shared<SymbolTable>();
    Wfst a = RandomFst(rng, x, y, {"p", "q"}, {"m", "n"}, 2 + rng() % 4);
    Wfst b = RandomFst(rng, y, z, {"m", "n"}, {"u", "v"}, 2 + rng() % 4);
    Relation ra = EnumerateRelation(a, 8), rb = EnumerateRelation(b, 8);
    Relation expected;
    for (const auto &[ka, wa] : ra)
      for (const auto &[kb, wb] : rb) {
        if (ka.second != kb.first) continue;
        auto key = std::make_pair(ka.first, kb.second);
        if (!expected.count(key) || wa + wb < expected[key]) expected[key] = wa + wb;
      }
    Relation got = EnumerateRelation(Compose(a, b), 16);
    ASSERT_EQ(got.size(), expected.size()) << "trial " << trial;
    for (const auto &[k, w] : expected) {
      ASSERT_TRUE(got.count(k));
      EXPECT_NEAR(got.at(k), w, 1e-9);
    }
  }
}

TEST(Compose, IdentityAcceptorKeepsWeights) {
  auto syms = std::make_shared<SymbolTable>();
  std::mt19937 rng(1);
  Wfst a = RandomFst(rng, syms, syms, {"p", "q"}, {"p", "q"}, 5);
  Wfst id;
  id.set_isyms(syms);
  id.set_osyms(syms);
  StateId s = id.AddState();
  id.SetStart(s);
  id.SetFinal(s, 0.0);
  for (const std::string w : {"p", "q"}) id.AddArc(s, {syms->Find(w), syms->Find(w), 0.0, s});
  Relation ra = EnumerateRelation(a, 8), rc = EnumerateRelation(Compose(a, id), 8);
  EXPECT_EQ(ra, rc);
}

TEST(Compose, LexiconWithGrammar) {
  Lexicon lex = MakeLexicon({{"ka", "k a"}, {"ta", "t a"}});
  NgramLm lm = TrainNgramLm(MakeCorpus({"ka ta", "ka", "ta ta ka"}), TrainOptions());
  Wfst lg = Compose(LexiconToFst(lex), LmToFst(lm));
  StripDisambiguation(&lg);
  Relation rel = EnumerateRelation(lg, 8);
  int checked = 0;
  for (const auto &[key, w] : rel) {
    if (key.second.size() > 3) continue;
    Strings phones;
    for (const auto &word : key.second) {
      const auto &p = lex.entries.at(word)[0];
      phones.insert(phones.end(), p.begin(), p.end());
    }
    EXPECT_EQ(key.first, phones);
    EXPECT_NEAR(w, -ScoreSentence(lm, key.second), 1e-9);
    ++checked;
  }
  EXPECT_EQ(checked, 1 + 2 + 4 + 8);
}

TEST(Compose, BudgetAbort) {
  auto x = std::make_shared<SymbolTable>(), y = std::make_shared<SymbolTable>(),
       z = std::make_shared<SymbolTable>();
  Wfst a, b;
  a.set_isyms(x);
  a.set_osyms(y);
  b.set_isyms(y);
  b.set_osyms(z);
  for (Wfst *m : {&a, &b}) {
    m->AddState();
    m->AddState();
    m->SetStart(0);
    m->SetFinal(1, 0.0);
  }
  for (int i = 0; i < 4; ++i)
    a.AddArc(0, {x->AddSymbol("i" + std::to_string(i)), y->AddSymbol("x"), 0.0, 1});
  for (int j = 0; j < 6; ++j)
    b.AddArc(0, {y->AddSymbol("x"), z->AddSymbol("o" + std::to_string(j)), 0.0, 1});
  EXPECT_EQ(Compose(a, b).NumArcs(), 24u);
  SizeBudget budget;
  budget.max_arcs = 10;
  try {
    Compose(a, b, budget);
    FAIL() << "expected a budget error";
  } catch (const BudgetExceededError &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
    EXPECT_EQ(e.arcs(), 11u);
  }
}

TEST(ConfusionNetwork, Chain) {
  ConfusionNetwork one;
  one.slots = {{{"k", 0.0}}};
  Wfst f = CnToFst(one);
  EXPECT_EQ(f.NumStates(), 2u);
  EXPECT_EQ(f.NumArcs(), 1u);

  ConfusionNetwork two;
  two.slots = {{{"k", 0.1}, {"g", 0.7}}, {{"a", 0.2}, {"<eps>", 0.9}}};
  two.Validate();
  Relation rel = EnumerateRelation(CnToFst(two), 4);
  ASSERT_EQ(rel.size(), 4u);
  for (const auto &[p0, c0] : two.slots[0])
    for (const auto &[p1, c1] : two.slots[1]) {
      Strings in = {p0};
      if (p1 != "<eps>") in.push_back(p1);
      EXPECT_NEAR(rel.at({in, in}), c0 + c1, 1e-12);
    }
  EXPECT_EQ(two.BestPhones(), (PhoneSeq{"k", "a"}));
}

TEST(ConfusionNetwork, Validation) {
  ConfusionNetwork cn;
  cn.slots = {{}};
  EXPECT_THROW(cn.Validate(), Error);
  cn.slots = {{{"a", 0.0}, {"b", 0.0}}};
  EXPECT_THROW(cn.Validate(), Error);
  cn.slots = {{{"a", -0.1}}};
  EXPECT_THROW(cn.Validate(), Error);
  cn.slots = {{{"a", std::log10(2.0)}, {"b", std::log10(2.0)}}};
  EXPECT_NO_THROW(cn.Validate());
}

TEST(ConfusionNetwork, ReadWrite) {
  TempDir dir;
  std::vector<ConfusionNetwork> cns(2);
  cns[0].slots = {{{"k", 0.1}, {"g", 0.7}}, {{"a", 0.0}}};
  cns[1].slots = {{{"t", 0.25}}};
  WriteConfusionNetworks(dir.File("cn.txt"), cns);
  auto back = ReadConfusionNetworks(dir.File("cn.txt"));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].slots, cns[0].slots);
  EXPECT_EQ(back[1].slots, cns[1].slots);
  EXPECT_THROW(ReadConfusionNetworks(dir.Write("bad.txt", "k:x\n")), Error);
  PhoneMap pm;
  pm.Set("k", "K");
  pm.Set("g", "K");
  pm.Set("a", "A");
  EXPECT_EQ(MapConfusionNetwork(cns[0], pm).slots[0][1].first, "K");
}

TEST(ShortestPath, Examples) {
  auto syms = std::make_shared<SymbolTable>();
  Wfst f;
  f.set_isyms(syms);
  f.set_osyms(syms);
  for (int i = 0; i < 3; ++i) f.AddState();
  f.SetStart(0);
  f.SetFinal(2, 0.0);
  f.AddArc(0, {syms->AddSymbol("x"), syms->AddSymbol("x"), 1.2, 1});
  f.AddArc(0, {syms->AddSymbol("y"), syms->AddSymbol("y"), 0.7, 1});
  f.AddArc(1, {kEpsilon, kEpsilon, 0.0, 2});
  PathResult p = ShortestPath(f);
  EXPECT_EQ(p.output, (Strings{"y"}));
  EXPECT_NEAR(p.weight, 0.7, 1e-12);

  Wfst loop = f;
  loop.AddArc(1, {kEpsilon, kEpsilon, -1.0, 0});
  try {
    ShortestPath(loop);
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kValidation);
  }

  Wfst dead;
  dead.SetStart(dead.AddState());
  try {
    ShortestPath(dead);
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoPath);
  }
}

TEST(ShortestPath, MatchesEnumeration) {
  std::mt19937 rng(77);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto syms = std::make_shared<SymbolTable>();
    Wfst f = RandomFst(rng, syms, syms, {"p", "q"}, {"u", "v", "w"}, 2 + rng() % 7);
    // Occasional cycles with positive weight and negative arcs on the DAG.
    if (trial % 3 == 0 && f.NumStates() > 2)
      f.AddArc(static_cast<StateId>(f.NumStates() - 1), {kEpsilon, syms->AddSymbol("u"), 0.3, 1});
    if (trial % 5 == 0) f.AddArc(0, {kEpsilon, syms->AddSymbol("w"), -0.5, 1});
    testing::PathOracleResult want = testing::EnumerateShortestPath(f, 12);
    if (want.weight == kInfinity) {
      EXPECT_THROW(ShortestPath(f), Error);
      continue;
    }
    PathResult got = ShortestPath(f);
    EXPECT_NEAR(got.weight, want.weight, 1e-9) << "trial " << trial;
    EXPECT_TRUE(want.best_outputs.count(got.output)) << "trial " << trial;
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

DecoderOptions Exact() {
  DecoderOptions o;
  o.fallback_to_trie = false;
  return o;
}

TEST(Decode, SingleWordAndHomophones) {
  Lexicon lex = MakeLexicon({{"ka", "k a"}, {"ta", "t a"}});
  auto lm = UnigramLm({{"ka", 0.3}, {"ta", 0.3}, {"</s>", 0.4}});
  FstDecoder dec(lex, lm, Exact());
  EXPECT_EQ(dec.Decode(ConfusionNetwork::FromPhones({"k", "a"})).words, (Strings{"ka"}));

  Lexicon homo = MakeLexicon({{"w1", "k a"}, {"w2", "k a"}});
  auto g = UnigramLm({{"w1", 0.42}, {"w2", 0.18}, {"</s>", 0.4}});
  EXPECT_EQ(FstDecoder(homo, g, Exact()).Decode(ConfusionNetwork::FromPhones({"k", "a"})).words,
            (Strings{"w1"}));
  auto g2 = UnigramLm({{"w1", 0.18}, {"w2", 0.42}, {"</s>", 0.4}});
  EXPECT_EQ(FstDecoder(homo, g2, Exact()).Decode(ConfusionNetwork::FromPhones({"k", "a"})).words,
            (Strings{"w2"}));
  Wfst l = LexiconToFst(homo);
  Wfst gf = LmToFst(*g2);
  EXPECT_EQ(DecodeStatic(ConfusionNetwork::FromPhones({"k", "a"}), l, gf, SizeBudget()).words,
            (Strings{"w2"}));
}

struct DecodeToy {
  Lexicon lex = MakeLexicon({{"ab", "a b"}, {"ba", "b a"}, {"a", "a"}, {"c", "c"}, {"bc", "b c"}});
  NgramLm lm = TrainNgramLm(
      MakeCorpus({"ab c", "ba a", "a a bc", "c ab", "bc ba a", "a c c", "ab ab"}), TrainOptions());
};

ConfusionNetwork RandomCn(std::mt19937 &rng, int slots, int alts) {
  ConfusionNetwork cn;
  const Strings phones = {"a", "b", "c", "<eps>"};
  for (int s = 0; s < slots; ++s) {
    ConfusionNetwork::Slot slot;
    std::set<std::string> used;
    double left = 1.0;
    for (int k = 0; k < alts; ++k) {
      std::string p = phones[rng() % (k == 0 ? 3 : 4)];
      if (!used.insert(p).second) continue;
      double prob = left * (0.3 + 0.5 * ((rng() % 100) / 100.0));
      left -= prob;
      slot.emplace_back(p, -std::log10(prob));
    }
    cn.slots.push_back(slot);
  }
  return cn;
}

TEST(Decode, MatchesBruteForce) {
  DecodeToy toy;
  auto lm = std::make_shared<NgramLm>(toy.lm);
  Wfst l = LexiconToFst(toy.lex);
  Wfst g = LmToFst(toy.lm);
  FstDecoder lazy(toy.lex, lm, Exact());
  FstDecoder compiled(toy.lex, std::make_shared<Wfst>(g), Exact());
  std::mt19937 rng(13);
  int decoded = 0;
  for (int trial = 0; trial < 150; ++trial) {
    ConfusionNetwork cn = RandomCn(rng, 1 + rng() % 4, 1 + rng() % 3);
    testing::DecodeOracleResult want = testing::BruteForceDecode(cn, toy.lex, toy.lm);
    if (want.weight == kInfinity) {
      EXPECT_THROW(lazy.Decode(cn), Error);
      EXPECT_THROW(DecodeStatic(cn, l, g, SizeBudget()), Error);
      continue;
    }
    ++decoded;
    for (const DecodeResult &got :
         {lazy.Decode(cn), compiled.Decode(cn), DecodeStatic(cn, l, g, SizeBudget())}) {
      EXPECT_NEAR(got.weight, want.weight, 1e-9) << "trial " << trial;
      EXPECT_TRUE(want.best.count(got.words)) << "trial " << trial;
      EXPECT_FALSE(got.fallback);
    }
  }
  EXPECT_GT(decoded, 30);
}

TEST(Decode, CertainCnEqualsPlainPhones) {
  DecodeToy toy;
  Wfst l = LexiconToFst(toy.lex);
  Wfst g = LmToFst(toy.lm);
  auto syms = std::make_shared<SymbolTable>(*l.isyms());
  PhoneSeq phones = {"a", "b", "c", "b", "a"};
  PathResult plain = ShortestPath(Compose(Compose(Chain(phones, syms), l), g));
  ConfusionNetwork cn;
  for (const auto &p : phones) cn.slots.push_back({{p, 0.0}});
  DecodeResult r = FstDecoder(toy.lex, std::make_shared<NgramLm>(toy.lm), Exact()).Decode(cn);
  EXPECT_EQ(r.words, plain.output);
  EXPECT_NEAR(r.weight, plain.weight, 1e-9);
}

TEST(Decode, BudgetOnlyChangesFeasibility) {
  DecodeToy toy;
  Wfst l = LexiconToFst(toy.lex);
  Wfst g = LmToFst(toy.lm);
  ConfusionNetwork cn = ConfusionNetwork::FromPhones({"a", "b", "c", "a"});
  DecodeResult big = DecodeStatic(cn, l, g, SizeBudget());
  SizeBudget tiny;
  tiny.max_arcs = 3;
  EXPECT_THROW(DecodeStatic(cn, l, g, tiny), BudgetExceededError);
  auto lm = std::make_shared<NgramLm>(toy.lm);
  DecoderOptions small = Exact();
  small.budget.max_arcs = 3;
  EXPECT_THROW(FstDecoder(toy.lex, lm, small).Decode(cn), BudgetExceededError);
  for (std::size_t arcs : {1000u, 100000u}) {
    DecoderOptions o = Exact();
    o.budget.max_arcs = arcs;
    DecodeResult r = FstDecoder(toy.lex, lm, o).Decode(cn);
    EXPECT_EQ(r.words, big.words);
    EXPECT_NEAR(r.weight, big.weight, 1e-9);
  }
}

TEST(Decode, GraphMatchesStatic) {
  DecodeToy toy;
  Wfst l = LexiconToFst(toy.lex);
  Wfst g = LmToFst(toy.lm);
  Wfst lg = Compose(l, g);
  StripDisambiguation(&lg);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    ConfusionNetwork cn = RandomCn(rng, 1 + rng() % 4, 2);
    if (testing::BruteForceDecode(cn, toy.lex, toy.lm).weight == kInfinity) continue;
    DecodeResult a = DecodeStatic(cn, l, g, SizeBudget());
    DecodeResult b = DecodeWithGraph(cn, lg, SizeBudget());
    EXPECT_NEAR(a.weight, b.weight, 1e-9);
  }
}

TEST(Decode, FallbackToTrie) {
  DecodeToy toy;
  DecoderOptions o;
  FstDecoder dec(toy.lex, std::make_shared<NgramLm>(toy.lm), o);
  // No segmentation covers a trailing "b".
  DecodeResult r = dec.Decode(ConfusionNetwork::FromPhones({"a", "b", "b"}));
  EXPECT_TRUE(r.fallback);
  EXPECT_EQ(r.words, (Strings{"ab"}));
  EXPECT_EQ(r.unmatched, (std::vector<UnmatchedPhone>{{2, "b"}}));
}

TEST(Decode, DecodeAllKeepsOrder) {
  DecodeToy toy;
  DecoderOptions o;
  o.num_workers = 3;
  FstDecoder dec(toy.lex, std::make_shared<NgramLm>(toy.lm), o);
  std::mt19937 rng(6);
  std::vector<ConfusionNetwork> cns;
  for (int i = 0; i < 12; ++i) cns.push_back(RandomCn(rng, 3, 2));
  std::vector<DecodeResult> all = dec.DecodeAll(cns);
  ASSERT_EQ(all.size(), cns.size());
  for (std::size_t i = 0; i < cns.size(); ++i) {
    DecodeResult one = dec.Decode(cns[i]);
    EXPECT_EQ(all[i].words, one.words);
    EXPECT_EQ(all[i].fallback, one.fallback);
  }
}

TEST(Wfst, TextRoundTripAndValidation) {
  TempDir dir;
  DecodeToy toy;
  Wfst g = LmToFst(toy.lm);
  WriteFstText(g, dir.File("g.fst"));
  g.isyms()->Write(dir.File("g.syms"));
  auto syms = std::make_shared<SymbolTable>(SymbolTable::Read(dir.File("g.syms")));
  Wfst back = ReadFstText(dir.File("g.fst"), syms, syms);
  back.set_phi_label(syms->Find(kBackoffSymbol));
  EXPECT_EQ(back.NumStates(), g.NumStates());
  EXPECT_EQ(back.NumArcs(), g.NumArcs());
  EXPECT_EQ(EnumerateRelation(back, 4), EnumerateRelation(g, 4));

  Wfst bad;
  StateId s = bad.AddState();
  bad.SetStart(s);
  bad.AddArc(s, {kEpsilon, kEpsilon, 0.0, 7});
  EXPECT_THROW(bad.Validate(), Error);
}

TEST(Wfst, StripDisambiguationKeepsPhi) {
  Wfst l = LexiconToFst(MakeLexicon({{"w1", "k a"}, {"w2", "k a"}}));
  StripDisambiguation(&l);
  Relation rel = EnumerateRelation(l, 3);
  EXPECT_TRUE(rel.count({Strings{"k", "a"}, Strings{"w1"}}));
  EXPECT_TRUE(rel.count({Strings{"k", "a"}, Strings{"w2"}}));
  Wfst g = LmToFst(DecodeToy().lm);
  std::size_t before = g.NumArcs();
  Label phi = g.phi_label();
  StripDisambiguation(&g);
  std::size_t phis = 0;
  for (StateId q = 0; q < static_cast<StateId>(g.NumStates()); ++q)
    for (const Arc &a : g.Arcs(q)) phis += a.ilabel == phi;
  EXPECT_GT(phis, 0u);
  EXPECT_EQ(g.NumArcs(), before);
}

}  // namespace
}  // namespace zrasr

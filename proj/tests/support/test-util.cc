// tests/support/test-util.cc

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

#include "support/test-util.h"

#include <atomic>
#include <random>

#include "support/oracles.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {
namespace testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  std::random_device rd;
  for (int attempt = 0;; ++attempt) {
    fs::path p = fs::temp_directory_path() /
                 ("zrasr-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    if (fs::create_directory(p)) {
      path_ = p;
      return;
    }
  }
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::string TempDir::Write(const std::string &name, const std::string &content) const {
  fs::path p = path_ / name;
  fs::create_directories(p.parent_path());
  WriteFile(p.string(), content);
  return p.string();
}

CleanCorpus MakeCorpus(const std::vector<std::string> &lines) {
  CleanCorpus corpus;
  for (const auto &line : lines) corpus.sentences.push_back(SplitWhitespace(line));
  corpus.RecountVocab();
  return corpus;
}

std::string FixturePath(const std::string &relative) {
  return (fs::path(ZRASR_TEST_FIXTURES) / relative).string();
}

std::set<std::string> PlantedVariants::AllWords() const {
  std::set<std::string> all(distractors.begin(), distractors.end());
  for (const auto &g : groups) all.insert(g.begin(), g.end());
  return all;
}

namespace {

const std::string kConsonants = "bdgkmstz";
const std::string kVowels = "aeiou";

std::string Syllables(std::mt19937 &rng, std::size_t n) {
  std::string w;
  for (std::size_t i = 0; i < n; ++i) {
    w += kConsonants[rng() % kConsonants.size()];
    w += kVowels[rng() % kVowels.size()];
  }
  return w;
}

bool FarFromAll(const std::string &w, const std::vector<std::string> &others) {
  auto cw = SplitCodepoints(w);
  for (const auto &o : others)
    if (NaiveLevenshtein(cw, SplitCodepoints(o)) < 3) return false;
  return true;
}

}  // namespace

PlantedVariants MakePlantedVariants(std::uint64_t seed) {
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  PlantedVariants out;
  std::vector<std::string> taken;
  const std::size_t sizes[] = {4, 4, 4, 4, 4, 4, 3, 3};
  for (std::size_t size : sizes) {
    while (true) {
      // An 'l' in the third syllable gives the l/r swap something to act on.
      std::string base = Syllables(rng, 2) + "l" + kVowels[rng() % 5] + Syllables(rng, 1);
      std::string apos = base.substr(0, 2) + "'" + base.substr(2);
      std::string lr = base;
      lr[4] = 'r';
      std::string vowel = base;
      char v = vowel[7];
      vowel[7] = kVowels[(kVowels.find(v) + 1 + rng() % 4) % 5];
      std::vector<std::string> group = {base, apos, lr};
      if (size == 4) group.push_back(vowel);
      bool ok = true;
      for (const auto &g : group) ok = ok && FarFromAll(g, taken);
      if (!ok) continue;
      taken.insert(taken.end(), group.begin(), group.end());
      out.groups.push_back(group);
      break;
    }
  }
  while (out.distractors.size() < 10) {
    std::string w = Syllables(rng, 4);
    if (!FarFromAll(w, taken)) continue;
    taken.push_back(w);
    out.distractors.push_back(w);
  }
  return out;
}

std::vector<std::string> RandomWords(std::size_t n, std::size_t min_len, std::uint64_t seed) {
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::set<std::string> seen;
  std::vector<std::string> out;
  while (out.size() < n) {
    std::size_t syll = (min_len + 1) / 2 + rng() % 3;
    std::string w = Syllables(rng, syll);
    if (seen.insert(w).second) out.push_back(w);
  }
  return out;
}

}  // namespace testing
}  // namespace zrasr

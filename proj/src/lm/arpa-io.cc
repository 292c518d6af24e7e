// src/lm/arpa-io.cc

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

#include <fstream>
#include <sstream>

#include "zrasr/base/error.h"
#include "zrasr/base/text-utils.h"
#include "zrasr/lm/ngram-lm.h"

namespace zrasr {

namespace {

[[noreturn]] void ArpaError(const std::string &name, std::size_t line_no,
                            const std::string &message) {
  throw Error(ErrorKind::kParse, name + ":" + std::to_string(line_no) +
                                     ": malformed ARPA: " + message);
}

}  // namespace

NgramLm ParseArpa(std::istream &in, const std::string &name) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  bool found_data = false;
  while (next_line()) {
    if (Trim(line) == "\\data\\") {
      found_data = true;
      break;
    }
  }
  if (!found_data) ArpaError(name, line_no, "no \\data\\ header");

  std::vector<std::size_t> declared;
  while (next_line()) {
    std::string t = Trim(line);
    if (t.empty()) {
      if (!declared.empty()) break;
      continue;
    }
    if (t.rfind("ngram ", 0) != 0) ArpaError(name, line_no, "expected 'ngram N=count'");
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) ArpaError(name, line_no, "expected 'ngram N=count'");
    long long n, count;
    try {
      n = ParseInt(t.substr(6, eq - 6));
      count = ParseInt(t.substr(eq + 1));
    } catch (const Error &) {
      ArpaError(name, line_no, "bad ngram count line");
    }
    if (n != static_cast<long long>(declared.size()) + 1 || n > kMaxNgramOrder || count < 0)
      ArpaError(name, line_no, "ngram orders must be 1..3 and consecutive");
    declared.push_back(static_cast<std::size_t>(count));
  }
  if (declared.empty()) ArpaError(name, line_no, "no ngram counts in header");

  NgramLm lm(static_cast<int>(declared.size()));
  std::vector<std::size_t> seen(declared.size(), 0);
  int section = 0;
  bool ended = false;
  while (next_line()) {
    std::string t = Trim(line);
    if (t.empty()) continue;
    if (t == "\\end\\") {
      ended = true;
      break;
    }
    if (t.front() == '\\') {
      int n = 0;
      if (t.size() == 9 && t.substr(2) == "-grams:" && t[1] >= '1' && t[1] <= '3')
        n = t[1] - '0';
      if (n != section + 1 || n > static_cast<int>(declared.size()))
        ArpaError(name, line_no, "unexpected section '" + t + "'");
      section = n;
      continue;
    }
    if (section == 0) ArpaError(name, line_no, "n-gram line outside a section");
    std::vector<std::string> fields = SplitWhitespace(t);
    const std::size_t n = static_cast<std::size_t>(section);
    if (fields.size() != n + 1 && fields.size() != n + 2)
      ArpaError(name, line_no, "expected " + std::to_string(n) + " words");
    NgramEntry entry;
    std::vector<WordId> ngram;
    try {
      entry.log_prob = ParseDouble(fields[0]);
      if (fields.size() == n + 2) entry.log_backoff = ParseDouble(fields[n + 1]);
    } catch (const Error &) {
      ArpaError(name, line_no, "bad number");
    }
    for (std::size_t i = 1; i <= n; ++i) {
      WordId id = n == 1 ? lm.AddWord(fields[i]) : lm.FindWord(fields[i]);
      if (id == kNoWord)
        ArpaError(name, line_no, "word '" + fields[i] + "' has no unigram");
      ngram.push_back(id);
    }
    if (lm.FindEntry(ngram)) ArpaError(name, line_no, "duplicate n-gram");
    lm.SetEntry(ngram, entry);
    ++seen[n - 1];
  }
  if (!ended) ArpaError(name, line_no, "missing \\end\\");
  for (std::size_t n = 0; n < declared.size(); ++n)
    if (seen[n] != declared[n])
      ArpaError(name, line_no,
                "header declares " + std::to_string(declared[n]) + " " +
                    std::to_string(n + 1) + "-grams but body has " +
                    std::to_string(seen[n]));
  return lm;
}

NgramLm ReadArpa(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "' for reading");
  return ParseArpa(in, path);
}

void WriteArpa(const NgramLm &lm, std::ostream &out) {
  out << "\\data\\\n";
  for (int n = 1; n <= lm.order(); ++n)
    out << "ngram " << n << "=" << lm.NumNgrams(n) << "\n";
  for (int n = 1; n <= lm.order(); ++n) {
    out << "\n\\" << n << "-grams:\n";
    for (const auto &g : lm.SortedNgrams(n)) {
      const NgramEntry *e = lm.FindEntry(g);
      out << FormatDouble(e->log_prob) << '\t';
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i > 0) out << ' ';
        out << lm.Word(g[i]);
      }
      if (e->log_backoff != 0.0) out << '\t' << FormatDouble(e->log_backoff);
      out << '\n';
    }
  }
  out << "\n\\end\\\n";
}

void WriteArpa(const NgramLm &lm, const std::string &path) {
  std::ostringstream buffer;
  WriteArpa(lm, buffer);
  WriteFile(path, buffer.str());
}

}  // namespace zrasr

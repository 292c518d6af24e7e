// src/base/text-utils.cc

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

#include "zrasr/base/text-utils.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "zrasr/base/error.h"

namespace zrasr {

namespace {

// Decodes the code point starting at byte offset *pos and advances *pos.
// Returns a negative value for malformed input, having consumed one byte.
UChar32 NextCodepoint(std::string_view text, int32_t *pos) {
  UChar32 c;
  int32_t length = static_cast<int32_t>(text.size());
  U8_NEXT(reinterpret_cast<const uint8_t *>(text.data()), *pos, length, c);
  return c;
}

UChar32 FirstCodepoint(std::string_view grapheme) {
  if (grapheme.empty()) return -1;
  int32_t pos = 0;
  return NextCodepoint(grapheme, &pos);
}

std::string EncodeCodepoint(UChar32 c) {
  std::string out;
  icu::UnicodeString(c).toUTF8String(out);
  return out;
}

}  // namespace

std::vector<std::string> SplitCodepoints(std::string_view text) {
  std::vector<std::string> out;
  int32_t pos = 0;
  const int32_t length = static_cast<int32_t>(text.size());
  while (pos < length) {
    int32_t start = pos;
    NextCodepoint(text, &pos);
    out.emplace_back(text.substr(start, pos - start));
  }
  return out;
}

std::size_t CodepointLength(std::string_view text) {
  std::size_t n = 0;
  int32_t pos = 0;
  const int32_t length = static_cast<int32_t>(text.size());
  while (pos < length) {
    NextCodepoint(text, &pos);
    ++n;
  }
  return n;
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  int32_t pos = 0;
  const int32_t length = static_cast<int32_t>(text.size());
  while (pos < length) {
    int32_t start = pos;
    UChar32 c = NextCodepoint(text, &pos);
    if (c >= 0 && u_isUWhiteSpace(c)) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.append(text.substr(start, pos - start));
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<std::string> SplitOn(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      break;
    }
    out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::string Join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

std::string Trim(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  return std::string(text.substr(begin, end - begin));
}

std::string ToLower(std::string_view text) {
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  u.toLower(icu::Locale::getRoot());
  std::string out;
  u.toUTF8String(out);
  return out;
}

std::string StripAccents(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfd = icu::Normalizer2::getNFDInstance(status);
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error(ErrorKind::kIo, "ICU normalizer unavailable");
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString decomposed = nfd->normalize(u, status);
  icu::UnicodeString kept;
  for (int32_t i = 0; i < decomposed.length();) {
    UChar32 c = decomposed.char32At(i);
    if (u_charType(c) != U_NON_SPACING_MARK) kept.append(c);
    i += U16_LENGTH(c);
  }
  icu::UnicodeString composed = nfc->normalize(kept, status);
  if (U_FAILURE(status)) throw Error(ErrorKind::kIo, "ICU normalization failed");
  std::string out;
  composed.toUTF8String(out);
  return out;
}

bool IsPunctuation(std::string_view grapheme) {
  UChar32 c = FirstCodepoint(grapheme);
  return c >= 0 && u_ispunct(c);
}

bool IsLetter(std::string_view grapheme) {
  UChar32 c = FirstCodepoint(grapheme);
  return c >= 0 && u_isalpha(c);
}

bool IsApostrophe(std::string_view grapheme) {
  switch (FirstCodepoint(grapheme)) {
    case 0x0027:  // '
    case 0x2019:  // right single quotation mark
    case 0x2018:  // left single quotation mark
    case 0x02BC:  // modifier letter apostrophe
    case 0x0060:  // grave accent
    case 0x00B4:  // acute accent
      return true;
    default:
      return false;
  }
}

std::vector<std::string> CaseVariants(std::string_view grapheme) {
  UChar32 c = FirstCodepoint(grapheme);
  std::vector<std::string> out;
  if (c < 0) return out;
  for (UChar32 v : {u_toupper(c), u_totitle(c), u_tolower(c)}) {
    if (v == c) continue;
    std::string s = EncodeCodepoint(v);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

std::vector<std::string> ReadLines(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "' for reading");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read error on '" + path + "'");
  return lines;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::kIo, "write error on '" + path + "'");
}

std::string FormatDouble(double value) {
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

double ParseDouble(std::string_view text) {
  std::string s = Trim(text);
  if (s == "inf" || s == "Infinity") return std::numeric_limits<double>::infinity();
  if (s == "-inf" || s == "-Infinity") return -std::numeric_limits<double>::infinity();
  double value = 0.0;
  const char *begin = s.data();
  if (!s.empty() && s[0] == '+') ++begin;
  auto result = std::from_chars(begin, s.data() + s.size(), value);
  if (s.empty() || result.ec != std::errc() || result.ptr != s.data() + s.size())
    throw Error(ErrorKind::kParse, "not a number: '" + std::string(text) + "'");
  return value;
}

long long ParseInt(std::string_view text) {
  std::string s = Trim(text);
  long long value = 0;
  auto result = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || result.ec != std::errc() || result.ptr != s.data() + s.size())
    throw Error(ErrorKind::kParse, "not an integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace zrasr

// include/zrasr/base/text-utils.h

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

#ifndef ZRASR_BASE_TEXT_UTILS_H_
#define ZRASR_BASE_TEXT_UTILS_H_

#include <string>
#include <string_view>
#include <vector>

namespace zrasr {

// Throughout the toolkit a "grapheme" is one Unicode code point, stored as
// its UTF-8 encoding.  Malformed bytes come back as single-byte strings so
// that callers can treat them as foreign graphemes.
std::vector<std::string> SplitCodepoints(std::string_view text);

std::size_t CodepointLength(std::string_view text);

// Splits on Unicode white space; empty fields are dropped.
std::vector<std::string> SplitWhitespace(std::string_view text);

// Splits on a single byte; empty fields are kept.
std::vector<std::string> SplitOn(std::string_view text, char sep);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

std::string Trim(std::string_view text);

std::string ToLower(std::string_view text);

// Canonical decomposition, removal of nonspacing marks, recomposition.
std::string StripAccents(std::string_view text);

// Predicates on a single grapheme (first code point of the argument).
bool IsPunctuation(std::string_view grapheme);
bool IsLetter(std::string_view grapheme);
bool IsApostrophe(std::string_view grapheme);

// Upper- and title-case variants of a grapheme, excluding itself.
std::vector<std::string> CaseVariants(std::string_view grapheme);

// File helpers.  Lines are returned without their terminator; a trailing
// '\r' is removed.  Errors raise zrasr::Error with ErrorKind::kIo.
std::vector<std::string> ReadLines(const std::string &path);
std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, std::string_view content);

// Shortest decimal representation that reads back to the same double.
std::string FormatDouble(double value);
double ParseDouble(std::string_view text);  // throws kParse
long long ParseInt(std::string_view text);  // throws kParse

}  // namespace zrasr

#endif  // ZRASR_BASE_TEXT_UTILS_H_

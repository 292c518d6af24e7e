// include/zrasr/pipeline/manifest.h

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

#ifndef ZRASR_PIPELINE_MANIFEST_H_
#define ZRASR_PIPELINE_MANIFEST_H_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace zrasr {

using Json = nlohmann::ordered_json;

std::string Sha256Hex(std::string_view data);
std::string Sha256File(const std::string &path);

// {"path", "bytes", "sha256"} for an existing file.  `shown_path` is what
// gets recorded.
Json FileRecord(const std::string &path, const std::string &shown_path);

// Path of `path` relative to `base` when it lies inside it, else `path`.
std::string DisplayPath(const std::string &path, const std::string &base);

void WriteJson(const std::string &path, const Json &json);
Json ReadJson(const std::string &path);

}  // namespace zrasr

#endif  // ZRASR_PIPELINE_MANIFEST_H_

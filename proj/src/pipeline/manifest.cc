// src/pipeline/manifest.cc

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

#include "zrasr/pipeline/manifest.h"

#include <openssl/evp.h>

#include <filesystem>
#include <memory>

#include "zrasr/base/error.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {

std::string Sha256Hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw Error(ErrorKind::kIo, "sha256 failed");
  static const char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string Sha256File(const std::string &path) { return Sha256Hex(ReadFile(path)); }

Json FileRecord(const std::string &path, const std::string &shown_path) {
  std::string content = ReadFile(path);
  Json j;
  j["path"] = shown_path;
  j["bytes"] = content.size();
  j["sha256"] = Sha256Hex(content);
  return j;
}

std::string DisplayPath(const std::string &path, const std::string &base) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::path p = fs::weakly_canonical(path, ec);
  if (ec) return path;
  fs::path b = fs::weakly_canonical(base, ec);
  if (ec) return path;
  auto rel = p.lexically_relative(b);
  if (rel.empty() || *rel.begin() == "..") return path;
  return rel.generic_string();
}

void WriteJson(const std::string &path, const Json &json) { WriteFile(path, json.dump(2) + "\n"); }

Json ReadJson(const std::string &path) {
  try {
    return Json::parse(ReadFile(path));
  } catch (const Json::exception &e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }
}

}  // namespace zrasr

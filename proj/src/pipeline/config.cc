// src/pipeline/config.cc

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

#include "zrasr/pipeline/config.h"

#include <filesystem>
#include <functional>
#include <set>
#include <vector>

#include "zrasr/base/error.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {

const char *DecoderKindName(DecoderKind k) {
  switch (k) {
    case DecoderKind::kFst: return "fst";
    case DecoderKind::kTrie: return "trie";
    case DecoderKind::kLcs: return "lcs";
  }
  return "?";
}

const char *ClassLmStrategyName(ClassLmStrategy s) {
  switch (s) {
    case ClassLmStrategy::kNone: return "none";
    case ClassLmStrategy::kExpand: return "expand";
    case ClassLmStrategy::kSeed: return "seed";
    case ClassLmStrategy::kSupervised: return "supervised";
    case ClassLmStrategy::kAugment: return "augment";
  }
  return "?";
}

namespace {

struct Field {
  const char *key;
  // Stages whose output depends on the field.
  std::set<std::string> stages;
  std::function<void(PipelineConfig &, const std::string &)> set;
  std::function<std::string(const PipelineConfig &)> get;
};

[[noreturn]] void Bad(const std::string &key, const std::string &value, const std::string &why) {
  throw Error(ErrorKind::kValidation, "config " + key + " = '" + value + "': " + why);
}

bool ParseBool(const std::string &key, const std::string &v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  Bad(key, v, "expected true or false");
}

double ParseReal(const std::string &key, const std::string &v) {
  if (v == "inf") return kInfinity;
  try {
    return ParseDouble(v);
  } catch (const Error &) {
    Bad(key, v, "expected a number");
  }
}

long long ParseInteger(const std::string &key, const std::string &v) {
  try {
    return ParseInt(v);
  } catch (const Error &) {
    Bad(key, v, "expected an integer");
  }
}

std::string Real(double v) { return v == kInfinity ? "inf" : FormatDouble(v); }

template <typename T>
Field Text(const char *key, std::set<std::string> stages, T PipelineConfig::*m) {
  return {key, std::move(stages), [m](PipelineConfig &c, const std::string &v) { c.*m = v; },
          [m](const PipelineConfig &c) { return c.*m; }};
}

template <typename T>
Field Number(const char *key, std::set<std::string> stages, T PipelineConfig::*m) {
  return {key, std::move(stages),
          [m, key](PipelineConfig &c, const std::string &v) {
            if constexpr (std::is_floating_point_v<T>) {
              c.*m = ParseReal(key, v);
            } else {
              long long x = ParseInteger(key, v);
              if (x < 0) Bad(key, v, "must not be negative");
              c.*m = static_cast<T>(x);
            }
          },
          [m](const PipelineConfig &c) {
            if constexpr (std::is_floating_point_v<T>) {
              return Real(c.*m);
            } else {
              return std::to_string(c.*m);
            }
          }};
}

// Path-valued fields belong to no stage: stages hash the files they read.
const std::vector<Field> &Fields() {
  using C = PipelineConfig;
  static const std::vector<Field> fields = {
      Text("work_dir", {}, &C::work_dir),
      Number("seed", {"classlm", "decode"}, &C::seed),
      Number("num_workers", {}, &C::num_workers),
      Text("corpus", {}, &C::corpus),
      Text("g2p", {}, &C::g2p),
      Text("g2p_extra", {}, &C::g2p_extra),
      {"fold_case", {"clean", "lexicon"},
       [](C &c, const std::string &v) { c.fold_case = ParseBool("fold_case", v); },
       [](const C &c) { return std::string(c.fold_case ? "true" : "false"); }},
      {"casing", {"clean"},
       [](C &c, const std::string &v) {
         if (v == "keep") c.clean.casing = Casing::kKeepMixed;
         else if (v == "lower") c.clean.casing = Casing::kLowercase;
         else if (v == "truecase") c.clean.casing = Casing::kTruecase;
         else Bad("casing", v, "expected keep, lower or truecase");
       },
       [](const C &c) {
         return std::string(c.clean.casing == Casing::kKeepMixed   ? "keep"
                            : c.clean.casing == Casing::kLowercase ? "lower"
                                                                   : "truecase");
       }},
      {"punctuation", {"clean"},
       [](C &c, const std::string &v) {
         if (v == "keep") c.clean.punctuation = PunctuationPolicy::kKeep;
         else if (v == "strip") c.clean.punctuation = PunctuationPolicy::kStrip;
         else if (v == "split") c.clean.punctuation = PunctuationPolicy::kSplit;
         else Bad("punctuation", v, "expected keep, strip or split");
       },
       [](const C &c) {
         return std::string(c.clean.punctuation == PunctuationPolicy::kKeep    ? "keep"
                            : c.clean.punctuation == PunctuationPolicy::kStrip ? "strip"
                                                                               : "split");
       }},
      {"foreign", {"clean"},
       [](C &c, const std::string &v) {
         if (v == "drop-line") c.clean.foreign_action = ForeignGraphemeAction::kDropLine;
         else if (v == "drop-token") c.clean.foreign_action = ForeignGraphemeAction::kDropToken;
         else Bad("foreign", v, "expected drop-line or drop-token");
       },
       [](const C &c) {
         return std::string(c.clean.foreign_action == ForeignGraphemeAction::kDropLine
                                ? "drop-line"
                                : "drop-token");
       }},
      {"prefix_rules", {"clean"},
       [](C &c, const std::string &v) { c.clean.prefix_rules = ParsePrefixRules(v); },
       [](const C &c) {
         std::vector<std::string> parts;
         for (const auto &r : c.clean.prefix_rules)
           parts.push_back(std::string(r.mode == PrefixRule::Mode::kAttach ? "attach:" : "detach:") +
                           r.prefix);
         return Join(parts, ",");
       }},
      Text("stoplist", {}, &C::stoplist),
      Number("bible_threshold", {"clean"}, &C::bible_threshold),
      Number("max_sentence_len", {"clean"}, &C::max_sentence_len),
      Text("gazetteer", {}, &C::gazetteer),
      Number("gazetteer_copies", {"clean"}, &C::gazetteer_copies),
      {"order", {"lm", "classlm"},
       [](C &c, const std::string &v) {
         long long x = ParseInteger("order", v);
         if (x < 1 || x > kMaxNgramOrder) Bad("order", v, "expected 1, 2 or 3");
         c.train.order = static_cast<int>(x);
       },
       [](const C &c) { return std::to_string(c.train.order); }},
      {"discounting", {"lm", "classlm"},
       [](C &c, const std::string &v) {
         if (v == "kneser-ney") c.train.discounting = Discounting::kKneserNey;
         else if (v == "none") c.train.discounting = Discounting::kNone;
         else Bad("discounting", v, "expected kneser-ney or none");
       },
       [](const C &c) {
         return std::string(c.train.discounting == Discounting::kKneserNey ? "kneser-ney" : "none");
       }},
      {"kn_discount", {"lm", "classlm"},
       [](C &c, const std::string &v) {
         double d = ParseReal("kn_discount", v);
         if (!(d > 0.0 && d < 1.0)) Bad("kn_discount", v, "expected a value in (0, 1)");
         c.train.kn_discount.fill(d);
       },
       [](const C &c) { return Real(c.train.kn_discount[0]); }},
      {"unk_floor", {"lm", "classlm"},
       [](C &c, const std::string &v) { c.train.unk_floor = ParseReal("unk_floor", v); },
       [](const C &c) { return Real(c.train.unk_floor); }},
      {"max_unigrams", {"lm"},
       [](C &c, const std::string &v) { c.limits.max_unigrams = ParseInteger("max_unigrams", v); },
       [](const C &c) { return std::to_string(c.limits.max_unigrams); }},
      {"max_bigrams", {"lm"},
       [](C &c, const std::string &v) { c.limits.max_bigrams = ParseInteger("max_bigrams", v); },
       [](const C &c) { return std::to_string(c.limits.max_bigrams); }},
      {"max_trigrams", {"lm"},
       [](C &c, const std::string &v) { c.limits.max_trigrams = ParseInteger("max_trigrams", v); },
       [](const C &c) { return std::to_string(c.limits.max_trigrams); }},
      {"class_lm", {"lexicon", "classlm", "decode"},
       [](C &c, const std::string &v) {
         if (v == "none") c.class_lm = ClassLmStrategy::kNone;
         else if (v == "expand") c.class_lm = ClassLmStrategy::kExpand;
         else if (v == "seed") c.class_lm = ClassLmStrategy::kSeed;
         else if (v == "supervised") c.class_lm = ClassLmStrategy::kSupervised;
         else if (v == "augment") c.class_lm = ClassLmStrategy::kAugment;
         else Bad("class_lm", v, "expected none, expand, seed, supervised or augment");
       },
       [](const C &c) { return std::string(ClassLmStrategyName(c.class_lm)); }},
      Number("num_clusters", {"classlm"}, &C::num_clusters),
      Number("brown_window", {"classlm"}, &C::brown_window),
      Number("lambda", {"decode"}, &C::lambda),
      Text("ne_classes", {}, &C::ne_classes),
      Text("new_terms", {}, &C::new_terms),
      Text("ne_annotations", {}, &C::ne_annotations),
      Number("augment_rate", {"classlm"}, &C::augment_rate),
      Text("input", {}, &C::input),
      {"input_format", {"decode"},
       [](C &c, const std::string &v) {
         if (v == "cn") c.input_is_phones = false;
         else if (v == "phones") c.input_is_phones = true;
         else Bad("input_format", v, "expected cn or phones");
       },
       [](const C &c) { return std::string(c.input_is_phones ? "phones" : "cn"); }},
      Text("phone_map", {}, &C::phone_map),
      {"decoder", {"decode"},
       [](C &c, const std::string &v) {
         if (v == "fst") c.decoder = DecoderKind::kFst;
         else if (v == "trie") c.decoder = DecoderKind::kTrie;
         else if (v == "lcs") c.decoder = DecoderKind::kLcs;
         else Bad("decoder", v, "expected fst, trie or lcs");
       },
       [](const C &c) { return std::string(DecoderKindName(c.decoder)); }},
      {"static_graph", {"graph", "decode"},
       [](C &c, const std::string &v) { c.static_graph = ParseBool("static_graph", v); },
       [](const C &c) { return std::string(c.static_graph ? "true" : "false"); }},
      {"max_states", {"graph", "decode"},
       [](C &c, const std::string &v) { c.budget.max_states = ParseInteger("max_states", v); },
       [](const C &c) { return std::to_string(c.budget.max_states); }},
      {"max_arcs", {"graph", "decode"},
       [](C &c, const std::string &v) { c.budget.max_arcs = ParseInteger("max_arcs", v); },
       [](const C &c) { return std::to_string(c.budget.max_arcs); }},
      Number("beam", {"decode"}, &C::beam),
      Number("sil_penalty", {"graph", "decode"}, &C::sil_penalty),
      Text("preferred_vocab", {}, &C::preferred_vocab),
      Text("soundex_classes", {}, &C::soundex_classes),
      Text("phone_simplification", {}, &C::phone_simplification),
      Number("shorter_match_bias", {"decode"}, &C::shorter_match_bias),
      Number("lcs_coverage", {"decode"}, &C::lcs_coverage),
      Number("lcs_min_match", {"decode"}, &C::lcs_min_match),
      Text("durations", {}, &C::durations),
      Text("reference", {}, &C::reference),
      Text("cost_table", {}, &C::cost_table),
      Number("variant_min_len", {"variants"}, &C::variant_min_len),
      Number("variant_cutoff", {"variants"}, &C::variant_cutoff),
      Number("variant_threshold", {"variants"}, &C::variant_threshold),
  };
  return fields;
}

}  // namespace

void PipelineConfig::Set(const std::string &key, const std::string &value) {
  for (const auto &f : Fields())
    if (key == f.key) {
      f.set(*this, value);
      return;
    }
  throw Error(ErrorKind::kValidation, "unknown config key '" + key + "'");
}

void PipelineConfig::Apply(const std::map<std::string, std::string> &settings) {
  for (const auto &[k, v] : settings) Set(k, v);
}

void PipelineConfig::Validate() const {
  Require("corpus");
  Require("g2p");
  Require("input");
  ValidateSettings();
}

void PipelineConfig::Require(const std::string &key) const {
  std::string value = Get(key);
  if (value.empty()) throw Error(ErrorKind::kValidation, "config " + key + " is required");
  if (!std::filesystem::is_regular_file(value))
    throw Error(ErrorKind::kValidation, "config " + key + ": no such file '" + value + "'");
}

std::string PipelineConfig::Get(const std::string &key) const {
  for (const auto &f : Fields())
    if (key == f.key) return f.get(*this);
  throw Error(ErrorKind::kValidation, "unknown config key '" + key + "'");
}

void PipelineConfig::ValidateSettings() const {
  namespace fs = std::filesystem;
  auto need = [](const std::string &key, const std::string &path) {
    if (!fs::is_regular_file(path))
      throw Error(ErrorKind::kValidation, "config " + key + ": no such file '" + path + "'");
  };
  auto optional = [&](const std::string &key, const std::string &path) {
    if (!path.empty()) need(key, path);
  };
  optional("g2p_extra", g2p_extra);
  optional("stoplist", stoplist);
  optional("gazetteer", gazetteer);
  optional("ne_classes", ne_classes);
  optional("new_terms", new_terms);
  optional("ne_annotations", ne_annotations);
  optional("phone_map", phone_map);
  optional("preferred_vocab", preferred_vocab);
  optional("soundex_classes", soundex_classes);
  optional("phone_simplification", phone_simplification);
  optional("durations", durations);
  optional("reference", reference);
  optional("cost_table", cost_table);
  if (work_dir.empty()) throw Error(ErrorKind::kValidation, "config work_dir is empty");
  if (num_workers < 1) throw Error(ErrorKind::kValidation, "config num_workers must be >= 1");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw Error(ErrorKind::kValidation, "config lambda must lie in [0, 1]");
  if (!(shorter_match_bias >= 0.0 && shorter_match_bias <= 1.0))
    throw Error(ErrorKind::kValidation, "config shorter_match_bias must lie in [0, 1]");
  if (!(lcs_coverage > 0.0 && lcs_coverage <= 1.0))
    throw Error(ErrorKind::kValidation, "config lcs_coverage must lie in (0, 1]");
  if (gazetteer_copies < 1) throw Error(ErrorKind::kValidation, "config gazetteer_copies must be >= 1");
  if (budget.max_states == 0 || budget.max_arcs == 0)
    throw Error(ErrorKind::kValidation, "config size budget must be positive");
  if (static_graph && class_lm != ClassLmStrategy::kNone)
    throw Error(ErrorKind::kValidation,
                "config static_graph supports only the word LM (class_lm = none)");
  if (class_lm != ClassLmStrategy::kNone && class_lm != ClassLmStrategy::kAugment &&
      num_clusters < 1 && class_lm != ClassLmStrategy::kSupervised)
    throw Error(ErrorKind::kValidation, "config num_clusters must be >= 1");
  if ((class_lm == ClassLmStrategy::kSeed || class_lm == ClassLmStrategy::kSupervised ||
       class_lm == ClassLmStrategy::kExpand) &&
      ne_classes.empty())
    throw Error(ErrorKind::kValidation, std::string("config class_lm = ") +
                                            ClassLmStrategyName(class_lm) + " needs ne_classes");
  if (class_lm == ClassLmStrategy::kExpand && new_terms.empty())
    throw Error(ErrorKind::kValidation, "config class_lm = expand needs new_terms");
  if (class_lm == ClassLmStrategy::kAugment && ne_annotations.empty() && gazetteer.empty())
    throw Error(ErrorKind::kValidation,
                "config class_lm = augment needs ne_annotations or a gazetteer");
}

std::string PipelineConfig::Describe(const std::string &stage) const {
  std::string out;
  for (const auto &f : Fields())
    if (f.stages.count(stage)) out += std::string(f.key) + " = " + f.get(*this) + "\n";
  return out;
}

std::vector<std::string> ConfigKeys() {
  std::vector<std::string> keys;
  for (const auto &f : Fields()) keys.push_back(f.key);
  return keys;
}

bool IsPathKey(const std::string &key) {
  static const std::set<std::string> paths = {
      "work_dir",       "corpus",          "g2p",           "g2p_extra",   "stoplist",
      "gazetteer",      "ne_classes",      "new_terms",     "ne_annotations", "input",
      "phone_map",      "preferred_vocab", "soundex_classes", "phone_simplification",
      "durations",      "reference",       "cost_table"};
  return paths.count(key) > 0;
}

std::map<std::string, std::string> ReadConfigFile(const std::string &path) {
  std::map<std::string, std::string> settings;
  auto lines = ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = Trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::kValidation, path + ":" + std::to_string(i + 1) + ": expected key = value");
    std::string key = Trim(line.substr(0, eq)), value = Trim(line.substr(eq + 1));
    if (key.empty()) throw Error(ErrorKind::kValidation, path + ":" + std::to_string(i + 1) + ": empty key");
    settings[key] = value;
  }
  return settings;
}

}  // namespace zrasr

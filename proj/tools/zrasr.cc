// tools/zrasr.cc

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

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "zrasr/base/error.h"
#include "zrasr/base/text-utils.h"
#include "zrasr/pipeline/config.h"
#include "zrasr/pipeline/manifest.h"
#include "zrasr/pipeline/pipeline.h"
#include "zrasr/scoring/variant-clusters.h"
#include "zrasr/scoring/wer.h"

namespace {

namespace fs = std::filesystem;
using namespace zrasr;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitBudget = 4;
constexpr int kExitStage = 5;

// Settings shared by every subcommand, plus per-subcommand config keys that
// are exposed as --hyphenated-flags.
struct Invocation {
  std::string config_file;
  std::vector<std::string> overrides;
  std::string work_dir;
  std::map<std::string, std::string> flags;
  bool verbose = false;
};

std::string FlagName(const std::string &key) {
  std::string flag = key;
  for (auto &c : flag)
    if (c == '_') c = '-';
  return "--" + flag;
}

void AddCommon(CLI::App *app, Invocation *inv) {
  app->add_option("--config", inv->config_file, "key = value config file");
  app->add_option("--set", inv->overrides, "override, key=value (repeatable)");
  app->add_option("--work-dir", inv->work_dir, "directory holding the artifacts");
  app->add_flag("-v,--verbose", inv->verbose, "log progress");
}

void AddKeys(CLI::App *app, Invocation *inv, const std::vector<std::string> &keys) {
  for (const auto &key : keys) app->add_option(FlagName(key), inv->flags[key]);
}

// Config file first, then --set overrides, then explicit flags.  Relative
// paths in the config file are taken relative to the file's directory.
PipelineConfig Resolve(const Invocation &inv) {
  PipelineConfig cfg;
  if (!inv.config_file.empty()) {
    fs::path base = fs::path(inv.config_file).parent_path();
    for (auto [key, value] : ReadConfigFile(inv.config_file)) {
      if (IsPathKey(key) && !value.empty() && fs::path(value).is_relative())
        value = (base / value).lexically_normal().string();
      cfg.Set(key, value);
    }
  }
  for (const auto &kv : inv.overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::kValidation, "--set expects key=value, got '" + kv + "'");
    cfg.Set(Trim(kv.substr(0, eq)), Trim(kv.substr(eq + 1)));
  }
  for (const auto &[key, value] : inv.flags)
    if (!value.empty()) cfg.Set(key, value);
  if (!inv.work_dir.empty()) cfg.work_dir = inv.work_dir;
  return cfg;
}

void RequireArtifact(const std::string &path, const std::string &what) {
  if (!fs::is_regular_file(path))
    throw Error(ErrorKind::kValidation, what + " not found: '" + path + "' (run the earlier stage)");
}

void PrintStats(const StageResult &r) {
  for (const auto &out : r.outputs) std::cerr << "wrote " << out << "\n";
  std::cout << r.stats.dump(2) << "\n";
}

std::vector<std::vector<std::string>> ReadTokenLines(const std::string &path) {
  std::vector<std::vector<std::string>> out;
  for (const auto &line : ReadLines(path)) out.push_back(SplitWhitespace(line));
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"zrasr: text-side speech decoding toolkit"};
  app.require_subcommand(1);
  spdlog::set_level(spdlog::level::warn);

  const std::vector<std::string> g2p_keys = {"g2p", "g2p_extra", "fold_case"};
  const std::vector<std::string> lm_keys = {"order",       "discounting", "kn_discount",
                                            "unk_floor",   "max_unigrams", "max_bigrams",
                                            "max_trigrams"};

  Invocation clean_inv, lex_inv, lm_inv, class_inv, graph_inv, decode_inv, var_inv, score_inv,
      run_inv;

  auto *clean = app.add_subcommand("clean", "clean a raw corpus");
  AddCommon(clean, &clean_inv);
  AddKeys(clean, &clean_inv,
          {"corpus", "g2p", "g2p_extra", "fold_case", "casing", "punctuation", "foreign",
           "prefix_rules", "stoplist", "bible_threshold", "max_sentence_len", "gazetteer",
           "gazetteer_copies", "num_workers"});

  auto *lexicon = app.add_subcommand("build-lexicon", "build a pronunciation lexicon");
  AddCommon(lexicon, &lex_inv);
  AddKeys(lexicon, &lex_inv,
          {"g2p", "g2p_extra", "fold_case", "class_lm", "ne_classes", "new_terms", "num_workers"});

  auto *lm = app.add_subcommand("build-lm", "train and prune the word n-gram model");
  AddCommon(lm, &lm_inv);
  AddKeys(lm, &lm_inv, lm_keys);

  auto *classlm = app.add_subcommand("build-class-lm", "build a class or augmented model");
  AddCommon(classlm, &class_inv);
  {
    std::vector<std::string> keys = {"class_lm",   "num_clusters",   "brown_window",
                                     "ne_classes", "new_terms",      "ne_annotations",
                                     "gazetteer",  "augment_rate",   "seed",
                                     "num_workers"};
    keys.insert(keys.end(), g2p_keys.begin(), g2p_keys.end());
    keys.insert(keys.end(), lm_keys.begin(), lm_keys.end());
    AddKeys(classlm, &class_inv, keys);
  }

  auto *graph = app.add_subcommand("build-graph", "compose the static LG graph");
  AddCommon(graph, &graph_inv);
  AddKeys(graph, &graph_inv, {"max_states", "max_arcs", "sil_penalty"});

  auto *decode = app.add_subcommand("decode", "decode confusion networks or phone lines");
  AddCommon(decode, &decode_inv);
  std::string decode_lexicon;
  decode->add_option("--lexicon", decode_lexicon, "lexicon to use instead of the work dir's");
  AddKeys(decode, &decode_inv,
          {"input", "input_format", "phone_map", "decoder", "static_graph", "max_states",
           "max_arcs", "beam", "sil_penalty", "preferred_vocab", "soundex_classes",
           "phone_simplification", "shorter_match_bias", "lcs_coverage", "lcs_min_match",
           "class_lm", "lambda", "seed", "num_workers", "durations"});

  auto *variants = app.add_subcommand("cluster-variants", "cluster spelling variants");
  AddCommon(variants, &var_inv);
  std::string var_ref, var_hyp, var_out;
  variants->add_option("--ref", var_ref, "reference transcriptions");
  variants->add_option("--hyp", var_hyp, "hypothesis transcriptions");
  variants->add_option("--out", var_out, "clusters file to write");
  AddKeys(variants, &var_inv,
          {"cost_table", "variant_min_len", "variant_cutoff", "variant_threshold", "num_workers"});

  auto *score = app.add_subcommand("score", "word error rate");
  AddCommon(score, &score_inv);
  std::string score_ref, score_hyp, score_clusters;
  score->add_option("--ref", score_ref, "reference transcriptions")->required();
  score->add_option("--hyp", score_hyp, "hypothesis transcriptions")->required();
  score->add_option("--clusters", score_clusters, "variant clusters for normalized scoring");

  auto *run = app.add_subcommand("run", "run every enabled stage, skipping unchanged ones");
  AddCommon(run, &run_inv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto verbose = [&](const Invocation &inv) {
    if (inv.verbose) spdlog::set_level(spdlog::level::info);
  };

  const char *stage = "setup";
  try {
    if (clean->parsed()) {
      verbose(clean_inv);
      PipelineConfig cfg = Resolve(clean_inv);
      cfg.Require("corpus");
      cfg.Require("g2p");
      cfg.ValidateSettings();
      fs::create_directories(cfg.work_dir);
      stage = "clean";
      PrintStats(RunCleanStage(cfg, ArtifactPaths::InDirectory(cfg.work_dir)));
    } else if (lexicon->parsed()) {
      verbose(lex_inv);
      PipelineConfig cfg = Resolve(lex_inv);
      cfg.Require("g2p");
      cfg.ValidateSettings();
      auto p = ArtifactPaths::InDirectory(cfg.work_dir);
      RequireArtifact(p.corpus, "cleaned corpus");
      stage = "lexicon";
      PrintStats(RunLexiconStage(cfg, p));
    } else if (lm->parsed()) {
      verbose(lm_inv);
      PipelineConfig cfg = Resolve(lm_inv);
      cfg.ValidateSettings();
      auto p = ArtifactPaths::InDirectory(cfg.work_dir);
      RequireArtifact(p.corpus, "cleaned corpus");
      stage = "lm";
      PrintStats(RunLmStage(cfg, p));
    } else if (classlm->parsed()) {
      verbose(class_inv);
      PipelineConfig cfg = Resolve(class_inv);
      if (cfg.class_lm == ClassLmStrategy::kNone)
        throw Error(ErrorKind::kValidation, "build-class-lm needs --class-lm");
      if (cfg.class_lm == ClassLmStrategy::kAugment && cfg.ne_annotations.empty())
        cfg.Require("g2p");
      cfg.ValidateSettings();
      auto p = ArtifactPaths::InDirectory(cfg.work_dir);
      RequireArtifact(p.corpus, "cleaned corpus");
      stage = "classlm";
      PrintStats(RunClassLmStage(cfg, p));
    } else if (graph->parsed()) {
      verbose(graph_inv);
      PipelineConfig cfg = Resolve(graph_inv);
      cfg.static_graph = true;
      cfg.ValidateSettings();
      auto p = ArtifactPaths::InDirectory(cfg.work_dir);
      RequireArtifact(p.lexicon, "lexicon");
      RequireArtifact(p.lm, "language model");
      stage = "graph";
      PrintStats(RunGraphStage(cfg, p));
    } else if (decode->parsed()) {
      verbose(decode_inv);
      PipelineConfig cfg = Resolve(decode_inv);
      cfg.Require("input");
      cfg.ValidateSettings();
      fs::create_directories(cfg.work_dir);
      auto p = ArtifactPaths::InDirectory(cfg.work_dir);
      if (!decode_lexicon.empty()) p.lexicon = decode_lexicon;
      RequireArtifact(p.lexicon, "lexicon");
      if (cfg.decoder == DecoderKind::kFst) {
        if (cfg.static_graph) {
          RequireArtifact(p.graph, "decoding graph");
        } else {
          RequireArtifact(p.lm, "language model");
        }
      }
      stage = "decode";
      PrintStats(RunDecodeStage(cfg, p));
    } else if (variants->parsed()) {
      verbose(var_inv);
      PipelineConfig cfg = Resolve(var_inv);
      auto p = ArtifactPaths::InDirectory(cfg.work_dir);
      if (!var_ref.empty()) cfg.reference = var_ref;
      if (!var_hyp.empty()) p.hyp = var_hyp;
      if (!var_out.empty()) {
        p.variants = var_out;
      } else {
        fs::create_directories(cfg.work_dir);
      }
      cfg.Require("reference");
      cfg.ValidateSettings();
      RequireArtifact(p.hyp, "hypotheses");
      stage = "variants";
      PrintStats(RunVariantsStage(cfg, p));
    } else if (score->parsed()) {
      verbose(score_inv);
      RequireArtifact(score_ref, "reference");
      RequireArtifact(score_hyp, "hypotheses");
      stage = "score";
      auto refs = ReadTokenLines(score_ref);
      auto hyps = ReadTokenLines(score_hyp);
      std::cout << FormatWerReport(CorpusWer(refs, hyps));
      if (!score_clusters.empty()) {
        RequireArtifact(score_clusters, "clusters");
        WerReport norm = NormalizedCorpusWer(refs, hyps, ReadVariantClusters(score_clusters));
        for (const auto &line : SplitOn(FormatWerReport(norm), '\n'))
          if (!line.empty()) std::cout << "normalized_" << line << "\n";
      }
    } else if (run->parsed()) {
      verbose(run_inv);
      if (run_inv.config_file.empty() && run_inv.overrides.empty())
        throw Error(ErrorKind::kValidation, "run needs --config or --set");
      PipelineConfig cfg = Resolve(run_inv);
      stage = "pipeline";
      RunOutcome outcome = RunPipeline(cfg);
      for (const auto &s : outcome.run_log["stages"])
        std::cerr << s["name"].get<std::string>() << ": " << s["status"].get<std::string>()
                  << "\n";
      std::cout << (fs::path(cfg.work_dir) / "manifest.json").string() << "\n";
    }
  } catch (const StageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.cause_kind() == ErrorKind::kBudgetExceeded ? kExitBudget : kExitStage;
  } catch (const Error &e) {
    std::cerr << "error (" << stage << "): " << e.what() << "\n";
    // Before a stage starts, and for RunPipeline's own checks, everything is
    // a configuration problem.
    bool setup = std::string(stage) == "setup" || std::string(stage) == "pipeline";
    if (e.kind() == ErrorKind::kBudgetExceeded) return kExitBudget;
    return setup ? kExitValidation : kExitStage;
  } catch (const std::exception &e) {
    std::cerr << "error (" << stage << "): " << e.what() << "\n";
    return kExitStage;
  }
  return kExitOk;
}

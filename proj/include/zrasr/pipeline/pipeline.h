// include/zrasr/pipeline/pipeline.h

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

#ifndef ZRASR_PIPELINE_PIPELINE_H_
#define ZRASR_PIPELINE_PIPELINE_H_

#include <string>
#include <utility>
#include <vector>

#include "zrasr/base/error.h"
#include "zrasr/pipeline/config.h"
#include "zrasr/pipeline/manifest.h"

namespace zrasr {

// Artifact locations.  The pipeline places them all in the work
// directory; standalone subcommands point them anywhere.
struct ArtifactPaths {
  std::string corpus;
  std::string lexicon;
  std::string rejections;
  std::string lm;
  std::string class_prefix;  // class model files, or <prefix>.arpa for augment
  std::string graph;
  std::string graph_isyms;
  std::string graph_osyms;
  std::string hyp;
  std::string unmatched;
  std::string decode_meta;
  std::string variants;
  std::string wer;
  std::string wer_normalized;

  static ArtifactPaths InDirectory(const std::string &dir);
};

struct StageResult {
  Json stats = Json::object();
  std::vector<std::string> outputs;
  double busy_seconds = 0.0;  // decode only: time spent decoding
  std::size_t units = 0;      // decode only: utterances
};

// Stage functions, in pipeline order.
StageResult RunCleanStage(const PipelineConfig &cfg, const ArtifactPaths &p);
StageResult RunLexiconStage(const PipelineConfig &cfg, const ArtifactPaths &p);
StageResult RunLmStage(const PipelineConfig &cfg, const ArtifactPaths &p);
StageResult RunClassLmStage(const PipelineConfig &cfg, const ArtifactPaths &p);
StageResult RunGraphStage(const PipelineConfig &cfg, const ArtifactPaths &p);
StageResult RunDecodeStage(const PipelineConfig &cfg, const ArtifactPaths &p);
StageResult RunVariantsStage(const PipelineConfig &cfg, const ArtifactPaths &p);
StageResult RunScoreStage(const PipelineConfig &cfg, const ArtifactPaths &p);

// Files a stage reads, as (role, path).
std::vector<std::pair<std::string, std::string>> StageInputs(const std::string &stage,
                                                             const PipelineConfig &cfg,
                                                             const ArtifactPaths &p);

// Stages the configuration enables, in order.
std::vector<std::string> EnabledStages(const PipelineConfig &cfg);

// Error raised inside a stage, tagged with the stage name.
class StageError : public Error {
 public:
  StageError(const std::string &stage, const Error &cause);
  const std::string &stage() const { return stage_; }
  ErrorKind cause_kind() const { return cause_kind_; }

 private:
  std::string stage_;
  ErrorKind cause_kind_;
};

struct RunOutcome {
  Json manifest;  // deterministic: artifacts, hashes, statistics
  Json run_log;   // wall times, ran/skipped status, throughput
};

// Validates the configuration, then runs the enabled stages in order,
// skipping any whose inputs and settings hash to the value recorded by
// the previous run (and whose outputs are intact).  Writes manifest.json
// and run-log.json to the work directory.
RunOutcome RunPipeline(const PipelineConfig &cfg);

}  // namespace zrasr

#endif  // ZRASR_PIPELINE_PIPELINE_H_

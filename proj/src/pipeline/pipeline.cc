// src/pipeline/pipeline.cc

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

#include "zrasr/pipeline/pipeline.h"

#include <chrono>
#include <filesystem>
#include <map>

#include <spdlog/spdlog.h>

#include "zrasr/base/parallel.h"
#include "zrasr/base/text-utils.h"
#include "zrasr/classlm/class-lm.h"
#include "zrasr/classlm/clustering.h"
#include "zrasr/classlm/ne-augment.h"
#include "zrasr/fst/confusion-network.h"
#include "zrasr/fst/fst-builders.h"
#include "zrasr/fst/fst-decoder.h"
#include "zrasr/fst/fst-ops.h"
#include "zrasr/g2p/g2p.h"
#include "zrasr/matcher/lcs-decoder.h"
#include "zrasr/matcher/pron-trie.h"
#include "zrasr/matcher/trie-decoder.h"
#include "zrasr/scoring/normalize.h"
#include "zrasr/scoring/variant-clusters.h"
#include "zrasr/scoring/wer.h"

namespace zrasr {

namespace fs = std::filesystem;

ArtifactPaths ArtifactPaths::InDirectory(const std::string &dir) {
  auto at = [&](const char *name) { return (fs::path(dir) / name).string(); };
  ArtifactPaths p;
  p.corpus = at("corpus.txt");
  p.lexicon = at("lexicon.txt");
  p.rejections = at("lexicon-rejections.txt");
  p.lm = at("lm.arpa");
  p.class_prefix = at("classlm");
  p.graph = at("LG.fst");
  p.graph_isyms = at("LG.isyms");
  p.graph_osyms = at("LG.osyms");
  p.hyp = at("hyp.txt");
  p.unmatched = at("unmatched.txt");
  p.decode_meta = at("decode-meta.txt");
  p.variants = at("variants.txt");
  p.wer = at("wer.txt");
  p.wer_normalized = at("wer-normalized.txt");
  return p;
}

StageError::StageError(const std::string &stage, const Error &cause)
    : Error(cause.kind(), "stage " + stage + ": " + cause.what()),
      stage_(stage),
      cause_kind_(cause.kind()) {}

namespace {

G2PTable LoadG2p(const PipelineConfig &cfg) {
  G2PTable table = G2PTable::Read(cfg.g2p);
  if (!cfg.g2p_extra.empty()) table.Merge(G2PTable::Read(cfg.g2p_extra));
  table.set_fold_case(cfg.fold_case);
  return table;
}

std::set<std::string> ReadWordSet(const std::string &path) {
  std::set<std::string> words;
  for (const auto &line : ReadLines(path))
    for (auto &w : SplitWhitespace(line)) words.insert(std::move(w));
  return words;
}

std::vector<std::vector<std::string>> ReadTokenLines(const std::string &path) {
  std::vector<std::vector<std::string>> out;
  for (const auto &line : ReadLines(path)) out.push_back(SplitWhitespace(line));
  return out;
}

bool UsesClassModel(const PipelineConfig &cfg) { return cfg.class_lm != ClassLmStrategy::kNone; }

std::vector<std::string> ClassOutputs(const PipelineConfig &cfg, const ArtifactPaths &p) {
  if (cfg.class_lm == ClassLmStrategy::kAugment)
    return {p.class_prefix + ".corpus.txt", p.class_prefix + ".arpa"};
  return {p.class_prefix + ".clusters", p.class_prefix + ".arpa", p.class_prefix + ".emissions"};
}

Json NgramStats(const NgramLm &lm) {
  Json j;
  j["order"] = lm.order();
  for (int n = 1; n <= lm.order(); ++n) j["ngrams_" + std::to_string(n)] = lm.NumNgrams(n);
  return j;
}

}  // namespace

StageResult RunCleanStage(const PipelineConfig &cfg, const ArtifactPaths &p) {
  G2PTable table = LoadG2p(cfg);
  CleanOptions opts = cfg.clean;
  opts.num_workers = cfg.num_workers;
  RawCorpus raw = ReadRawCorpus(cfg.corpus);
  CleanCorpus corpus = CleanText(raw, table.Alphabet(), opts);
  StageResult r;
  r.stats["raw_lines"] = raw.lines.size();
  r.stats["clean_sentences"] = corpus.sentences.size();
  if (!cfg.stoplist.empty()) {
    corpus = CullBible(corpus, ReadStoplist(cfg.stoplist), cfg.bible_threshold);
    r.stats["after_cull"] = corpus.sentences.size();
  }
  if (cfg.max_sentence_len > 0)
    corpus = SegmentSentences(corpus, cfg.max_sentence_len, {".", "!", "?"});
  if (!cfg.gazetteer.empty()) {
    Gazetteer gaz = CleanGazetteer(ReadGazetteer(cfg.gazetteer), table.Alphabet(), opts);
    corpus = AugmentGazetteer(corpus, gaz, cfg.gazetteer_copies);
    r.stats["gazetteer_entries"] = gaz.size();
  }
  WriteCorpus(p.corpus, corpus);
  r.stats["sentences"] = corpus.sentences.size();
  r.stats["tokens"] = corpus.NumTokens();
  r.stats["vocab"] = corpus.vocab.size();
  r.outputs = {p.corpus};
  return r;
}

StageResult RunLexiconStage(const PipelineConfig &cfg, const ArtifactPaths &p) {
  CleanCorpus corpus = ReadCorpus(p.corpus);
  std::set<std::string> vocab;
  for (const auto &[w, n] : corpus.vocab) vocab.insert(w);
  if (UsesClassModel(cfg)) {
    if (!cfg.ne_classes.empty())
      for (const auto &[type, words] : ReadTypedWordList(cfg.ne_classes))
        vocab.insert(words.begin(), words.end());
    if (!cfg.new_terms.empty())
      for (const auto &w : ReadWordSet(cfg.new_terms)) vocab.insert(w);
  }
  LexiconBuildResult built = BuildLexicon(vocab, LoadG2p(cfg), cfg.num_workers);
  WriteLexicon(p.lexicon, built.lexicon);
  WriteRejections(p.rejections, built.rejections);
  StageResult r;
  r.stats["words"] = built.lexicon.entries.size();
  r.stats["pronunciations"] = built.lexicon.NumPronunciations();
  r.stats["rejected"] = built.rejections.size();
  r.stats["phones"] = built.lexicon.PhoneInventory().size();
  r.outputs = {p.lexicon, p.rejections};
  return r;
}

StageResult RunLmStage(const PipelineConfig &cfg, const ArtifactPaths &p) {
  CleanCorpus corpus = ReadCorpus(p.corpus);
  NgramLm lm = PruneToLimits(TrainNgramLm(corpus, cfg.train), cfg.limits);
  WriteArpa(lm, p.lm);
  StageResult r;
  r.stats = NgramStats(lm);
  r.outputs = {p.lm};
  return r;
}

StageResult RunClassLmStage(const PipelineConfig &cfg, const ArtifactPaths &p) {
  CleanCorpus corpus = ReadCorpus(p.corpus);
  StageResult r;
  r.stats["strategy"] = ClassLmStrategyName(cfg.class_lm);
  r.outputs = ClassOutputs(cfg, p);

  if (cfg.class_lm == ClassLmStrategy::kAugment) {
    NeAnnotation ann;
    if (!cfg.ne_annotations.empty()) {
      ann = ReadNeAnnotation(cfg.ne_annotations);
    } else {
      Gazetteer gaz = CleanGazetteer(ReadGazetteer(cfg.gazetteer), LoadG2p(cfg).Alphabet(),
                                     cfg.clean);
      ann = AnnotateWithGazetteer(corpus, gaz);
    }
    Gazetteer gaz;
    if (!cfg.gazetteer.empty())
      gaz = CleanGazetteer(ReadGazetteer(cfg.gazetteer), LoadG2p(cfg).Alphabet(), cfg.clean);
    NeAugmentResult aug = AugmentNeData(corpus, ann, gaz, cfg.augment_rate, cfg.seed);
    WriteCorpus(r.outputs[0], aug.corpus);
    NgramLm lm = PruneToLimits(TrainNgramLm(aug.corpus, cfg.train), cfg.limits);
    WriteArpa(lm, r.outputs[1]);
    r.stats["generated_sentences"] = aug.sources.size();
    r.stats["model"] = NgramStats(lm);
    return r;
  }

  auto ne = ReadTypedWordList(cfg.ne_classes);
  Clustering clustering;
  if (cfg.class_lm == ClassLmStrategy::kSupervised) {
    std::set<std::string> vocab;
    for (const auto &[w, n] : corpus.vocab) vocab.insert(w);
    clustering = SupervisedClasses(ne, vocab);
  } else {
    BrownOptions bo;
    bo.num_clusters = cfg.num_clusters;
    bo.window = cfg.brown_window;
    bo.num_workers = cfg.num_workers;
    if (cfg.class_lm == ClassLmStrategy::kSeed)
      for (const auto &[type, words] : ne) bo.seeds.push_back(words);
    BrownResult brown = BrownCluster(corpus, bo);
    clustering = brown.clustering;
    r.stats["mutual_information"] = brown.objective.back();
    if (cfg.class_lm == ClassLmStrategy::kExpand) {
      std::set<std::string> ne_vocab, terms;
      for (const auto &[type, words] : ne) ne_vocab.insert(words.begin(), words.end());
      for (const auto &w : ReadWordSet(cfg.new_terms)) {
        if (clustering.Of(w) >= 0) {
          spdlog::warn("expansion term '{}' already clustered; left in place", w);
          continue;
        }
        terms.insert(w);
      }
      clustering = ExpandClusters(clustering, terms, ne_vocab);
      r.stats["expansion_terms"] = terms.size();
    }
  }
  ClassLm lm = BuildClassLm(corpus, clustering, cfg.train);
  WriteClassLm(p.class_prefix, lm);
  r.stats["clusters"] = clustering.num_clusters();
  r.stats["class_model"] = NgramStats(lm.class_model());
  return r;
}

StageResult RunGraphStage(const PipelineConfig &cfg, const ArtifactPaths &p) {
  Lexicon lex = ReadLexicon(p.lexicon);
  NgramLm lm = ReadArpa(p.lm);
  Wfst l = LexiconToFst(lex, cfg.sil_penalty);
  Wfst g = LmToFst(lm);
  Wfst lg = Compose(l, g, cfg.budget);
  StripDisambiguation(&lg);
  WriteFstText(lg, p.graph);
  lg.isyms()->Write(p.graph_isyms);
  lg.osyms()->Write(p.graph_osyms);
  StageResult r;
  r.stats["lexicon_states"] = l.NumStates();
  r.stats["lexicon_arcs"] = l.NumArcs();
  r.stats["grammar_states"] = g.NumStates();
  r.stats["grammar_arcs"] = g.NumArcs();
  r.stats["graph_states"] = lg.NumStates();
  r.stats["graph_arcs"] = lg.NumArcs();
  r.outputs = {p.graph, p.graph_isyms, p.graph_osyms};
  return r;
}

StageResult RunDecodeStage(const PipelineConfig &cfg, const ArtifactPaths &p) {
  std::vector<ConfusionNetwork> cns;
  if (cfg.input_is_phones) {
    for (const auto &phones : ReadPhoneUtterances(cfg.input))
      cns.push_back(ConfusionNetwork::FromPhones(phones));
  } else {
    cns = ReadConfusionNetworks(cfg.input);
  }
  if (!cfg.phone_map.empty()) {
    PhoneMap pm = PhoneMap::Read(cfg.phone_map);
    for (auto &cn : cns) cn = MapConfusionNetwork(cn, pm);
  }
  Lexicon lex = ReadLexicon(p.lexicon);
  // Homonym counts and the length distribution come from the cleaned corpus
  // when one is available.
  CleanCorpus corpus = fs::exists(p.corpus) ? ReadCorpus(p.corpus) : CleanCorpus();

  TrieTunings tunings;
  if (!cfg.preferred_vocab.empty()) tunings.preferred_vocab = ReadWordSet(cfg.preferred_vocab);
  if (!cfg.phone_simplification.empty())
    tunings.phone_simplification = PhoneMap::Read(cfg.phone_simplification);
  if (!cfg.soundex_classes.empty())
    tunings.soundex_classes = SoundexClasses::Read(cfg.soundex_classes);
  tunings.homonym_unigram = corpus.vocab;
  tunings.shorter_match_bias = cfg.shorter_match_bias;
  if (cfg.shorter_match_bias > 0.0) {
    std::vector<double> hist;
    double total = 0.0;
    for (const auto &[w, n] : corpus.vocab) {
      std::size_t len = CodepointLength(w);
      if (hist.size() <= len) hist.resize(len + 1, 0.0);
      hist[len] += static_cast<double>(n);
      total += static_cast<double>(n);
    }
    if (total > 0.0)
      for (auto &h : hist) h /= total;
    tunings.target_length_dist = hist;
  }

  std::vector<DecodeResult> results(cns.size());
  auto start = std::chrono::steady_clock::now();
  if (cfg.decoder == DecoderKind::kFst) {
    DecoderOptions opts;
    opts.budget = cfg.budget;
    opts.beam = cfg.beam;
    opts.sil_penalty = cfg.sil_penalty;
    opts.fallback_tunings = tunings;
    opts.num_workers = cfg.num_workers;
    if (cfg.static_graph) {
      auto isyms = std::make_shared<SymbolTable>(SymbolTable::Read(p.graph_isyms));
      auto osyms = std::make_shared<SymbolTable>(SymbolTable::Read(p.graph_osyms));
      Wfst graph = ReadFstText(p.graph, isyms, osyms);
      PronTrie trie = PronTrie::Build(lex);
      ParallelFor(cns.size(), cfg.num_workers, [&](std::size_t i, int) {
        try {
          results[i] = DecodeWithGraph(cns[i], graph, cfg.budget);
        } catch (const Error &e) {
          if (e.kind() != ErrorKind::kNoPath) throw;
          TrieTunings t = tunings;
          t.seed = cfg.seed + i;
          MatchResult m = TrieDecode(cns[i].BestPhones(), trie, t);
          results[i].words = m.words;
          results[i].unmatched = m.unmatched;
          results[i].fallback = true;
        }
      });
    } else {
      std::shared_ptr<const LanguageModel> lm = std::make_shared<NgramLm>(ReadArpa(p.lm));
      if (cfg.class_lm == ClassLmStrategy::kAugment) {
        auto aug = std::make_shared<NgramLm>(ReadArpa(p.class_prefix + ".arpa"));
        lm = std::make_shared<InterpolatedLm>(aug, lm, cfg.lambda);
      } else if (UsesClassModel(cfg)) {
        auto cls = std::make_shared<ClassLm>(ReadClassLm(p.class_prefix));
        lm = std::make_shared<InterpolatedLm>(cls, lm, cfg.lambda);
      }
      FstDecoder decoder(lex, lm, opts);
      results = decoder.DecodeAll(cns);
    }
  } else {
    PronTrie trie = PronTrie::Build(lex);
    LcsParams lp;
    lp.coverage_threshold = cfg.lcs_coverage;
    lp.min_match_len = cfg.lcs_min_match;
    ParallelFor(cns.size(), cfg.num_workers, [&](std::size_t i, int) {
      PhoneSeq phones = cns[i].BestPhones();
      MatchResult m;
      if (cfg.decoder == DecoderKind::kTrie) {
        TrieTunings t = tunings;
        t.seed = cfg.seed + i;
        m = TrieDecode(phones, trie, t);
      } else {
        m = LcsDecode(phones, lex, lp);
      }
      results[i].words = std::move(m.words);
      results[i].unmatched = std::move(m.unmatched);
    });
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<std::vector<std::string>> hyps;
  std::vector<MatchResult> reports;
  std::string meta;
  std::size_t fallbacks = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    hyps.push_back(results[i].words);
    reports.push_back({results[i].words, results[i].unmatched});
    fallbacks += results[i].fallback;
    meta += std::to_string(i) + "\t" + (results[i].fallback ? "fallback" : "ok") + "\t" +
            (results[i].weight == kInfinity ? std::string("-") : FormatDouble(results[i].weight)) +
            "\n";
  }
  WriteWordHypotheses(p.hyp, hyps);
  WriteUnmatchedReport(p.unmatched, reports);
  WriteFile(p.decode_meta, meta);
  StageResult r;
  r.stats["decoder"] = DecoderKindName(cfg.decoder);
  r.stats["utterances"] = cns.size();
  r.stats["fallbacks"] = fallbacks;
  std::size_t unmatched = 0;
  for (const auto &m : reports) unmatched += m.unmatched.size();
  r.stats["unmatched_phones"] = unmatched;
  r.outputs = {p.hyp, p.unmatched, p.decode_meta};
  r.busy_seconds = seconds;
  r.units = cns.size();
  return r;
}

StageResult RunVariantsStage(const PipelineConfig &cfg, const ArtifactPaths &p) {
  std::set<std::string> words;
  for (const auto &path : {cfg.reference, p.hyp})
    for (const auto &tokens : ReadTokenLines(path))
      for (auto &w : NormalizeTokens(tokens)) words.insert(std::move(w));
  CostTable costs = cfg.cost_table.empty() ? CostTable() : CostTable::Read(cfg.cost_table);
  NeighborArray na = PairwiseDistances(words, cfg.variant_min_len, cfg.variant_cutoff, costs,
                                       cfg.num_workers);
  VariantClusters vc = GrowClusters(na, cfg.variant_threshold);
  WriteVariantClusters(p.variants, vc);
  StageResult r;
  r.stats["words"] = words.size();
  r.stats["participating_words"] = na.words.size();
  r.stats["pairs_within_cutoff"] = na.NumPairs();
  r.stats["clusters"] = vc.clusters.size();
  r.outputs = {p.variants};
  return r;
}

StageResult RunScoreStage(const PipelineConfig &cfg, const ArtifactPaths &p) {
  auto refs = ReadTokenLines(cfg.reference);
  auto hyps = ReadTokenLines(p.hyp);
  WerReport raw = CorpusWer(refs, hyps);
  VariantClusters vc = fs::exists(p.variants) ? ReadVariantClusters(p.variants) : VariantClusters();
  WerReport norm = NormalizedCorpusWer(refs, hyps, vc);
  WriteFile(p.wer, FormatWerReport(raw));
  WriteFile(p.wer_normalized, FormatWerReport(norm));
  StageResult r;
  r.stats["wer"] = raw.wer();
  r.stats["normalized_wer"] = norm.wer();
  r.outputs = {p.wer, p.wer_normalized};
  return r;
}

std::vector<std::pair<std::string, std::string>> StageInputs(const std::string &stage,
                                                             const PipelineConfig &cfg,
                                                             const ArtifactPaths &p) {
  std::vector<std::pair<std::string, std::string>> in;
  auto opt = [&](const char *role, const std::string &path) {
    if (!path.empty()) in.emplace_back(role, path);
  };
  auto g2p = [&]() {
    opt("g2p", cfg.g2p);
    opt("g2p_extra", cfg.g2p_extra);
  };
  if (stage == "clean") {
    opt("corpus", cfg.corpus);
    g2p();
    opt("stoplist", cfg.stoplist);
    opt("gazetteer", cfg.gazetteer);
  } else if (stage == "lexicon") {
    opt("clean_corpus", p.corpus);
    g2p();
    if (UsesClassModel(cfg)) {
      opt("ne_classes", cfg.ne_classes);
      opt("new_terms", cfg.new_terms);
    }
  } else if (stage == "lm") {
    opt("clean_corpus", p.corpus);
  } else if (stage == "classlm") {
    opt("clean_corpus", p.corpus);
    if (cfg.class_lm == ClassLmStrategy::kAugment) {
      opt("ne_annotations", cfg.ne_annotations);
      opt("gazetteer", cfg.gazetteer);
      g2p();
    } else {
      opt("ne_classes", cfg.ne_classes);
      if (cfg.class_lm == ClassLmStrategy::kExpand) opt("new_terms", cfg.new_terms);
    }
  } else if (stage == "graph") {
    opt("lexicon", p.lexicon);
    opt("lm", p.lm);
  } else if (stage == "decode") {
    opt("input", cfg.input);
    opt("phone_map", cfg.phone_map);
    opt("lexicon", p.lexicon);
    opt("clean_corpus", p.corpus);
    opt("preferred_vocab", cfg.preferred_vocab);
    opt("phone_simplification", cfg.phone_simplification);
    opt("soundex_classes", cfg.soundex_classes);
    if (cfg.decoder == DecoderKind::kFst) {
      if (cfg.static_graph) {
        opt("graph", p.graph);
        opt("graph_isyms", p.graph_isyms);
        opt("graph_osyms", p.graph_osyms);
      } else {
        opt("lm", p.lm);
        if (UsesClassModel(cfg))
          for (const auto &f : ClassOutputs(cfg, p)) opt("class_model", f);
      }
    }
  } else if (stage == "variants") {
    opt("reference", cfg.reference);
    opt("hyp", p.hyp);
    opt("cost_table", cfg.cost_table);
  } else if (stage == "score") {
    opt("reference", cfg.reference);
    opt("hyp", p.hyp);
    opt("variants", p.variants);
  }
  return in;
}

std::vector<std::string> EnabledStages(const PipelineConfig &cfg) {
  std::vector<std::string> stages{"clean", "lexicon", "lm"};
  if (UsesClassModel(cfg)) stages.push_back("classlm");
  if (cfg.decoder == DecoderKind::kFst && cfg.static_graph) stages.push_back("graph");
  stages.push_back("decode");
  if (!cfg.reference.empty()) {
    stages.push_back("variants");
    stages.push_back("score");
  }
  return stages;
}

namespace {

StageResult RunStage(const std::string &stage, const PipelineConfig &cfg, const ArtifactPaths &p) {
  if (stage == "clean") return RunCleanStage(cfg, p);
  if (stage == "lexicon") return RunLexiconStage(cfg, p);
  if (stage == "lm") return RunLmStage(cfg, p);
  if (stage == "classlm") return RunClassLmStage(cfg, p);
  if (stage == "graph") return RunGraphStage(cfg, p);
  if (stage == "decode") return RunDecodeStage(cfg, p);
  if (stage == "variants") return RunVariantsStage(cfg, p);
  return RunScoreStage(cfg, p);
}

}  // namespace

RunOutcome RunPipeline(const PipelineConfig &cfg) {
  cfg.Validate();
  fs::create_directories(cfg.work_dir);
  const std::string stamp_dir = (fs::path(cfg.work_dir) / ".stamps").string();
  fs::create_directories(stamp_dir);
  const ArtifactPaths paths = ArtifactPaths::InDirectory(cfg.work_dir);
  auto shown = [&](const std::string &path) { return DisplayPath(path, cfg.work_dir); };

  RunOutcome outcome;
  Json &manifest = outcome.manifest;
  manifest["format"] = "zrasr-manifest-1";
  manifest["seed"] = cfg.seed;
  manifest["decoder"] = DecoderKindName(cfg.decoder);
  manifest["class_lm"] = ClassLmStrategyName(cfg.class_lm);
  manifest["stages"] = Json::array();
  Json &log = outcome.run_log;
  log["stages"] = Json::array();
  Json bookkeeping = Json::array();

  for (const auto &stage : EnabledStages(cfg)) {
    Json inputs = Json::array();
    std::string key_material = "stage " + stage + "\n" + cfg.Describe(stage);
    for (const auto &[role, path] : StageInputs(stage, cfg, paths)) {
      if (!fs::exists(path)) {
        // Optional intermediates (for example variant clusters) may be
        // absent; they are then simply not part of the key.
        continue;
      }
      Json rec = FileRecord(path, shown(path));
      rec["role"] = role;
      key_material += role + " " + rec["sha256"].get<std::string>() + "\n";
      inputs.push_back(rec);
    }
    const std::string key = Sha256Hex(key_material);
    const std::string stamp_path = (fs::path(stamp_dir) / (stage + ".json")).string();
    bookkeeping.push_back(shown(stamp_path));

    bool skip = false;
    Json stamp;
    if (fs::exists(stamp_path)) {
      stamp = ReadJson(stamp_path);
      skip = stamp.value("key", "") == key;
      if (skip)
        for (const auto &out : stamp["outputs"]) {
          std::string path = (fs::path(cfg.work_dir) / out["path"].get<std::string>()).string();
          if (!fs::exists(path) || Sha256File(path) != out["sha256"].get<std::string>()) {
            skip = false;
            break;
          }
        }
    }

    Json entry;
    entry["name"] = stage;
    Json timing;
    timing["name"] = stage;
    auto start = std::chrono::steady_clock::now();
    if (skip) {
      spdlog::info("stage {}: inputs unchanged, skipped", stage);
      entry["inputs"] = inputs;
      entry["outputs"] = stamp["outputs"];
      entry["stats"] = stamp["stats"];
      timing["status"] = "skipped";
    } else {
      spdlog::info("stage {}: running", stage);
      StageResult result;
      try {
        result = RunStage(stage, cfg, paths);
      } catch (const StageError &) {
        throw;
      } catch (const Error &e) {
        throw StageError(stage, e);
      } catch (const std::exception &e) {
        throw StageError(stage, Error(ErrorKind::kIo, e.what()));
      }
      Json outputs = Json::array();
      for (const auto &out : result.outputs) outputs.push_back(FileRecord(out, shown(out)));
      entry["inputs"] = inputs;
      entry["outputs"] = outputs;
      entry["stats"] = result.stats;
      Json new_stamp;
      new_stamp["key"] = key;
      new_stamp["outputs"] = outputs;
      new_stamp["stats"] = result.stats;
      WriteJson(stamp_path, new_stamp);
      timing["status"] = "ran";
      if (stage == "decode" && result.units > 0) {
        Json tp;
        tp["utterances"] = result.units;
        tp["decode_seconds"] = result.busy_seconds;
        tp["utterances_per_second"] =
            result.busy_seconds > 0 ? result.units / result.busy_seconds : 0.0;
        if (!cfg.durations.empty()) {
          double audio = 0.0;
          for (const auto &line : ReadLines(cfg.durations))
            if (!Trim(line).empty()) audio += ParseDouble(Trim(line));
          tp["audio_seconds"] = audio;
          tp["audio_per_decode_second"] =
              result.busy_seconds > 0 ? audio / result.busy_seconds : 0.0;
        }
        log["decode_throughput"] = tp;
      }
    }
    timing["wall_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log["stages"].push_back(timing);
    manifest["stages"].push_back(entry);
  }

  const std::string log_path = (fs::path(cfg.work_dir) / "run-log.json").string();
  const std::string manifest_path = (fs::path(cfg.work_dir) / "manifest.json").string();
  manifest["bookkeeping"] = bookkeeping;
  manifest["run_log"] = shown(log_path);
  WriteJson(log_path, log);
  WriteJson(manifest_path, manifest);
  return outcome;
}

}  // namespace zrasr

// g2g_main.cc
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Copyright 2026 The g2g Authors.

//
// \file
// The `g2g` command-line tool. Exit codes: 0 success, 1 data or I/O error,
// 2 usage error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "g2g/char_lm.h"
#include "g2g/error.h"
#include "g2g/g2g_model.h"
#include "g2g/homophone.h"
#include "g2g/pipeline.h"
#include "g2g/text_io.h"
#include "g2g/version.h"

namespace g2g {
namespace {

namespace fs = std::filesystem;

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void RequireFile(const std::string &path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw Error(ErrorKind::kIo, "cannot read '" + path + "'");
}

void RequireOutputDir(const std::string &path) {
  fs::path dir = fs::path(path).parent_path();
  std::error_code ec;
  if (!dir.empty() && !fs::is_directory(dir, ec)) {
    throw Error(ErrorKind::kIo, "no directory for output '" + path + "'");
  }
}

PhoneInventory Inventory(const std::string &phones) {
  if (phones.empty()) return PhoneInventory::Default();
  RequireFile(phones);
  return PhoneInventory::FromFile(phones);
}

// "S:T" source and target caps.
std::pair<int, int> ParseCaps(const std::string &caps) {
  auto colon = caps.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("");
    size_t a = 0, b = 0;
    int s = std::stoi(caps.substr(0, colon), &a);
    int t = std::stoi(caps.substr(colon + 1), &b);
    if (a != colon || b != caps.size() - colon - 1 || s < 1 || t < 1 || s > 8 || t > 8) {
      throw std::invalid_argument("");
    }
    return {s, t};
  } catch (const std::logic_error &) {
    throw UsageError("--caps expects S:T with both in 1..8, got '" + caps + "'");
  }
}

// Output path for budget n of a sweep: "{n}" is replaced, otherwise ".n<N>"
// goes before the extension.
std::string SweepPath(const std::string &out, int n) {
  std::string tag = std::to_string(n);
  if (auto pos = out.find("{n}"); pos != std::string::npos) {
    return out.substr(0, pos) + tag + out.substr(pos + 3);
  }
  fs::path p(out);
  fs::path name = p.stem();
  name += ".n" + tag;
  name += p.extension();
  return (p.parent_path() / name).string();
}

struct TrainCharLmArgs {
  std::string words, out;
  int order = CharLm::kDefaultOrder;
};

int TrainCharLmCmd(const TrainCharLmArgs &a) {
  RequireFile(a.words);
  RequireOutputDir(a.out);
  auto words = ReadNames(a.words);
  CharLm lm = CharLm::Train(words, a.order);
  lm.Save(a.out);
  std::cout << "words " << words.size() << "\tvocabulary " << lm.lm().vocabulary_size()
            << "\tmodel " << a.out << "\n";
  return 0;
}

struct ClusterArgs {
  std::string lexicon, charlm, phones, out_clusters, out_pairs;
};

int ClusterCmd(const ClusterArgs &a) {
  RequireFile(a.lexicon);
  RequireFile(a.charlm);
  RequireOutputDir(a.out_clusters);
  RequireOutputDir(a.out_pairs);
  PhoneInventory inv = Inventory(a.phones);
  auto lexicon = ReadLexicon(a.lexicon, inv);
  CharLm lm = CharLm::Load(a.charlm);
  auto clusters = AssignRoots(BuildClusters(lexicon, inv), lm);
  auto pairs = EmitPairs(clusters);
  AtomicWriteFile(a.out_clusters, FormatClusters(clusters));
  AtomicWriteFile(a.out_pairs, FormatPairs(pairs));
  std::cout << "entries " << lexicon.size() << "\tclusters " << clusters.size() << "\tpairs "
            << pairs.size() << "\n";
  return 0;
}

struct TrainG2gArgs {
  std::string pairs, lexicon, charlm, phones, out;
  int order = 6;
  std::string caps = "2:2";
  double link_penalty = 0.1;
  int em_iterations = 50;
  double tolerance = 1e-6;
  double prune = 1e-4;
};

int TrainG2gCmd(const TrainG2gArgs &a, int jobs) {
  if (a.pairs.empty() == a.lexicon.empty()) {
    throw UsageError("give exactly one of --pairs or --lexicon");
  }
  if (!a.lexicon.empty() && a.charlm.empty()) throw UsageError("--lexicon needs --charlm");
  if (!a.pairs.empty() && !a.charlm.empty()) throw UsageError("--charlm only goes with --lexicon");

  G2gConfig config;
  config.lm_order = a.order;
  std::tie(config.alignment.max_source, config.alignment.max_target) = ParseCaps(a.caps);
  config.alignment.link_penalty = a.link_penalty;
  config.alignment.max_iterations = a.em_iterations;
  config.alignment.tolerance = a.tolerance;
  config.alignment.prune_threshold = a.prune;
  config.alignment.jobs = jobs;

  RequireOutputDir(a.out);
  std::optional<G2gModel> model;
  size_t pair_count = 0;
  if (!a.pairs.empty()) {
    RequireFile(a.pairs);
    auto pairs = ReadPairs(a.pairs);
    pair_count = pairs.size();
    model.emplace(TrainG2gFromPairs(pairs, config));
  } else {
    RequireFile(a.lexicon);
    RequireFile(a.charlm);
    PhoneInventory inv = Inventory(a.phones);
    auto lexicon = ReadLexicon(a.lexicon, inv);
    CharLm lm = CharLm::Load(a.charlm);
    auto result = TrainG2gHom(lexicon, lm, inv, config);
    pair_count = result.pairs.size();
    std::cerr << "clusters " << result.clusters.size() << "\n";
    model.emplace(std::move(result.model));
  }
  const auto &lls = model->alignment().log_likelihoods();
  for (size_t i = 0; i < lls.size(); ++i) {
    std::cerr << "em iteration " << i << "\tlog-likelihood " << FormatDouble(lls[i]) << "\n";
  }
  model->Save(a.out);
  std::cout << "pairs " << pair_count << "\tunits " << model->alignment().size()
            << "\tem-iterations " << (lls.empty() ? 0 : lls.size() - 1) << "\tconverged "
            << (model->alignment().converged() ? "yes" : "no") << "\tmodel " << a.out << "\n";
  return 0;
}

struct ApplyArgs {
  std::string model, input, out;
  size_t n = 5;
  size_t beam = 64;
  int max_insertions = 2;
};

int ApplyCmd(const ApplyArgs &a) {
  RequireFile(a.model);
  if (!a.out.empty()) RequireOutputDir(a.out);
  G2gModel model = G2gModel::Load(a.model);
  std::error_code ec;
  std::vector<WrittenForm> inputs = fs::is_regular_file(a.input, ec)
                                        ? ReadNames(a.input)
                                        : std::vector<WrittenForm>{NormalizeWritten(a.input)};
  DecodeOptions options;
  options.n = a.n;
  options.beam = std::max(a.beam, a.n);
  options.max_insertions = a.max_insertions;

  std::string out;
  size_t ok = 0;
  for (const auto &w : inputs) {
    try {
      for (const auto &h : DecodeTopN(model, w, options)) {
        out += w.str() + "\t" + std::to_string(h.rank) + "\t" + Render(ToAmUnits(h.output)) +
               "\t" + FormatDouble(h.logprob) + "\n";
      }
      ++ok;
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::kOovGrapheme && e.kind() != ErrorKind::kNoHypothesis) throw;
      std::cerr << w.str() << ": " << e.what() << "\n";
    }
  }
  if (a.out.empty()) {
    std::cout << out;
  } else {
    AtomicWriteFile(a.out, out);
  }
  return ok > 0 ? 0 : kExitData;
}

struct BuildLexiconArgs {
  std::string model, names, out, mode = "mixed";
  std::vector<int> budgets = {2};
  size_t beam = 64;
  int max_insertions = 2;
  bool with_scores = false;
};

int BuildLexiconCmd(const BuildLexiconArgs &a, int jobs) {
  VariantOptions options;
  try {
    options.mode = ParseMode(a.mode);
  } catch (const Error &e) {
    throw UsageError(e.what());
  }
  if (options.mode != VariantMode::kDefaultsOnly && a.model.empty()) {
    throw UsageError("--model is required unless --mode defaults-only");
  }
  options.beam = a.beam;
  options.max_insertions = a.max_insertions;
  std::vector<std::string> paths;
  for (int n : a.budgets) {
    paths.push_back(a.budgets.size() == 1 ? a.out : SweepPath(a.out, n));
  }
  RequireFile(a.names);
  for (const auto &p : paths) RequireOutputDir(p);

  std::optional<G2gModel> model;
  if (!a.model.empty()) {
    RequireFile(a.model);
    model.emplace(G2gModel::Load(a.model));
  }
  auto names = ReadNames(a.names);
  for (size_t i = 0; i < a.budgets.size(); ++i) {
    auto lex = BuildDecodingLexicon(names, model ? &*model : nullptr, VariantBudget(a.budgets[i]),
                                    options, jobs);
    AtomicWriteFile(paths[i], FormatLexicon(lex, a.with_scores));
    auto s = lex.Summary();
    std::cout << "n " << a.budgets[i] << "\tnames " << s.names << "\tvariants " << s.variants
              << "\tg2g " << s.g2g_variants << "\tfallbacks " << s.fallbacks << "\tout "
              << paths[i] << "\n";
  }
  return 0;
}

int Run(int argc, char **argv) {
  CLI::App app{"Grapheme-to-grapheme respelling models and decoding lexicons"};
  app.set_config("--config", "", "key=value settings; command-line flags win");
  app.set_version_flag("--version",
                       "g2g " + std::string(kToolkitVersion) + " (char-lm format " +
                           std::to_string(kCharLmFormatVersion) + ", g2g model format " +
                           std::to_string(kG2gModelFormatVersion) + ")");
  int jobs = 1;
  app.add_option("--jobs,-j", jobs, "worker threads")->check(CLI::Range(1, 256));
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  TrainCharLmArgs lm_args;
  auto *lm_cmd = app.add_subcommand("train-charlm", "train a position-tagged character LM");
  lm_cmd->add_option("--words,words", lm_args.words, "one word per line")->required();
  lm_cmd->add_option("--order", lm_args.order, "n-gram order")
      ->check(CLI::Range(1, 32))
      ->capture_default_str();
  lm_cmd->add_option("--out,-o", lm_args.out, "model file")->required();

  ClusterArgs cl_args;
  auto *cl_cmd = app.add_subcommand("cluster", "group homophones and pick cluster roots");
  cl_cmd->add_option("--lexicon", cl_args.lexicon, "written<TAB>phones lexicon")->required();
  cl_cmd->add_option("--charlm", cl_args.charlm, "character LM file")->required();
  cl_cmd->add_option("--phones", cl_args.phones, "phone inventory file (default: built in)");
  cl_cmd->add_option("--out-clusters", cl_args.out_clusters, "cluster listing")->required();
  cl_cmd->add_option("--out-pairs", cl_args.out_pairs, "member<TAB>root pairs")->required();

  TrainG2gArgs tg_args;
  auto *tg_cmd = app.add_subcommand("train-g2g", "train a joint-sequence G2G model");
  tg_cmd->add_option("--pairs", tg_args.pairs, "source<TAB>target pairs");
  tg_cmd->add_option("--lexicon", tg_args.lexicon, "lexicon to mine homophone pairs from");
  tg_cmd->add_option("--charlm", tg_args.charlm, "character LM for root selection");
  tg_cmd->add_option("--phones", tg_args.phones, "phone inventory file (default: built in)");
  tg_cmd->add_option("--order", tg_args.order, "graphone LM order")
      ->check(CLI::Range(1, 32))
      ->capture_default_str();
  tg_cmd->add_option("--caps", tg_args.caps, "max source:target unit lengths")
      ->capture_default_str();
  tg_cmd->add_option("--link-penalty", tg_args.link_penalty, "weight of non 1:1 units")
      ->check(CLI::Range(1e-12, 1.0))
      ->capture_default_str();
  tg_cmd->add_option("--em-iterations", tg_args.em_iterations, "EM iteration cap")
      ->check(CLI::Range(0, 100000))
      ->capture_default_str();
  tg_cmd->add_option("--tolerance", tg_args.tolerance, "stop below this likelihood gain")
      ->capture_default_str();
  tg_cmd->add_option("--prune", tg_args.prune, "drop units with smaller expected counts")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  tg_cmd->add_option("--out,-o", tg_args.out, "model file")->required();

  ApplyArgs ap_args;
  auto *ap_cmd = app.add_subcommand("apply", "decode respellings of a word or a word list");
  ap_cmd->add_option("--model", ap_args.model, "G2G model file")->required();
  ap_cmd->add_option("--input,input", ap_args.input, "a word, or a file of words")->required();
  ap_cmd->add_option("-n", ap_args.n, "hypotheses per word")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  ap_cmd->add_option("--beam", ap_args.beam, "beam width (raised to n)")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  ap_cmd->add_option("--max-insertions", ap_args.max_insertions, "empty-source units in a row")
      ->check(CLI::Range(0, 8))
      ->capture_default_str();
  ap_cmd->add_option("--out,-o", ap_args.out, "write here instead of stdout");

  BuildLexiconArgs bl_args;
  auto *bl_cmd = app.add_subcommand("build-lexicon", "write a decoding lexicon of variants");
  bl_cmd->add_option("--model", bl_args.model, "G2G model file");
  bl_cmd->add_option("--names", bl_args.names, "one name per line")->required();
  bl_cmd->add_option("-n", bl_args.budgets, "variant budget; a list such as 2,3,4,5 sweeps")
      ->delimiter(',')
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  bl_cmd->add_option("--mode", bl_args.mode, "mixed, defaults-only or g2g-only")
      ->capture_default_str();
  bl_cmd->add_option("--beam", bl_args.beam, "beam width")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  bl_cmd->add_option("--max-insertions", bl_args.max_insertions, "empty-source units in a row")
      ->check(CLI::Range(0, 8))
      ->capture_default_str();
  bl_cmd->add_flag("--with-scores", bl_args.with_scores, "add a log-probability column");
  bl_cmd->add_option("--out,-o", bl_args.out,
                     "lexicon file; sweeps fill in {n} or add .n<N> before the extension")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*lm_cmd) return TrainCharLmCmd(lm_args);
    if (*cl_cmd) return ClusterCmd(cl_args);
    if (*tg_cmd) return TrainG2gCmd(tg_args, jobs);
    if (*ap_cmd) return ApplyCmd(ap_args);
    if (*bl_cmd) return BuildLexiconCmd(bl_args, jobs);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace g2g

int main(int argc, char **argv) { return g2g::Run(argc, argv); }

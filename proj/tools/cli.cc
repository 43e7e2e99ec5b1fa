// Copyright 2026 The fet Authors.
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

#include "cli.h"

#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fet/alignment.h"
#include "fet/backend.h"
#include "fet/conformance.h"
#include "fet/errors.h"
#include "fet/evaluation.h"
#include "fet/fixture_store.h"
#include "fet/ontology.h"
#include "fet/remote_backend.h"
#include "fet/resolution.h"

namespace fet {
namespace {

constexpr int kUsageExit = 1;

void AddTypingOptions(CLI::App *cmd, RunConfig *c) {
  cmd->add_option("--ontology", c->ontology, "Type ontology file")->required();
  cmd->add_option("--verbalizer", c->verbalizer, "Verbalizer JSON file")
      ->required();
  cmd->add_option("--patterns", c->patterns,
                  "Hearst pattern file (default: built-in patterns)");
  cmd->add_option("--theta", c->theta, "Minimum rank gain to descend")
      ->capture_default_str();
  cmd->add_option("--w-cand", c->w_cand, "Candidate-label weight")
      ->capture_default_str();
  cmd->add_option("--w-head", c->w_head, "Head-word weight")
      ->capture_default_str();
  cmd->add_option("--top-k", c->top_k, "Predictions per pattern")
      ->capture_default_str();
  cmd->add_option("--min-votes", c->min_votes,
                  "Votes needed to keep a label (default: n/2 + 1)");
  cmd->add_option("--parallelism", c->parallelism,
                  "Mentions typed concurrently")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-nli", c->no_nli, "Rank by candidate credit only");
  cmd->add_flag("--no-headword", c->no_headword, "Skip head-word parsing");
  cmd->add_flag("--no-ensemble", c->no_ensemble, "Use only the first pattern");
}

// Reads a configuration file, reporting any failure as a ConfigError.
template <typename Loader>
auto LoadConfigFile(const std::string &what, Loader loader) {
  try {
    return loader();
  } catch (const DataError &e) {
    throw ConfigError(what + ": " + e.what());
  }
}

TyperConfig BuildTyperConfig(const RunConfig &c) {
  TyperConfig t;
  if (!c.patterns.empty()) {
    t.candidates.patterns =
        LoadConfigFile("patterns", [&] { return LoadPatterns(c.patterns); });
  }
  if (c.no_ensemble) {
    t.candidates.patterns.erase(t.candidates.patterns.begin() + 1,
                                t.candidates.patterns.end());
    t.candidates.min_votes = 1;
  } else {
    t.candidates.min_votes = c.min_votes;
  }
  t.candidates.top_k = c.top_k;
  t.candidates.use_head_word = !c.no_headword;
  t.weights = {c.w_cand, c.w_head};
  t.theta = c.theta;
  t.use_nli = !c.no_nli;
  t.Validate();
  return t;
}

std::vector<LabeledMention> ReadInput(const std::string &input,
                                      std::istream &in) {
  if (input.empty() || input == "-") {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return ParseDataset(text);
  }
  return LoadDataset(input);
}

struct Resources {
  TypeOntology ontology;
  Verbalizer verbalizer;
  TyperConfig config;
};

// Loads and cross-checks every configuration input without touching the
// backend.
Resources LoadResources(const RunConfig &c) {
  Resources r;
  r.ontology =
      LoadConfigFile("ontology", [&] { return LoadOntology(c.ontology); });
  r.verbalizer = Verbalizer::Load(c.verbalizer);
  r.verbalizer.CheckAgainst(r.ontology);
  r.config = BuildTyperConfig(c);
  return r;
}

// Types every mention, up to `parallelism` at a time, and writes the
// decisions in input order. Per-mention failures are reported one per line
// and nothing is written.
int TypeAll(const RunConfig &c, const Resources &res, Transport *transport,
            const std::vector<LabeledMention> &mentions, std::ostream &out,
            std::ostream &err) {
  ModelClient client(transport);
  Typer typer(res.ontology, res.verbalizer, client, res.config);

  std::vector<std::string> lines(mentions.size());
  std::vector<std::unique_ptr<Error>> failures(mentions.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < mentions.size(); i = next++) {
      try {
        TypingDecision d =
            typer.TypeMention(mentions[i].sentence, mentions[i].span);
        lines[i] = DecisionToJson(d).dump();
      } catch (const Error &e) {
        failures[i] = std::make_unique<Error>(e);
      }
    }
  };
  const int threads = std::max(
      1, std::min<int>(c.parallelism, static_cast<int>(mentions.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();

  int code = 0;
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (!failures[i]) continue;
    err << "error: mention " << i + 1 << ": " << failures[i]->what() << "\n";
    if (code == 0) code = failures[i]->exit_code();
  }
  if (code != 0) return code;
  for (const auto &line : lines) out << line << "\n";
  return 0;
}

int CmdType(const RunConfig &c, const std::string &input, std::istream &in,
            std::ostream &out, std::ostream &err) {
  const Resources res = LoadResources(c);
  const auto mentions = ReadInput(input, in);
  std::unique_ptr<Transport> transport;
  if (c.backend == "fixture") {
    if (c.fixtures_dir.empty()) {
      throw ConfigError("--fixtures-dir is required with --backend fixture");
    }
    transport = std::make_unique<FixtureTransport>(c.fixtures_dir);
  } else if (c.backend == "remote") {
    if (c.backend_url.empty()) {
      throw ConfigError("--backend-url is required with --backend remote");
    }
    transport = std::make_unique<RemoteTransport>(c.backend_url);
  } else {
    throw ConfigError("unknown backend '" + c.backend + "'");
  }
  if (mentions.empty()) return 0;
  return TypeAll(c, res, transport.get(), mentions, out, err);
}

int CmdRecord(const RunConfig &c, const std::string &input, std::istream &in,
              std::ostream &out, std::ostream &err) {
  const Resources res = LoadResources(c);
  const auto mentions = ReadInput(input, in);
  RemoteTransport live(c.backend_url);
  RecordingTransport recorder(&live, c.fixtures_dir);
  if (mentions.empty()) return 0;
  int code = TypeAll(c, res, &recorder, mentions, out, err);
  err << "recorded " << recorder.recorded() << " responses into "
      << c.fixtures_dir << "\n";
  return code;
}

std::vector<TypingDecision> ReadDecisions(const std::string &path) {
  std::ifstream file(path);
  if (!file) throw DataError("cannot open " + path);
  std::vector<TypingDecision> out;
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      out.push_back(DecisionFromJson(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception &e) {
      throw DataError(path + ": line " + std::to_string(line_no) + ": " +
                      e.what());
    } catch (const DataError &e) {
      throw DataError(path + ": line " + std::to_string(line_no) + ": " +
                      e.what());
    }
  }
  return out;
}

int CmdEval(const std::string &gold_path, const std::string &decisions_path,
            const std::string &ontology_path, const std::string &format,
            std::ostream &out) {
  const auto gold = LoadDataset(gold_path);
  if (!ontology_path.empty()) {
    const TypeOntology ontology = LoadConfigFile(
        "ontology", [&] { return LoadOntology(ontology_path); });
    CheckGoldTypes(gold, ontology);
  }
  const EvalReport report = Evaluate(gold, ReadDecisions(decisions_path));
  if (format == "json" || format == "both") {
    out << ReportToJson(report).dump() << "\n";
  }
  if (format == "table" || format == "both") out << ReportTable(report);
  return 0;
}

int CmdCheckBackend(const RunConfig &c, std::ostream &out) {
  std::unique_ptr<Transport> transport;
  if (c.backend == "fixture") {
    if (c.fixtures_dir.empty()) {
      throw ConfigError("--fixtures-dir is required with --backend fixture");
    }
    transport = std::make_unique<FixtureTransport>(c.fixtures_dir);
  } else {
    if (c.backend_url.empty()) {
      throw ConfigError("--backend-url is required with --backend remote");
    }
    transport = std::make_unique<RemoteTransport>(c.backend_url);
  }
  const auto results = RunConformance(transport.get(), DefaultBattery());
  for (const auto &r : results) {
    out << (r.passed ? "pass " : "FAIL ") << RequestKindName(r.kind) << " "
        << r.rule;
    if (!r.passed) out << ": " << r.detail;
    out << "\n";
  }
  return AllPassed(results) ? 0 : 3;
}

int CmdValidate(const std::string &path, std::ostream &out) {
  const TypeOntology ontology = LoadOntology(path);
  int hard = 0;
  for (const auto &v : ValidateOntology(ontology)) {
    out << (v.hard() ? "error" : "note") << " " << RuleName(v.rule) << " "
        << v.node << ": " << v.detail << "\n";
    if (v.hard()) ++hard;
  }
  out << ontology.size() << " types, " << hard << " structural violation"
      << (hard == 1 ? "" : "s") << "\n";
  return hard == 0 ? 0 : 2;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::istream &in,
           std::ostream &out, std::ostream &err) {
  CLI::App app{"Zero-shot ontology-guided fine-grained entity typing"};
  app.name("fet");
  app.require_subcommand(1);

  RunConfig config;
  std::string input;

  auto *type_cmd = app.add_subcommand("type", "Type mentions of a JSONL file");
  AddTypingOptions(type_cmd, &config);
  type_cmd->add_option("--backend", config.backend, "fixture or remote")
      ->capture_default_str()
      ->check(CLI::IsMember({"fixture", "remote"}));
  type_cmd->add_option("--backend-url", config.backend_url,
                       "Model service URL for --backend remote");
  type_cmd->add_option("--fixtures-dir", config.fixtures_dir,
                       "Fixture store for --backend fixture");
  type_cmd->add_option("input", input, "Input JSONL ('-' or omitted: stdin)");

  auto *record_cmd = app.add_subcommand(
      "record", "Type mentions against a live service, storing fixtures");
  AddTypingOptions(record_cmd, &config);
  record_cmd->add_option("--backend-url", config.backend_url)->required();
  record_cmd->add_option("--fixtures-dir", config.fixtures_dir)->required();
  record_cmd->add_option("input", input, "Input JSONL ('-' or omitted: stdin)");

  std::string gold, decisions, eval_ontology, format = "both";
  auto *eval_cmd = app.add_subcommand("eval", "Score decisions against gold");
  eval_cmd->add_option("--gold", gold, "Gold JSONL dataset")->required();
  eval_cmd->add_option("--decisions", decisions, "Decisions JSONL")->required();
  eval_cmd->add_option("--ontology", eval_ontology,
                       "Check gold types against this ontology");
  eval_cmd->add_option("--format", format, "json, table or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "table", "both"}));

  std::string validate_path;
  auto *validate_cmd = app.add_subcommand(
      "validate-ontology", "Check an ontology file's structure");
  validate_cmd->add_option("path", validate_path, "Ontology file")->required();

  RunConfig check_config;
  auto *check_cmd = app.add_subcommand(
      "check-backend", "Run the protocol conformance battery on a backend");
  check_cmd->add_option("--backend", check_config.backend, "fixture or remote")
      ->capture_default_str()
      ->check(CLI::IsMember({"fixture", "remote"}));
  check_cmd->add_option("--backend-url", check_config.backend_url);
  check_cmd->add_option("--fixtures-dir", check_config.fixtures_dir);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageExit;
  }

  try {
    if (*type_cmd) return CmdType(config, input, in, out, err);
    if (*record_cmd) return CmdRecord(config, input, in, out, err);
    if (*eval_cmd) return CmdEval(gold, decisions, eval_ontology, format, out);
    if (*validate_cmd) return CmdValidate(validate_path, out);
    if (*check_cmd) return CmdCheckBackend(check_config, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kUsageExit;
  }
  return kUsageExit;
}

}  // namespace fet

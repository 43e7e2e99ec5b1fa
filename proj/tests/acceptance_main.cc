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

// Acceptance checks. Prints one [PASS] or [FAIL] line per criterion and
// exits nonzero if any check fails.
//
//   acceptance [path/to/fet]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fet/alignment.h"
#include "fet/candidates.h"
#include "fet/evaluation.h"
#include "fet/fixture_store.h"
#include "fet/ontology.h"
#include "fet/resolution.h"
#include "oracles.h"
#include "scripted_transport.h"
#include "test_paths.h"

namespace fet::testing {
namespace {

// Pinned limits.
constexpr double kWorkedExampleSeconds = 1.0;
constexpr double kThetaSweepSeconds = 10.0;
constexpr double kSuiteSeconds = 60.0;
constexpr double kMetricTolerance = 1e-9;
constexpr int kMetricInstances = 1000;
constexpr int kVoteTrials = 5000;
constexpr int kGraphTrials = 500;
constexpr int kTieTrials = 3000;
constexpr double kScaleFactor = 7.0;
constexpr double kScaledCosineTolerance = 1e-12;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string &what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void Report(const std::string &name, const Outcome &o, double seconds) {
  char time[32];
  std::snprintf(time, sizeof(time), "%.3f s", seconds);
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " (" << time << ")";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

void Check(const std::string &name, const std::function<void(Outcome &)> &body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception &e) {
    o.Require(false, std::string("exception: ") + e.what());
  }
  Report(name, o, Seconds(start));
}

std::string Join(const std::vector<std::string> &v) {
  std::string out;
  for (const auto &s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

// Decisions for the example mentions under `config`, from the shipped store.
std::vector<TypingDecision> TypeExamples(const TyperConfig &config) {
  FixtureTransport fixtures(FixturesDir());
  ModelClient client(&fixtures);
  TypeOntology ontology = LoadOntology(ExampleOntology());
  Verbalizer verbalizer = Verbalizer::Load(VerbalizerPath());
  Typer typer(ontology, verbalizer, client, config);
  std::vector<TypingDecision> out;
  for (const auto &m : LoadDataset(S1Dataset())) {
    out.push_back(typer.TypeMention(m.sentence, m.span));
  }
  return out;
}

void WorkedExample(Outcome &o) {
  const auto start = Clock::now();
  FixtureTransport fixtures(FixturesDir());
  ModelClient client(&fixtures);
  TypeOntology ontology = LoadOntology(ExampleOntology());
  Verbalizer verbalizer = Verbalizer::Load(VerbalizerPath());
  Typer typer(ontology, verbalizer, client, TyperConfig{});
  const Span wrigley{37, 50};
  CandidateTypeSet cs = GenerateCandidates(client, kS1, wrigley, {});
  TypingDecision d = typer.TypeMention(kS1, wrigley);
  const double elapsed = Seconds(start);

  std::set<std::string> raw;
  for (const auto &pp : cs.per_pattern) {
    for (const auto &p : pp.predictions) raw.insert(p.token);
  }
  for (const char *t : {"stadiums", "venues", "locations", "games"}) {
    o.Require(raw.count(t) > 0, std::string("no raw prediction ") + t);
    o.Require(cs.vote_counts[NormalizeLabel(t)] >= 3,
              std::string(t) + " below the vote threshold");
  }
  for (const char *t : {"things", "teams"}) {
    o.Require(raw.count(t) > 0, std::string("no raw prediction ") + t);
    o.Require(cs.vote_counts[NormalizeLabel(t)] < 3,
              std::string(t) + " survived the vote");
  }
  const std::vector<std::string> want = {"game", "location", "stadium",
                                         "venue"};
  o.Require(d.candidates.labels == want,
            "candidates {" + Join(d.candidates.labels) + "}");
  o.Require(d.rankings.at(0).selected == TypePath::Parse("/location"),
            "high-level type " + d.levels.at(0).type.ToString());
  o.Require(d.path == TypePath::Parse("/location/building/stadium"),
            "path " + d.path.ToString());
  o.Require(elapsed < kWorkedExampleSeconds,
            "took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = "candidates {" + Join(d.candidates.labels) +
               "}, high-level location, path " + d.path.ToString();
  }
}

void Voting(Outcome &o) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < kVoteTrials && o.pass; ++trial) {
    auto lists = RandomVoteLists(rng);
    const int n = static_cast<int>(lists.size());
    std::map<std::string, int> previous;
    for (int m = 1; m <= n; ++m) {
      auto got = EnsembleVote(lists, m);
      o.Require(got == OracleVote(lists, m),
                "oracle mismatch at trial " + std::to_string(trial));
      for (const auto &[label, c] : got) {
        o.Require(m == 1 || previous.count(label) > 0,
                  "not monotone at trial " + std::to_string(trial));
      }
      previous = std::move(got);
    }
  }
  for (int n = 1; n <= 8; ++n) {
    o.Require(DefaultMinVotes(n) == n / 2 + 1,
              "default m wrong for n=" + std::to_string(n));
  }
  // Unset min_votes uses the default threshold.
  FixtureTransport fixtures(FixturesDir());
  ModelClient client(&fixtures);
  CandidateTypeSet cs = GenerateCandidates(client, kS1, Span{37, 50}, {});
  std::vector<std::vector<std::string>> lists;
  for (const auto &pp : cs.per_pattern) {
    lists.push_back(PredictionLabels(pp.predictions));
  }
  std::vector<std::string> expected;
  for (const auto &[l, c] : OracleVote(lists, 3)) expected.push_back(l);
  o.Require(cs.labels == expected, "default threshold not applied");
  if (o.pass) o.detail = std::to_string(kVoteTrials) + " random ensembles";
}

void Metrics(Outcome &o) {
  std::mt19937 rng(99);
  double worst = 0;
  for (int trial = 0; trial < kMetricInstances; ++trial) {
    const int m = 1 + rng() % 6;
    std::vector<std::vector<std::string>> gold_paths(m);
    std::vector<std::string> pred_paths(m);
    std::vector<LabeledMention> gold;
    std::vector<TypingDecision> pred;
    for (int i = 0; i < m; ++i) {
      LabeledMention g{"s", Span{2 * i, 2 * i + 1}, {}};
      for (int k = 1 + rng() % 2; k > 0; --k) {
        gold_paths[i].push_back(RandomPathString(rng));
        g.gold.push_back(TypePath::Parse(gold_paths[i].back()));
      }
      pred_paths[i] = RandomPathString(rng);
      TypingDecision d;
      d.sentence = "s";
      d.span = g.span;
      d.path = TypePath::Parse(pred_paths[i]);
      gold.push_back(g);
      pred.push_back(d);
    }
    EvalReport r = Evaluate(gold, pred);
    OracleMetrics want = OracleEvaluate(gold_paths, pred_paths);
    worst = std::max({worst, std::abs(r.strict_accuracy - want.accuracy),
                      std::abs(r.macro_f1 - want.macro_f1),
                      std::abs(r.micro_f1 - want.micro_f1)});
  }
  o.Require(worst <= kMetricTolerance,
            "max deviation " + std::to_string(worst));

  auto path = [](const char *p) { return TypePath::Parse(p); };
  std::vector<LabeledMention> gold = {
      {"a", Span{0, 1}, {path("/person/politician")}},
      {"b", Span{0, 1}, {path("/location/city")}}};
  std::vector<TypingDecision> pred(2);
  pred[0].sentence = "a";
  pred[0].span = {0, 1};
  pred[0].path = path("/person/politician");
  pred[1].sentence = "b";
  pred[1].span = {0, 1};
  pred[1].path = path("/location");
  EvalReport r = Evaluate(gold, pred);
  o.Require(r.strict_accuracy == 0.5, "worked example accuracy");
  o.Require(std::abs(r.macro_f1 - 0.857) < 5e-4, "worked example Ma-F1");
  o.Require(std::abs(r.micro_f1 - 0.857) < 5e-4, "worked example Mi-F1");
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%d instances, max deviation %.1e; example Acc %.3f "
                  "Ma-F1 %.3f Mi-F1 %.3f",
                  kMetricInstances, worst, r.strict_accuracy, r.macro_f1,
                  r.micro_f1);
    o.detail = buf;
  }
}

void ThetaSweep(Outcome &o) {
  const auto start = Clock::now();
  o.Require(TyperConfig{}.theta == 0.3, "default theta is not 0.3");
  std::vector<std::vector<TypingDecision>> runs;
  for (int i = 0; i <= 10; ++i) {
    TyperConfig config;
    config.theta = i / 10.0;
    runs.push_back(TypeExamples(config));
  }
  for (std::size_t m = 0; m < runs[0].size(); ++m) {
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
      o.Require(runs[i + 1][m].path.IsPrefixOf(runs[i][m].path),
                "mention " + std::to_string(m + 1) + " not nested at theta " +
                    std::to_string(i / 10.0));
    }
  }
  const double elapsed = Seconds(start);
  o.Require(elapsed < kThetaSweepSeconds,
            "took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    std::string paths;
    for (std::size_t m = 0; m < runs[0].size(); ++m) {
      paths += (m ? "; " : "") + runs[0][m].path.ToString() + " .. " +
               runs[10][m].path.ToString();
    }
    o.detail = "theta 0 .. 1: " + paths;
  }
}

void Alignment(Outcome &o) {
  LongTable table = ReadLongTable(SourcePath("data/scenario/embeddings.txt"));
  o.Require(table.size() <= 50, "vocabulary larger than 50 words");
  Verbalizer verbalizer = Verbalizer::Load(VerbalizerPath());
  ScriptedTransport scripted = ScriptedTransport::Load(ScenarioPath());

  auto align_all = [&] {
    ModelClient client(&scripted);
    auto nodes = BuildNodeEmbeddings(verbalizer, client);
    std::map<std::string, AlignmentScore> out;
    for (const auto &[word, v] : scripted.embeddings().vectors()) {
      if (auto s = AlignCandidate(word, nodes, client)) out[word] = *s;
    }
    return out;
  };
  auto base = align_all();
  auto oracle = OracleWinners(table, verbalizer, 1.0L);
  o.Require(base.size() == table.size(), "some words failed to align");
  for (const auto &[word, s] : base) {
    o.Require(s.winner == oracle[word],
              word + ": " + s.winner + " vs oracle " + oracle[word]);
  }
  scripted.set_embeddings(scripted.embeddings().Scaled(kScaleFactor));
  auto scaled = align_all();
  o.Require(OracleWinners(table, verbalizer, kScaleFactor) == oracle,
            "oracle winners changed under scaling");
  for (const auto &[word, s] : base) {
    o.Require(scaled[word].winner == s.winner, word + " winner changed");
    for (const auto &[type, c] : s.scores) {
      o.Require(std::abs(scaled[word].scores[type] - c) <=
                    kScaledCosineTolerance,
                word + " cosine changed for " + type);
    }
  }
  std::mt19937 rng(5);
  int ties = 0;
  const int mismatches = AlignTieMismatches(rng, kTieTrials, &ties);
  o.Require(mismatches == 0,
            std::to_string(mismatches) + " tie-break mismatches");
  o.Require(ties > 0, "tie trials produced no ties");
  if (o.pass) {
    o.detail = std::to_string(table.size()) + " words, scale x7, " +
               std::to_string(ties) + " exact ties";
  }
}

void Decomposition(Outcome &o) {
  std::vector<TyperConfig> configs;
  for (int i = 0; i <= 10; ++i) {
    TyperConfig c;
    c.theta = i / 10.0;
    configs.push_back(c);
  }
  for (const auto &w : std::vector<ResolutionWeights>{
           {0.3, 0.7}, {0.1, 0.2}, {1.0, 0.0}, {0.0, 1.0}, {0.37, 0.11}}) {
    TyperConfig c;
    c.weights = w;
    configs.push_back(c);
  }
  {
    TyperConfig c;
    c.candidates.use_head_word = false;
    configs.push_back(c);
    c = TyperConfig{};
    c.use_nli = false;
    configs.push_back(c);
    c = TyperConfig{};
    c.candidates.patterns.erase(c.candidates.patterns.begin() + 1,
                                c.candidates.patterns.end());
    c.candidates.min_votes = 1;
    configs.push_back(c);
    for (int m = 1; m <= 4; ++m) {
      c = TyperConfig{};
      c.candidates.min_votes = m;
      configs.push_back(c);
    }
  }
  int checked = 0;
  for (const auto &config : configs) {
    const double wc = SnapScore(config.weights.w_cand);
    const double wh = SnapScore(config.weights.w_head);
    const std::set<double> allowed = {0.0, wc, wh, wc + wh};
    for (const auto &d : TypeExamples(config)) {
      std::vector<RankedType> all = d.levels;
      for (const auto &lr : d.rankings) {
        all.insert(all.end(), lr.ranked.begin(), lr.ranked.end());
        if (lr.baseline) all.push_back(*lr.baseline);
      }
      for (const auto &r : all) {
        ++checked;
        o.Require(allowed.count(r.rank - r.sigma_entail) > 0,
                  r.type.ToString() + " rank - sigma_entail = " +
                      std::to_string(r.rank - r.sigma_entail));
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(checked) + " ranked types over " +
               std::to_string(configs.size()) + " configurations";
  }
}

void Validator(Outcome &o) {
  std::mt19937 rng(20260101);
  int faulty = 0;
  for (int trial = 0; trial < kGraphTrials; ++trial) {
    TypeGraph g = RandomTypeGraph(rng);
    std::vector<std::pair<Violation::Rule, std::string>> got;
    for (const auto &v : ValidateGraph(g)) got.push_back({v.rule, v.node});
    std::sort(got.begin(), got.end());
    auto want = OracleViolations(g);
    o.Require(got == want, "mismatch on graph " + std::to_string(trial));
    if (!want.empty()) ++faulty;
  }
  o.Require(faulty > 0 && faulty < kGraphTrials,
            "generator did not mix clean and faulty graphs");
  if (o.pass) {
    o.detail = std::to_string(kGraphTrials) + " graphs, " +
               std::to_string(faulty) + " with violations";
  }
}

std::string Capture(const std::string &command, int *status) {
  std::string out;
  FILE *pipe = popen(command.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  *status = pclose(pipe);
  return out;
}

void Determinism(Outcome &o, const std::string &cli,
                 Clock::time_point suite_start) {
  const std::string command =
      "'" + cli + "' type --backend fixture --ontology '" + ExampleOntology() +
      "' --verbalizer '" + VerbalizerPath() + "' --fixtures-dir '" +
      FixturesDir() + "' '" + S1Dataset() + "'";
  int s1 = 0, s2 = 0;
  const std::string first = Capture(command, &s1);
  const std::string second = Capture(command + " --parallelism 3", &s2);
  o.Require(s1 == 0 && s2 == 0, "fet type exited with an error");
  o.Require(!first.empty(), "fet type printed nothing");
  o.Require(first == second, "decision output differs between runs");
  const double elapsed = Seconds(suite_start);
  o.Require(elapsed < kSuiteSeconds,
            "suite took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = std::to_string(first.size()) +
               " identical bytes from two fixture-only runs; suite " +
               std::to_string(elapsed).substr(0, 5) + " s";
  }
}

}  // namespace
}  // namespace fet::testing

int main(int argc, char **argv) {
  using namespace fet::testing;
  const auto suite_start = Clock::now();
  const std::string cli = argc > 1 ? argv[1] : FET_CLI_PATH;
  Check("worked_example_fidelity", WorkedExample);
  Check("voting_rule_exactness", Voting);
  Check("metric_oracle_equivalence", Metrics);
  Check("theta_behavior", ThetaSweep);
  Check("alignment_invariance", Alignment);
  Check("rank_decomposition_audit", Decomposition);
  Check("ontology_validator_vs_brute_force", Validator);
  Check("offline_determinism",
        [&](Outcome &o) { Determinism(o, cli, suite_start); });
  std::cout << (failures == 0 ? "all acceptance checks passed"
                              : std::to_string(failures) + " check(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

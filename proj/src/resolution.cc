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

#include "fet/resolution.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "fet/errors.h"

namespace fet {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json RankedToJson(const RankedType &r) {
  ordered_json j;
  j["type"] = r.type.ToString();
  j["sigma_entail"] = r.sigma_entail;
  j["sigma_cand"] = r.sigma_cand;
  j["rank"] = r.rank;
  return j;
}

RankedType RankedFromJson(const json &j) {
  return {TypePath::Parse(j.at("type").get<std::string>()),
          j.at("sigma_entail").get<double>(), j.at("sigma_cand").get<double>(),
          j.at("rank").get<double>()};
}

RankedType MakeRanked(TypePath type, double entail, double cand) {
  entail = SnapScore(entail);
  cand = SnapScore(cand);
  return {std::move(type), entail, cand, entail + cand};
}

}  // namespace

double SnapScore(double x) { return std::ldexp(std::round(std::ldexp(x, 32)), -32); }

Hypothesis RenderHypothesis(std::string_view mention, std::string_view type) {
  Hypothesis h{std::string(mention), std::string(type), {}};
  h.text = "In this sentence, " + h.mention + " is a " +
           VerbalizeTypeName(type) + ".";
  return h;
}

const char *StopReasonName(StopReason reason) {
  switch (reason) {
    case StopReason::kLeaf:
      return "leaf";
    case StopReason::kTheta:
      return "theta";
  }
  return "unknown";
}

StopReason ParseStopReason(std::string_view name) {
  if (name == "leaf") return StopReason::kLeaf;
  if (name == "theta") return StopReason::kTheta;
  throw DataError("unknown stop reason '" + std::string(name) + "'");
}

ordered_json DecisionToJson(const TypingDecision &d) {
  ordered_json j;
  j["sentence"] = d.sentence;
  j["mention"] = d.mention;
  j["span"] = {{"start", d.span.start}, {"end", d.span.end}};
  j["path"] = d.path.ToString();
  j["stop_reason"] = StopReasonName(d.stop_reason);
  j["levels"] = ordered_json::array();
  for (const auto &r : d.levels) j["levels"].push_back(RankedToJson(r));

  ordered_json rankings = ordered_json::array();
  for (const auto &lr : d.rankings) {
    ordered_json e;
    e["level"] = lr.level;
    e["baseline"] = lr.baseline ? RankedToJson(*lr.baseline) : ordered_json();
    e["ranked"] = ordered_json::array();
    for (const auto &r : lr.ranked) e["ranked"].push_back(RankedToJson(r));
    e["selected"] = lr.selected ? ordered_json(lr.selected->ToString())
                                : ordered_json();
    rankings.push_back(std::move(e));
  }
  j["rankings"] = std::move(rankings);

  ordered_json c;
  c["labels"] = d.candidates.labels;
  c["votes"] = ordered_json::object();
  for (const auto &[label, n] : d.candidates.votes) c["votes"][label] = n;
  c["head_word"] = d.candidates.head_word ? ordered_json(*d.candidates.head_word)
                                          : ordered_json();
  c["dropped"] = d.candidates.dropped;
  j["candidates"] = std::move(c);
  return j;
}

TypingDecision DecisionFromJson(const json &j) {
  try {
    TypingDecision d;
    d.sentence = j.at("sentence").get<std::string>();
    d.mention = j.value("mention", std::string());
    d.span = {j.at("span").at("start").get<int>(),
              j.at("span").at("end").get<int>()};
    d.path = TypePath::Parse(j.at("path").get<std::string>());
    d.stop_reason = ParseStopReason(j.value("stop_reason", std::string("leaf")));
    if (j.contains("levels")) {
      for (const auto &r : j["levels"]) d.levels.push_back(RankedFromJson(r));
    }
    if (j.contains("rankings")) {
      for (const auto &e : j["rankings"]) {
        LevelRanking lr;
        lr.level = e.at("level").get<int>();
        if (!e.at("baseline").is_null()) lr.baseline = RankedFromJson(e["baseline"]);
        for (const auto &r : e.at("ranked")) lr.ranked.push_back(RankedFromJson(r));
        if (!e.at("selected").is_null()) {
          lr.selected = TypePath::Parse(e["selected"].get<std::string>());
        }
        d.rankings.push_back(std::move(lr));
      }
    }
    if (j.contains("candidates")) {
      const auto &c = j["candidates"];
      d.candidates.labels = c.value("labels", std::vector<std::string>{});
      d.candidates.votes = c.value("votes", std::map<std::string, int>{});
      if (c.contains("head_word") && c["head_word"].is_string()) {
        d.candidates.head_word = c["head_word"].get<std::string>();
      }
      d.candidates.dropped = c.value("dropped", std::vector<std::string>{});
    }
    return d;
  } catch (const json::exception &e) {
    throw DataError(std::string("malformed decision record: ") + e.what());
  }
}

void TyperConfig::Validate() const {
  if (!(theta >= 0.0)) throw ConfigError("theta must be >= 0");
  if (!(weights.w_cand >= 0.0) || !(weights.w_head >= 0.0)) {
    throw ConfigError("w_cand and w_head must be >= 0");
  }
  if (candidates.top_k < 1) throw ConfigError("top_k must be >= 1");
  if (candidates.patterns.empty()) throw ConfigError("no Hearst patterns");
  if (candidates.min_votes) {
    const int n = static_cast<int>(candidates.patterns.size());
    if (*candidates.min_votes < 1 || *candidates.min_votes > n) {
      throw ConfigError("min_votes must be in [1, " + std::to_string(n) + "]");
    }
  }
}

Typer::Typer(const TypeOntology &ontology, const Verbalizer &verbalizer,
             const ModelClient &client, TyperConfig config)
    : ontology_(ontology), client_(client), config_(std::move(config)) {
  config_.Validate();
  if (ontology_.Roots().empty()) throw ConfigError("ontology has no types");
  verbalizer.CheckAgainst(ontology_);
  nodes_ = BuildNodeEmbeddings(verbalizer, client_);
}

double Typer::EntailScore(std::string_view sentence, std::string_view mention,
                          const TypePath &type) const {
  if (!config_.use_nli) return 0.0;
  Hypothesis h = RenderHypothesis(mention, type.name());
  return client_.Entail(sentence, h.text).entail;
}

double Typer::SubtreeCredit(const TypePath &type,
                            const CandidateTypeSet &candidates) const {
  auto in_subtree = [&](const std::string &label) {
    for (const auto &match : ontology_.FindByName(NormalizeTypeName(label))) {
      if (type.IsPrefixOf(match)) return true;
    }
    return false;
  };
  double credit = 0.0;
  if (std::any_of(candidates.labels.begin(), candidates.labels.end(),
                  in_subtree)) {
    credit += SnapScore(config_.weights.w_cand);
  }
  if (candidates.head_word && in_subtree(*candidates.head_word)) {
    credit += SnapScore(config_.weights.w_head);
  }
  return credit;
}

std::vector<RankedType> Typer::Sorted(std::vector<RankedType> ranked) const {
  std::sort(ranked.begin(), ranked.end(),
            [](const RankedType &a, const RankedType &b) {
              if (a.rank != b.rank) return a.rank > b.rank;
              return a.type < b.type;
            });
  return ranked;
}

std::vector<RankedType> Typer::RankTypes(
    std::string_view sentence, std::string_view mention,
    const std::vector<TypePath> &types,
    const CandidateTypeSet &candidates) const {
  if (types.empty()) throw DataError("no candidate types to rank");
  std::vector<RankedType> ranked;
  for (const auto &t : types) {
    ranked.push_back(MakeRanked(t, EntailScore(sentence, mention, t),
                                SubtreeCredit(t, candidates)));
  }
  return Sorted(std::move(ranked));
}

Typer::HighLevel Typer::SelectHighLevel(
    std::string_view sentence, std::string_view mention,
    const CandidateTypeSet &candidates) const {
  HighLevel out;
  out.aligned = AlignCandidateSet(candidates, nodes_, client_);
  const std::set<std::string> voted(candidates.labels.begin(),
                                    candidates.labels.end());

  std::vector<RankedType> ranked;
  for (const auto &root : ontology_.Roots()) {
    double credit = 0.0;
    if (auto it = out.aligned.by_type.find(root.name());
        it != out.aligned.by_type.end() &&
        std::any_of(it->second.begin(), it->second.end(),
                    [&](const std::string &l) { return voted.count(l) > 0; })) {
      credit += SnapScore(config_.weights.w_cand);
    }
    if (out.aligned.head_type == root.name()) {
      credit += SnapScore(config_.weights.w_head);
    }
    ranked.push_back(
        MakeRanked(root, EntailScore(sentence, mention, root), credit));
  }
  out.ranking.level = 1;
  out.ranking.ranked = Sorted(std::move(ranked));
  out.winner = out.ranking.ranked.front();
  out.ranking.selected = out.winner.type;
  return out;
}

TypingDecision Typer::RefineFineGrained(
    const RankedType &high_level, std::string_view sentence,
    std::string_view mention, const CandidateTypeSet &candidates) const {
  TypingDecision d;
  d.sentence = std::string(sentence);
  d.mention = std::string(mention);
  d.levels.push_back(high_level);

  const double theta = SnapScore(config_.theta);
  TypePath current = high_level.type;
  double current_entail = high_level.sigma_entail;
  int level = current.depth();
  while (true) {
    std::vector<TypePath> children = ontology_.Children(current);
    if (children.empty()) {
      d.stop_reason = StopReason::kLeaf;
      break;
    }
    LevelRanking lr;
    lr.level = level + 1;
    lr.baseline = MakeRanked(current, current_entail,
                             SubtreeCredit(current, candidates));
    lr.ranked = RankTypes(sentence, mention, children, candidates);
    const RankedType &best = lr.ranked.front();
    const bool descend = best.rank - lr.baseline->rank >= theta;
    if (descend) lr.selected = best.type;
    d.rankings.push_back(lr);
    if (!descend) {
      d.stop_reason = StopReason::kTheta;
      break;
    }
    d.levels.push_back(best);
    current = best.type;
    current_entail = best.sigma_entail;
    ++level;
  }
  d.path = current;
  return d;
}

TypingDecision Typer::TypeMention(std::string_view sentence,
                                  const Span &span) const {
  const std::string mention = SpanText(sentence, span);
  CandidateTypeSet candidates =
      GenerateCandidates(client_, sentence, span, config_.candidates);
  HighLevel high = SelectHighLevel(sentence, mention, candidates);
  TypingDecision d =
      RefineFineGrained(high.winner, sentence, mention, candidates);
  d.span = span;
  d.rankings.insert(d.rankings.begin(), high.ranking);
  d.candidates.labels = candidates.labels;
  for (const auto &l : candidates.labels) {
    d.candidates.votes[l] = candidates.vote_counts.at(l);
  }
  d.candidates.head_word = candidates.head_word;
  d.candidates.dropped = high.aligned.dropped;
  return d;
}

}  // namespace fet

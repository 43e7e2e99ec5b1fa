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

#include "fet/evaluation.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <tuple>

#include "fet/errors.h"

namespace fet {
namespace {

using nlohmann::json;

using MentionKey = std::tuple<std::string, int, int>;

double Ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

}  // namespace

std::vector<LabeledMention> ParseDataset(std::string_view jsonl) {
  std::vector<LabeledMention> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < jsonl.size()) {
    std::size_t nl = jsonl.find('\n', pos);
    std::string_view line = Trim(jsonl.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? jsonl.size() : nl + 1;
    ++line_no;
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    try {
      json j = json::parse(line);
      const std::string sentence = j.at("sentence").get<std::string>();
      for (const auto &m : j.at("mentions")) {
        LabeledMention lm;
        lm.sentence = sentence;
        lm.span = {m.at("start").get<int>(), m.at("end").get<int>()};
        ToByteRange(sentence, lm.span);
        for (const auto &g : m.value("gold_types", json::array())) {
          lm.gold.push_back(TypePath::Parse(g.get<std::string>()));
        }
        out.push_back(std::move(lm));
      }
    } catch (const json::exception &e) {
      throw DataError(where + e.what());
    } catch (const DataError &e) {
      throw DataError(where + e.what());
    }
  }
  return out;
}

std::vector<LabeledMention> LoadDataset(const std::string &path) {
  std::string text = ReadFile(path);
  try {
    return ParseDataset(text);
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

void CheckGoldTypes(const std::vector<LabeledMention> &mentions,
                    const TypeOntology &ontology) {
  for (const auto &m : mentions) {
    for (const auto &g : m.gold) {
      if (!ontology.Contains(g)) {
        throw DataError("gold type " + g.ToString() +
                        " is not in the ontology");
      }
    }
  }
}

PathSet ExpandToPathSet(const TypePath &path) {
  auto ancestry = path.Ancestry();
  return {ancestry.begin(), ancestry.end()};
}

PathSet ExpandToPathSet(const TypeOntology &ontology, const TypePath &path) {
  ontology.Node(path);
  return ExpandToPathSet(path);
}

PathSet ExpandToPathSet(const std::vector<TypePath> &paths) {
  PathSet out;
  for (const auto &p : paths) out.merge(ExpandToPathSet(p));
  return out;
}

double F1(double precision, double recall) {
  return precision + recall == 0.0
             ? 0.0
             : 2.0 * precision * recall / (precision + recall);
}

void EvalTally::Add(const PathSet &gold, const PathSet &predicted) {
  long overlap = 0;
  for (const auto &p : predicted) overlap += gold.count(p);
  ++mentions_;
  if (gold == predicted) ++exact_;
  macro_p_sum_ += Ratio(overlap, predicted.size());
  macro_r_sum_ += Ratio(overlap, gold.size());
  overlap_ += overlap;
  predicted_ += static_cast<long>(predicted.size());
  gold_ += static_cast<long>(gold.size());
}

void EvalTally::Merge(const EvalTally &other) {
  mentions_ += other.mentions_;
  exact_ += other.exact_;
  macro_p_sum_ += other.macro_p_sum_;
  macro_r_sum_ += other.macro_r_sum_;
  overlap_ += other.overlap_;
  predicted_ += other.predicted_;
  gold_ += other.gold_;
}

EvalReport EvalTally::Report() const {
  EvalReport r;
  r.mentions = static_cast<int>(mentions_);
  if (mentions_ == 0) return r;
  const double n = static_cast<double>(mentions_);
  r.strict_accuracy = exact_ / n;
  r.macro_precision = macro_p_sum_ / n;
  r.macro_recall = macro_r_sum_ / n;
  r.macro_f1 = F1(r.macro_precision, r.macro_recall);
  r.micro_precision = Ratio(overlap_, predicted_);
  r.micro_recall = Ratio(overlap_, gold_);
  r.micro_f1 = F1(r.micro_precision, r.micro_recall);
  return r;
}

EvalReport Evaluate(const std::vector<LabeledMention> &gold,
                    const std::vector<TypingDecision> &predictions) {
  std::multimap<MentionKey, const TypingDecision *> by_key;
  for (const auto &d : predictions) {
    by_key.emplace(MentionKey{d.sentence, d.span.start, d.span.end}, &d);
  }
  EvalTally tally;
  for (const auto &g : gold) {
    if (g.gold.empty()) {
      throw DataError("mention [" + std::to_string(g.span.start) + ", " +
                      std::to_string(g.span.end) + ") of sentence '" +
                      g.sentence + "' has no gold types");
    }
    auto it = by_key.find(MentionKey{g.sentence, g.span.start, g.span.end});
    if (it == by_key.end()) {
      throw DataError("no prediction for mention [" +
                      std::to_string(g.span.start) + ", " +
                      std::to_string(g.span.end) + ") of sentence '" +
                      g.sentence + "'");
    }
    tally.Add(ExpandToPathSet(g.gold), ExpandToPathSet(it->second->path));
    by_key.erase(it);
  }
  if (!by_key.empty()) {
    const auto &[key, d] = *by_key.begin();
    throw DataError("prediction for mention [" + std::to_string(d->span.start) +
                    ", " + std::to_string(d->span.end) + ") of sentence '" +
                    d->sentence + "' has no gold entry");
  }
  return tally.Report();
}

nlohmann::ordered_json ReportToJson(const EvalReport &r) {
  nlohmann::ordered_json j;
  j["mentions"] = r.mentions;
  j["strict_accuracy"] = r.strict_accuracy;
  j["macro_precision"] = r.macro_precision;
  j["macro_recall"] = r.macro_recall;
  j["macro_f1"] = r.macro_f1;
  j["micro_precision"] = r.micro_precision;
  j["micro_recall"] = r.micro_recall;
  j["micro_f1"] = r.micro_f1;
  return j;
}

std::string ReportTable(const EvalReport &r) {
  const std::pair<const char *, double> rows[] = {
      {"strict_accuracy", r.strict_accuracy},
      {"macro_precision", r.macro_precision},
      {"macro_recall", r.macro_recall},
      {"macro_f1", r.macro_f1},
      {"micro_precision", r.micro_precision},
      {"micro_recall", r.micro_recall},
      {"micro_f1", r.micro_f1},
  };
  std::string out = "metric            value\n";
  char line[64];
  std::snprintf(line, sizeof(line), "%-17s %d\n", "mentions", r.mentions);
  out += line;
  for (const auto &[name, value] : rows) {
    std::snprintf(line, sizeof(line), "%-17s %.4f\n", name, value);
    out += line;
  }
  return out;
}

}  // namespace fet

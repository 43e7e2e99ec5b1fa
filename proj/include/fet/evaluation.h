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

#ifndef FET_EVALUATION_H_
#define FET_EVALUATION_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fet/ontology.h"
#include "fet/resolution.h"
#include "fet/text.h"
#include "json.hpp"

namespace fet {

struct LabeledMention {
  std::string sentence;
  Span span;
  std::vector<TypePath> gold;  // may be empty in typing input
};

// JSONL, one sentence per line:
//   {"sentence": str, "mentions": [{"start": int, "end": int,
//                                   "gold_types": ["/a/b", ...]}]}
// Mentions are returned in file order. Errors carry the line number.
std::vector<LabeledMention> ParseDataset(std::string_view jsonl);
std::vector<LabeledMention> LoadDataset(const std::string &path);

// Throws DataError when a gold path is not in `ontology`.
void CheckGoldTypes(const std::vector<LabeledMention> &mentions,
                    const TypeOntology &ontology);

using PathSet = std::set<TypePath>;

// All prefixes of `path`; size equals its depth.
PathSet ExpandToPathSet(const TypePath &path);
// Same, but throws DataError when `path` is not in the ontology.
PathSet ExpandToPathSet(const TypeOntology &ontology, const TypePath &path);
// Union of the expansions.
PathSet ExpandToPathSet(const std::vector<TypePath> &paths);

struct EvalReport {
  int mentions = 0;
  double strict_accuracy = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  double micro_precision = 0.0;
  double micro_recall = 0.0;
  double micro_f1 = 0.0;
};

// 2PR / (P + R), or 0 when P + R = 0.
double F1(double precision, double recall);

// Running sums behind every metric. Tallies of disjoint shards can be
// merged in any order.
class EvalTally {
 public:
  // An empty set contributes precision (or recall) 0 for that mention.
  void Add(const PathSet &gold, const PathSet &predicted);
  void Merge(const EvalTally &other);
  EvalReport Report() const;

 private:
  long mentions_ = 0;
  long exact_ = 0;
  double macro_p_sum_ = 0.0;
  double macro_r_sum_ = 0.0;
  long overlap_ = 0;
  long predicted_ = 0;
  long gold_ = 0;
};

// Pairs gold mentions with decisions by (sentence, span) and scores the
// ancestor-expanded type sets. Throws DataError on any unmatched mention.
EvalReport Evaluate(const std::vector<LabeledMention> &gold,
                    const std::vector<TypingDecision> &predictions);

nlohmann::ordered_json ReportToJson(const EvalReport &report);
std::string ReportTable(const EvalReport &report);

}  // namespace fet

#endif  // FET_EVALUATION_H_

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

#ifndef FET_RESOLUTION_H_
#define FET_RESOLUTION_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fet/alignment.h"
#include "fet/backend.h"
#include "fet/candidates.h"
#include "fet/ontology.h"
#include "fet/text.h"
#include "json.hpp"

namespace fet {

// Scores are snapped to multiples of 2^-32 so that sums of scores and
// weights are exact in double precision and rank - sigma_entail recovers
// sigma_cand bit for bit.
double SnapScore(double x);

struct Hypothesis {
  std::string mention;
  std::string type;
  std::string text;
};

// "In this sentence, <mention> is a <type>." with the type verbalized.
Hypothesis RenderHypothesis(std::string_view mention, std::string_view type);

struct ResolutionWeights {
  double w_cand = 0.5;
  double w_head = 0.5;
};

struct RankedType {
  TypePath type;
  double sigma_entail = 0.0;
  double sigma_cand = 0.0;
  double rank = 0.0;

  bool operator==(const RankedType &other) const = default;
};

// A type without children is a leaf, so running out of children and
// reaching a leaf are the same stop.
enum class StopReason { kLeaf, kTheta };

const char *StopReasonName(StopReason reason);
StopReason ParseStopReason(std::string_view name);

// One ranking round. Level 1 ranks the first-level types; deeper levels rank
// the children of the current type against `baseline`, the current type
// scored under the same rule.
struct LevelRanking {
  int level = 1;
  std::optional<RankedType> baseline;
  std::vector<RankedType> ranked;
  std::optional<TypePath> selected;
};

struct CandidateSummary {
  std::vector<std::string> labels;
  std::map<std::string, int> votes;  // for voted labels only
  std::optional<std::string> head_word;
  std::vector<std::string> dropped;  // out of embedding vocabulary
};

struct TypingDecision {
  std::string sentence;
  std::string mention;
  Span span;
  TypePath path;
  StopReason stop_reason = StopReason::kLeaf;
  // RankedType of the selected type at each depth, root first.
  std::vector<RankedType> levels;
  std::vector<LevelRanking> rankings;
  CandidateSummary candidates;
};

// Stable-key-order JSON record for one decision.
nlohmann::ordered_json DecisionToJson(const TypingDecision &decision);
TypingDecision DecisionFromJson(const nlohmann::json &j);

struct TyperConfig {
  CandidateOptions candidates;
  ResolutionWeights weights;
  double theta = 0.3;
  // When false, sigma_entail is 0 and no entailment requests are made.
  bool use_nli = true;

  // Throws ConfigError on negative theta or weights, or top_k < 1.
  void Validate() const;
};

// Types mentions against an ontology. Construction embeds the verbalizer's
// node terms once; afterwards every method is const and may be called from
// several threads as long as the transport allows it.
class Typer {
 public:
  Typer(const TypeOntology &ontology, const Verbalizer &verbalizer,
        const ModelClient &client, TyperConfig config);

  const std::vector<NodeEmbedding> &node_embeddings() const { return nodes_; }
  const TyperConfig &config() const { return config_; }

  // Entailment probability of `type`'s hypothesis given the sentence.
  double EntailScore(std::string_view sentence, std::string_view mention,
                     const TypePath &type) const;

  // sigma_cand from subtree matching: w_cand when a voted label names a
  // type in the subtree of `type` (itself included), plus w_head when the
  // head word does.
  double SubtreeCredit(const TypePath &type,
                       const CandidateTypeSet &candidates) const;

  // Ranks `types` by sigma_entail + subtree credit, best first, ties by
  // path.
  std::vector<RankedType> RankTypes(std::string_view sentence,
                                    std::string_view mention,
                                    const std::vector<TypePath> &types,
                                    const CandidateTypeSet &candidates) const;

  struct HighLevel {
    RankedType winner;
    LevelRanking ranking;
    AlignedCandidates aligned;
  };

  // Ranks every first-level type by sigma_entail plus alignment credit:
  // w_cand when a voted label aligned to the type, w_head when the head
  // word did.
  HighLevel SelectHighLevel(std::string_view sentence,
                            std::string_view mention,
                            const CandidateTypeSet &candidates) const;

  // Descends from `high_level` while the best child beats the current type
  // by at least theta.
  TypingDecision RefineFineGrained(const RankedType &high_level,
                                   std::string_view sentence,
                                   std::string_view mention,
                                   const CandidateTypeSet &candidates) const;

  // Full pipeline for one mention.
  TypingDecision TypeMention(std::string_view sentence,
                             const Span &span) const;

 private:
  std::vector<RankedType> Sorted(std::vector<RankedType> ranked) const;

  const TypeOntology &ontology_;
  const ModelClient &client_;
  TyperConfig config_;
  std::vector<NodeEmbedding> nodes_;
};

}  // namespace fet

#endif  // FET_RESOLUTION_H_

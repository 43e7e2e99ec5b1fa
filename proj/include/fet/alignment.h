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

#ifndef FET_ALIGNMENT_H_
#define FET_ALIGNMENT_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fet/backend.h"
#include "fet/candidates.h"
#include "fet/ontology.h"

namespace fet {

inline constexpr int kMinSeedsPerType = 5;

// Cosines closer than this are treated as tied.
inline constexpr double kCosineTieTolerance = 1e-12;

// Seed terms per first-level type. Every key is a root of the ontology it
// was checked against and lists at least kMinSeedsPerType seeds.
struct Verbalizer {
  std::map<std::string, std::vector<std::string>> seeds;

  // JSON object {root_type: [seed, ...]}. Names are normalized.
  static Verbalizer Parse(std::string_view json_text);
  static Verbalizer Load(const std::string &path);

  // Throws ConfigError unless the keys are exactly the ontology's roots and
  // each has enough seeds.
  void CheckAgainst(const TypeOntology &ontology) const;
};

struct NodeEmbedding {
  std::string type;
  std::vector<double> vector;
  std::vector<std::string> contributing_terms;
};

// Words that must be embedded to build the node embedding of `type`.
std::vector<std::string> TermWords(std::string_view type,
                                   std::span<const std::string> seeds);

// Mean over the in-vocabulary members of {type} ∪ seeds. A multi-word term
// is the mean of its words and counts as in-vocabulary only when all of its
// words are. Throws ConfigError when no term is in vocabulary.
NodeEmbedding BuildNodeEmbedding(std::string_view type,
                                 std::span<const std::string> seeds,
                                 const EmbeddingMap &vectors);
NodeEmbedding BuildNodeEmbedding(std::string_view type,
                                 std::span<const std::string> seeds,
                                 const ModelClient &client);

// Node embeddings for every verbalizer entry, in type order.
std::vector<NodeEmbedding> BuildNodeEmbeddings(const Verbalizer &verbalizer,
                                               const ModelClient &client);

// Cosine similarity; 0 when either vector has zero norm.
double Cosine(std::span<const double> a, std::span<const double> b);

struct AlignmentScore {
  std::string label;
  std::map<std::string, double> scores;  // first-level type -> cosine
  std::string winner;
};

// Vector of a (possibly multi-word) label, or nullopt when any word is OOV
// or the vector is all zeros.
std::optional<std::vector<double>> LabelVector(std::string_view label,
                                               const EmbeddingMap &vectors);

// Ranks node embeddings by cosine against `vector`; the winner is the
// argmax, ties broken by the lexicographically smallest type name.
AlignmentScore AlignVector(std::string_view label,
                           std::span<const double> vector,
                           const std::vector<NodeEmbedding> &nodes);

// Aligns a single label; nullopt when the label is out of vocabulary.
std::optional<AlignmentScore> AlignCandidate(
    std::string_view label, const std::vector<NodeEmbedding> &nodes,
    const ModelClient &client);

struct AlignedCandidates {
  // First-level type -> labels aligned to it (sorted).
  std::map<std::string, std::vector<std::string>> by_type;
  // First-level type the head word aligned to, if it was in vocabulary.
  std::optional<std::string> head_type;
  std::vector<AlignmentScore> scores;
  std::vector<std::string> dropped;  // out-of-vocabulary labels

  bool empty() const { return by_type.empty(); }
};

// Aligns every voted label and the head word. The head word takes part as
// an ordinary label but is also remembered in head_type.
AlignedCandidates AlignCandidateSet(const CandidateTypeSet &candidates,
                                    const std::vector<NodeEmbedding> &nodes,
                                    const ModelClient &client);

}  // namespace fet

#endif  // FET_ALIGNMENT_H_

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

#include "fet/alignment.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "fet/errors.h"
#include "fet/text.h"

namespace fet {
namespace {

// Mean of the word vectors of `term`; nullopt when a word is missing.
std::optional<std::vector<double>> TermVector(std::string_view term,
                                              const EmbeddingMap &vectors) {
  std::vector<std::string> words = SplitWords(ToLower(term));
  if (words.empty()) return std::nullopt;
  std::vector<double> sum;
  for (const auto &w : words) {
    auto it = vectors.find(w);
    if (it == vectors.end() || !it->second) return std::nullopt;
    const auto &v = *it->second;
    if (sum.empty()) sum.assign(v.size(), 0.0);
    if (v.size() != sum.size()) {
      throw BackendError("embedding dimension mismatch for '" + w + "'");
    }
    for (std::size_t i = 0; i < v.size(); ++i) sum[i] += v[i];
  }
  for (double &x : sum) x /= static_cast<double>(words.size());
  return sum;
}

}  // namespace

Verbalizer Verbalizer::Parse(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("verbalizer is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("verbalizer must be a JSON object");
  Verbalizer v;
  for (const auto &[key, seeds] : j.items()) {
    if (!seeds.is_array()) {
      throw ConfigError("verbalizer entry '" + key + "' is not an array");
    }
    auto &list = v.seeds[NormalizeTypeName(key)];
    for (const auto &s : seeds) {
      if (!s.is_string() || Trim(s.get<std::string>()).empty()) {
        throw ConfigError("verbalizer entry '" + key +
                          "' has a non-string or empty seed");
      }
      list.push_back(ToLower(Trim(s.get<std::string>())));
    }
  }
  return v;
}

Verbalizer Verbalizer::Load(const std::string &path) {
  try {
    return Parse(ReadFile(path));
  } catch (const DataError &e) {
    throw ConfigError(e.what());
  }
}

void Verbalizer::CheckAgainst(const TypeOntology &ontology) const {
  std::set<std::string> roots;
  for (const auto &r : ontology.Roots()) roots.insert(r.name());
  for (const auto &[type, list] : seeds) {
    if (!roots.count(type)) {
      throw ConfigError("verbalizer type '" + type +
                        "' is not a first-level type of the ontology");
    }
    if (static_cast<int>(list.size()) < kMinSeedsPerType) {
      throw ConfigError("verbalizer type '" + type + "' has " +
                        std::to_string(list.size()) + " seeds; at least " +
                        std::to_string(kMinSeedsPerType) + " are required");
    }
  }
  for (const auto &r : roots) {
    if (!seeds.count(r)) {
      throw ConfigError("first-level type '" + r + "' has no verbalizer entry");
    }
  }
}

std::vector<std::string> TermWords(std::string_view type,
                                   std::span<const std::string> seeds) {
  std::set<std::string> words;
  for (auto &w : SplitWords(ToLower(type))) words.insert(std::move(w));
  for (const auto &s : seeds) {
    for (auto &w : SplitWords(ToLower(s))) words.insert(std::move(w));
  }
  return {words.begin(), words.end()};
}

NodeEmbedding BuildNodeEmbedding(std::string_view type,
                                 std::span<const std::string> seeds,
                                 const EmbeddingMap &vectors) {
  NodeEmbedding node{std::string(type), {}, {}};
  std::vector<std::string> terms = {std::string(type)};
  terms.insert(terms.end(), seeds.begin(), seeds.end());
  for (const auto &term : terms) {
    auto v = TermVector(term, vectors);
    if (!v) continue;
    if (node.vector.empty()) node.vector.assign(v->size(), 0.0);
    if (v->size() != node.vector.size()) {
      throw BackendError("embedding dimension mismatch in node '" +
                         std::string(type) + "'");
    }
    for (std::size_t i = 0; i < v->size(); ++i) node.vector[i] += (*v)[i];
    node.contributing_terms.push_back(term);
  }
  if (node.contributing_terms.empty()) {
    throw ConfigError("no verbalizer term of type '" + std::string(type) +
                      "' is in the embedding vocabulary");
  }
  for (double &x : node.vector) {
    x /= static_cast<double>(node.contributing_terms.size());
  }
  return node;
}

NodeEmbedding BuildNodeEmbedding(std::string_view type,
                                 std::span<const std::string> seeds,
                                 const ModelClient &client) {
  return BuildNodeEmbedding(type, seeds, client.Embed(TermWords(type, seeds)));
}

std::vector<NodeEmbedding> BuildNodeEmbeddings(const Verbalizer &verbalizer,
                                               const ModelClient &client) {
  std::vector<NodeEmbedding> out;
  for (const auto &[type, seeds] : verbalizer.seeds) {
    out.push_back(BuildNodeEmbedding(type, seeds, client));
  }
  return out;
}

double Cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw BackendError("cosine of vectors with different dimensions");
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

std::optional<std::vector<double>> LabelVector(std::string_view label,
                                               const EmbeddingMap &vectors) {
  auto v = TermVector(label, vectors);
  if (!v) return std::nullopt;
  if (std::all_of(v->begin(), v->end(), [](double x) { return x == 0.0; })) {
    return std::nullopt;
  }
  return v;
}

AlignmentScore AlignVector(std::string_view label,
                           std::span<const double> vector,
                           const std::vector<NodeEmbedding> &nodes) {
  AlignmentScore out{std::string(label), {}, {}};
  double best = -2.0;
  for (const auto &node : nodes) {
    double s = Cosine(vector, node.vector);
    out.scores[node.type] = s;
    best = std::max(best, s);
  }
  // Scores equal up to rounding are ties; the smallest type name wins.
  for (const auto &[type, s] : out.scores) {
    if (s >= best - kCosineTieTolerance) {
      out.winner = type;
      break;
    }
  }
  return out;
}

std::optional<AlignmentScore> AlignCandidate(
    std::string_view label, const std::vector<NodeEmbedding> &nodes,
    const ModelClient &client) {
  auto words = SplitWords(ToLower(label));
  auto v = LabelVector(label, client.Embed(words));
  if (!v) return std::nullopt;
  return AlignVector(label, *v, nodes);
}

AlignedCandidates AlignCandidateSet(const CandidateTypeSet &candidates,
                                    const std::vector<NodeEmbedding> &nodes,
                                    const ModelClient &client) {
  AlignedCandidates out;
  std::set<std::string> labels(candidates.labels.begin(),
                               candidates.labels.end());
  if (candidates.head_word) labels.insert(*candidates.head_word);
  if (labels.empty() || nodes.empty()) return out;

  std::set<std::string> words;
  for (const auto &l : labels) {
    for (auto &w : SplitWords(l)) words.insert(std::move(w));
  }
  EmbeddingMap vectors =
      client.Embed(std::vector<std::string>(words.begin(), words.end()));

  for (const auto &label : labels) {
    auto v = LabelVector(label, vectors);
    if (!v) {
      out.dropped.push_back(label);
      continue;
    }
    AlignmentScore score = AlignVector(label, *v, nodes);
    out.by_type[score.winner].push_back(label);
    if (candidates.head_word && label == *candidates.head_word) {
      out.head_type = score.winner;
    }
    out.scores.push_back(std::move(score));
  }
  return out;
}

}  // namespace fet

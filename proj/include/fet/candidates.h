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

#ifndef FET_CANDIDATES_H_
#define FET_CANDIDATES_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fet/backend.h"
#include "fet/text.h"

namespace fet {

// A Hearst pattern template such as "[MASK] such as {mention}". Holds exactly
// one {mention} slot and one [MASK] slot.
class HearstPattern {
 public:
  static constexpr std::string_view kMentionSlot = "{mention}";

  // Throws ConfigError unless both slots occur exactly once.
  explicit HearstPattern(std::string text);

  const std::string &text() const { return text_; }

  // The template with {mention} replaced by `mention`.
  std::string Expand(std::string_view mention) const;

  bool operator==(const HearstPattern &other) const = default;

 private:
  std::string text_;
};

// The four default patterns, in the order they are queried.
std::vector<HearstPattern> DefaultPatterns();

// Pattern file: one template per line, '#' comments, blank lines ignored.
std::vector<HearstPattern> ParsePatterns(std::string_view text);
std::vector<HearstPattern> LoadPatterns(const std::string &path);

// Replaces the mention in place with the pattern expansion; the rest of the
// sentence is copied byte for byte.
std::string BuildPrompt(std::string_view sentence, const Span &mention,
                        const HearstPattern &pattern);

// True for tokens made only of ASCII letters. Sub-word pieces, punctuation
// and numbers are rejected.
bool IsWordToken(std::string_view token);

// Lowercases and singularizes. Idempotent.
std::string NormalizeLabel(std::string_view token);

// m = floor(n / 2) + 1.
int DefaultMinVotes(int num_patterns);

// Counts, for every label, the number of lists that contain it (each list
// counts at most once) and keeps labels with count >= min_votes. Throws
// ConfigError unless 1 <= min_votes <= lists.size().
std::map<std::string, int> EnsembleVote(
    const std::vector<std::vector<std::string>> &labels_per_pattern,
    int min_votes);

struct PatternPredictions {
  std::string pattern;
  std::string prompt;
  std::vector<MaskPrediction> predictions;
};

struct CandidateTypeSet {
  std::vector<std::string> labels;  // voted labels, sorted
  std::optional<std::string> head_word;
  std::vector<PatternPredictions> per_pattern;
  std::map<std::string, int> vote_counts;  // every normalized token

  bool empty() const { return labels.empty() && !head_word; }
};

struct CandidateOptions {
  std::vector<HearstPattern> patterns = DefaultPatterns();
  int top_k = 10;
  std::optional<int> min_votes;  // default: DefaultMinVotes(patterns.size())
  bool use_head_word = true;
};

// Filters and normalizes one pattern's predictions into a label list.
std::vector<std::string> PredictionLabels(
    const std::vector<MaskPrediction> &predictions);

// Prompts the masked language model with every pattern, votes, and attaches
// the normalized head word when the backend reports one.
CandidateTypeSet GenerateCandidates(const ModelClient &client,
                                    std::string_view sentence,
                                    const Span &mention,
                                    const CandidateOptions &options);

}  // namespace fet

#endif  // FET_CANDIDATES_H_

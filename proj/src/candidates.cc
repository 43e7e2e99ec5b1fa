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

#include "fet/candidates.h"

#include <algorithm>
#include <set>

#include "fet/errors.h"

namespace fet {
namespace {

int Count(std::string_view text, std::string_view needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string_view::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

const std::map<std::string, std::string, std::less<>> &Irregulars() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"children", "child"}, {"men", "man"},
      {"people", "person"},  {"women", "woman"}};
  return table;
}

// Words the singularizer leaves alone. Every output of Singularize is one.
bool IsStable(std::string_view w) {
  if (Irregulars().count(w)) return false;
  if (w.size() <= 3) return true;
  if (w.back() != 's') return true;
  return EndsWith(w, "ss") || EndsWith(w, "us") || EndsWith(w, "is");
}

std::string Singularize(std::string w) {
  if (auto it = Irregulars().find(w); it != Irregulars().end()) {
    return it->second;
  }
  if (IsStable(w)) return w;
  std::string out;
  if (EndsWith(w, "ies") && w.size() > 4) {
    out = w.substr(0, w.size() - 3) + "y";
  } else if (EndsWith(w, "ses") && IsStable(w.substr(0, w.size() - 2))) {
    out = w.substr(0, w.size() - 2);
  } else {
    out = w.substr(0, w.size() - 1);
  }
  if (auto it = Irregulars().find(out); it != Irregulars().end()) {
    return it->second;
  }
  return out;
}

}  // namespace

HearstPattern::HearstPattern(std::string text) : text_(std::move(text)) {
  if (Count(text_, kMentionSlot) != 1 || Count(text_, kMaskToken) != 1) {
    throw ConfigError("pattern must contain exactly one {mention} and one "
                      "[MASK]: '" + text_ + "'");
  }
}

std::string HearstPattern::Expand(std::string_view mention) const {
  std::string out = text_;
  out.replace(out.find(kMentionSlot), kMentionSlot.size(), mention);
  return out;
}

std::vector<HearstPattern> DefaultPatterns() {
  return {HearstPattern("[MASK] such as {mention}"),
          HearstPattern("such [MASK] as {mention}"),
          HearstPattern("{mention} and some other [MASK]"),
          HearstPattern("{mention} and the other [MASK]")};
}

std::vector<HearstPattern> ParsePatterns(std::string_view text) {
  std::vector<HearstPattern> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = Trim(text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    if (!line.empty() && line.front() != '#') out.emplace_back(std::string(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (out.empty()) throw ConfigError("pattern file lists no patterns");
  return out;
}

std::vector<HearstPattern> LoadPatterns(const std::string &path) {
  return ParsePatterns(ReadFile(path));
}

std::string BuildPrompt(std::string_view sentence, const Span &mention,
                        const HearstPattern &pattern) {
  auto [begin, end] = ToByteRange(sentence, mention);
  std::string out(sentence.substr(0, begin));
  out += pattern.Expand(sentence.substr(begin, end - begin));
  out += sentence.substr(end);
  return out;
}

bool IsWordToken(std::string_view token) {
  return !token.empty() &&
         std::all_of(token.begin(), token.end(), [](char c) {
           return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
         });
}

std::string NormalizeLabel(std::string_view token) {
  return Singularize(ToLower(Trim(token)));
}

int DefaultMinVotes(int num_patterns) { return num_patterns / 2 + 1; }

std::map<std::string, int> EnsembleVote(
    const std::vector<std::vector<std::string>> &labels_per_pattern,
    int min_votes) {
  const int n = static_cast<int>(labels_per_pattern.size());
  if (n < 1) throw ConfigError("voting needs at least one pattern");
  if (min_votes < 1 || min_votes > n) {
    throw ConfigError("min_votes must be in [1, " + std::to_string(n) +
                      "], got " + std::to_string(min_votes));
  }
  std::map<std::string, int> counts;
  for (const auto &labels : labels_per_pattern) {
    for (const auto &l : std::set<std::string>(labels.begin(), labels.end())) {
      ++counts[l];
    }
  }
  std::erase_if(counts, [&](const auto &kv) { return kv.second < min_votes; });
  return counts;
}

std::vector<std::string> PredictionLabels(
    const std::vector<MaskPrediction> &predictions) {
  std::vector<std::string> out;
  for (const auto &p : predictions) {
    if (IsWordToken(p.token)) out.push_back(NormalizeLabel(p.token));
  }
  return out;
}

CandidateTypeSet GenerateCandidates(const ModelClient &client,
                                    std::string_view sentence,
                                    const Span &mention,
                                    const CandidateOptions &options) {
  if (options.patterns.empty()) throw ConfigError("no Hearst patterns");
  const int n = static_cast<int>(options.patterns.size());
  const int m = options.min_votes.value_or(DefaultMinVotes(n));

  CandidateTypeSet cs;
  std::vector<std::vector<std::string>> labels_per_pattern;
  for (const auto &pattern : options.patterns) {
    PatternPredictions pp;
    pp.pattern = pattern.text();
    pp.prompt = BuildPrompt(sentence, mention, pattern);
    pp.predictions = client.FillMask(pp.prompt, options.top_k);
    labels_per_pattern.push_back(PredictionLabels(pp.predictions));
    cs.per_pattern.push_back(std::move(pp));
  }
  cs.vote_counts = EnsembleVote(labels_per_pattern, 1);
  for (const auto &[label, count] : EnsembleVote(labels_per_pattern, m)) {
    cs.labels.push_back(label);
  }

  if (options.use_head_word) {
    if (auto head = client.HeadWord(sentence, mention);
        head && IsWordToken(*head)) {
      cs.head_word = NormalizeLabel(*head);
    }
  }
  return cs;
}

}  // namespace fet

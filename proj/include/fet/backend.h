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

#ifndef FET_BACKEND_H_
#define FET_BACKEND_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fet/text.h"
#include "json.hpp"

namespace fet {

// Mask slot spelled in engine-level text. Backends map it to their own
// model's mask token.
inline constexpr std::string_view kMaskToken = "[MASK]";

struct MaskPrediction {
  std::string token;
  double probability = 0.0;

  bool operator==(const MaskPrediction &other) const = default;
};

struct EntailmentVerdict {
  double entail = 0.0;
  double neutral = 0.0;
  double contradict = 0.0;

  bool operator==(const EntailmentVerdict &other) const = default;
};

// Word -> vector, or nullopt for out-of-vocabulary words.
using EmbeddingMap = std::map<std::string, std::optional<std::vector<double>>>;

enum class RequestKind { kFillMask, kEntail, kEmbed, kHeadWord };

const char *RequestKindName(RequestKind kind);
RequestKind ParseRequestKind(std::string_view name);

// A model-service request. The payload is the HTTP body sent to the remote
// endpoint named after the kind; the canonical serialization (sorted keys,
// no whitespace) keys the fixture store.
struct BackendRequest {
  RequestKind kind;
  nlohmann::json payload;

  static BackendRequest FillMask(std::string_view text, int top_k);
  static BackendRequest Entail(std::string_view premise,
                               std::string_view hypothesis);
  // Tokens are deduplicated and sorted so equal sets key identically.
  static BackendRequest Embed(std::span<const std::string> tokens);
  static BackendRequest HeadWord(std::string_view sentence, const Span &span);

  std::string Canonical() const;
  static BackendRequest FromCanonical(std::string_view text);

  // SHA-256 of Canonical(), lowercase hex.
  std::string Hash() const;
};

// Moves one request to a model service and returns the raw JSON response
// body. Implementations must be safe to call from several threads.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual std::string Call(const BackendRequest &request) = 0;
};

// Typed model operations over a transport. Every response is checked
// against the protocol contract; violations raise BackendError.
class ModelClient {
 public:
  explicit ModelClient(Transport *transport) : transport_(transport) {}

  // `text` must contain exactly one [MASK]; results sorted by probability,
  // at most top_k of them.
  std::vector<MaskPrediction> FillMask(std::string_view text, int top_k) const;

  // Probabilities in [0, 1] summing to 1 within 1e-6.
  EntailmentVerdict Entail(std::string_view premise,
                           std::string_view hypothesis) const;

  // One entry per distinct requested token; all vectors share a dimension.
  EmbeddingMap Embed(std::span<const std::string> tokens) const;

  std::optional<std::string> HeadWord(std::string_view sentence,
                                      const Span &span) const;

  Transport *transport() const { return transport_; }

 private:
  nlohmann::json Call(const BackendRequest &request) const;

  Transport *transport_;
};

// Response builders shared by transports that synthesize answers locally.
nlohmann::json FillMaskResponse(const std::vector<MaskPrediction> &preds);
nlohmann::json EntailResponse(const EntailmentVerdict &verdict);
nlohmann::json EmbedResponse(int dim, const EmbeddingMap &vectors);
nlohmann::json HeadWordResponse(const std::optional<std::string> &head);

std::string Sha256Hex(std::string_view data);

}  // namespace fet

#endif  // FET_BACKEND_H_

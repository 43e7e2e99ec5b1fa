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

#include "fet/backend.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fet/errors.h"

namespace fet {
namespace {

using nlohmann::json;

int CountOccurrences(std::string_view text, std::string_view needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string_view::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

[[noreturn]] void Malformed(const BackendRequest &request,
                            const std::string &why) {
  throw BackendError(std::string("malformed ") +
                     RequestKindName(request.kind) + " response: " + why);
}

double Probability(const BackendRequest &request, const json &value,
                   const char *field) {
  if (!value.is_number()) {
    Malformed(request, std::string("'") + field + "' is not a number");
  }
  double p = value.get<double>();
  if (!(p >= 0.0 && p <= 1.0)) {
    Malformed(request, std::string("'") + field + "' outside [0, 1]");
  }
  return p;
}

}  // namespace

const char *RequestKindName(RequestKind kind) {
  switch (kind) {
    case RequestKind::kFillMask:
      return "fill_mask";
    case RequestKind::kEntail:
      return "entail";
    case RequestKind::kEmbed:
      return "embed";
    case RequestKind::kHeadWord:
      return "head_word";
  }
  return "unknown";
}

RequestKind ParseRequestKind(std::string_view name) {
  if (name == "fill_mask") return RequestKind::kFillMask;
  if (name == "entail") return RequestKind::kEntail;
  if (name == "embed") return RequestKind::kEmbed;
  if (name == "head_word") return RequestKind::kHeadWord;
  throw DataError("unknown request kind '" + std::string(name) + "'");
}

BackendRequest BackendRequest::FillMask(std::string_view text, int top_k) {
  if (CountOccurrences(text, kMaskToken) != 1) {
    throw DataError("fill_mask text must contain exactly one [MASK]: '" +
                    std::string(text) + "'");
  }
  if (top_k < 1) throw ConfigError("top_k must be at least 1");
  return {RequestKind::kFillMask,
          json{{"text", std::string(text)}, {"top_k", top_k}}};
}

BackendRequest BackendRequest::Entail(std::string_view premise,
                                      std::string_view hypothesis) {
  if (premise.empty() || hypothesis.empty()) {
    throw DataError("entail requires a non-empty premise and hypothesis");
  }
  return {RequestKind::kEntail, json{{"premise", std::string(premise)},
                                     {"hypothesis", std::string(hypothesis)}}};
}

BackendRequest BackendRequest::Embed(std::span<const std::string> tokens) {
  std::set<std::string> unique(tokens.begin(), tokens.end());
  return {RequestKind::kEmbed,
          json{{"tokens", std::vector<std::string>(unique.begin(),
                                                   unique.end())}}};
}

BackendRequest BackendRequest::HeadWord(std::string_view sentence,
                                        const Span &span) {
  ToByteRange(sentence, span);  // bounds check
  return {RequestKind::kHeadWord,
          json{{"sentence", std::string(sentence)},
               {"span", {{"start", span.start}, {"end", span.end}}}}};
}

std::string BackendRequest::Canonical() const {
  // nlohmann::json objects keep keys sorted; dump() emits no whitespace.
  json j{{"kind", RequestKindName(kind)}, {"payload", payload}};
  return j.dump();
}

BackendRequest BackendRequest::FromCanonical(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw DataError(std::string("unparseable request: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() ||
      !j.contains("payload") || !j["payload"].is_object()) {
    throw DataError("request must be {\"kind\": ..., \"payload\": {...}}");
  }
  return {ParseRequestKind(j["kind"].get<std::string>()), j["payload"]};
}

std::string BackendRequest::Hash() const { return Sha256Hex(Canonical()); }

std::string Sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw BackendError("SHA-256 digest failed");
  }
  static const char *hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

json ModelClient::Call(const BackendRequest &request) const {
  std::string body = transport_->Call(request);
  json j;
  try {
    j = json::parse(body);
  } catch (const json::exception &e) {
    Malformed(request, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) Malformed(request, "body is not an object");
  return j;
}

std::vector<MaskPrediction> ModelClient::FillMask(std::string_view text,
                                                  int top_k) const {
  BackendRequest request = BackendRequest::FillMask(text, top_k);
  json j = Call(request);
  if (!j.contains("predictions") || !j["predictions"].is_array()) {
    Malformed(request, "missing 'predictions' array");
  }
  std::vector<MaskPrediction> out;
  for (const auto &p : j["predictions"]) {
    if (!p.is_object() || !p.contains("token") || !p["token"].is_string() ||
        !p.contains("probability")) {
      Malformed(request, "prediction needs 'token' and 'probability'");
    }
    out.push_back({p["token"].get<std::string>(),
                   Probability(request, p["probability"], "probability")});
  }
  if (static_cast<int>(out.size()) > top_k) {
    Malformed(request, "more than top_k predictions");
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].probability > out[i - 1].probability) {
      Malformed(request, "predictions not sorted by descending probability");
    }
  }
  return out;
}

EntailmentVerdict ModelClient::Entail(std::string_view premise,
                                      std::string_view hypothesis) const {
  BackendRequest request = BackendRequest::Entail(premise, hypothesis);
  json j = Call(request);
  for (const char *field : {"entail", "neutral", "contradict"}) {
    if (!j.contains(field)) {
      Malformed(request, std::string("missing '") + field + "'");
    }
  }
  EntailmentVerdict v{Probability(request, j["entail"], "entail"),
                      Probability(request, j["neutral"], "neutral"),
                      Probability(request, j["contradict"], "contradict")};
  if (std::abs(v.entail + v.neutral + v.contradict - 1.0) > 1e-6) {
    Malformed(request, "probabilities do not sum to 1");
  }
  return v;
}

EmbeddingMap ModelClient::Embed(std::span<const std::string> tokens) const {
  BackendRequest request = BackendRequest::Embed(tokens);
  EmbeddingMap out;
  if (request.payload["tokens"].empty()) return out;
  json j = Call(request);
  if (!j.contains("dim") || !j["dim"].is_number_integer() ||
      j["dim"].get<int>() < 1) {
    Malformed(request, "missing positive integer 'dim'");
  }
  if (!j.contains("vectors") || !j["vectors"].is_object()) {
    Malformed(request, "missing 'vectors' object");
  }
  const auto dim = j["dim"].get<std::size_t>();
  const json &vectors = j["vectors"];
  for (const auto &token : request.payload["tokens"]) {
    const auto word = token.get<std::string>();
    if (!vectors.contains(word)) Malformed(request, "no entry for '" + word + "'");
    const json &v = vectors[word];
    if (v.is_null()) {
      out.emplace(word, std::nullopt);
      continue;
    }
    if (!v.is_array() || v.size() != dim) {
      Malformed(request, "vector for '" + word + "' is not of length dim");
    }
    std::vector<double> vec;
    vec.reserve(dim);
    for (const auto &x : v) {
      if (!x.is_number() || !std::isfinite(x.get<double>())) {
        Malformed(request, "non-finite entry in vector for '" + word + "'");
      }
      vec.push_back(x.get<double>());
    }
    out.emplace(word, std::move(vec));
  }
  return out;
}

std::optional<std::string> ModelClient::HeadWord(std::string_view sentence,
                                                 const Span &span) const {
  BackendRequest request = BackendRequest::HeadWord(sentence, span);
  json j = Call(request);
  if (!j.contains("head")) Malformed(request, "missing 'head'");
  if (j["head"].is_null()) return std::nullopt;
  if (!j["head"].is_string()) Malformed(request, "'head' is not a string");
  auto head = j["head"].get<std::string>();
  if (head.empty()) return std::nullopt;
  return head;
}

json FillMaskResponse(const std::vector<MaskPrediction> &preds) {
  json list = json::array();
  for (const auto &p : preds) {
    list.push_back({{"token", p.token}, {"probability", p.probability}});
  }
  return json{{"predictions", list}};
}

json EntailResponse(const EntailmentVerdict &verdict) {
  return json{{"entail", verdict.entail},
              {"neutral", verdict.neutral},
              {"contradict", verdict.contradict}};
}

json EmbedResponse(int dim, const EmbeddingMap &vectors) {
  json v = json::object();
  for (const auto &[word, vec] : vectors) {
    v[word] = vec ? json(*vec) : json(nullptr);
  }
  return json{{"dim", dim}, {"vectors", v}};
}

json HeadWordResponse(const std::optional<std::string> &head) {
  return json{{"head", head ? json(*head) : json(nullptr)}};
}

}  // namespace fet

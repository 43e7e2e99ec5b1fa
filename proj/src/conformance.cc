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

#include "fet/conformance.h"

#include <cmath>
#include <map>
#include <utility>

#include "fet/candidates.h"
#include "fet/errors.h"

namespace fet {
namespace {

using nlohmann::json;

constexpr char kS1[] = "Sammy Sosa got a standing ovation at Wrigley Field.";
constexpr char kS2[] =
    "Governor Arnold Schwarzenegger gives a speech at Mission Serve's "
    "service project on Veterans Day 2010";

class Checker {
 public:
  // Registers the rule as exercised; the first failure sticks.
  void Check(RequestKind kind, const std::string &rule, bool ok,
             const std::string &detail) {
    auto [it, inserted] = results_.try_emplace({kind, Order(rule)},
                                               ConformanceResult{kind, rule, true, ""});
    if (!ok && it->second.passed) {
      it->second.passed = false;
      it->second.detail = detail;
    }
  }

  std::vector<ConformanceResult> Results() const {
    std::vector<ConformanceResult> out;
    for (const auto &[key, r] : results_) out.push_back(r);
    return out;
  }

 private:
  static int Order(const std::string &rule) {
    static const char *kRules[] = {"reachable", "schema",  "bounds",
                                   "ordering",  "top_k",   "sum",
                                   "deterministic"};
    for (int i = 0; i < 7; ++i) {
      if (rule == kRules[i]) return i;
    }
    return 7;
  }

  std::map<std::pair<RequestKind, int>, ConformanceResult> results_;
};

bool IsProbability(const json &v) {
  if (!v.is_number()) return false;
  double p = v.get<double>();
  return p >= 0.0 && p <= 1.0;
}

void CheckFillMask(Checker &c, const BackendRequest &r, const json &j) {
  const auto kind = r.kind;
  bool schema = j.contains("predictions") && j["predictions"].is_array();
  if (schema) {
    for (const auto &p : j["predictions"]) {
      if (!p.is_object() || !p.contains("token") || !p["token"].is_string() ||
          !p.contains("probability") || !p["probability"].is_number()) {
        schema = false;
      }
    }
  }
  c.Check(kind, "schema", schema,
          "predictions must be [{token: string, probability: number}]");
  if (!schema) return;
  const json &preds = j["predictions"];
  bool bounds = true;
  bool ordered = true;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    bounds = bounds && IsProbability(preds[i]["probability"]);
    if (i > 0 && preds[i]["probability"].get<double>() >
                     preds[i - 1]["probability"].get<double>()) {
      ordered = false;
    }
  }
  c.Check(kind, "bounds", bounds, "probability outside [0, 1]");
  c.Check(kind, "ordering", ordered,
          "predictions not sorted by descending probability");
  const int top_k = r.payload["top_k"].get<int>();
  c.Check(kind, "top_k", static_cast<int>(preds.size()) <= top_k,
          std::to_string(preds.size()) + " predictions for top_k " +
              std::to_string(top_k));
}

void CheckEntail(Checker &c, const BackendRequest &r, const json &j) {
  bool schema = true;
  for (const char *f : {"entail", "neutral", "contradict"}) {
    if (!j.contains(f) || !j[f].is_number()) schema = false;
  }
  c.Check(r.kind, "schema", schema,
          "response needs numeric entail, neutral and contradict");
  if (!schema) return;
  c.Check(r.kind, "bounds",
          IsProbability(j["entail"]) && IsProbability(j["neutral"]) &&
              IsProbability(j["contradict"]),
          "probability outside [0, 1]");
  double sum = j["entail"].get<double>() + j["neutral"].get<double>() +
               j["contradict"].get<double>();
  c.Check(r.kind, "sum", std::abs(sum - 1.0) <= 1e-6,
          "probabilities sum to " + std::to_string(sum));
}

void CheckEmbed(Checker &c, const BackendRequest &r, const json &j) {
  bool schema = j.contains("dim") && j["dim"].is_number_integer() &&
                j["dim"].get<int>() >= 1 && j.contains("vectors") &&
                j["vectors"].is_object();
  std::string detail = "response needs positive integer dim and vectors";
  if (schema) {
    const auto dim = j["dim"].get<std::size_t>();
    for (const auto &t : r.payload["tokens"]) {
      const auto word = t.get<std::string>();
      if (!j["vectors"].contains(word)) {
        schema = false;
        detail = "no entry for '" + word + "'";
        break;
      }
      const json &v = j["vectors"][word];
      if (v.is_null()) continue;
      bool ok = v.is_array() && v.size() == dim;
      for (const auto &x : v) {
        ok = ok && x.is_number() && std::isfinite(x.get<double>());
      }
      if (!ok) {
        schema = false;
        detail = "vector for '" + word + "' is not dim finite numbers";
        break;
      }
    }
  }
  c.Check(r.kind, "schema", schema, detail);
}

void CheckHeadWord(Checker &c, const BackendRequest &r, const json &j) {
  c.Check(r.kind, "schema",
          j.contains("head") && (j["head"].is_null() || j["head"].is_string()),
          "response needs head: string or null");
}

}  // namespace

std::vector<BackendRequest> DefaultBattery() {
  std::vector<BackendRequest> out;
  const Span wrigley{37, 50};
  for (const auto &p : DefaultPatterns()) {
    out.push_back(BackendRequest::FillMask(BuildPrompt(kS1, wrigley, p), 10));
  }
  for (const char *type : {"location", "organization", "person"}) {
    out.push_back(BackendRequest::Entail(
        kS1, std::string("In this sentence, Wrigley Field is a ") + type + "."));
  }
  const std::vector<std::string> tokens = {"building", "city",  "country",
                                           "location", "place", "region"};
  out.push_back(BackendRequest::Embed(tokens));
  out.push_back(BackendRequest::HeadWord(kS2, Span{0, 30}));
  out.push_back(BackendRequest::HeadWord(kS1, wrigley));
  return out;
}

std::vector<ConformanceResult> RunConformance(
    Transport *transport, const std::vector<BackendRequest> &battery) {
  Checker c;
  for (const auto &request : battery) {
    std::string first;
    std::string second;
    try {
      first = transport->Call(request);
      second = transport->Call(request);
    } catch (const Error &e) {
      c.Check(request.kind, "reachable", false, e.what());
      continue;
    }
    c.Check(request.kind, "reachable", true, "");
    json j;
    try {
      j = json::parse(first);
    } catch (const json::exception &) {
      c.Check(request.kind, "schema", false, "body is not JSON");
      continue;
    }
    if (!j.is_object()) {
      c.Check(request.kind, "schema", false, "body is not an object");
      continue;
    }
    json again = json::parse(second, nullptr, false);
    c.Check(request.kind, "deterministic", again == j,
            "two identical requests got different responses");
    switch (request.kind) {
      case RequestKind::kFillMask:
        CheckFillMask(c, request, j);
        break;
      case RequestKind::kEntail:
        CheckEntail(c, request, j);
        break;
      case RequestKind::kEmbed:
        CheckEmbed(c, request, j);
        break;
      case RequestKind::kHeadWord:
        CheckHeadWord(c, request, j);
        break;
    }
  }
  return c.Results();
}

bool AllPassed(const std::vector<ConformanceResult> &results) {
  for (const auto &r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace fet

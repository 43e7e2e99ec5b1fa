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

#ifndef FET_TESTS_SUPPORT_SCRIPTED_TRANSPORT_H_
#define FET_TESTS_SUPPORT_SCRIPTED_TRANSPORT_H_

#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "fet/backend.h"
#include "fet/embedding_table.h"

namespace fet::testing {

// Answers requests from a scenario file instead of real models:
//
//   {"embeddings": "<word2vec text file, relative to the scenario>",
//    "fill_mask": [{"text": ..., "predictions": [[token, p], ...]}],
//    "entail": [{"premise": ..., "hypothesis": ..., "verdict": [e, n, c]}],
//    "head_word": [{"sentence": ..., "start": s, "end": e, "head": ...}]}
//
// Requests the scenario does not cover raise BackendError, so a recording
// run fails loudly instead of storing made-up answers.
class ScriptedTransport : public Transport {
 public:
  static ScriptedTransport Load(const std::string &path);

  std::string Call(const BackendRequest &request) override;

  const EmbeddingTable &embeddings() const { return embeddings_; }
  void set_embeddings(EmbeddingTable table) { embeddings_ = std::move(table); }

  int calls() const { return calls_.load(); }

  ScriptedTransport() = default;
  ScriptedTransport(ScriptedTransport &&other) noexcept;

 private:
  EmbeddingTable embeddings_;
  std::map<std::string, std::vector<MaskPrediction>> fill_mask_;
  std::map<std::pair<std::string, std::string>, EntailmentVerdict> entail_;
  std::map<std::tuple<std::string, int, int>, std::optional<std::string>>
      heads_;
  std::atomic<int> calls_{0};
};

// Transport backed by a function; counts calls.
class LambdaTransport : public Transport {
 public:
  using Handler = std::function<nlohmann::json(const BackendRequest &)>;

  explicit LambdaTransport(Handler handler) : handler_(std::move(handler)) {}

  std::string Call(const BackendRequest &request) override {
    ++calls_;
    return handler_(request).dump();
  }

  int calls() const { return calls_.load(); }

 private:
  Handler handler_;
  std::atomic<int> calls_{0};
};

}  // namespace fet::testing

#endif  // FET_TESTS_SUPPORT_SCRIPTED_TRANSPORT_H_

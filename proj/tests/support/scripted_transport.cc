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

#include "scripted_transport.h"

#include <filesystem>

#include "fet/errors.h"
#include "fet/text.h"

namespace fet::testing {

using nlohmann::json;

ScriptedTransport::ScriptedTransport(ScriptedTransport &&other) noexcept
    : embeddings_(std::move(other.embeddings_)),
      fill_mask_(std::move(other.fill_mask_)),
      entail_(std::move(other.entail_)),
      heads_(std::move(other.heads_)),
      calls_(other.calls_.load()) {}

ScriptedTransport ScriptedTransport::Load(const std::string &path) {
  json j = json::parse(ReadFile(path));
  ScriptedTransport t;
  auto dir = std::filesystem::path(path).parent_path();
  t.embeddings_ = EmbeddingTable::Load(
      (dir / j.at("embeddings").get<std::string>()).string());
  for (const auto &e : j.at("fill_mask")) {
    auto &list = t.fill_mask_[e.at("text").get<std::string>()];
    for (const auto &p : e.at("predictions")) {
      list.push_back({p.at(0).get<std::string>(), p.at(1).get<double>()});
    }
  }
  for (const auto &e : j.at("entail")) {
    const auto &v = e.at("verdict");
    t.entail_[{e.at("premise").get<std::string>(),
               e.at("hypothesis").get<std::string>()}] = {
        v.at(0).get<double>(), v.at(1).get<double>(), v.at(2).get<double>()};
  }
  for (const auto &e : j.at("head_word")) {
    std::optional<std::string> head;
    if (e.at("head").is_string()) head = e["head"].get<std::string>();
    t.heads_[{e.at("sentence").get<std::string>(), e.at("start").get<int>(),
              e.at("end").get<int>()}] = head;
  }
  return t;
}

std::string ScriptedTransport::Call(const BackendRequest &request) {
  ++calls_;
  const json &p = request.payload;
  switch (request.kind) {
    case RequestKind::kFillMask: {
      auto it = fill_mask_.find(p.at("text").get<std::string>());
      if (it == fill_mask_.end()) {
        throw BackendError("scenario has no fill_mask answer for '" +
                           p["text"].get<std::string>() + "'");
      }
      auto preds = it->second;
      const auto k = p.at("top_k").get<std::size_t>();
      if (preds.size() > k) preds.resize(k);
      return FillMaskResponse(preds).dump();
    }
    case RequestKind::kEntail: {
      auto it = entail_.find({p.at("premise").get<std::string>(),
                              p.at("hypothesis").get<std::string>()});
      if (it == entail_.end()) {
        throw BackendError("scenario has no entail answer for '" +
                           p["hypothesis"].get<std::string>() + "'");
      }
      return EntailResponse(it->second).dump();
    }
    case RequestKind::kEmbed: {
      auto tokens = p.at("tokens").get<std::vector<std::string>>();
      return EmbedResponse(embeddings_.dim(), embeddings_.Lookup(tokens))
          .dump();
    }
    case RequestKind::kHeadWord: {
      auto it = heads_.find({p.at("sentence").get<std::string>(),
                             p.at("span").at("start").get<int>(),
                             p.at("span").at("end").get<int>()});
      if (it == heads_.end()) {
        throw BackendError("scenario has no head_word answer");
      }
      return HeadWordResponse(it->second).dump();
    }
  }
  throw BackendError("unknown request kind");
}

}  // namespace fet::testing

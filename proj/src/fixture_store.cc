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

#include "fet/fixture_store.h"

#include <fstream>
#include <sstream>

#include "fet/errors.h"

namespace fet {

namespace fs = std::filesystem;

fs::path FixturePath(const fs::path &dir, const BackendRequest &request) {
  return dir / (request.Hash() + ".json");
}

FixtureTransport::FixtureTransport(fs::path dir) : dir_(std::move(dir)) {
  if (!fs::is_directory(dir_)) {
    throw ConfigError("fixture directory does not exist: " + dir_.string());
  }
}

std::string FixtureTransport::Call(const BackendRequest &request) {
  const std::string hash = request.Hash();
  std::ifstream in(dir_ / (hash + ".json"), std::ios::binary);
  if (!in) throw MissingFixtureError(hash, RequestKindName(request.kind));
  std::ostringstream body;
  body << in.rdbuf();
  std::string text = body.str();
  if (!nlohmann::json::accept(text) || !nlohmann::json::parse(text).is_object()) {
    throw BackendError("corrupt fixture " + hash + ": body is not a JSON object");
  }
  return text;
}

RecordingTransport::RecordingTransport(Transport *live, fs::path dir)
    : live_(live), dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) {
    throw ConfigError("cannot create fixture directory " + dir_.string());
  }
}

std::string RecordingTransport::Call(const BackendRequest &request) {
  std::string body = live_->Call(request);
  const fs::path target = FixturePath(dir_, request);
  fs::path tmp = target;
  tmp += ".tmp";

  std::lock_guard<std::mutex> lock(write_mu_);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << body;
    if (!out) throw BackendError("cannot write fixture " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw BackendError("cannot store fixture " + target.string());
  ++recorded_;
  return body;
}

}  // namespace fet

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

#ifndef FET_FIXTURE_STORE_H_
#define FET_FIXTURE_STORE_H_

#include <atomic>
#include <filesystem>
#include <mutex>
#include <string>

#include "fet/backend.h"

namespace fet {

// Replays recorded responses. A fixture is the file <sha256>.json in the
// store directory, keyed by the hash of the canonical request; its body is
// the response verbatim. Never touches the network.
class FixtureTransport : public Transport {
 public:
  explicit FixtureTransport(std::filesystem::path dir);

  // Throws MissingFixtureError naming the hash when no file exists, and
  // BackendError when the file is not a JSON object.
  std::string Call(const BackendRequest &request) override;

  const std::filesystem::path &dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

// Forwards to a live transport and stores every response in the fixture
// directory. Re-recording a request overwrites its fixture. Writes are
// serialized; calls to the live transport may overlap.
class RecordingTransport : public Transport {
 public:
  RecordingTransport(Transport *live, std::filesystem::path dir);

  std::string Call(const BackendRequest &request) override;

  int recorded() const { return recorded_.load(); }

 private:
  Transport *live_;
  std::filesystem::path dir_;
  std::mutex write_mu_;
  std::atomic<int> recorded_{0};
};

// Path of the fixture for `request` inside `dir`.
std::filesystem::path FixturePath(const std::filesystem::path &dir,
                                  const BackendRequest &request);

}  // namespace fet

#endif  // FET_FIXTURE_STORE_H_

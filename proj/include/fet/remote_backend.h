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

#ifndef FET_REMOTE_BACKEND_H_
#define FET_REMOTE_BACKEND_H_

#include <string>

#include "fet/backend.h"

namespace fet {

// HTTP/JSON client for a model service. Each request kind is a POST to
// /<kind> (for example /fill_mask) whose body is the request payload.
// Connection failures and non-200 replies raise BackendError.
class RemoteTransport : public Transport {
 public:
  // `base_url` like "http://127.0.0.1:8000".
  explicit RemoteTransport(std::string base_url, int timeout_seconds = 60);

  std::string Call(const BackendRequest &request) override;

 private:
  std::string base_url_;
  int timeout_seconds_;
};

}  // namespace fet

#endif  // FET_REMOTE_BACKEND_H_

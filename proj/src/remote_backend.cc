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

#include "fet/remote_backend.h"

#include "fet/errors.h"
#include "httplib.h"

namespace fet {

RemoteTransport::RemoteTransport(std::string base_url, int timeout_seconds)
    : base_url_(std::move(base_url)), timeout_seconds_(timeout_seconds) {
  while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
  if (base_url_.rfind("http://", 0) != 0) {
    throw ConfigError("backend URL must start with http://: " + base_url_);
  }
}

std::string RemoteTransport::Call(const BackendRequest &request) {
  // httplib::Client is not safe to share across threads; one per call.
  httplib::Client client(base_url_);
  client.set_connection_timeout(timeout_seconds_);
  client.set_read_timeout(timeout_seconds_);
  const std::string endpoint = std::string("/") + RequestKindName(request.kind);
  auto result =
      client.Post(endpoint, request.payload.dump(), "application/json");
  if (!result) {
    throw BackendError("backend unavailable at " + base_url_ + endpoint +
                       ": " + httplib::to_string(result.error()));
  }
  if (result->status != 200) {
    throw BackendError("backend " + endpoint + " returned status " +
                       std::to_string(result->status) + ": " + result->body);
  }
  return result->body;
}

}  // namespace fet

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

#ifndef FET_ERRORS_H_
#define FET_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fet {

// Base class for all errors raised by the library. The category determines
// the process exit code used by the command-line tool.
class Error : public std::runtime_error {
 public:
  enum class Category { kConfig, kData, kBackend };

  Error(Category category, const std::string &message)
      : std::runtime_error(message), category_(category) {}

  Category category() const { return category_; }

  // Exit code for the command-line tool: 1 config, 2 data, 3 backend.
  int exit_code() const;

 private:
  Category category_;
};

// Bad configuration: flags, verbalizer, pattern file, weights.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string &message)
      : Error(Category::kConfig, message) {}
};

// Malformed or inconsistent input data.
class DataError : public Error {
 public:
  explicit DataError(const std::string &message)
      : Error(Category::kData, message) {}
};

// Model backend failure: unreachable, malformed response, missing fixture.
class BackendError : public Error {
 public:
  explicit BackendError(const std::string &message)
      : Error(Category::kBackend, message) {}
};

class MissingFixtureError : public BackendError {
 public:
  MissingFixtureError(const std::string &hash, const std::string &kind)
      : BackendError("missing fixture " + hash + " for " + kind + " request"),
        hash_(hash) {}

  const std::string &hash() const { return hash_; }

 private:
  std::string hash_;
};

}  // namespace fet

#endif  // FET_ERRORS_H_

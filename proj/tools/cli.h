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

#ifndef FET_TOOLS_CLI_H_
#define FET_TOOLS_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fet {

struct RunConfig {
  std::string ontology;
  std::string verbalizer;
  std::string patterns;  // empty: built-in defaults
  std::string backend = "fixture";
  std::string backend_url;
  std::string fixtures_dir;
  double theta = 0.3;
  double w_cand = 0.5;
  double w_head = 0.5;
  int top_k = 10;
  std::optional<int> min_votes;
  int parallelism = 1;
  bool no_nli = false;
  bool no_headword = false;
  bool no_ensemble = false;
};

// Entry point shared by the fet binary and the tests. `args` excludes the
// program name. Exit codes: 0 success, 1 usage or configuration, 2 data,
// 3 backend.
int RunCli(const std::vector<std::string> &args, std::istream &in,
           std::ostream &out, std::ostream &err);

}  // namespace fet

#endif  // FET_TOOLS_CLI_H_

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

#ifndef FET_CONFORMANCE_H_
#define FET_CONFORMANCE_H_

#include <string>
#include <vector>

#include "fet/backend.h"

namespace fet {

// One checked protocol rule for one request kind.
struct ConformanceResult {
  RequestKind kind;
  std::string rule;  // schema, bounds, ordering, top_k, sum, reachable,
                     // deterministic
  bool passed = true;
  std::string detail;  // first failure, empty when passed
};

// Canned requests over the shipped example sentences. Every request here is
// also answered by the shipped fixture store.
std::vector<BackendRequest> DefaultBattery();

// Sends every request of `battery` twice and checks the response bodies
// against the wire protocol. Results are grouped per (kind, rule) in a fixed
// order; a rule not exercised by the battery is omitted. Never throws for
// backend failures; those become failed "reachable" results.
std::vector<ConformanceResult> RunConformance(
    Transport *transport, const std::vector<BackendRequest> &battery);

bool AllPassed(const std::vector<ConformanceResult> &results);

}  // namespace fet

#endif  // FET_CONFORMANCE_H_

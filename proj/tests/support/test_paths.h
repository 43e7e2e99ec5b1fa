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

#ifndef FET_TESTS_SUPPORT_TEST_PATHS_H_
#define FET_TESTS_SUPPORT_TEST_PATHS_H_

#include <string>

namespace fet::testing {

inline std::string SourcePath(const std::string &relative) {
  return std::string(FET_SOURCE_DIR) + "/" + relative;
}

inline std::string ExampleOntology() {
  return SourcePath("data/ontology/ontonotes_fragment.txt");
}
inline std::string VerbalizerPath() { return SourcePath("data/verbalizer.json"); }
inline std::string FixturesDir() { return SourcePath("data/fixtures"); }
inline std::string ScenarioPath() {
  return SourcePath("data/scenario/worked_examples.json");
}
inline std::string S1Dataset() { return SourcePath("data/examples/s1.jsonl"); }

inline constexpr char kS1[] =
    "Sammy Sosa got a standing ovation at Wrigley Field.";
inline constexpr char kS2[] =
    "Governor Arnold Schwarzenegger gives a speech at Mission Serve's "
    "service project on Veterans Day 2010";

}  // namespace fet::testing

#endif  // FET_TESTS_SUPPORT_TEST_PATHS_H_

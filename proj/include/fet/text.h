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

#ifndef FET_TEXT_H_
#define FET_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fet {

// Half-open span [start, end) in Unicode code points.
struct Span {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
  bool operator==(const Span &other) const = default;
  auto operator<=>(const Span &other) const = default;
};

// Number of code points in a UTF-8 string.
std::size_t CodePointLength(std::string_view utf8);

// Converts a code point span into a byte range of `utf8`. Throws DataError
// when the span is empty, reversed or out of bounds.
std::pair<std::size_t, std::size_t> ToByteRange(std::string_view utf8,
                                                const Span &span);

// Returns the substring of `utf8` covered by `span`.
std::string SpanText(std::string_view utf8, const Span &span);

std::string ToLower(std::string_view text);
std::string_view Trim(std::string_view text);

// Splits on runs of whitespace and underscores.
std::vector<std::string> SplitWords(std::string_view text);

// Reads a whole file. Throws DataError when it cannot be opened.
std::string ReadFile(const std::string &path);

}  // namespace fet

#endif  // FET_TEXT_H_

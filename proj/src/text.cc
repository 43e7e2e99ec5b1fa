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

#include "fet/text.h"

#include <fstream>
#include <sstream>

#include "fet/errors.h"

namespace fet {
namespace {

bool IsContinuationByte(unsigned char c) { return (c & 0xC0) == 0x80; }

}  // namespace

std::size_t CodePointLength(std::string_view utf8) {
  std::size_t n = 0;
  for (unsigned char c : utf8) {
    if (!IsContinuationByte(c)) ++n;
  }
  return n;
}

std::pair<std::size_t, std::size_t> ToByteRange(std::string_view utf8,
                                                const Span &span) {
  if (span.start < 0 || span.end <= span.start) {
    throw DataError("invalid span [" + std::to_string(span.start) + ", " +
                    std::to_string(span.end) + ")");
  }
  std::size_t begin = std::string_view::npos;
  std::size_t end = std::string_view::npos;
  int cp = 0;
  for (std::size_t i = 0; i <= utf8.size(); ++i) {
    if (i < utf8.size() && IsContinuationByte(utf8[i])) continue;
    if (cp == span.start) begin = i;
    if (cp == span.end) {
      end = i;
      break;
    }
    ++cp;
  }
  if (begin == std::string_view::npos || end == std::string_view::npos) {
    throw DataError("span [" + std::to_string(span.start) + ", " +
                    std::to_string(span.end) + ") out of bounds for sentence "
                    "of length " + std::to_string(CodePointLength(utf8)));
  }
  return {begin, end};
}

std::string SpanText(std::string_view utf8, const Span &span) {
  auto [begin, end] = ToByteRange(utf8, span);
  return std::string(utf8.substr(begin, end - begin));
}

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view Trim(std::string_view text) {
  const char *ws = " \t\r\n\f\v";
  auto b = text.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = text.find_last_not_of(ws);
  return text.substr(b, e - b + 1);
}

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '_') {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace fet

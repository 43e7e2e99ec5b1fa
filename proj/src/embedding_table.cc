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

#include "fet/embedding_table.h"

#include <cmath>
#include <sstream>

#include "fet/errors.h"
#include "fet/text.h"

namespace fet {

EmbeddingTable EmbeddingTable::Parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  EmbeddingTable table;
  std::size_t vocab = 0;
  if (!std::getline(in, line)) throw DataError("embedding table: empty input");
  {
    std::istringstream header(line);
    if (!(header >> vocab >> table.dim_) || table.dim_ < 1) {
      throw DataError("embedding table: bad header '" + line + "'");
    }
  }
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::istringstream fields(line);
    std::string word;
    fields >> word;
    std::vector<double> vec;
    double x;
    while (fields >> x) vec.push_back(x);
    if (!fields.eof() || static_cast<int>(vec.size()) != table.dim_) {
      throw DataError("embedding table line " + std::to_string(line_no) +
                      ": expected " + std::to_string(table.dim_) +
                      " numbers after the word");
    }
    for (double v : vec) {
      if (!std::isfinite(v)) {
        throw DataError("embedding table line " + std::to_string(line_no) +
                        ": non-finite value");
      }
    }
    table.vectors_[word] = std::move(vec);
  }
  if (table.vectors_.size() != vocab) {
    throw DataError("embedding table: header says " + std::to_string(vocab) +
                    " words, found " + std::to_string(table.vectors_.size()));
  }
  return table;
}

EmbeddingTable EmbeddingTable::Load(const std::string &path) {
  return Parse(ReadFile(path));
}

const std::vector<double> *EmbeddingTable::Find(std::string_view word) const {
  auto it = vectors_.find(word);
  return it == vectors_.end() ? nullptr : &it->second;
}

EmbeddingMap EmbeddingTable::Lookup(std::span<const std::string> tokens) const {
  EmbeddingMap out;
  for (const auto &t : tokens) {
    const auto *v = Find(t);
    out[t] = v ? std::optional<std::vector<double>>(*v) : std::nullopt;
  }
  return out;
}

EmbeddingTable EmbeddingTable::Scaled(double factor) const {
  EmbeddingTable out = *this;
  for (auto &[word, vec] : out.vectors_) {
    for (double &x : vec) x *= factor;
  }
  return out;
}

}  // namespace fet

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

#ifndef FET_EMBEDDING_TABLE_H_
#define FET_EMBEDDING_TABLE_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fet/backend.h"

namespace fet {

// Static word-embedding table in the textual word2vec format: a header line
// "vocab_size dim" followed by one "word v1 ... vd" line per word.
class EmbeddingTable {
 public:
  static EmbeddingTable Parse(std::string_view text);
  static EmbeddingTable Load(const std::string &path);

  int dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }

  // nullptr for out-of-vocabulary words.
  const std::vector<double> *Find(std::string_view word) const;

  // Answers an embed request the way the protocol describes.
  EmbeddingMap Lookup(std::span<const std::string> tokens) const;

  const std::map<std::string, std::vector<double>, std::less<>> &vectors()
      const {
    return vectors_;
  }

  // Multiplies every vector by `factor`.
  EmbeddingTable Scaled(double factor) const;

 private:
  int dim_ = 0;
  std::map<std::string, std::vector<double>, std::less<>> vectors_;
};

}  // namespace fet

#endif  // FET_EMBEDDING_TABLE_H_

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

#include "fet/errors.h"

namespace fet {

int Error::exit_code() const {
  switch (category_) {
    case Category::kConfig:
      return 1;
    case Category::kData:
      return 2;
    case Category::kBackend:
      return 3;
  }
  return 1;
}

}  // namespace fet

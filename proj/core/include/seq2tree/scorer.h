// Copyright 2026 The Seq2Tree Authors.
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

#ifndef SEQ2TREE_SCORER_H_
#define SEQ2TREE_SCORER_H_

#include <span>
#include <string_view>

#include "seq2tree/token.h"

namespace seq2tree {

// Next-token scoring contract. Given the document and the decoded prefix
// (root first), writes one finite raw score per candidate; higher is more
// likely and scores need not be normalized. Implementations must be
// deterministic and must not let the score of one candidate depend on which
// other candidates are present. Const calls must be safe to run concurrently.
class Scorer {
 public:
  virtual ~Scorer() = default;

  virtual void Score(std::string_view document, std::span<const Token> prefix,
                     std::span<const Token> candidates,
                     std::span<double> scores) const = 0;
};

}  // namespace seq2tree

#endif  // SEQ2TREE_SCORER_H_

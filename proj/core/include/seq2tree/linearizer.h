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

#ifndef SEQ2TREE_LINEARIZER_H_
#define SEQ2TREE_LINEARIZER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "seq2tree/error.h"
#include "seq2tree/taxonomy.h"
#include "seq2tree/token.h"

namespace seq2tree {

enum class SequenceIssue {
  kNotRootFirst,
  kNonChild,
  kPopAtRoot,
  kDuplicateLabel,
  kUnknownLabel,
  kMisplacedEos,
  kUnbalanced,
};

std::string_view SequenceIssueName(SequenceIssue issue);

struct SequenceViolation {
  std::size_t position;
  SequenceIssue issue;

  friend bool operator==(const SequenceViolation&,
                         const SequenceViolation&) = default;
};

// kComplete requires the stack to end at [root]; kPrefix accepts any
// automaton-valid prefix. Both accept a single trailing Eos at [root].
enum class SequenceMode { kComplete, kPrefix };

class SequenceError : public Error {
 public:
  explicit SequenceError(SequenceViolation violation);

  const SequenceViolation& violation() const { return violation_; }

 private:
  SequenceViolation violation_;
};

// Replays the push/pop automaton and reports the first violation.
std::optional<SequenceViolation> ValidateSequence(
    const Taxonomy& tax, std::span<const Token> tokens,
    SequenceMode mode = SequenceMode::kComplete);
std::optional<SequenceViolation> ValidateSequence(
    const Taxonomy& tax, std::span<const std::string> tokens,
    SequenceMode mode = SequenceMode::kComplete);

// Depth-first serialization of a consistent, non-empty label set: root first,
// children visited in taxonomy order, POP on leaving every non-root node.
// Throws Error(kEmptyLabelSet) or Error(kInconsistentLabelSet).
LabelSequence Linearize(const Taxonomy& tax, const LabelSet& labels);

// Inverse of Linearize. Throws SequenceError.
LabelSet Delinearize(const Taxonomy& tax, std::span<const Token> tokens);

// Space-joined rendering, e.g. "Root A POP".
std::string RenderSequence(const Taxonomy& tax, std::span<const Token> tokens);

// Splits on whitespace. Throws SequenceError(kUnknownLabel).
std::vector<Token> ParseTokens(const Taxonomy& tax, std::string_view text);
std::vector<Token> ParseTokens(const Taxonomy& tax,
                               std::span<const std::string> names);

}  // namespace seq2tree

#endif  // SEQ2TREE_LINEARIZER_H_

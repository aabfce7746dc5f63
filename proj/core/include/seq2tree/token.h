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

#ifndef SEQ2TREE_TOKEN_H_
#define SEQ2TREE_TOKEN_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seq2tree/taxonomy.h"

namespace seq2tree {

// One symbol of a linearized label sequence. <bos> is implicit and never
// materialized; the root label plays the role of the sequence anchor.
struct Token {
  enum class Kind : std::uint8_t { kLabel, kPop, kEos };

  Kind kind = Kind::kPop;
  LabelId label{-1};

  static constexpr Token Label(LabelId id) { return {Kind::kLabel, id}; }
  static constexpr Token Pop() { return {Kind::kPop, LabelId{-1}}; }
  static constexpr Token Eos() { return {Kind::kEos, LabelId{-1}}; }

  constexpr bool is_label() const { return kind == Kind::kLabel; }
  constexpr bool is_pop() const { return kind == Kind::kPop; }
  constexpr bool is_eos() const { return kind == Kind::kEos; }

  friend constexpr bool operator==(const Token&, const Token&) = default;
};

// Storage form: starts with the root label, no Eos.
using LabelSequence = std::vector<Token>;

// "POP", "<eos>", or the label name.
std::string_view TokenName(const Taxonomy& tax, Token token);

// Tie-break order: labels by name, then POP, then Eos.
int TokenOrderKey(const Taxonomy& tax, Token token);

// Lexicographic comparison of token lists under TokenOrderKey.
bool TokenSequenceLess(const Taxonomy& tax, std::span<const Token> a,
                       std::span<const Token> b);

}  // namespace seq2tree

#endif  // SEQ2TREE_TOKEN_H_

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

#include "seq2tree/token.h"

#include <algorithm>

namespace seq2tree {

std::string_view TokenName(const Taxonomy& tax, Token token) {
  switch (token.kind) {
    case Token::Kind::kPop: return kPopName;
    case Token::Kind::kEos: return kEosName;
    case Token::Kind::kLabel: break;
  }
  return tax.name(token.label);
}

int TokenOrderKey(const Taxonomy& tax, Token token) {
  const int n = static_cast<int>(tax.size());
  switch (token.kind) {
    case Token::Kind::kPop: return n;
    case Token::Kind::kEos: return n + 1;
    case Token::Kind::kLabel: break;
  }
  return tax.name_rank(token.label);
}

bool TokenSequenceLess(const Taxonomy& tax, std::span<const Token> a,
                       std::span<const Token> b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [&tax](Token x, Token y) {
        return TokenOrderKey(tax, x) < TokenOrderKey(tax, y);
      });
}

}  // namespace seq2tree

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

#include "seq2tree/linearizer.h"

#include <utility>
#include <vector>

namespace seq2tree {
namespace {

std::optional<Token> ResolveToken(const Taxonomy& tax, std::string_view name) {
  if (name == kPopName) return Token::Pop();
  if (name == kEosName) return Token::Eos();
  if (auto id = tax.Find(name)) return Token::Label(*id);
  return std::nullopt;
}

}  // namespace

std::string_view SequenceIssueName(SequenceIssue issue) {
  switch (issue) {
    case SequenceIssue::kNotRootFirst: return "NOT_ROOT_FIRST";
    case SequenceIssue::kNonChild: return "NON_CHILD";
    case SequenceIssue::kPopAtRoot: return "POP_AT_ROOT";
    case SequenceIssue::kDuplicateLabel: return "DUPLICATE_LABEL";
    case SequenceIssue::kUnknownLabel: return "UNKNOWN_LABEL";
    case SequenceIssue::kMisplacedEos: return "MISPLACED_EOS";
    case SequenceIssue::kUnbalanced: return "UNBALANCED";
  }
  return "UNKNOWN";
}

SequenceError::SequenceError(SequenceViolation violation)
    : Error(ErrorCode::kInvalidSequence,
            std::string(SequenceIssueName(violation.issue)) + " at position " +
                std::to_string(violation.position)),
      violation_(violation) {}

std::optional<SequenceViolation> ValidateSequence(const Taxonomy& tax,
                                                  std::span<const Token> tokens,
                                                  SequenceMode mode) {
  if (tokens.empty()) {
    if (mode == SequenceMode::kPrefix) return std::nullopt;
    return SequenceViolation{0, SequenceIssue::kNotRootFirst};
  }
  if (!tokens[0].is_label() || tokens[0].label != tax.root()) {
    return SequenceViolation{0, SequenceIssue::kNotRootFirst};
  }

  std::vector<LabelId> stack = {tax.root()};
  std::vector<bool> visited(tax.size(), false);
  bool ended = false;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const Token tok = tokens[i];
    if (ended) return SequenceViolation{i, SequenceIssue::kMisplacedEos};
    switch (tok.kind) {
      case Token::Kind::kLabel: {
        if (!tax.Contains(tok.label)) {
          return SequenceViolation{i, SequenceIssue::kUnknownLabel};
        }
        const auto parent = tax.parent(tok.label);
        if (!parent || *parent != stack.back()) {
          return SequenceViolation{i, SequenceIssue::kNonChild};
        }
        if (visited[Index(tok.label)]) {
          return SequenceViolation{i, SequenceIssue::kDuplicateLabel};
        }
        visited[Index(tok.label)] = true;
        stack.push_back(tok.label);
        break;
      }
      case Token::Kind::kPop:
        if (stack.size() == 1) {
          return SequenceViolation{i, SequenceIssue::kPopAtRoot};
        }
        stack.pop_back();
        break;
      case Token::Kind::kEos:
        if (stack.size() != 1) {
          return SequenceViolation{i, SequenceIssue::kMisplacedEos};
        }
        ended = true;
        break;
    }
  }
  if (mode == SequenceMode::kComplete && stack.size() != 1) {
    return SequenceViolation{tokens.size(), SequenceIssue::kUnbalanced};
  }
  return std::nullopt;
}

std::optional<SequenceViolation> ValidateSequence(
    const Taxonomy& tax, std::span<const std::string> tokens,
    SequenceMode mode) {
  std::vector<Token> resolved;
  resolved.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto tok = ResolveToken(tax, tokens[i]);
    if (!tok) {
      // Anything wrong before the unknown name is reported first.
      if (auto earlier =
              ValidateSequence(tax, resolved, SequenceMode::kPrefix)) {
        return earlier;
      }
      return SequenceViolation{i, SequenceIssue::kUnknownLabel};
    }
    resolved.push_back(*tok);
  }
  return ValidateSequence(tax, resolved, mode);
}

LabelSequence Linearize(const Taxonomy& tax, const LabelSet& labels) {
  if (labels.empty()) {
    throw Error(ErrorCode::kEmptyLabelSet, "cannot linearize an empty label set");
  }
  if (!IsConsistent(tax, labels)) {
    for (LabelId id : labels) {
      const auto parent = tax.parent(id);
      if (parent && *parent != tax.root() && !labels.contains(*parent)) {
        throw Error(ErrorCode::kInconsistentLabelSet,
                    "'" + tax.name(id) + "' is missing its parent '" +
                        tax.name(*parent) + "'");
      }
    }
  }

  LabelSequence out;
  out.reserve(2 * labels.size() + 1);
  out.push_back(Token::Label(tax.root()));
  // (node, index of the next child to inspect)
  std::vector<std::pair<LabelId, std::size_t>> stack = {{tax.root(), 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    const auto kids = tax.children(node);
    while (next < kids.size() && !labels.contains(kids[next])) ++next;
    if (next == kids.size()) {
      if (node != tax.root()) out.push_back(Token::Pop());
      stack.pop_back();
      continue;
    }
    const LabelId child = kids[next++];
    out.push_back(Token::Label(child));
    stack.emplace_back(child, 0);
  }
  return out;
}

LabelSet Delinearize(const Taxonomy& tax, std::span<const Token> tokens) {
  if (auto violation = ValidateSequence(tax, tokens, SequenceMode::kComplete)) {
    throw SequenceError(*violation);
  }
  std::vector<LabelId> ids;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i].is_label()) ids.push_back(tokens[i].label);
  }
  return LabelSet(std::move(ids));
}

std::string RenderSequence(const Taxonomy& tax, std::span<const Token> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += TokenName(tax, tokens[i]);
  }
  return out;
}

std::vector<Token> ParseTokens(const Taxonomy& tax, std::string_view text) {
  std::vector<std::string> names;
  std::size_t pos = 0;
  while (true) {
    pos = text.find_first_not_of(" \t\r\n", pos);
    if (pos == std::string_view::npos) break;
    const std::size_t end = text.find_first_of(" \t\r\n", pos);
    names.emplace_back(text.substr(pos, end - pos));
    if (end == std::string_view::npos) break;
    pos = end;
  }
  return ParseTokens(tax, names);
}

std::vector<Token> ParseTokens(const Taxonomy& tax,
                               std::span<const std::string> names) {
  std::vector<Token> out;
  out.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto tok = ResolveToken(tax, names[i]);
    if (!tok) throw SequenceError({i, SequenceIssue::kUnknownLabel});
    out.push_back(*tok);
  }
  return out;
}

}  // namespace seq2tree

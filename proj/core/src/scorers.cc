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

#include "seq2tree/scorers.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "seq2tree/error.h"
#include "seq2tree/linearizer.h"

namespace seq2tree {

void UniformScorer::Score(std::string_view, std::span<const Token>,
                          std::span<const Token>,
                          std::span<double> scores) const {
  std::fill(scores.begin(), scores.end(), 0.0);
}

OracleScorer::OracleScorer(LabelSequence target, double margin)
    : target_(std::move(target)), margin_(margin) {
  if (target_.empty() || !target_.back().is_eos()) {
    target_.push_back(Token::Eos());
  }
}

void OracleScorer::Score(std::string_view, std::span<const Token> prefix,
                         std::span<const Token> candidates,
                         std::span<double> scores) const {
  std::fill(scores.begin(), scores.end(), 0.0);
  if (prefix.size() >= target_.size() ||
      !std::equal(prefix.begin(), prefix.end(), target_.begin())) {
    return;
  }
  const Token next = target_[prefix.size()];
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i] == next) scores[i] = margin_;
  }
}

namespace {

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Mix(std::uint64_t h, std::uint64_t v) { return SplitMix(h ^ v); }

std::uint64_t TokenBits(Token t) {
  return (static_cast<std::uint64_t>(t.kind) << 32) |
         static_cast<std::uint32_t>(Index(t.label));
}

}  // namespace

RandomScorer::RandomScorer(std::uint64_t seed, double scale)
    : seed_(seed), scale_(scale) {}

void RandomScorer::Score(std::string_view document,
                         std::span<const Token> prefix,
                         std::span<const Token> candidates,
                         std::span<double> scores) const {
  std::uint64_t h = SplitMix(seed_);
  for (char c : document) h = Mix(h, static_cast<unsigned char>(c));
  for (Token t : prefix) h = Mix(h, TokenBits(t));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::uint64_t bits = Mix(h, TokenBits(candidates[i]) ^ 0x5bd1e995ULL);
    const double unit = static_cast<double>(bits >> 11) * 0x1.0p-53;
    scores[i] = (2.0 * unit - 1.0) * scale_;
  }
}

BigramScorer::BigramScorer(const Taxonomy& tax)
    : tax_(&tax),
      width_(tax.size() + 2),
      alphabet_size_(tax.label_count() + 2),
      counts_(width_ * width_, 0),
      context_(width_, 0) {}

std::size_t BigramScorer::Slot(Token token) const {
  switch (token.kind) {
    case Token::Kind::kPop: return width_ - 2;
    case Token::Kind::kEos: return width_ - 1;
    case Token::Kind::kLabel: break;
  }
  return static_cast<std::size_t>(Index(token.label));
}

BigramScorer BigramScorer::Fit(const Taxonomy& tax,
                               std::span<const LabelSet> corpus,
                               FitSummary* summary) {
  if (corpus.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no documents to fit on");
  }
  BigramScorer model(tax);
  FitSummary local;
  for (const LabelSet& gold : corpus) {
    ++local.documents;
    LabelSet labels = gold;
    if (!IsConsistent(tax, labels)) {
      labels = AncestorClosure(tax, labels);
      ++local.repaired;
    }
    std::vector<Token> seq = labels.empty()
                                 ? std::vector<Token>{Token::Label(tax.root())}
                                 : Linearize(tax, labels);
    seq.push_back(Token::Eos());
    for (std::size_t i = 1; i < seq.size(); ++i) {
      const std::size_t prev = model.Slot(seq[i - 1]);
      ++model.counts_[prev * model.width_ + model.Slot(seq[i])];
      ++model.context_[prev];
    }
  }
  if (summary != nullptr) *summary = local;
  return model;
}

std::uint64_t BigramScorer::Count(Token previous, Token next) const {
  return counts_[Slot(previous) * width_ + Slot(next)];
}

double BigramScorer::Probability(Token previous, Token next) const {
  if (next.is_label() && next.label == tax_->root()) return 0.0;
  const std::size_t prev = Slot(previous);
  return (static_cast<double>(counts_[prev * width_ + Slot(next)]) + 1.0) /
         (static_cast<double>(context_[prev]) +
          static_cast<double>(alphabet_size_));
}

void BigramScorer::Score(std::string_view, std::span<const Token> prefix,
                         std::span<const Token> candidates,
                         std::span<double> scores) const {
  const Token previous = prefix.back();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double p = Probability(previous, candidates[i]);
    // Root is never a legal next token; keep the score finite regardless.
    scores[i] = p > 0.0 ? std::log(p) : -1e9;
  }
}

nlohmann::json BigramScorer::ToJson() const {
  const Taxonomy& tax = *tax_;
  nlohmann::json alphabet = nlohmann::json::array();
  std::vector<Token> tokens;
  for (LabelId id : tax.preorder()) {
    if (id != tax.root()) tokens.push_back(Token::Label(id));
  }
  tokens.push_back(Token::Pop());
  tokens.push_back(Token::Eos());
  for (Token t : tokens) alphabet.push_back(std::string(TokenName(tax, t)));

  std::vector<Token> contexts = {Token::Label(tax.root())};
  contexts.insert(contexts.end(), tokens.begin(), tokens.end() - 1);
  nlohmann::json counts = nlohmann::json::object();
  for (Token prev : contexts) {
    nlohmann::json row = nlohmann::json::object();
    for (Token next : tokens) {
      if (const std::uint64_t c = Count(prev, next); c > 0) {
        row[std::string(TokenName(tax, next))] = c;
      }
    }
    if (!row.empty()) counts[std::string(TokenName(tax, prev))] = row;
  }
  return {{"alphabet", alphabet}, {"counts", counts}};
}

BigramScorer BigramScorer::FromJson(const Taxonomy& tax,
                                    const nlohmann::json& json) {
  if (!json.is_object() || !json.contains("alphabet") ||
      !json.contains("counts") || !json["alphabet"].is_array() ||
      !json["counts"].is_object()) {
    throw Error(ErrorCode::kParseError,
                "bigram model needs 'alphabet' array and 'counts' object");
  }
  auto resolve = [&tax](const std::string& name) {
    if (name == kPopName) return Token::Pop();
    if (name == kEosName) return Token::Eos();
    return Token::Label(tax.Lookup(name));
  };

  BigramScorer model(tax);
  std::set<std::string> alphabet;
  for (const auto& entry : json["alphabet"]) {
    if (!entry.is_string()) {
      throw Error(ErrorCode::kParseError, "alphabet entries must be strings");
    }
    const Token t = resolve(entry.get<std::string>());
    if (t.is_label() && t.label == tax.root()) {
      throw Error(ErrorCode::kParseError, "root cannot be in the alphabet");
    }
    alphabet.insert(entry.get<std::string>());
  }
  if (alphabet.size() != model.alphabet_size_) {
    throw Error(ErrorCode::kParseError,
                "alphabet does not match the taxonomy (" +
                    std::to_string(alphabet.size()) + " vs " +
                    std::to_string(model.alphabet_size_) + " symbols)");
  }
  for (const auto& [prev_name, row] : json["counts"].items()) {
    const Token prev = resolve(prev_name);
    if (prev.is_eos() || !row.is_object()) {
      throw Error(ErrorCode::kParseError, "bad context '" + prev_name + "'");
    }
    for (const auto& [next_name, value] : row.items()) {
      const Token next = resolve(next_name);
      if (!value.is_number_unsigned()) {
        throw Error(ErrorCode::kParseError, "counts must be non-negative integers");
      }
      if (next.is_label() && next.label == tax.root()) {
        throw Error(ErrorCode::kParseError, "root cannot follow a token");
      }
      const auto c = value.get<std::uint64_t>();
      model.counts_[model.Slot(prev) * model.width_ + model.Slot(next)] = c;
      model.context_[model.Slot(prev)] += c;
    }
  }
  return model;
}

}  // namespace seq2tree

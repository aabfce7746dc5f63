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

#ifndef SEQ2TREE_SCORERS_H_
#define SEQ2TREE_SCORERS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "seq2tree/scorer.h"
#include "seq2tree/taxonomy.h"
#include "seq2tree/token.h"

namespace seq2tree {

// Scores every candidate 0.
class UniformScorer final : public Scorer {
 public:
  void Score(std::string_view document, std::span<const Token> prefix,
             std::span<const Token> candidates,
             std::span<double> scores) const override;
};

// Teacher: while the prefix follows `target` (plus a final Eos), the next
// target token scores `margin` and everything else 0. Off-target prefixes
// score uniformly.
class OracleScorer final : public Scorer {
 public:
  static constexpr double kDefaultMargin = 10.0;

  explicit OracleScorer(LabelSequence target, double margin = kDefaultMargin);

  void Score(std::string_view document, std::span<const Token> prefix,
             std::span<const Token> candidates,
             std::span<double> scores) const override;

 private:
  std::vector<Token> target_;
  double margin_;
};

// Pseudo-random raw scores in [-scale, scale], a pure hash of
// (seed, document, prefix, candidate).
class RandomScorer final : public Scorer {
 public:
  explicit RandomScorer(std::uint64_t seed, double scale = 8.0);

  void Score(std::string_view document, std::span<const Token> prefix,
             std::span<const Token> candidates,
             std::span<double> scores) const override;

 private:
  std::uint64_t seed_;
  double scale_;
};

// Previous-token bigram over linearized gold sequences with add-one
// smoothing over the alphabet (non-root labels, POP, <eos>). The raw score is
// log P(next | previous). The document text is ignored.
class BigramScorer final : public Scorer {
 public:
  struct FitSummary {
    std::size_t documents = 0;
    std::size_t repaired = 0;  // inconsistent sets closed before counting
  };

  // Throws Error(kEmptyCorpus).
  static BigramScorer Fit(const Taxonomy& tax, std::span<const LabelSet> corpus,
                          FitSummary* summary = nullptr);

  // {"alphabet": [...], "counts": {"prev": {"next": n}}}
  nlohmann::json ToJson() const;
  // Throws Error(kParseError) or Error(kUnknownLabel).
  static BigramScorer FromJson(const Taxonomy& tax, const nlohmann::json& json);

  void Score(std::string_view document, std::span<const Token> prefix,
             std::span<const Token> candidates,
             std::span<double> scores) const override;

  double Probability(Token previous, Token next) const;
  std::uint64_t Count(Token previous, Token next) const;
  std::size_t alphabet_size() const { return alphabet_size_; }

 private:
  explicit BigramScorer(const Taxonomy& tax);
  std::size_t Slot(Token token) const;

  const Taxonomy* tax_;
  std::size_t width_;          // tax.size() + 2 slots: labels, POP, Eos
  std::size_t alphabet_size_;  // tax.size() - 1 + 2
  std::vector<std::uint64_t> counts_;   // width_ x width_
  std::vector<std::uint64_t> context_;  // row sums
};

}  // namespace seq2tree

#endif  // SEQ2TREE_SCORERS_H_

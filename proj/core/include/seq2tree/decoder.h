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

#ifndef SEQ2TREE_DECODER_H_
#define SEQ2TREE_DECODER_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "seq2tree/linearizer.h"
#include "seq2tree/scorer.h"
#include "seq2tree/taxonomy.h"
#include "seq2tree/token.h"

namespace seq2tree {

// Automaton state of a partial decode: the node stack (bottom = root), the
// labels emitted anywhere so far, and the prefix length including the root.
class DecoderState {
 public:
  static DecoderState Initial(const Taxonomy& tax);
  // Steps through `prefix` (root first). Throws Error(kIllegalToken).
  static DecoderState FromPrefix(const Taxonomy& tax,
                                 std::span<const Token> prefix);

  std::span<const LabelId> stack() const { return stack_; }
  LabelId top() const { return stack_.back(); }
  bool visited(LabelId id) const { return visited_[Index(id)]; }
  std::size_t prefix_len() const { return prefix_len_; }
  bool terminal() const { return terminal_; }

  friend bool operator==(const DecoderState&, const DecoderState&) = default;

 private:
  friend DecoderState Step(const Taxonomy&, const DecoderState&, Token);
  friend void StepInPlace(const Taxonomy&, DecoderState&, Token);

  std::vector<LabelId> stack_;
  std::vector<bool> visited_;
  std::size_t prefix_len_ = 0;
  bool terminal_ = false;
};

// Legal next tokens, sorted by TokenOrderKey: unvisited children of the stack
// top, then POP when the stack is above root, or Eos when it is exactly
// [root]. Never empty for a non-terminal state. Throws Error(kIllegalState).
std::vector<Token> DynamicVocabulary(const Taxonomy& tax,
                                     const DecoderState& state);

bool IsAllowed(const Taxonomy& tax, const DecoderState& state, Token token);

// Throws Error(kIllegalToken) when `token` is outside the dynamic vocabulary.
DecoderState Step(const Taxonomy& tax, const DecoderState& state, Token token);
void StepInPlace(const Taxonomy& tax, DecoderState& state, Token token);

// Softmax over the supplied raw scores only. Throws Error(kInvalidScore) on a
// non-finite score and Error(kIllegalState) on an empty input.
std::vector<double> RestrictedSoftmax(std::span<const double> raw_scores);
std::vector<double> RestrictedLogSoftmax(std::span<const double> raw_scores);

// One teacher-forced step: the vocabulary, its distribution and the index of
// the gold token within it.
struct StepTrace {
  std::vector<Token> vocabulary;
  std::vector<double> probabilities;
  std::size_t chosen = 0;
  double log_probability = 0.0;
};

// Teacher-forces `gold` (Eos appended when absent). The forced root token is
// not a step. Throws SequenceError when gold is not a complete sequence.
std::vector<StepTrace> TraceSequence(const Taxonomy& tax, const Scorer& scorer,
                                     std::string_view document,
                                     std::span<const Token> gold);

// -sum log P(token | prefix) over TraceSequence, including the Eos step.
double SequenceNll(const Taxonomy& tax, const Scorer& scorer,
                   std::string_view document, std::span<const Token> gold);

struct Hypothesis {
  std::vector<Token> tokens;
  DecoderState state;
  double logprob = 0.0;
  bool complete = false;
};

struct ScoredSequence {
  LabelSequence sequence;  // storage form, no Eos
  double logprob = 0.0;
};

// 2 * |labels| + 2 tokens: the longest valid sequence plus Eos.
std::size_t MaxDecodeLength(const Taxonomy& tax);

// Beam search whose expansions are restricted to the dynamic vocabulary.
// Hypotheses reaching Eos are set aside; the search ends when nothing is
// active, at MaxDecodeLength, or once beam_width hypotheses are complete and
// no active one can still reach the top beam_width.
// Returns up to beam_width complete sequences, best first; ties go to the
// lexicographically smaller token list. Throws Error(kInvalidArgument) for
// beam_width == 0 and Error(kDecodeOverflow) if nothing completes.
std::vector<ScoredSequence> ConstrainedBeamSearch(const Taxonomy& tax,
                                                  const Scorer& scorer,
                                                  std::string_view document,
                                                  std::size_t beam_width);

ScoredSequence GreedyDecode(const Taxonomy& tax, const Scorer& scorer,
                            std::string_view document);

struct UnconstrainedResult {
  std::vector<Token> tokens;  // root first, Eos stripped
  LabelSet labels;            // every label emitted; may be inconsistent
  double logprob = 0.0;
  bool reached_eos = false;
};

// Ablation baseline: softmax over every label, POP and Eos with no validity
// filter. Stops at Eos or at MaxDecodeLength, returning the truncated best
// hypothesis in the latter case.
UnconstrainedResult UnconstrainedDecode(const Taxonomy& tax,
                                        const Scorer& scorer,
                                        std::string_view document,
                                        std::size_t beam_width);

}  // namespace seq2tree

#endif  // SEQ2TREE_DECODER_H_

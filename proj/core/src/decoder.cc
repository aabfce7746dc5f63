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

#include "seq2tree/decoder.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "seq2tree/error.h"

namespace seq2tree {

DecoderState DecoderState::Initial(const Taxonomy& tax) {
  DecoderState state;
  state.stack_ = {tax.root()};
  state.visited_.assign(tax.size(), false);
  state.prefix_len_ = 1;
  return state;
}

DecoderState DecoderState::FromPrefix(const Taxonomy& tax,
                                      std::span<const Token> prefix) {
  if (prefix.empty() || prefix[0] != Token::Label(tax.root())) {
    throw Error(ErrorCode::kIllegalToken, "prefix must start with the root");
  }
  DecoderState state = Initial(tax);
  for (std::size_t i = 1; i < prefix.size(); ++i) {
    StepInPlace(tax, state, prefix[i]);
  }
  return state;
}

namespace {

void CheckState(const Taxonomy& tax, const DecoderState& state) {
  if (state.terminal()) {
    throw Error(ErrorCode::kIllegalState, "state is terminal");
  }
  if (state.stack().empty() || state.stack().front() != tax.root()) {
    throw Error(ErrorCode::kIllegalState, "stack must rest on the root");
  }
}

}  // namespace

std::vector<Token> DynamicVocabulary(const Taxonomy& tax,
                                     const DecoderState& state) {
  CheckState(tax, state);
  std::vector<Token> vocab;
  for (LabelId child : tax.children_by_name(state.top())) {
    if (!state.visited(child)) vocab.push_back(Token::Label(child));
  }
  vocab.push_back(state.stack().size() > 1 ? Token::Pop() : Token::Eos());
  return vocab;
}

bool IsAllowed(const Taxonomy& tax, const DecoderState& state, Token token) {
  if (state.terminal()) return false;
  switch (token.kind) {
    case Token::Kind::kLabel: {
      if (!tax.Contains(token.label) || state.visited(token.label)) return false;
      const auto parent = tax.parent(token.label);
      return parent && *parent == state.top();
    }
    case Token::Kind::kPop:
      return state.stack().size() > 1;
    case Token::Kind::kEos:
      return state.stack().size() == 1;
  }
  return false;
}

void StepInPlace(const Taxonomy& tax, DecoderState& state, Token token) {
  if (!IsAllowed(tax, state, token)) {
    throw Error(ErrorCode::kIllegalToken,
                "'" + std::string(tax.Contains(token.label) || !token.is_label()
                                      ? TokenName(tax, token)
                                      : "?") +
                    "' is not in the dynamic vocabulary");
  }
  switch (token.kind) {
    case Token::Kind::kLabel:
      state.stack_.push_back(token.label);
      state.visited_[Index(token.label)] = true;
      break;
    case Token::Kind::kPop:
      state.stack_.pop_back();
      break;
    case Token::Kind::kEos:
      state.terminal_ = true;
      break;
  }
  ++state.prefix_len_;
}

DecoderState Step(const Taxonomy& tax, const DecoderState& state, Token token) {
  DecoderState next = state;
  StepInPlace(tax, next, token);
  return next;
}

std::vector<double> RestrictedLogSoftmax(std::span<const double> raw_scores) {
  if (raw_scores.empty()) {
    throw Error(ErrorCode::kIllegalState, "empty dynamic vocabulary");
  }
  double max_score = raw_scores[0];
  for (double s : raw_scores) {
    if (!std::isfinite(s)) {
      throw Error(ErrorCode::kInvalidScore, "non-finite raw score");
    }
    max_score = std::max(max_score, s);
  }
  double sum = 0.0;
  for (double s : raw_scores) sum += std::exp(s - max_score);
  const double log_z = max_score + std::log(sum);
  std::vector<double> out(raw_scores.size());
  for (std::size_t i = 0; i < raw_scores.size(); ++i) {
    out[i] = std::min(0.0, raw_scores[i] - log_z);
  }
  return out;
}

std::vector<double> RestrictedSoftmax(std::span<const double> raw_scores) {
  if (raw_scores.empty()) {
    throw Error(ErrorCode::kIllegalState, "empty dynamic vocabulary");
  }
  double max_score = raw_scores[0];
  for (double s : raw_scores) {
    if (!std::isfinite(s)) {
      throw Error(ErrorCode::kInvalidScore, "non-finite raw score");
    }
    max_score = std::max(max_score, s);
  }
  std::vector<double> out(raw_scores.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < raw_scores.size(); ++i) {
    out[i] = std::exp(raw_scores[i] - max_score);
    sum += out[i];
  }
  for (double& p : out) p /= sum;
  return out;
}

std::vector<StepTrace> TraceSequence(const Taxonomy& tax, const Scorer& scorer,
                                     std::string_view document,
                                     std::span<const Token> gold) {
  if (auto violation = ValidateSequence(tax, gold, SequenceMode::kComplete)) {
    throw SequenceError(*violation);
  }
  std::vector<Token> tokens(gold.begin(), gold.end());
  if (!tokens.back().is_eos()) tokens.push_back(Token::Eos());

  std::vector<StepTrace> trace;
  trace.reserve(tokens.size() - 1);
  DecoderState state = DecoderState::Initial(tax);
  std::vector<double> raw;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    StepTrace step;
    step.vocabulary = DynamicVocabulary(tax, state);
    raw.assign(step.vocabulary.size(), 0.0);
    scorer.Score(document, std::span(tokens).first(i), step.vocabulary, raw);
    step.probabilities = RestrictedSoftmax(raw);
    const auto it =
        std::find(step.vocabulary.begin(), step.vocabulary.end(), tokens[i]);
    step.chosen = static_cast<std::size_t>(it - step.vocabulary.begin());
    step.log_probability = RestrictedLogSoftmax(raw)[step.chosen];
    StepInPlace(tax, state, tokens[i]);
    trace.push_back(std::move(step));
  }
  return trace;
}

double SequenceNll(const Taxonomy& tax, const Scorer& scorer,
                   std::string_view document, std::span<const Token> gold) {
  double nll = 0.0;
  for (const StepTrace& step : TraceSequence(tax, scorer, document, gold)) {
    nll -= step.log_probability;
  }
  return nll;
}

std::size_t MaxDecodeLength(const Taxonomy& tax) {
  return 2 * tax.label_count() + 2;
}

namespace {

struct Candidate {
  std::size_t parent;
  Token token;
  double logprob;
};

struct BeamOutcome {
  std::vector<Hypothesis> complete;
  std::vector<Hypothesis> truncated;
};

bool HypothesisBefore(const Taxonomy& tax, const Hypothesis& a,
                      const Hypothesis& b) {
  if (a.logprob != b.logprob) return a.logprob > b.logprob;
  return TokenSequenceLess(tax, a.tokens, b.tokens);
}

std::vector<Token> FullVocabulary(const Taxonomy& tax) {
  std::vector<Token> vocab;
  vocab.reserve(tax.size() + 1);
  for (std::size_t i = 0; i < tax.size(); ++i) {
    const LabelId id = static_cast<LabelId>(i);
    if (id != tax.root()) vocab.push_back(Token::Label(id));
  }
  std::sort(vocab.begin(), vocab.end(), [&tax](Token a, Token b) {
    return tax.name_rank(a.label) < tax.name_rank(b.label);
  });
  vocab.push_back(Token::Pop());
  vocab.push_back(Token::Eos());
  return vocab;
}

// True once beam_width hypotheses are complete and no active hypothesis can
// still overtake the beam_width-th best of them.
bool Settled(const std::vector<Hypothesis>& complete,
             const std::vector<Hypothesis>& active, std::size_t beam_width) {
  if (complete.size() < beam_width) return false;
  std::vector<double> scores;
  scores.reserve(complete.size());
  for (const Hypothesis& h : complete) scores.push_back(h.logprob);
  std::nth_element(scores.begin(), scores.begin() + (beam_width - 1),
                   scores.end(), std::greater<>());
  const double kth = scores[beam_width - 1];
  for (const Hypothesis& h : active) {
    if (h.logprob >= kth) return false;
  }
  return true;
}

BeamOutcome RunBeam(const Taxonomy& tax, const Scorer& scorer,
                    std::string_view document, std::size_t beam_width,
                    bool constrained) {
  if (beam_width == 0) {
    throw Error(ErrorCode::kInvalidArgument, "beam width must be positive");
  }
  const std::size_t max_len = MaxDecodeLength(tax);
  const std::vector<Token> full_vocab =
      constrained ? std::vector<Token>{} : FullVocabulary(tax);

  BeamOutcome outcome;
  std::vector<Hypothesis> active;
  active.push_back({{Token::Label(tax.root())}, DecoderState::Initial(tax), 0.0,
                    false});

  std::vector<Candidate> candidates;
  std::vector<double> raw;
  while (!active.empty() && !Settled(outcome.complete, active, beam_width)) {
    candidates.clear();
    for (std::size_t h = 0; h < active.size(); ++h) {
      const Hypothesis& hyp = active[h];
      const std::vector<Token> vocab =
          constrained ? DynamicVocabulary(tax, hyp.state) : full_vocab;
      raw.assign(vocab.size(), 0.0);
      scorer.Score(document, hyp.tokens, vocab, raw);
      const std::vector<double> logp = RestrictedLogSoftmax(raw);
      for (std::size_t k = 0; k < vocab.size(); ++k) {
        candidates.push_back({h, vocab[k], hyp.logprob + logp[k]});
      }
    }

    // All active hypotheses share one length, so comparing parent token lists
    // and then the new token is the full lexicographic order.
    auto before = [&](const Candidate& a, const Candidate& b) {
      if (a.logprob != b.logprob) return a.logprob > b.logprob;
      if (a.parent != b.parent) {
        return TokenSequenceLess(tax, active[a.parent].tokens,
                                 active[b.parent].tokens);
      }
      return TokenOrderKey(tax, a.token) < TokenOrderKey(tax, b.token);
    };
    const std::size_t keep = std::min(beam_width, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + keep,
                      candidates.end(), before);

    std::vector<Hypothesis> next;
    next.reserve(keep);
    for (std::size_t k = 0; k < keep; ++k) {
      const Candidate& c = candidates[k];
      const Hypothesis& parent = active[c.parent];
      Hypothesis hyp{parent.tokens, parent.state, c.logprob, c.token.is_eos()};
      hyp.tokens.push_back(c.token);
      if (constrained) StepInPlace(tax, hyp.state, c.token);
      if (hyp.complete) {
        outcome.complete.push_back(std::move(hyp));
      } else if (hyp.tokens.size() >= max_len) {
        outcome.truncated.push_back(std::move(hyp));
      } else {
        next.push_back(std::move(hyp));
      }
    }
    active = std::move(next);
  }

  auto order = [&tax](const Hypothesis& a, const Hypothesis& b) {
    return HypothesisBefore(tax, a, b);
  };
  std::sort(outcome.complete.begin(), outcome.complete.end(), order);
  if (outcome.complete.size() > beam_width) outcome.complete.resize(beam_width);
  std::sort(outcome.truncated.begin(), outcome.truncated.end(), order);
  return outcome;
}

}  // namespace

std::vector<ScoredSequence> ConstrainedBeamSearch(const Taxonomy& tax,
                                                  const Scorer& scorer,
                                                  std::string_view document,
                                                  std::size_t beam_width) {
  BeamOutcome outcome = RunBeam(tax, scorer, document, beam_width, true);
  if (outcome.complete.empty()) {
    throw Error(ErrorCode::kDecodeOverflow,
                "no hypothesis reached <eos> within " +
                    std::to_string(MaxDecodeLength(tax)) + " tokens");
  }
  std::vector<ScoredSequence> out;
  out.reserve(outcome.complete.size());
  for (Hypothesis& hyp : outcome.complete) {
    hyp.tokens.pop_back();
    out.push_back({std::move(hyp.tokens), hyp.logprob});
  }
  return out;
}

ScoredSequence GreedyDecode(const Taxonomy& tax, const Scorer& scorer,
                            std::string_view document) {
  return std::move(ConstrainedBeamSearch(tax, scorer, document, 1).front());
}

UnconstrainedResult UnconstrainedDecode(const Taxonomy& tax,
                                        const Scorer& scorer,
                                        std::string_view document,
                                        std::size_t beam_width) {
  BeamOutcome outcome = RunBeam(tax, scorer, document, beam_width, false);
  UnconstrainedResult result;
  Hypothesis* best = nullptr;
  if (!outcome.complete.empty()) {
    best = &outcome.complete.front();
    result.reached_eos = true;
  } else if (!outcome.truncated.empty()) {
    best = &outcome.truncated.front();
  } else {
    throw Error(ErrorCode::kDecodeOverflow, "beam emptied without output");
  }
  if (best->tokens.back().is_eos()) best->tokens.pop_back();
  std::vector<LabelId> labels;
  for (std::size_t i = 1; i < best->tokens.size(); ++i) {
    if (best->tokens[i].is_label()) labels.push_back(best->tokens[i].label);
  }
  result.labels = LabelSet(std::move(labels));
  result.tokens = std::move(best->tokens);
  result.logprob = best->logprob;
  return result;
}

}  // namespace seq2tree

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
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "seq2tree/scorers.h"
#include "testing/fixtures.h"
#include "testing/oracles.h"

namespace seq2tree {
namespace {

using ::testing::ElementsAre;
using ::testing::UnorderedElementsAreArray;
using testing::Labels;
using testing::SampleTaxonomy;
using testing::Tokens;

std::vector<std::string> Names(const Taxonomy& tax,
                               const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (Token t : tokens) out.emplace_back(TokenName(tax, t));
  return out;
}

std::vector<std::string> VocabAfter(const Taxonomy& tax,
                                    const std::string& prefix) {
  return Names(tax, DynamicVocabulary(
                        tax, DecoderState::FromPrefix(tax, Tokens(tax, prefix))));
}

std::vector<Token> SortedByKey(const Taxonomy& tax, std::vector<Token> tokens) {
  std::sort(tokens.begin(), tokens.end(), [&](Token a, Token b) {
    return TokenOrderKey(tax, a) < TokenOrderKey(tax, b);
  });
  return tokens;
}

// ---------------------------------------------------------------------------
// Dynamic vocabulary

TEST(DynamicVocabularyTest, MidPathState) {
  const Taxonomy tax = SampleTaxonomy();
  EXPECT_THAT(VocabAfter(tax, "Root Entertainment Movie"),
              ElementsAre("Action", "Documentary", "POP"));
}

TEST(DynamicVocabularyTest, InitialStateOffersEos) {
  const Taxonomy tax = SampleTaxonomy();
  EXPECT_THAT(VocabAfter(tax, "Root"),
              ElementsAre("Business", "Entertainment", "<eos>"));
}

TEST(DynamicVocabularyTest, VisitedSubtreeIsExcluded) {
  const Taxonomy tax = SampleTaxonomy();
  EXPECT_THAT(VocabAfter(tax, "Root Entertainment Movie Documentary POP POP POP"),
              ElementsAre("Business", "<eos>"));
  EXPECT_THAT(VocabAfter(tax, "Root Entertainment Movie Documentary POP"),
              ElementsAre("Action", "POP"));
  EXPECT_THAT(VocabAfter(tax, "Root Entertainment Movie Documentary"),
              ElementsAre("POP"));
}

TEST(DynamicVocabularyTest, EveryLabelVisitedLeavesOnlyEos) {
  const Taxonomy tax = SampleTaxonomy();
  EXPECT_THAT(VocabAfter(tax,
                         "Root Business Company POP POP Entertainment Movie "
                         "Action POP Documentary POP POP POP"),
              ElementsAre("<eos>"));
}

TEST(DynamicVocabularyTest, TerminalStateThrows) {
  const Taxonomy tax = SampleTaxonomy();
  const DecoderState done = Step(tax, DecoderState::Initial(tax), Token::Eos());
  EXPECT_TRUE(done.terminal());
  try {
    DynamicVocabulary(tax, done);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIllegalState);
  }
}

TEST(StepTest, IllegalTokensThrow) {
  const Taxonomy tax = SampleTaxonomy();
  const DecoderState init = DecoderState::Initial(tax);
  for (const char* name : {"Company", "POP", "Movie"}) {
    try {
      Step(tax, init, Tokens(tax, name).front());
      FAIL() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kIllegalToken);
    }
  }
  EXPECT_FALSE(IsAllowed(tax, init, Token::Label(tax.root())));
  EXPECT_TRUE(IsAllowed(tax, init, Token::Eos()));
}

TEST(StepTest, StackAndVisitedTrackPrefix) {
  const Taxonomy tax = SampleTaxonomy();
  DecoderState s = DecoderState::Initial(tax);
  EXPECT_EQ(s.prefix_len(), 1u);
  EXPECT_EQ(s.top(), tax.root());
  StepInPlace(tax, s, Token::Label(tax.Lookup("Entertainment")));
  StepInPlace(tax, s, Token::Label(tax.Lookup("Movie")));
  EXPECT_EQ(s.stack().size(), 3u);
  EXPECT_EQ(s.top(), tax.Lookup("Movie"));
  StepInPlace(tax, s, Token::Pop());
  EXPECT_EQ(s.top(), tax.Lookup("Entertainment"));
  EXPECT_TRUE(s.visited(tax.Lookup("Movie")));
  EXPECT_FALSE(s.visited(tax.Lookup("Business")));
  EXPECT_EQ(s.prefix_len(), 4u);
  EXPECT_EQ(s, DecoderState::FromPrefix(
                   tax, Tokens(tax, "Root Entertainment Movie POP")));
}

TEST(DynamicVocabularyPropertyTest, MatchesReplayAndEnumeratedContinuations) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 40; ++t) {
    const Taxonomy tax = testing::RandomTaxonomy(rng, {2, 8, 6, 3});
    const auto all = testing::EnumerateCompleteSequences(tax);
    const testing::ContinuationTrie trie(all);
    std::vector<Token> prefix = {Token::Label(tax.root())};
    std::function<void(std::size_t, const DecoderState&)> walk =
        [&](std::size_t node, const DecoderState& state) {
          std::vector<Token> expected;
          for (const auto& [tok, child] : trie.node(node).next) {
            expected.push_back(tok);
          }
          const std::vector<Token> dv = DynamicVocabulary(tax, state);
          ASSERT_THAT(dv, UnorderedElementsAreArray(expected));
          ASSERT_EQ(dv, SortedByKey(tax, dv));
          ASSERT_EQ(SortedByKey(tax, testing::ReplayVocabulary(tax, prefix)),
                    dv);
          const auto stack = testing::ReplayStack(tax, prefix);
          ASSERT_TRUE(std::equal(stack.begin(), stack.end(),
                                 state.stack().begin(), state.stack().end()));
          for (const auto& [tok, child] : trie.node(node).next) {
            if (tok.is_eos()) continue;
            prefix.push_back(tok);
            walk(child, Step(tax, state, tok));
            prefix.pop_back();
          }
        };
    walk(testing::ContinuationTrie::kRoot, DecoderState::Initial(tax));
  }
}

// ---------------------------------------------------------------------------
// Restricted softmax

TEST(RestrictedSoftmaxTest, Examples) {
  const std::vector<double> two = {std::log(2.0), 0.0};
  const auto p = RestrictedSoftmax(two);
  EXPECT_NEAR(p[0], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(p[1], 1.0 / 3.0, 1e-15);

  const std::vector<double> three = {0.0, 0.0, 0.0};
  for (double x : RestrictedSoftmax(three)) EXPECT_NEAR(x, 1.0 / 3.0, 1e-15);

  const std::vector<double> one = {-42.0};
  EXPECT_EQ(RestrictedSoftmax(one), std::vector<double>{1.0});
  EXPECT_EQ(RestrictedLogSoftmax(one), std::vector<double>{0.0});
}

TEST(RestrictedSoftmaxTest, ShiftInvariantAndStableForLargeScores) {
  const std::vector<double> raw = {1000.0, 999.0, 998.0};
  const std::vector<double> shifted = {2.0, 1.0, 0.0};
  const auto a = RestrictedSoftmax(raw);
  const auto b = RestrictedSoftmax(shifted);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(a[i], b[i], 1e-15);
  const double z = std::exp(2.0) + std::exp(1.0) + 1.0;
  EXPECT_NEAR(a[0], std::exp(2.0) / z, 1e-15);
  const auto lp = RestrictedLogSoftmax(raw);
  EXPECT_NEAR(lp[2], -std::log(z), 1e-12);
}

TEST(RestrictedSoftmaxTest, RejectsBadInput) {
  for (double bad : {std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::quiet_NaN()}) {
    const std::vector<double> raw = {0.0, bad};
    try {
      RestrictedSoftmax(raw);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidScore);
    }
  }
  try {
    RestrictedSoftmax(std::vector<double>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIllegalState);
  }
}

// ---------------------------------------------------------------------------
// Teacher forcing

TEST(SequenceNllTest, UniformSample) {
  const Taxonomy tax = SampleTaxonomy();
  const UniformScorer uniform;
  const auto gold = Tokens(tax, testing::kSampleSequence);
  const auto trace = TraceSequence(tax, uniform, "", gold);
  std::vector<std::size_t> sizes;
  for (const StepTrace& s : trace) {
    sizes.push_back(s.vocabulary.size());
    EXPECT_NEAR(std::accumulate(s.probabilities.begin(), s.probabilities.end(),
                                0.0),
                1.0, 1e-12);
  }
  EXPECT_THAT(sizes, ElementsAre(3, 2, 3, 1, 2, 1, 2, 2, 1, 1, 1));
  EXPECT_NEAR(SequenceNll(tax, uniform, "", gold),
              2 * std::log(3.0) + 4 * std::log(2.0), 1e-9);
}

TEST(SequenceNllTest, ExplicitEosIsSameAsImplicit) {
  const Taxonomy tax = SampleTaxonomy();
  const UniformScorer uniform;
  EXPECT_DOUBLE_EQ(
      SequenceNll(tax, uniform, "", Tokens(tax, "Root Business POP")),
      SequenceNll(tax, uniform, "", Tokens(tax, "Root Business POP <eos>")));
  // Root Business POP: 3 choices, then 2, then {Entertainment, Eos}.
  EXPECT_NEAR(SequenceNll(tax, uniform, "", Tokens(tax, "Root Business POP")),
              std::log(12.0), 1e-12);
}

TEST(SequenceNllTest, MinimalTaxonomy) {
  const Taxonomy tax = Taxonomy::ParseOrThrow("Root\tA\n");
  const UniformScorer uniform;
  const auto trace = TraceSequence(tax, uniform, "", Tokens(tax, "Root A POP"));
  ASSERT_EQ(trace.size(), 3u);
  EXPECT_EQ(trace[0].vocabulary.size(), 2u);  // A, Eos
  EXPECT_EQ(trace[1].vocabulary.size(), 1u);
  EXPECT_EQ(trace[2].vocabulary.size(), 1u);
  EXPECT_NEAR(SequenceNll(tax, uniform, "", Tokens(tax, "Root A POP")),
              std::log(2.0), 1e-12);
}

TEST(SequenceNllTest, ForcedStepsHaveProbabilityOne) {
  std::mt19937_64 rng(3);
  const RandomScorer scorer(17);
  for (int t = 0; t < 50; ++t) {
    const Taxonomy tax = testing::RandomTaxonomy(rng, {2, 30, 6, 0});
    const LabelSequence gold =
        Linearize(tax, testing::RandomConsistentLabelSet(tax, rng));
    for (const StepTrace& s : TraceSequence(tax, scorer, "doc", gold)) {
      if (s.vocabulary.size() == 1) {
        ASSERT_EQ(s.probabilities[0], 1.0);
        ASSERT_EQ(s.log_probability, 0.0);
      }
    }
  }
}

TEST(SequenceNllTest, InvalidGoldThrows) {
  const Taxonomy tax = SampleTaxonomy();
  const UniformScorer uniform;
  EXPECT_THROW(SequenceNll(tax, uniform, "", Tokens(tax, "Root Company POP")),
               SequenceError);
  EXPECT_THROW(SequenceNll(tax, uniform, "", Tokens(tax, "Root Business")),
               SequenceError);
}

TEST(SequenceNllTest, MatchesEnumeratedNormalization) {
  std::mt19937_64 rng(8);
  const RandomScorer scorer(4);
  for (int t = 0; t < 30; ++t) {
    const Taxonomy tax = testing::RandomTaxonomy(rng, {2, 7, 6, 3});
    for (const auto& seq : testing::EnumerateCompleteSequences(tax)) {
      ASSERT_NEAR(-SequenceNll(tax, scorer, "x", seq),
                  testing::EnumeratedLogProb(tax, scorer, "x", seq), 1e-9);
    }
  }
}

// ---------------------------------------------------------------------------
// Beam search

TEST(BeamSearchTest, UniformGreedyIsLexicographicallySmallest) {
  const Taxonomy tax = SampleTaxonomy();
  const UniformScorer uniform;
  const ScoredSequence best = GreedyDecode(tax, uniform, "");
  EXPECT_EQ(RenderSequence(tax, best.sequence),
            "Root Business Company POP POP Entertainment Movie Action POP "
            "Documentary POP POP POP");
  EXPECT_NEAR(best.logprob, -(2 * std::log(3.0) + 4 * std::log(2.0)), 1e-9);
}

TEST(BeamSearchTest, OracleRecoversSample) {
  const Taxonomy tax = SampleTaxonomy();
  const LabelSequence target = Tokens(tax, testing::kSampleSequence);
  const OracleScorer oracle(target);
  const ScoredSequence best = GreedyDecode(tax, oracle, "");
  EXPECT_EQ(best.sequence, target);
  // Non-forced steps have 3, 2, 3, 2, 2, 2 candidates.
  const double e = std::exp(OracleScorer::kDefaultMargin);
  const double expected = std::log(e / (e + 2)) * 2 + std::log(e / (e + 1)) * 4;
  EXPECT_NEAR(best.logprob, expected, 1e-12);
  for (std::size_t k : {1, 2, 4, 8}) {
    EXPECT_EQ(ConstrainedBeamSearch(tax, oracle, "", k).front().sequence,
              target);
  }
}

TEST(BeamSearchTest, ReturnsAtMostWidthSortedAndValid) {
  const Taxonomy tax = SampleTaxonomy();
  const RandomScorer scorer(1);
  const auto beams = ConstrainedBeamSearch(tax, scorer, "d", 5);
  ASSERT_EQ(beams.size(), 5u);
  for (std::size_t i = 0; i < beams.size(); ++i) {
    EXPECT_EQ(ValidateSequence(tax, beams[i].sequence), std::nullopt);
    EXPECT_TRUE(IsConsistent(tax, Delinearize(tax, beams[i].sequence)));
    if (i > 0) EXPECT_GE(beams[i - 1].logprob, beams[i].logprob);
  }
}

TEST(BeamSearchTest, ZeroWidthRejected) {
  const Taxonomy tax = SampleTaxonomy();
  try {
    ConstrainedBeamSearch(tax, UniformScorer(), "", 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(BeamSearchTest, MaxDecodeLength) {
  EXPECT_EQ(MaxDecodeLength(SampleTaxonomy()), 14u);
  EXPECT_EQ(MaxDecodeLength(Taxonomy::ParseOrThrow("Root\tA\n")), 4u);
}

TEST(StepTest, PopAndNonChildExamples) {
  const Taxonomy tax = SampleTaxonomy();
  const DecoderState mid =
      DecoderState::FromPrefix(tax, Tokens(tax, "Root Entertainment Movie"));
  const DecoderState popped = Step(tax, mid, Token::Pop());
  EXPECT_EQ(popped.stack().size(), 2u);
  EXPECT_EQ(popped.top(), tax.Lookup("Entertainment"));

  const DecoderState business =
      DecoderState::FromPrefix(tax, Tokens(tax, "Root Business"));
  try {
    Step(tax, business, Token::Label(tax.Lookup("Documentary")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIllegalToken);
  }
}

TEST(SequenceNllTest, OracleBeatsUniform) {
  const Taxonomy tax = SampleTaxonomy();
  const auto gold = Tokens(tax, testing::kSampleSequence);
  EXPECT_LT(SequenceNll(tax, OracleScorer(gold), "", gold),
            SequenceNll(tax, UniformScorer(), "", gold));
}

TEST(SequenceNllTest, StepLogProbabilitiesAreNonPositive) {
  std::mt19937_64 rng(13);
  const RandomScorer scorer(2, 30.0);
  for (int t = 0; t < 50; ++t) {
    const Taxonomy tax = testing::RandomTaxonomy(rng, {2, 40, 6, 0});
    const LabelSequence gold =
        Linearize(tax, testing::RandomConsistentLabelSet(tax, rng));
    double running = 0.0;
    for (const StepTrace& s : TraceSequence(tax, scorer, "d", gold)) {
      ASSERT_LE(s.log_probability, 0.0);
      ASSERT_LE(running + s.log_probability, running);
      running += s.log_probability;
    }
  }
}

TEST(BeamSearchTest, FullWidthUniformOnFourNodes) {
  // Root -> {A, B}, A -> C: 8 complete sequences.
  const Taxonomy tax = Taxonomy::ParseOrThrow("Root\tA\nRoot\tB\nA\tC\n");
  const auto all = testing::EnumerateCompleteSequences(tax);
  ASSERT_EQ(all.size(), 8u);
  const auto beams = ConstrainedBeamSearch(tax, UniformScorer(), "", all.size());
  std::vector<std::vector<Token>> got;
  for (const ScoredSequence& s : beams) {
    got.push_back(s.sequence);
    got.back().push_back(Token::Eos());
  }
  EXPECT_THAT(got, UnorderedElementsAreArray(all));
}

TEST(BeamSearchTest, SingleEdgeGreedy) {
  const Taxonomy tax = Taxonomy::ParseOrThrow("Root\tA\n");
  const ScoredSequence best = GreedyDecode(tax, UniformScorer(), "");
  EXPECT_EQ(RenderSequence(tax, best.sequence), "Root A POP");
  EXPECT_NEAR(best.logprob, -std::log(2.0), 1e-15);
}

TEST(BeamSearchTest, ChainOnlyBranchesOnTheWayDown) {
  const Taxonomy tax =
      Taxonomy::ParseOrThrow("Root\tA\nA\tB\nB\tC\nC\tD\n");
  const OracleScorer oracle(Tokens(tax, "Root A B C D POP POP POP POP"));
  const ScoredSequence best = GreedyDecode(tax, oracle, "");
  EXPECT_EQ(best.sequence.size(), 9u);
  const double e = std::exp(OracleScorer::kDefaultMargin);
  // Root, A, B and C each offer two tokens; every POP on the way up is forced.
  EXPECT_NEAR(best.logprob, 4 * std::log(e / (e + 1)), 1e-12);
  for (const StepTrace& s :
       TraceSequence(tax, oracle, "", best.sequence)) {
    if (s.vocabulary.size() == 1) EXPECT_EQ(s.log_probability, 0.0);
  }
}

struct Ranked {
  std::vector<Token> tokens;  // with Eos
  double logprob;
};

std::vector<Ranked> RankAll(const Taxonomy& tax, const Scorer& scorer,
                            std::string_view doc) {
  std::vector<Ranked> all;
  for (auto& seq : testing::EnumerateCompleteSequences(tax)) {
    const double lp = testing::EnumeratedLogProb(tax, scorer, doc, seq);
    all.push_back({std::move(seq), lp});
  }
  std::sort(all.begin(), all.end(), [](const Ranked& a, const Ranked& b) {
    return a.logprob > b.logprob;
  });
  return all;
}

TEST(BeamSearchPropertyTest, UnprunedBeamEqualsExhaustiveRanking) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    const Taxonomy tax = testing::RandomTaxonomy(rng, {2, 7, 6, 3});
    const RandomScorer scorer(rng());
    const auto ranked = RankAll(tax, scorer, "doc");
    const auto beams = ConstrainedBeamSearch(tax, scorer, "doc", ranked.size());
    ASSERT_EQ(beams.size(), ranked.size());
    for (std::size_t i = 0; i < beams.size(); ++i) {
      std::vector<Token> with_eos = beams[i].sequence;
      with_eos.push_back(Token::Eos());
      ASSERT_EQ(with_eos, ranked[i].tokens) << "rank " << i;
      ASSERT_NEAR(beams[i].logprob, ranked[i].logprob, 1e-9);
    }
  }
}

TEST(BeamSearchPropertyTest, GreedyFollowsStepwiseArgmax) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const Taxonomy tax = testing::RandomTaxonomy(rng, {2, 40, 6, 0});
    const RandomScorer scorer(rng());
    // Reference: replay-based vocabulary, pick the highest raw score.
    std::vector<Token> prefix = {Token::Label(tax.root())};
    double lp = 0.0;
    while (true) {
      const auto cands = testing::ReplayVocabulary(tax, prefix);
      std::vector<double> raw(cands.size());
      scorer.Score("doc", prefix, cands, raw);
      const std::size_t best = std::max_element(raw.begin(), raw.end()) -
                               raw.begin();
      double z = 0.0;
      for (double r : raw) z += std::exp(r);
      lp += raw[best] - std::log(z);
      if (cands[best].is_eos()) break;
      prefix.push_back(cands[best]);
    }
    const ScoredSequence got = GreedyDecode(tax, scorer, "doc");
    ASSERT_EQ(got.sequence, prefix);
    ASSERT_NEAR(got.logprob, lp, 1e-9);
  }
}

TEST(BeamSearchPropertyTest, TiesResolveLexicographically) {
  std::mt19937_64 rng(31);
  const UniformScorer uniform;
  for (int t = 0; t < 30; ++t) {
    const Taxonomy tax = testing::RandomTaxonomy(rng, {2, 6, 6, 3});
    const auto beams = ConstrainedBeamSearch(tax, uniform, "", 1000000);
    for (std::size_t i = 1; i < beams.size(); ++i) {
      ASSERT_GE(beams[i - 1].logprob, beams[i].logprob);
      if (beams[i - 1].logprob == beams[i].logprob) {
        std::vector<Token> a = beams[i - 1].sequence, b = beams[i].sequence;
        a.push_back(Token::Eos());
        b.push_back(Token::Eos());
        ASSERT_TRUE(TokenSequenceLess(tax, a, b));
      }
    }
  }
}

TEST(BeamSearchPropertyTest, WiderBeamNeverScoresWorse) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 40; ++t) {
    const Taxonomy tax = testing::RandomTaxonomy(rng, {2, 7, 6, 3});
    const RandomScorer scorer(rng());
    const double best = RankAll(tax, scorer, "q").front().logprob;
    double previous = -std::numeric_limits<double>::infinity();
    for (std::size_t k : {1, 2, 4, 64}) {
      const double got = ConstrainedBeamSearch(tax, scorer, "q", k)
                             .front()
                             .logprob;
      ASSERT_LE(got, best + 1e-9);
      if (k == 64) ASSERT_NEAR(got, best, 1e-9);
      previous = std::max(previous, got);
    }
  }
}

// ---------------------------------------------------------------------------
// Unconstrained baseline

TEST(UnconstrainedDecodeTest, UniformRunsToMaxLength) {
  const Taxonomy tax = SampleTaxonomy();
  const UnconstrainedResult r = UnconstrainedDecode(tax, UniformScorer(), "", 1);
  EXPECT_FALSE(r.reached_eos);
  EXPECT_EQ(r.tokens.size(), MaxDecodeLength(tax));
  EXPECT_EQ(r.labels, Labels(tax, {"Action"}));
  EXPECT_FALSE(IsConsistent(tax, r.labels));
  EXPECT_NEAR(r.logprob, -13 * std::log(8.0), 1e-9);
  EXPECT_EQ(ValidateSequence(tax, r.tokens, SequenceMode::kPrefix),
            (SequenceViolation{1, SequenceIssue::kNonChild}));
}

TEST(UnconstrainedDecodeTest, OracleReachesEos) {
  const Taxonomy tax = SampleTaxonomy();
  const LabelSequence target = Tokens(tax, testing::kSampleSequence);
  const UnconstrainedResult r =
      UnconstrainedDecode(tax, OracleScorer(target), "", 1);
  EXPECT_TRUE(r.reached_eos);
  EXPECT_EQ(r.tokens, target);
  EXPECT_EQ(r.labels, Delinearize(tax, target));
}

}  // namespace
}  // namespace seq2tree

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

#ifndef SEQ2TREE_TESTS_TESTING_FIXTURES_H_
#define SEQ2TREE_TESTS_TESTING_FIXTURES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "seq2tree/taxonomy.h"
#include "seq2tree/token.h"

namespace seq2tree::testing {

// Root -> {Entertainment, Business}, Entertainment -> Movie,
// Movie -> {Documentary, Action}, Business -> Company.
inline constexpr char kSampleTaxonomyTsv[] =
    "Root\tEntertainment\n"
    "Root\tBusiness\n"
    "Entertainment\tMovie\n"
    "Movie\tDocumentary\n"
    "Movie\tAction\n"
    "Business\tCompany\n";

inline constexpr char kSampleSequence[] =
    "Root Entertainment Movie Documentary POP POP POP Business Company POP POP";

Taxonomy SampleTaxonomy();
LabelSet Labels(const Taxonomy& tax, const std::vector<std::string>& names);
std::vector<Token> Tokens(const Taxonomy& tax, const std::string& text);

struct ShapeOptions {
  int min_nodes = 2;
  int max_nodes = 12;
  int max_depth = 6;
  int max_children = 0;  // 0 = unbounded
};

// Random recursive tree with shuffled label names, so name order and
// insertion order disagree.
Taxonomy RandomTaxonomy(std::mt19937_64& rng, const ShapeOptions& options);

// Random non-empty consistent set: closure of a random subset.
LabelSet RandomConsistentLabelSet(const Taxonomy& tax, std::mt19937_64& rng);

// Any subset (possibly empty, possibly inconsistent).
LabelSet RandomLabelSet(const Taxonomy& tax, std::mt19937_64& rng,
                        double keep_probability);

}  // namespace seq2tree::testing

#endif  // SEQ2TREE_TESTS_TESTING_FIXTURES_H_

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

#include "testing/fixtures.h"

#include <algorithm>
#include <utility>
#include <variant>

#include "seq2tree/linearizer.h"

namespace seq2tree::testing {

Taxonomy SampleTaxonomy() { return Taxonomy::ParseOrThrow(kSampleTaxonomyTsv); }

LabelSet Labels(const Taxonomy& tax, const std::vector<std::string>& names) {
  return LabelSet::FromNames(tax, names);
}

std::vector<Token> Tokens(const Taxonomy& tax, const std::string& text) {
  return ParseTokens(tax, text);
}

Taxonomy RandomTaxonomy(std::mt19937_64& rng, const ShapeOptions& options) {
  std::uniform_int_distribution<int> size_dist(options.min_nodes,
                                               options.max_nodes);
  const int n = size_dist(rng);

  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("L" + std::to_string(i));
  std::shuffle(names.begin() + 1, names.end(), rng);

  std::vector<int> depth = {0};
  std::vector<int> fanout = {0};
  std::vector<Taxonomy::Edge> edges;
  for (int i = 1; i < n; ++i) {
    std::vector<int> open;
    for (int p = 0; p < i; ++p) {
      if (depth[p] >= options.max_depth) continue;
      if (options.max_children > 0 && fanout[p] >= options.max_children) continue;
      open.push_back(p);
    }
    const int parent =
        open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    edges.push_back({names[parent], names[i]});
    depth.push_back(depth[parent] + 1);
    fanout.push_back(0);
    ++fanout[parent];
  }
  // Shuffle edge order while keeping the file order of siblings arbitrary.
  std::shuffle(edges.begin(), edges.end(), rng);
  return std::get<Taxonomy>(Taxonomy::FromEdges(edges));
}

LabelSet RandomLabelSet(const Taxonomy& tax, std::mt19937_64& rng,
                        double keep_probability) {
  std::bernoulli_distribution keep(keep_probability);
  std::vector<LabelId> ids;
  for (LabelId id : tax.preorder()) {
    if (id != tax.root() && keep(rng)) ids.push_back(id);
  }
  return LabelSet(std::move(ids));
}

LabelSet RandomConsistentLabelSet(const Taxonomy& tax, std::mt19937_64& rng) {
  const double p = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
  LabelSet labels = AncestorClosure(tax, RandomLabelSet(tax, rng, p));
  if (labels.empty()) {
    const std::size_t pick =
        std::uniform_int_distribution<std::size_t>(1, tax.size() - 1)(rng);
    labels = AncestorClosure(tax, LabelSet({tax.preorder()[pick]}));
  }
  return labels;
}

}  // namespace seq2tree::testing

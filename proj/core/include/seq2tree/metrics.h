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

#ifndef SEQ2TREE_METRICS_H_
#define SEQ2TREE_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "seq2tree/taxonomy.h"

namespace seq2tree {

struct LabelCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  friend bool operator==(const LabelCounts&, const LabelCounts&) = default;
};

// Per-label confusion counts over every non-root label, in taxonomy
// pre-order, plus pooled totals.
struct ConfusionCounts {
  std::vector<LabelId> labels;
  std::vector<LabelCounts> counts;
  LabelCounts total;

  friend bool operator==(const ConfusionCounts&,
                         const ConfusionCounts&) = default;
};

// Standard mode credits a tp for every predicted gold label. Constrained mode
// credits it only when all of the label's non-root ancestors are predicted
// too; a denied prediction still counts as a prediction, so
// fp = predicted - tp and fn = gold - tp in both modes.
// Throws Error(kAlignmentError) and Error(kUnknownLabel).
ConfusionCounts ComputeConfusionCounts(const Taxonomy& tax,
                                       std::span<const LabelSet> gold,
                                       std::span<const LabelSet> predicted,
                                       bool constrained);

double F1(const LabelCounts& counts);
// 2 sum(tp) / (2 sum(tp) + sum(fp) + sum(fn)); 0 when everything is empty.
double MicroF1(const ConfusionCounts& counts);
// Unweighted mean of per-label F1; labels with no support and no predictions
// contribute 0.
double MacroF1(const ConfusionCounts& counts);

struct LabelRow {
  std::string label;
  double f1 = 0.0;
  double c_f1 = 0.0;
  std::int64_t support = 0;
  LabelCounts counts;
  LabelCounts c_counts;
};

struct MetricsReport {
  double micro_f1 = 0.0;
  double macro_f1 = 0.0;
  double c_micro_f1 = 0.0;
  double c_macro_f1 = 0.0;
  std::vector<LabelRow> per_label;
  std::size_t documents = 0;
  std::size_t inconsistent_docs = 0;

  nlohmann::json ToJson() const;
  // Four-decimal summary table.
  std::string FormatTable() const;
};

MetricsReport Evaluate(const Taxonomy& tax, std::span<const LabelSet> gold,
                       std::span<const LabelSet> predicted);

}  // namespace seq2tree

#endif  // SEQ2TREE_METRICS_H_

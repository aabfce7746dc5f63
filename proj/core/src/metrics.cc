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

#include "seq2tree/metrics.h"

#include <cstdio>

#include "seq2tree/error.h"

namespace seq2tree {
namespace {

void CheckLabels(const Taxonomy& tax, const LabelSet& labels,
                 std::size_t doc) {
  for (LabelId id : labels) {
    if (!tax.Contains(id)) {
      throw Error(ErrorCode::kUnknownLabel,
                  "document #" + std::to_string(doc) + " references id " +
                      std::to_string(Index(id)));
    }
  }
}

bool AncestorsPredicted(const Taxonomy& tax, const LabelSet& predicted,
                        LabelId id) {
  for (LabelId a : tax.Ancestors(id)) {
    if (!predicted.contains(a)) return false;
  }
  return true;
}

std::string Fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

ConfusionCounts ComputeConfusionCounts(const Taxonomy& tax,
                                       std::span<const LabelSet> gold,
                                       std::span<const LabelSet> predicted,
                                       bool constrained) {
  if (gold.size() != predicted.size()) {
    throw Error(ErrorCode::kAlignmentError,
                std::to_string(gold.size()) + " gold vs " +
                    std::to_string(predicted.size()) + " predicted documents");
  }
  std::vector<std::int64_t> gold_pos(tax.size(), 0);
  std::vector<std::int64_t> pred_pos(tax.size(), 0);
  std::vector<std::int64_t> tp(tax.size(), 0);
  for (std::size_t d = 0; d < gold.size(); ++d) {
    CheckLabels(tax, gold[d], d);
    CheckLabels(tax, predicted[d], d);
    for (LabelId id : gold[d]) ++gold_pos[Index(id)];
    for (LabelId id : predicted[d]) {
      ++pred_pos[Index(id)];
      if (!gold[d].contains(id)) continue;
      if (constrained && !AncestorsPredicted(tax, predicted[d], id)) continue;
      ++tp[Index(id)];
    }
  }

  ConfusionCounts out;
  for (LabelId id : tax.preorder()) {
    if (id == tax.root()) continue;
    const std::int32_t i = Index(id);
    LabelCounts c{tp[i], pred_pos[i] - tp[i], gold_pos[i] - tp[i]};
    out.labels.push_back(id);
    out.counts.push_back(c);
    out.total.tp += c.tp;
    out.total.fp += c.fp;
    out.total.fn += c.fn;
  }
  return out;
}

double F1(const LabelCounts& c) {
  const std::int64_t denom = 2 * c.tp + c.fp + c.fn;
  if (denom == 0) return 0.0;
  return static_cast<double>(2 * c.tp) / static_cast<double>(denom);
}

double MicroF1(const ConfusionCounts& counts) { return F1(counts.total); }

double MacroF1(const ConfusionCounts& counts) {
  if (counts.counts.empty()) return 0.0;
  double sum = 0.0;
  for (const LabelCounts& c : counts.counts) sum += F1(c);
  return sum / static_cast<double>(counts.counts.size());
}

MetricsReport Evaluate(const Taxonomy& tax, std::span<const LabelSet> gold,
                       std::span<const LabelSet> predicted) {
  const ConfusionCounts standard =
      ComputeConfusionCounts(tax, gold, predicted, false);
  const ConfusionCounts path = ComputeConfusionCounts(tax, gold, predicted, true);

  MetricsReport report;
  report.micro_f1 = MicroF1(standard);
  report.macro_f1 = MacroF1(standard);
  report.c_micro_f1 = MicroF1(path);
  report.c_macro_f1 = MacroF1(path);
  report.documents = gold.size();
  for (const LabelSet& p : predicted) {
    if (!IsConsistent(tax, p)) ++report.inconsistent_docs;
  }
  for (std::size_t i = 0; i < standard.labels.size(); ++i) {
    const LabelCounts& s = standard.counts[i];
    const LabelCounts& c = path.counts[i];
    report.per_label.push_back({tax.name(standard.labels[i]), F1(s), F1(c),
                                s.tp + s.fn, s, c});
  }
  return report;
}

nlohmann::json MetricsReport::ToJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const LabelRow& row : per_label) {
    rows.push_back({{"label", row.label},
                    {"f1", row.f1},
                    {"c_f1", row.c_f1},
                    {"support", row.support},
                    {"tp", row.counts.tp},
                    {"fp", row.counts.fp},
                    {"fn", row.counts.fn},
                    {"c_tp", row.c_counts.tp},
                    {"c_fp", row.c_counts.fp},
                    {"c_fn", row.c_counts.fn}});
  }
  return {{"micro_f1", micro_f1},
          {"macro_f1", macro_f1},
          {"c_micro_f1", c_micro_f1},
          {"c_macro_f1", c_macro_f1},
          {"documents", documents},
          {"inconsistent_docs", inconsistent_docs},
          {"per_label", rows}};
}

std::string MetricsReport::FormatTable() const {
  std::string out;
  out += "metric        value\n";
  out += "Micro-F1      " + Fixed4(micro_f1) + "\n";
  out += "C-Micro-F1    " + Fixed4(c_micro_f1) + "\n";
  out += "Macro-F1      " + Fixed4(macro_f1) + "\n";
  out += "C-Macro-F1    " + Fixed4(c_macro_f1) + "\n";
  out += "documents     " + std::to_string(documents) + "\n";
  out += "inconsistent  " + std::to_string(inconsistent_docs) + "\n";
  return out;
}

}  // namespace seq2tree

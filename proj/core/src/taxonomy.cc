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

#include "seq2tree/taxonomy.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "seq2tree/error.h"

namespace seq2tree {
namespace {

std::string_view StripLineEnd(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) {
    line.remove_suffix(1);
  }
  return line;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

bool IsReservedName(std::string_view name) {
  return name == kPopName || name == kBosName || name == kEosName;
}

std::string_view IssueCodeName(IssueCode code) {
  switch (code) {
    case IssueCode::kMultipleRoots: return "MULTIPLE_ROOTS";
    case IssueCode::kNoRoot: return "NO_ROOT";
    case IssueCode::kCycle: return "CYCLE";
    case IssueCode::kDuplicateEdge: return "DUPLICATE_EDGE";
    case IssueCode::kMultipleParents: return "MULTIPLE_PARENTS";
    case IssueCode::kReservedName: return "RESERVED_NAME";
    case IssueCode::kEmpty: return "EMPTY";
  }
  return "UNKNOWN";
}

bool ValidationReport::Has(IssueCode code) const {
  return std::any_of(issues.begin(), issues.end(),
                     [code](const ValidationIssue& i) { return i.code == code; });
}

std::string ValidationReport::Summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i > 0) out << "; ";
    out << IssueCodeName(issues[i].code) << ": " << issues[i].message;
  }
  return out.str();
}

std::variant<Taxonomy, ValidationReport> Taxonomy::Parse(std::string_view tsv) {
  ValidationReport report;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!tsv.empty()) {
    const std::size_t nl = tsv.find('\n');
    std::string_view line = StripLineEnd(tsv.substr(0, nl));
    tsv = nl == std::string_view::npos ? std::string_view() : tsv.substr(nl + 1);
    ++line_no;
    if (IsBlank(line) || line.front() == '#') continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos ||
        line.find('\t', tab + 1) != std::string_view::npos) {
      report.issues.push_back(
          {IssueCode::kEmpty, "line " + std::to_string(line_no) +
                                  ": expected exactly two tab-separated fields"});
      continue;
    }
    std::string_view parent = line.substr(0, tab);
    std::string_view child = line.substr(tab + 1);
    if (parent.empty() || child.empty()) {
      report.issues.push_back(
          {IssueCode::kEmpty,
           "line " + std::to_string(line_no) + ": empty label name"});
      continue;
    }
    edges.push_back({std::string(parent), std::string(child)});
  }

  auto built = FromEdges(edges);
  if (report.ok()) return built;
  if (auto* structural = std::get_if<ValidationReport>(&built)) {
    report.issues.insert(report.issues.end(), structural->issues.begin(),
                         structural->issues.end());
  }
  return report;
}

std::variant<Taxonomy, ValidationReport> Taxonomy::FromEdges(
    std::span<const Edge> edges) {
  ValidationReport report;
  if (edges.empty()) {
    report.issues.push_back({IssueCode::kEmpty, "no edges"});
    return report;
  }

  Taxonomy tax;
  auto intern = [&tax, &report](const std::string& name) {
    auto [it, inserted] = tax.index_.emplace(
        name, static_cast<LabelId>(tax.names_.size()));
    if (inserted) {
      tax.names_.push_back(name);
      tax.parent_.push_back(-1);
      tax.children_.emplace_back();
      if (IsReservedName(name)) {
        report.issues.push_back(
            {IssueCode::kReservedName, "'" + name + "' is a reserved token"});
      }
    }
    return it->second;
  };

  std::set<std::pair<std::string, std::string>> seen;
  for (const Edge& edge : edges) {
    const LabelId parent = intern(edge.parent);
    const LabelId child = intern(edge.child);
    if (!seen.emplace(edge.parent, edge.child).second) {
      report.issues.push_back({IssueCode::kDuplicateEdge,
                               edge.parent + " -> " + edge.child});
      continue;
    }
    if (parent == child) {
      report.issues.push_back({IssueCode::kCycle, "self loop at " + edge.child});
      continue;
    }
    std::int32_t& slot = tax.parent_[Index(child)];
    if (slot >= 0) {
      report.issues.push_back(
          {IssueCode::kMultipleParents,
           edge.child + " has parents " + tax.names_[slot] + " and " +
               edge.parent});
      continue;
    }
    slot = Index(parent);
    tax.children_[Index(parent)].push_back(child);
  }

  std::vector<LabelId> roots;
  for (std::size_t i = 0; i < tax.names_.size(); ++i) {
    if (tax.parent_[i] < 0) roots.push_back(static_cast<LabelId>(i));
  }
  if (roots.empty()) {
    report.issues.push_back({IssueCode::kNoRoot, "every node has a parent"});
  } else if (roots.size() > 1) {
    std::string names;
    for (LabelId r : roots) names += (names.empty() ? "" : ", ") + tax.name(r);
    report.issues.push_back({IssueCode::kMultipleRoots, names});
  }

  // Walk parent chains; a walk that revisits a node on the current path has
  // found a cycle. state: 0 unvisited, 1 on current walk, 2 done.
  const std::size_t n = tax.names_.size();
  std::vector<std::uint8_t> state(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::int32_t> path;
    std::int32_t cur = static_cast<std::int32_t>(start);
    while (cur >= 0 && state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = tax.parent_[cur];
    }
    if (cur >= 0 && state[cur] == 1) {
      std::string members = tax.names_[cur];
      for (std::int32_t m = tax.parent_[cur]; m != cur; m = tax.parent_[m]) {
        members += " <- " + tax.names_[m];
      }
      report.issues.push_back({IssueCode::kCycle, members});
    }
    for (std::int32_t p : path) state[p] = 2;
  }

  if (!report.ok()) return report;
  tax.root_ = roots.front();
  tax.Finalize();
  return tax;
}

Taxonomy Taxonomy::ParseOrThrow(std::string_view tsv) {
  auto parsed = Parse(tsv);
  if (auto* report = std::get_if<ValidationReport>(&parsed)) {
    throw Error(ErrorCode::kParseError, report->Summary());
  }
  return std::get<Taxonomy>(std::move(parsed));
}

void Taxonomy::Finalize() {
  const std::size_t n = names_.size();
  depth_.assign(n, 0);
  preorder_.clear();
  preorder_.reserve(n);
  preorder_rank_.assign(n, 0);

  std::vector<LabelId> stack = {root_};
  while (!stack.empty()) {
    const LabelId node = stack.back();
    stack.pop_back();
    preorder_rank_[Index(node)] = static_cast<int>(preorder_.size());
    preorder_.push_back(node);
    const auto& kids = children_[Index(node)];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      depth_[Index(*it)] = depth_[Index(node)] + 1;
      max_depth_ = std::max(max_depth_, depth_[Index(*it)]);
      stack.push_back(*it);
    }
  }

  std::vector<std::int32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [this](std::int32_t a, std::int32_t b) {
    return names_[a] < names_[b];
  });
  name_rank_.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) name_rank_[order[r]] = static_cast<int>(r);

  children_by_name_ = children_;
  for (auto& kids : children_by_name_) {
    std::sort(kids.begin(), kids.end(), [this](LabelId a, LabelId b) {
      return name_rank_[Index(a)] < name_rank_[Index(b)];
    });
  }
}

std::string Taxonomy::Render() const {
  std::string out;
  for (LabelId node : preorder_) {
    for (LabelId child : children(node)) {
      out += name(node);
      out += '\t';
      out += name(child);
      out += '\n';
    }
  }
  return out;
}

std::optional<LabelId> Taxonomy::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LabelId Taxonomy::Lookup(std::string_view name) const {
  if (auto id = Find(name)) return *id;
  throw Error(ErrorCode::kUnknownLabel, "'" + std::string(name) + "'");
}

std::optional<LabelId> Taxonomy::parent(LabelId id) const {
  const std::int32_t p = parent_[Index(id)];
  if (p < 0) return std::nullopt;
  return static_cast<LabelId>(p);
}

std::vector<LabelId> Taxonomy::Ancestors(LabelId id) const {
  std::vector<LabelId> out;
  for (std::int32_t p = parent_[Index(id)]; p >= 0 && p != Index(root_);
       p = parent_[p]) {
    out.push_back(static_cast<LabelId>(p));
  }
  return out;
}

std::vector<std::string> Taxonomy::Children(std::string_view name) const {
  std::vector<std::string> out;
  for (LabelId c : children(Lookup(name))) out.push_back(this->name(c));
  return out;
}

std::vector<std::string> Taxonomy::Ancestors(std::string_view name) const {
  std::vector<std::string> out;
  for (LabelId a : Ancestors(Lookup(name))) out.push_back(this->name(a));
  return out;
}

bool operator==(const Taxonomy& a, const Taxonomy& b) {
  if (a.size() != b.size() || a.name(a.root()) != b.name(b.root())) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const LabelId ia = static_cast<LabelId>(i);
    const auto ib = b.Find(a.name(ia));
    if (!ib) return false;
    const auto ca = a.children(ia);
    const auto cb = b.children(*ib);
    if (ca.size() != cb.size()) return false;
    for (std::size_t k = 0; k < ca.size(); ++k) {
      if (a.name(ca[k]) != b.name(cb[k])) return false;
    }
  }
  return true;
}

LabelSet::LabelSet(std::vector<LabelId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

LabelSet LabelSet::FromNames(const Taxonomy& tax,
                             std::span<const std::string> names) {
  std::vector<LabelId> ids;
  ids.reserve(names.size());
  for (const std::string& name : names) {
    const LabelId id = tax.Lookup(name);
    if (id != tax.root()) ids.push_back(id);
  }
  return LabelSet(std::move(ids));
}

bool LabelSet::contains(LabelId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool LabelSet::insert(LabelId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it != ids_.end() && *it == id) return false;
  ids_.insert(it, id);
  return true;
}

std::vector<std::string> LabelSet::Names(const Taxonomy& tax) const {
  std::vector<LabelId> ordered = ids_;
  std::sort(ordered.begin(), ordered.end(), [&tax](LabelId a, LabelId b) {
    return tax.preorder_rank(a) < tax.preorder_rank(b);
  });
  std::vector<std::string> out;
  out.reserve(ordered.size());
  for (LabelId id : ordered) out.push_back(tax.name(id));
  return out;
}

namespace {

void CheckKnown(const Taxonomy& tax, const LabelSet& labels) {
  for (LabelId id : labels) {
    if (!tax.Contains(id)) {
      throw Error(ErrorCode::kUnknownLabel, "id " + std::to_string(Index(id)));
    }
  }
}

}  // namespace

bool IsConsistent(const Taxonomy& tax, const LabelSet& labels) {
  CheckKnown(tax, labels);
  for (LabelId id : labels) {
    if (id == tax.root()) continue;
    const auto parent = tax.parent(id);
    if (parent && *parent != tax.root() && !labels.contains(*parent)) {
      return false;
    }
  }
  return true;
}

LabelSet AncestorClosure(const Taxonomy& tax, const LabelSet& labels) {
  CheckKnown(tax, labels);
  std::vector<LabelId> out;
  for (LabelId id : labels) {
    if (id == tax.root()) continue;
    out.push_back(id);
    for (LabelId a : tax.Ancestors(id)) out.push_back(a);
  }
  return LabelSet(std::move(out));
}

DatasetStats ComputeStats(
    const Taxonomy& tax,
    const std::map<std::string, std::vector<LabeledDocument>>& splits) {
  DatasetStats stats;
  stats.label_count = tax.label_count();
  stats.depth = tax.max_depth();
  std::size_t docs = 0;
  std::size_t labels = 0;
  for (const auto& [split, documents] : splits) {
    stats.split_sizes[split] = documents.size();
    for (const LabeledDocument& doc : documents) {
      for (LabelId id : doc.labels) {
        if (!tax.Contains(id)) {
          throw Error(ErrorCode::kUnknownLabel, "document '" + doc.id + "'");
        }
      }
      ++docs;
      labels += doc.labels.size();
    }
  }
  if (docs > 0) {
    stats.avg_labels = static_cast<double>(labels) / static_cast<double>(docs);
  }
  return stats;
}

}  // namespace seq2tree

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

#ifndef SEQ2TREE_TAXONOMY_H_
#define SEQ2TREE_TAXONOMY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace seq2tree {

// Dense node index into a Taxonomy. Only meaningful together with the
// taxonomy that produced it.
enum class LabelId : std::int32_t {};

constexpr std::int32_t Index(LabelId id) { return static_cast<std::int32_t>(id); }

inline constexpr std::string_view kPopName = "POP";
inline constexpr std::string_view kBosName = "<bos>";
inline constexpr std::string_view kEosName = "<eos>";

bool IsReservedName(std::string_view name);

enum class IssueCode {
  kMultipleRoots,
  kNoRoot,
  kCycle,
  kDuplicateEdge,
  kMultipleParents,
  kReservedName,
  kEmpty,
};

std::string_view IssueCodeName(IssueCode code);

struct ValidationIssue {
  IssueCode code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  bool Has(IssueCode code) const;
  std::string Summary() const;
};

// Immutable rooted label tree. Node ids follow first appearance in the input;
// children keep the order in which their edges were listed.
class Taxonomy {
 public:
  struct Edge {
    std::string parent;
    std::string child;
  };

  // Parses a "parent<TAB>child" edge list. Blank lines and lines starting
  // with '#' are skipped. Returns every violation found, never a partial tree.
  static std::variant<Taxonomy, ValidationReport> Parse(std::string_view tsv);
  static std::variant<Taxonomy, ValidationReport> FromEdges(
      std::span<const Edge> edges);

  // Throws Error(kParseError) carrying the report summary.
  static Taxonomy ParseOrThrow(std::string_view tsv);

  // Edge list in pre-order; Parse(Render()) == *this.
  std::string Render() const;

  std::size_t size() const { return names_.size(); }
  std::size_t label_count() const { return names_.size() - 1; }
  LabelId root() const { return root_; }
  int max_depth() const { return max_depth_; }

  const std::string& name(LabelId id) const { return names_[Index(id)]; }
  std::optional<LabelId> Find(std::string_view name) const;
  // Throws Error(kUnknownLabel).
  LabelId Lookup(std::string_view name) const;
  bool Contains(LabelId id) const {
    return Index(id) >= 0 && static_cast<std::size_t>(Index(id)) < size();
  }

  std::optional<LabelId> parent(LabelId id) const;
  std::span<const LabelId> children(LabelId id) const {
    return children_[Index(id)];
  }
  // Same members as children(), sorted by label name.
  std::span<const LabelId> children_by_name(LabelId id) const {
    return children_by_name_[Index(id)];
  }
  bool is_leaf(LabelId id) const { return children_[Index(id)].empty(); }
  int depth(LabelId id) const { return depth_[Index(id)]; }

  // Strict ancestors from the parent upwards, root excluded.
  std::vector<LabelId> Ancestors(LabelId id) const;

  std::span<const LabelId> preorder() const { return preorder_; }
  int preorder_rank(LabelId id) const { return preorder_rank_[Index(id)]; }
  // Rank of the node name in byte-wise lexicographic order over all nodes.
  int name_rank(LabelId id) const { return name_rank_[Index(id)]; }

  // Name-based conveniences; throw Error(kUnknownLabel).
  std::vector<std::string> Children(std::string_view name) const;
  std::vector<std::string> Ancestors(std::string_view name) const;

  // Structural equality: same root name and same ordered children per name.
  friend bool operator==(const Taxonomy& a, const Taxonomy& b);

 private:
  Taxonomy() = default;
  void Finalize();

  std::vector<std::string> names_;
  std::unordered_map<std::string, LabelId> index_;
  std::vector<std::int32_t> parent_;
  std::vector<std::vector<LabelId>> children_;
  std::vector<std::vector<LabelId>> children_by_name_;
  std::vector<int> depth_;
  std::vector<LabelId> preorder_;
  std::vector<int> preorder_rank_;
  std::vector<int> name_rank_;
  LabelId root_{0};
  int max_depth_ = 0;
};

// Root-exclusive set of taxonomy nodes assigned to one document.
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::vector<LabelId> ids);

  // Resolves names; the root name is dropped. Throws Error(kUnknownLabel).
  static LabelSet FromNames(const Taxonomy& tax,
                            std::span<const std::string> names);

  bool contains(LabelId id) const;
  bool insert(LabelId id);
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  std::span<const LabelId> ids() const { return ids_; }

  // Names in taxonomy pre-order.
  std::vector<std::string> Names(const Taxonomy& tax) const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<LabelId> ids_;  // sorted, unique
};

// Throws Error(kUnknownLabel) for ids outside the taxonomy.
bool IsConsistent(const Taxonomy& tax, const LabelSet& labels);
LabelSet AncestorClosure(const Taxonomy& tax, const LabelSet& labels);

struct DatasetStats {
  std::size_t label_count = 0;
  int depth = 0;
  double avg_labels = 0.0;
  std::map<std::string, std::size_t> split_sizes;
};

struct LabeledDocument {
  std::string id;
  LabelSet labels;
};

DatasetStats ComputeStats(
    const Taxonomy& tax,
    const std::map<std::string, std::vector<LabeledDocument>>& splits);

}  // namespace seq2tree

#endif  // SEQ2TREE_TAXONOMY_H_

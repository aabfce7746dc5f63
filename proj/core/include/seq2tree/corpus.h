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

#ifndef SEQ2TREE_CORPUS_H_
#define SEQ2TREE_CORPUS_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "seq2tree/taxonomy.h"

namespace seq2tree {

// One JSON-lines record: {"id": ..., "text": ..., "labels": [...]}.
struct DocumentRecord {
  std::string id;
  std::string text;
  std::optional<std::vector<std::string>> labels;
};

// Parses JSON lines, skipping blank lines. Ids must be unique.
// Throws Error(kParseError) with the line number.
std::vector<DocumentRecord> ReadCorpus(std::istream& in);
// Throws Error(kIoError) when the file cannot be opened.
std::vector<DocumentRecord> ReadCorpusFile(const std::filesystem::path& path);

nlohmann::json ToJson(const DocumentRecord& record);
void WriteJsonLines(std::ostream& out, const std::vector<nlohmann::json>& rows);

// Reads any JSON-lines file into objects. Throws Error(kParseError).
std::vector<nlohmann::json> ReadJsonLines(std::istream& in);
std::vector<nlohmann::json> ReadJsonLinesFile(const std::filesystem::path& path);

std::string ReadTextFile(const std::filesystem::path& path);

// Resolves the record's gold labels (absent labels mean the empty set).
// Throws Error(kUnknownLabel) naming the document.
LabelSet ResolveLabels(const Taxonomy& tax, const DocumentRecord& record);

}  // namespace seq2tree

#endif  // SEQ2TREE_CORPUS_H_

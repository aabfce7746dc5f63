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

#include "seq2tree/corpus.h"

#include <fstream>
#include <set>
#include <sstream>

#include "seq2tree/error.h"

namespace seq2tree {

std::vector<nlohmann::json> ReadJsonLines(std::istream& in) {
  std::vector<nlohmann::json> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      nlohmann::json row = nlohmann::json::parse(line);
      if (!row.is_object()) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ": expected an object");
      }
      rows.push_back(std::move(row));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

std::vector<nlohmann::json> ReadJsonLinesFile(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return ReadJsonLines(in);
}

std::vector<DocumentRecord> ReadCorpus(std::istream& in) {
  std::vector<DocumentRecord> docs;
  std::set<std::string> ids;
  std::size_t row_no = 0;
  for (const nlohmann::json& row : ReadJsonLines(in)) {
    ++row_no;
    const std::string where = "record " + std::to_string(row_no);
    try {
      DocumentRecord doc;
      if (!row.contains("id")) {
        throw Error(ErrorCode::kParseError, where + ": missing 'id'");
      }
      const auto& id = row["id"];
      doc.id = id.is_string() ? id.get<std::string>() : id.dump();
      if (row.contains("text")) doc.text = row["text"].get<std::string>();
      if (row.contains("labels") && !row["labels"].is_null()) {
        doc.labels = row["labels"].get<std::vector<std::string>>();
      }
      if (!ids.insert(doc.id).second) {
        throw Error(ErrorCode::kParseError,
                    where + ": duplicate id '" + doc.id + "'");
      }
      docs.push_back(std::move(doc));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseError, where + ": " + e.what());
    }
  }
  return docs;
}

std::vector<DocumentRecord> ReadCorpusFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return ReadCorpus(in);
}

nlohmann::json ToJson(const DocumentRecord& record) {
  nlohmann::json row = {{"id", record.id}, {"text", record.text}};
  if (record.labels) row["labels"] = *record.labels;
  return row;
}

void WriteJsonLines(std::ostream& out, const std::vector<nlohmann::json>& rows) {
  for (const nlohmann::json& row : rows) out << row.dump() << '\n';
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LabelSet ResolveLabels(const Taxonomy& tax, const DocumentRecord& record) {
  if (!record.labels) return LabelSet();
  try {
    return LabelSet::FromNames(tax, *record.labels);
  } catch (const Error& e) {
    throw Error(e.code(), "document '" + record.id + "': " + e.message());
  }
}

}  // namespace seq2tree

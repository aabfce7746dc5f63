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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "seq2tree/seq2tree.h"

namespace seq2tree::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string taxonomy;
  std::string input;
  std::string output;
  std::string gold;
  std::string model;
  std::string mode = "constrained";
  std::string scorer = "uniform";
  std::vector<std::string> splits;
  std::size_t beam = 4;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  bool closure = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Taxonomy LoadTaxonomy(const std::string& path) {
  return Taxonomy::ParseOrThrow(ReadTextFile(path));
}

// Writes to --output when given, otherwise to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw Error(ErrorCode::kIoError, "cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::vector<std::string> TokenNames(const Taxonomy& tax,
                                    std::span<const Token> tokens) {
  std::vector<std::string> names;
  names.reserve(tokens.size());
  for (Token t : tokens) names.emplace_back(TokenName(tax, t));
  return names;
}

int CmdValidate(const Options& opt, std::ostream& out) {
  const std::string text = ReadTextFile(opt.taxonomy);
  auto parsed = Taxonomy::Parse(text);
  json report = {{"ok", true}, {"issues", json::array()}};
  if (auto* tax = std::get_if<Taxonomy>(&parsed)) {
    report["labels"] = tax->label_count();
    report["depth"] = tax->max_depth();
    report["root"] = tax->name(tax->root());
  } else {
    report["ok"] = false;
    for (const ValidationIssue& issue :
         std::get<ValidationReport>(parsed).issues) {
      report["issues"].push_back(
          {{"code", IssueCodeName(issue.code)}, {"message", issue.message}});
    }
  }
  out << report.dump(2) << '\n';
  return report["ok"].get<bool>() ? kExitOk : kExitDomain;
}

int CmdLinearize(const Options& opt, std::ostream& out, std::ostream& err) {
  const Taxonomy tax = LoadTaxonomy(opt.taxonomy);
  const auto docs = ReadCorpusFile(opt.input);
  std::vector<json> rows;
  std::size_t repaired = 0;
  std::size_t failures = 0;
  for (const DocumentRecord& doc : docs) {
    try {
      LabelSet labels = ResolveLabels(tax, doc);
      if (opt.closure && !IsConsistent(tax, labels)) {
        labels = AncestorClosure(tax, labels);
        ++repaired;
      }
      rows.push_back({{"id", doc.id},
                      {"sequence", RenderSequence(tax, Linearize(tax, labels))}});
    } catch (const Error& e) {
      ++failures;
      err << doc.id << ": " << e.what() << '\n';
    }
  }
  Sink sink(opt.output, out);
  WriteJsonLines(sink.stream(), rows);
  if (opt.closure) err << "repaired " << repaired << " documents\n";
  return failures == 0 ? kExitOk : kExitDomain;
}

std::vector<Token> SequenceField(const Taxonomy& tax, const json& row) {
  const json& seq = row.at("sequence");
  if (seq.is_string()) return ParseTokens(tax, seq.get<std::string>());
  return ParseTokens(tax, seq.get<std::vector<std::string>>());
}

std::string IdField(const json& row) {
  if (!row.contains("id")) throw Error(ErrorCode::kParseError, "missing 'id'");
  return row["id"].is_string() ? row["id"].get<std::string>() : row["id"].dump();
}

int CmdDelinearize(const Options& opt, std::ostream& out, std::ostream& err) {
  const Taxonomy tax = LoadTaxonomy(opt.taxonomy);
  const auto input = ReadJsonLinesFile(opt.input);
  std::vector<json> rows;
  std::size_t failures = 0;
  for (const json& row : input) {
    const std::string id = IdField(row);
    try {
      const LabelSet labels = Delinearize(tax, SequenceField(tax, row));
      rows.push_back({{"id", id}, {"labels", labels.Names(tax)}});
    } catch (const Error& e) {
      ++failures;
      err << id << ": " << e.what() << '\n';
    } catch (const json::exception& e) {
      ++failures;
      err << id << ": " << e.what() << '\n';
    }
  }
  Sink sink(opt.output, out);
  WriteJsonLines(sink.stream(), rows);
  return failures == 0 ? kExitOk : kExitDomain;
}

int CmdFit(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::string model_path = opt.model.empty() ? opt.output : opt.model;
  const Taxonomy tax = LoadTaxonomy(opt.taxonomy);
  std::vector<LabelSet> corpus;
  for (const DocumentRecord& doc : ReadCorpusFile(opt.input)) {
    corpus.push_back(ResolveLabels(tax, doc));
  }
  BigramScorer::FitSummary summary;
  const BigramScorer model = BigramScorer::Fit(tax, corpus, &summary);
  Sink sink(model_path, out);
  sink.stream() << model.ToJson().dump(2) << '\n';
  err << "fitted on " << summary.documents << " documents, closed "
      << summary.repaired << " inconsistent label sets\n";
  return kExitOk;
}

struct Decoded {
  json row;
  bool consistent = true;
  std::optional<std::string> error;
};

int CmdDecode(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.beam == 0) throw UsageError("--beam must be positive");
  const bool constrained = opt.mode == "constrained";
  const Taxonomy tax = LoadTaxonomy(opt.taxonomy);
  const auto docs = ReadCorpusFile(opt.input);

  std::unique_ptr<Scorer> shared;
  if (opt.scorer == "uniform") {
    shared = std::make_unique<UniformScorer>();
  } else if (opt.scorer == "random") {
    shared = std::make_unique<RandomScorer>(opt.seed);
  } else if (opt.scorer == "bigram") {
    if (opt.model.empty()) throw UsageError("--scorer bigram needs --model");
    json model;
    try {
      model = json::parse(ReadTextFile(opt.model));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParseError, opt.model + ": " + e.what());
    }
    shared = std::make_unique<BigramScorer>(BigramScorer::FromJson(tax, model));
  }

  auto decode_one = [&](const DocumentRecord& doc) {
    Decoded result;
    try {
      std::unique_ptr<Scorer> oracle;
      if (opt.scorer == "oracle") {
        const LabelSet gold = AncestorClosure(tax, ResolveLabels(tax, doc));
        LabelSequence target = gold.empty()
                                   ? LabelSequence{Token::Label(tax.root())}
                                   : Linearize(tax, gold);
        oracle = std::make_unique<OracleScorer>(std::move(target));
      }
      const Scorer& scorer = oracle ? *oracle : *shared;
      std::vector<Token> tokens;
      LabelSet labels;
      double logprob = 0.0;
      if (constrained) {
        ScoredSequence best =
            std::move(ConstrainedBeamSearch(tax, scorer, doc.text, opt.beam)[0]);
        labels = Delinearize(tax, best.sequence);
        tokens = std::move(best.sequence);
        logprob = best.logprob;
      } else {
        UnconstrainedResult best =
            UnconstrainedDecode(tax, scorer, doc.text, opt.beam);
        labels = std::move(best.labels);
        tokens = std::move(best.tokens);
        logprob = best.logprob;
      }
      result.consistent = IsConsistent(tax, labels);
      result.row = {{"id", doc.id},
                    {"sequence", TokenNames(tax, tokens)},
                    {"labels", labels.Names(tax)},
                    {"logprob", logprob}};
    } catch (const Error& e) {
      result.error = e.what();
    }
    return result;
  };

  std::vector<Decoded> results(docs.size());
  unsigned workers = opt.workers != 0 ? opt.workers
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(docs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < docs.size(); i = next++) {
      results[i] = decode_one(docs[i]);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<json> rows;
  std::size_t inconsistent = 0;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (results[i].error) {
      ++failed;
      err << docs[i].id << ": " << *results[i].error << '\n';
      continue;
    }
    if (!results[i].consistent) ++inconsistent;
    rows.push_back(std::move(results[i].row));
  }
  Sink sink(opt.output, out);
  WriteJsonLines(sink.stream(), rows);
  err << json{{"documents", docs.size()},
              {"decoded", rows.size()},
              {"failed", failed},
              {"inconsistent_docs", inconsistent},
              {"mode", opt.mode},
              {"scorer", opt.scorer}}
             .dump()
      << '\n';
  return failed == 0 ? kExitOk : kExitDomain;
}

std::vector<std::string> LabelsField(const json& row) {
  if (!row.contains("labels") || row["labels"].is_null()) return {};
  return row["labels"].get<std::vector<std::string>>();
}

int CmdPostprocess(const Options& opt, std::ostream& out, std::ostream& err) {
  const Taxonomy tax = LoadTaxonomy(opt.taxonomy);
  std::vector<json> rows;
  std::vector<std::string> bad;
  for (json row : ReadJsonLinesFile(opt.input)) {
    const std::string id = IdField(row);
    try {
      const LabelSet closed =
          AncestorClosure(tax, LabelSet::FromNames(tax, LabelsField(row)));
      row["labels"] = closed.Names(tax);
      if (row.contains("sequence")) {
        const LabelSequence seq = closed.empty()
                                      ? LabelSequence{Token::Label(tax.root())}
                                      : Linearize(tax, closed);
        row["sequence"] = TokenNames(tax, seq);
      }
      rows.push_back(std::move(row));
    } catch (const Error& e) {
      bad.push_back(id);
      err << id << ": " << e.what() << '\n';
    }
  }
  Sink sink(opt.output, out);
  WriteJsonLines(sink.stream(), rows);
  return bad.empty() ? kExitOk : kExitDomain;
}

int CmdEvaluate(const Options& opt, std::ostream& out, std::ostream& err) {
  const Taxonomy tax = LoadTaxonomy(opt.taxonomy);
  const auto gold_docs = ReadCorpusFile(opt.gold);
  std::map<std::string, std::vector<std::string>> predicted_by_id;
  for (const json& row : ReadJsonLinesFile(opt.input)) {
    const std::string id = IdField(row);
    if (!predicted_by_id.emplace(id, LabelsField(row)).second) {
      throw Error(ErrorCode::kAlignmentError, "duplicate prediction id '" + id + "'");
    }
  }

  std::vector<std::string> missing;
  std::vector<LabelSet> gold;
  std::vector<LabelSet> predicted;
  std::size_t matched = 0;
  for (const DocumentRecord& doc : gold_docs) {
    auto it = predicted_by_id.find(doc.id);
    if (it == predicted_by_id.end()) {
      missing.push_back("no prediction for '" + doc.id + "'");
      continue;
    }
    ++matched;
    gold.push_back(ResolveLabels(tax, doc));
    try {
      predicted.push_back(LabelSet::FromNames(tax, it->second));
    } catch (const Error& e) {
      throw Error(e.code(), "prediction '" + doc.id + "': " + e.message());
    }
  }
  if (matched != predicted_by_id.size()) {
    std::set<std::string> gold_ids;
    for (const DocumentRecord& doc : gold_docs) gold_ids.insert(doc.id);
    for (const auto& [id, labels] : predicted_by_id) {
      if (!gold_ids.contains(id)) missing.push_back("no gold for '" + id + "'");
    }
  }
  if (!missing.empty()) {
    for (const std::string& m : missing) err << m << '\n';
    throw Error(ErrorCode::kAlignmentError,
                std::to_string(missing.size()) + " unmatched ids");
  }

  const MetricsReport report = Evaluate(tax, gold, predicted);
  if (opt.output.empty()) {
    out << report.ToJson().dump(2) << '\n';
    err << report.FormatTable();
  } else {
    Sink sink(opt.output, out);
    sink.stream() << report.ToJson().dump(2) << '\n';
    out << report.FormatTable();
  }
  return kExitOk;
}

int CmdStats(const Options& opt, std::ostream& out) {
  const Taxonomy tax = LoadTaxonomy(opt.taxonomy);
  std::map<std::string, std::vector<LabeledDocument>> splits;
  for (const std::string& spec : opt.splits) {
    const std::size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw UsageError("--split expects name=path, got '" + spec + "'");
    }
    auto& docs = splits[spec.substr(0, eq)];
    for (const DocumentRecord& doc : ReadCorpusFile(spec.substr(eq + 1))) {
      docs.push_back({doc.id, ResolveLabels(tax, doc)});
    }
  }
  const DatasetStats stats = ComputeStats(tax, splits);
  json row = {{"label_count", stats.label_count},
              {"depth", stats.depth},
              {"avg_labels", stats.avg_labels},
              {"split_sizes", stats.split_sizes}};
  Sink sink(opt.output, out);
  sink.stream() << row.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Constrained sequence-to-tree decoding for hierarchical labels",
               "seq2tree"};
  app.require_subcommand(1);

  auto add_taxonomy = [&opt](CLI::App* cmd) {
    cmd->add_option("--taxonomy", opt.taxonomy, "parent<TAB>child edge list")
        ->required();
  };
  auto add_io = [&opt](CLI::App* cmd) {
    cmd->add_option("--input", opt.input, "input JSON-lines file")->required();
    cmd->add_option("--output", opt.output, "output file (default: stdout)");
  };

  CLI::App* validate = app.add_subcommand("validate", "Validate a taxonomy");
  add_taxonomy(validate);

  CLI::App* linearize =
      app.add_subcommand("linearize", "Label sets to DFS label sequences");
  add_taxonomy(linearize);
  add_io(linearize);
  linearize->add_flag("--closure", opt.closure,
                      "close inconsistent label sets under ancestors first");

  CLI::App* delinearize =
      app.add_subcommand("delinearize", "DFS label sequences to label sets");
  add_taxonomy(delinearize);
  add_io(delinearize);

  CLI::App* fit = app.add_subcommand("fit", "Fit the bigram scorer");
  add_taxonomy(fit);
  fit->add_option("--input", opt.input, "training corpus")->required();
  fit->add_option("--model", opt.model, "model output path");
  fit->add_option("--output", opt.output, "alias for --model");

  CLI::App* decode = app.add_subcommand("decode", "Decode label sequences");
  add_taxonomy(decode);
  add_io(decode);
  decode->add_option("--beam", opt.beam, "beam width")->capture_default_str();
  decode->add_option("--mode", opt.mode)
      ->check(CLI::IsMember({"constrained", "unconstrained"}))
      ->capture_default_str();
  decode->add_option("--scorer", opt.scorer)
      ->check(CLI::IsMember({"uniform", "oracle", "bigram", "random"}))
      ->capture_default_str();
  decode->add_option("--model", opt.model, "bigram model file");
  decode->add_option("--seed", opt.seed, "seed for --scorer random")
      ->capture_default_str();
  decode->add_option("--workers", opt.workers,
                     "decoding threads (0 = available parallelism)")
      ->capture_default_str();

  CLI::App* postprocess = app.add_subcommand(
      "postprocess", "Close predictions under the ancestor relation");
  add_taxonomy(postprocess);
  add_io(postprocess);

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Micro/Macro F1 and path-constrained F1");
  add_taxonomy(evaluate);
  evaluate->add_option("--gold", opt.gold, "gold corpus")->required();
  evaluate->add_option("--input", opt.input, "predictions")->required();
  evaluate->add_option("--output", opt.output, "report JSON path");

  CLI::App* stats = app.add_subcommand("stats", "Dataset statistics");
  add_taxonomy(stats);
  stats->add_option("--split", opt.splits, "name=path, repeatable");
  stats->add_option("--output", opt.output, "output file (default: stdout)");

  std::vector<const char*> argv = {"seq2tree"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return CmdValidate(opt, out);
    if (linearize->parsed()) return CmdLinearize(opt, out, err);
    if (delinearize->parsed()) return CmdDelinearize(opt, out, err);
    if (fit->parsed()) {
      if (opt.model.empty() && opt.output.empty()) {
        throw UsageError("fit needs --model");
      }
      return CmdFit(opt, out, err);
    }
    if (decode->parsed()) return CmdDecode(opt, out, err);
    if (postprocess->parsed()) return CmdPostprocess(opt, out, err);
    if (evaluate->parsed()) return CmdEvaluate(opt, out, err);
    if (stats->parsed()) return CmdStats(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kIoError ? kExitUsage : kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace seq2tree::cli

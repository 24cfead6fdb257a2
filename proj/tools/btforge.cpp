// Copyright 2026 The btforge Authors
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

// btforge: validate, execute, score and synthesize behavior trees.
//
// Subcommands: validate | exec | score | suite | dataset. Every command
// prints a human-readable table by default and line-delimited JSON records
// with --format records. Exit codes: 0 success, 1 domain failure (invalid
// tree, failed plan), 2 usage or schema error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "btforge/bt/analysis.hpp"
#include "btforge/bt/parse.hpp"
#include "btforge/bt/serialize.hpp"
#include "btforge/conformance/library.hpp"
#include "btforge/conformance/validate.hpp"
#include "btforge/dataset/build.hpp"
#include "btforge/dataset/generator.hpp"
#include "btforge/metrics/aggregate.hpp"
#include "btforge/metrics/lexical.hpp"
#include "btforge/metrics/tree_metrics.hpp"
#include "btforge/world/execute.hpp"
#include "btforge/world/task.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace btforge;

constexpr int kExitSuccess = 0;
constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

conformance::PrimitiveLibrary resolve_library(const std::string& flag) {
  if (!flag.empty()) return conformance::PrimitiveLibrary::load(flag);
  if (const char* env = std::getenv("BTFORGE_LIBRARY"); env && *env) {
    return conformance::PrimitiveLibrary::load(env);
  }
  return conformance::PrimitiveLibrary::default_library();
}

std::optional<std::set<std::string>> parse_allowed(const std::string& flag) {
  if (flag.empty()) return std::nullopt;
  std::set<std::string> allowed;
  std::stringstream in(flag);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (!name.empty()) allowed.insert(name);
  }
  return allowed;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += ",";
    out += item;
  }
  return out;
}

struct OutputSink {
  std::string format = "table";  // table | records
  std::ofstream file;

  void open(const std::string& out_dir, const std::string& name) {
    if (out_dir.empty()) return;
    fs::create_directories(out_dir);
    file.open(fs::path(out_dir) / name, std::ios::binary);
  }
  void record(const json& value) {
    std::string line = value.dump();
    if (format == "records") std::cout << line << "\n";
    if (file.is_open()) file << line << "\n";
  }
  bool table() const { return format == "table"; }
};

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int cmd_validate(const std::vector<std::string>& files,
                 const std::string& library_flag, const std::string& allowed_flag,
                 OutputSink& sink) {
  conformance::PrimitiveLibrary library = resolve_library(library_flag);
  auto allowed = parse_allowed(allowed_flag);

  std::vector<std::string> sorted = files;
  std::sort(sorted.begin(), sorted.end());

  size_t failures = 0;
  for (const std::string& file : sorted) {
    conformance::ValidationReport report =
        conformance::validate(read_file(file), library, allowed);
    if (!report.verdict) ++failures;
    sink.record(json{{"file", file},
                     {"xml_valid", report.xml_valid},
                     {"btcpp_valid", report.btcpp_valid},
                     {"unknown_actions", report.unknown_actions},
                     {"disallowed_actions", report.disallowed_actions},
                     {"verdict", report.verdict},
                     {"diagnostic", report.diagnostic}});
    if (sink.table()) {
      std::cout << (report.verdict ? "ok      " : "INVALID ") << file;
      if (!report.btcpp_valid) {
        std::cout << "  [" << (report.xml_valid ? "not BT-CPP" : "not XML")
                  << ": " << report.diagnostic << "]";
      }
      if (!report.unknown_actions.empty()) {
        std::cout << "  unknown: " << join(report.unknown_actions);
      }
      if (!report.disallowed_actions.empty()) {
        std::cout << "  disallowed: " << join(report.disallowed_actions);
      }
      std::cout << "\n";
    }
  }
  if (sink.table()) {
    std::cout << sorted.size() - failures << "/" << sorted.size()
              << " files conform\n";
  }
  return failures == 0 ? kExitSuccess : kExitDomainFailure;
}

// ---------------------------------------------------------------------------
// exec
// ---------------------------------------------------------------------------

json trace_to_json(const world::ExecutionTrace& trace) {
  json steps = json::array();
  for (const world::TraceStep& step : trace.steps) {
    json entry = {{"kind", world::step_kind_name(step.kind)},
                  {"id", step.id},
                  {"obj", step.obj},
                  {"outcome", bt::tick_status_name(step.outcome)}};
    if (step.reason) entry["reason"] = world::fail_reason_code(*step.reason);
    if (step.kind == world::StepKind::Timeout) {
      entry["msec"] = step.timeout_msec;
    }
    steps.push_back(std::move(entry));
  }
  return steps;
}

void warn_inert_actions(const world::TaskBundle& task) {
  for (const std::string& action : task.allowed_actions) {
    if (!world::has_execution_semantics(action)) {
      std::cerr << "warning: " << task.task_id << " allows " << action
                << ", which the symbolic executor has no semantics for\n";
    }
  }
}

int cmd_exec(const std::string& task_file,
             const std::vector<std::string>& tree_files,
             const std::string& library_flag, OutputSink& sink) {
  conformance::PrimitiveLibrary library = resolve_library(library_flag);
  world::TaskBundle task = world::load_task(task_file, &library);
  warn_inert_actions(task);

  std::vector<std::string> sorted = tree_files;
  std::sort(sorted.begin(), sorted.end());

  size_t failures = 0;
  for (const std::string& file : sorted) {
    std::string text = read_file(file);
    conformance::ValidationReport report = conformance::validate(text, library);
    json record = {{"file", file},
                   {"task", task.task_id},
                   {"bt_valid", report.verdict}};
    bool satisfied = false;
    if (report.verdict) {
      world::ExecutionTrace trace = world::execute(
          bt::parse_xml(text), task.initial_state, task.registry, task.goal);
      satisfied = trace.goal_satisfied;
      record["final_status"] = bt::tick_status_name(trace.final_status);
      record["goal_satisfied"] = trace.goal_satisfied;
      record["steps"] = trace_to_json(trace);
      if (sink.table()) {
        std::cout << file << " on " << task.task_id << ":\n";
        for (const world::TraceStep& step : trace.steps) {
          std::cout << "  " << std::left << std::setw(14)
                    << world::step_kind_name(step.kind) << step.id;
          if (!step.obj.empty()) std::cout << " " << step.obj;
          if (step.kind == world::StepKind::Timeout) {
            std::cout << " budget=" << step.timeout_msec << "ms";
          }
          std::cout << " -> " << bt::tick_status_name(step.outcome);
          if (step.reason) {
            std::cout << " (" << world::fail_reason_code(*step.reason) << ")";
          }
          std::cout << "\n";
        }
        std::cout << "  verdict: "
                  << (satisfied ? "goal satisfied" : "goal NOT satisfied")
                  << "\n";
      }
    } else {
      record["goal_satisfied"] = false;
      record["diagnostic"] = report.diagnostic;
      if (sink.table()) {
        std::cout << file << ": INVALID (" << report.diagnostic << ")\n";
      }
    }
    sink.record(record);
    if (!satisfied) ++failures;
  }
  return failures == 0 ? kExitSuccess : kExitDomainFailure;
}

// ---------------------------------------------------------------------------
// score
// ---------------------------------------------------------------------------

int cmd_score(const std::string& ref_dir, const std::string& hyp_dir,
              OutputSink& sink) {
  std::map<std::string, fs::path> refs;
  for (const auto& entry : fs::directory_iterator(ref_dir)) {
    if (entry.path().extension() == ".xml") {
      refs[entry.path().filename().string()] = entry.path();
    }
  }
  std::map<std::string, fs::path> hyps;
  for (const auto& entry : fs::directory_iterator(hyp_dir)) {
    if (entry.path().extension() == ".xml") {
      hyps[entry.path().filename().string()] = entry.path();
    }
  }
  for (const auto& [name, _] : refs) {
    if (hyps.count(name) == 0) {
      std::cerr << "warning: no hypothesis for " << name << ", excluded\n";
    }
  }
  for (const auto& [name, _] : hyps) {
    if (refs.count(name) == 0) {
      std::cerr << "warning: no reference for " << name << ", excluded\n";
    }
  }

  std::vector<double> struct_scores;
  std::vector<double> jaccard_scores;
  std::vector<double> bleu_scores;
  std::vector<double> rouge1;
  std::vector<double> rouge2;
  std::vector<double> rougeL;
  std::vector<double> rougeLsum;

  for (const auto& [name, ref_path] : refs) {
    auto hyp_it = hyps.find(name);
    if (hyp_it == hyps.end()) continue;
    std::string ref_text = read_file(ref_path);
    std::string hyp_text = read_file(hyp_it->second);

    bt::BehaviorTree ref_tree = bt::parse_xml(ref_text);  // must parse
    metrics::PairScore score;
    bool hyp_parses = true;
    try {
      bt::BehaviorTree hyp_tree = bt::parse_xml(hyp_text);
      score.struct_match = metrics::struct_match(hyp_tree, ref_tree);
      score.action_jaccard = metrics::action_jaccard(hyp_tree, ref_tree);
    } catch (const bt::ParseError&) {
      hyp_parses = false;  // lexical metrics still apply to the raw text
    }
    score.bleu = metrics::bleu_text(hyp_text, ref_text);
    metrics::RougeScores rouge = metrics::rouge(hyp_text, ref_text);
    score.rouge_1 = rouge.rouge_1;
    score.rouge_2 = rouge.rouge_2;
    score.rouge_l = rouge.rouge_l;
    score.rouge_lsum = rouge.rouge_lsum;

    struct_scores.push_back(score.struct_match);
    jaccard_scores.push_back(score.action_jaccard);
    bleu_scores.push_back(score.bleu);
    rouge1.push_back(score.rouge_1);
    rouge2.push_back(score.rouge_2);
    rougeL.push_back(score.rouge_l);
    rougeLsum.push_back(score.rouge_lsum);

    sink.record(json{{"pair", name},
                     {"hyp_parses", hyp_parses},
                     {"struct_match", score.struct_match},
                     {"action_jaccard", score.action_jaccard},
                     {"bleu", score.bleu},
                     {"rouge_1", score.rouge_1},
                     {"rouge_2", score.rouge_2},
                     {"rouge_l", score.rouge_l},
                     {"rouge_lsum", score.rouge_lsum}});
  }

  if (struct_scores.empty()) {
    std::cerr << "error: no matching reference/hypothesis pairs\n";
    return kExitUsage;
  }
  auto struct_stats = metrics::mean_std(struct_scores);
  auto jaccard_stats = metrics::mean_std(jaccard_scores);
  auto bleu_stats = metrics::mean_std(bleu_scores);
  auto r1 = metrics::mean_std(rouge1);
  auto r2 = metrics::mean_std(rouge2);
  auto rl = metrics::mean_std(rougeL);
  auto rls = metrics::mean_std(rougeLsum);
  if (sink.table()) {
    std::cout << std::fixed << std::setprecision(4);
    std::cout << "pairs:          " << struct_scores.size() << "\n";
    std::cout << "struct match:   " << std::setprecision(2)
              << struct_stats.mean * 100.0 << "%\n"
              << std::setprecision(4);
    std::cout << "action jaccard: " << jaccard_stats.mean << " +/- "
              << jaccard_stats.stddev << "\n";
    std::cout << "bleu:           " << bleu_stats.mean << "\n";
    std::cout << "rouge-1:        " << r1.mean << "\n";
    std::cout << "rouge-2:        " << r2.mean << "\n";
    std::cout << "rouge-l:        " << rl.mean << "\n";
    std::cout << "rouge-lsum:     " << rls.mean << "\n";
  }
  sink.record(json{{"summary",
                    {{"pairs", struct_scores.size()},
                     {"struct_match_rate", struct_stats.mean},
                     {"action_jaccard_mean", jaccard_stats.mean},
                     {"action_jaccard_std", jaccard_stats.stddev},
                     {"bleu_mean", bleu_stats.mean},
                     {"rouge_1_mean", r1.mean},
                     {"rouge_2_mean", r2.mean},
                     {"rouge_l_mean", rl.mean},
                     {"rouge_lsum_mean", rls.mean}}}});
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// suite
// ---------------------------------------------------------------------------

std::unique_ptr<dataset::Generator> make_generator(const std::string& cmd,
                                                   const std::string& url,
                                                   bool mock) {
  int sources = (cmd.empty() ? 0 : 1) + (url.empty() ? 0 : 1) + (mock ? 1 : 0);
  if (sources > 1) {
    throw std::runtime_error(
        "choose one of --generator-cmd, --generator-url, --generator-mock");
  }
  if (!cmd.empty()) return dataset::make_command_generator(cmd);
  if (!url.empty()) return dataset::make_http_generator(url);
  if (mock) return dataset::make_mock_generator();
  return nullptr;
}

std::string cot_prompt(const world::TaskBundle& task, bool zero_shot) {
  std::string prompt = task.instruction;
  if (!zero_shot && !task.workflow.empty()) {
    prompt += "\nWorkflow:";
    for (size_t i = 0; i < task.workflow.size(); ++i) {
      prompt += "\n" + std::to_string(i + 1) + ". " + task.workflow[i];
    }
  }
  return prompt;
}

int cmd_suite(const std::string& tasks_dir, const std::string& outputs_dir,
              const std::string& generator_cmd, const std::string& generator_url,
              bool generator_mock, bool zero_shot, int attempts,
              const std::string& library_flag, OutputSink& sink) {
  conformance::PrimitiveLibrary library = resolve_library(library_flag);
  std::unique_ptr<dataset::Generator> generator =
      make_generator(generator_cmd, generator_url, generator_mock);
  if (generator == nullptr && outputs_dir.empty()) {
    throw std::runtime_error("suite needs --outputs or a generator");
  }

  std::vector<fs::path> task_files;
  for (const auto& entry : fs::directory_iterator(tasks_dir)) {
    if (entry.path().extension() == ".json") task_files.push_back(entry.path());
  }
  std::sort(task_files.begin(), task_files.end());
  if (task_files.empty()) {
    throw std::runtime_error("no task files in " + tasks_dir);
  }

  std::vector<std::vector<bool>> outcomes;
  std::vector<bool> first_valid;
  for (const fs::path& task_file : task_files) {
    world::TaskBundle task = world::load_task(task_file, &library);
    warn_inert_actions(task);
    std::vector<std::string> candidates;
    if (generator != nullptr) {
      dataset::GeneratorRequest request;
      request.stage = "architect";
      request.instruction = cot_prompt(task, zero_shot);
      for (const conformance::PrimitiveSpec& spec : library.primitives()) {
        request.library.push_back(spec.name);
      }
      for (int i = 0; i < attempts; ++i) {
        candidates.push_back(generator->generate(request));
      }
    } else {
      fs::path dir = fs::path(outputs_dir) / task.task_id;
      for (int i = 0; i < attempts; ++i) {
        fs::path file = dir / ("attempt_" + std::to_string(i + 1) + ".xml");
        if (!fs::exists(file)) {
          throw std::runtime_error("RaggedAttempts: missing " + file.string());
        }
        candidates.push_back(read_file(file));
      }
    }

    std::vector<bool> attempt_outcomes;
    bool valid_first = false;
    for (size_t i = 0; i < candidates.size(); ++i) {
      conformance::ValidationReport report =
          conformance::validate(candidates[i], library);
      bool success = false;
      if (report.verdict) {
        world::ExecutionTrace trace =
            world::execute(bt::parse_xml(candidates[i]), task.initial_state,
                           task.registry, task.goal);
        success = trace.goal_satisfied;
      }
      if (i == 0) valid_first = report.verdict;
      attempt_outcomes.push_back(success);
    }
    outcomes.push_back(attempt_outcomes);
    first_valid.push_back(valid_first);

    json record = {{"task", task.task_id},
                   {"difficulty", world::difficulty_name(task.difficulty)},
                   {"bt_valid_first", valid_first},
                   {"outcomes", attempt_outcomes}};
    sink.record(record);
    if (sink.table()) {
      std::cout << std::left << std::setw(32) << task.task_id
                << (valid_first ? "valid  " : "INVALID") << " [";
      for (bool ok : attempt_outcomes) std::cout << (ok ? '+' : '-');
      std::cout << "]\n";
    }
  }

  metrics::SuiteResult result = metrics::aggregate_suite(outcomes, first_valid);
  if (sink.table()) {
    std::cout << std::fixed << std::setprecision(0);
    std::cout << "tasks:    " << result.task_count << "\n";
    std::cout << "BT valid: " << result.bt_valid_rate * 100.0 << "%\n";
    std::cout << "SR:       " << result.sr * 100.0 << "%\n";
    std::cout << "Pass@" << result.attempts << ":   "
              << result.pass_at_k * 100.0 << "%\n";
  }
  sink.record(json{{"summary",
                    {{"tasks", result.task_count},
                     {"attempts", result.attempts},
                     {"bt_valid_rate", result.bt_valid_rate},
                     {"sr", result.sr},
                     {"pass_at_k", result.pass_at_k}}}});
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// dataset
// ---------------------------------------------------------------------------

int cmd_dataset(const std::string& sources_dir, const std::string& out_dir,
                const dataset::BuildConfig& config,
                const std::string& generator_cmd,
                const std::string& generator_url, bool generator_mock,
                const std::string& library_flag, const std::string& synonyms_flag,
                OutputSink& sink) {
  conformance::PrimitiveLibrary library = resolve_library(library_flag);
  dataset::SynonymMap synonyms =
      synonyms_flag.empty() ? dataset::SynonymMap::default_map()
                            : dataset::SynonymMap::load(synonyms_flag, library);
  std::unique_ptr<dataset::Generator> generator =
      make_generator(generator_cmd, generator_url, generator_mock);
  if (generator == nullptr) {
    throw std::runtime_error(
        "dataset needs --generator-cmd, --generator-url or --generator-mock");
  }

  std::vector<dataset::EpisodeSource> sources =
      dataset::scan_sources(sources_dir);
  dataset::BuildReport report = dataset::build_dataset(
      sources, config, *generator, library, synonyms, out_dir);

  for (const std::string& failure : report.failures) {
    std::cerr << "episode failed: " << failure << "\n";
  }
  if (sink.table()) {
    std::cout << "base records:       " << report.base_records << "\n";
    std::cout << "structural records: " << report.structural_records << "\n";
    std::cout << "total records:      " << report.total_records << "\n";
    std::cout << "train/eval:         " << report.train_records << "/"
              << report.eval_records << "\n";
    std::cout << "failures:           " << report.failures.size() << "\n";
    std::cout << "manifest:           " << report.manifest_path.string() << "\n";
  }
  sink.record(json{{"summary",
                    {{"base", report.base_records},
                     {"structural", report.structural_records},
                     {"total", report.total_records},
                     {"train", report.train_records},
                     {"eval", report.eval_records},
                     {"failed", report.failures.size()}}}});
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"behavior tree toolkit: parse, validate, execute, score and "
               "synthesize BehaviorTree.CPP plans"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string library_flag;
  std::string format = "table";
  std::string out_dir;
  app.add_option("--library", library_flag,
                 "primitive library config (default: $BTFORGE_LIBRARY or the "
                 "built-in registry)");
  app.add_option("--format", format, "table or records")
      ->check(CLI::IsMember({"table", "records"}));
  app.add_option("--out", out_dir, "directory for machine-readable records");

  // validate
  auto* validate_cmd =
      app.add_subcommand("validate", "check conformance of BT XML files");
  std::vector<std::string> validate_files;
  std::string allowed_flag;
  validate_cmd->add_option("files", validate_files, "XML files")->required();
  validate_cmd->add_option("--allowed", allowed_flag,
                           "comma-separated allowed action list");

  // exec
  auto* exec_cmd =
      app.add_subcommand("exec", "execute BT files on a symbolic task");
  std::string task_file;
  std::vector<std::string> exec_files;
  exec_cmd->add_option("--task", task_file, "task bundle JSON")->required();
  exec_cmd->add_option("files", exec_files, "XML files")->required();

  // score
  auto* score_cmd =
      app.add_subcommand("score", "offline metrics over paired tree files");
  std::string ref_dir;
  std::string hyp_dir;
  score_cmd->add_option("--ref", ref_dir, "reference directory")->required();
  score_cmd->add_option("--hyp", hyp_dir, "hypothesis directory")->required();

  // suite
  auto* suite_cmd = app.add_subcommand(
      "suite", "validate + execute candidate plans over a task directory");
  std::string tasks_dir;
  std::string outputs_dir;
  std::string generator_cmd_flag;
  std::string generator_url_flag;
  bool generator_mock = false;
  bool zero_shot = false;
  int attempts = 3;
  suite_cmd->add_option("--tasks", tasks_dir, "task bundle directory")
      ->required();
  suite_cmd->add_option("--outputs", outputs_dir,
                        "precomputed candidates: <task_id>/attempt_<k>.xml");
  suite_cmd->add_option("--generator-cmd", generator_cmd_flag,
                        "generator command (JSON on stdin, text on stdout)");
  suite_cmd->add_option("--generator-url", generator_url_flag,
                        "generator HTTP endpoint");
  suite_cmd->add_flag("--generator-mock", generator_mock,
                      "use the built-in deterministic mock generator");
  suite_cmd->add_flag("--zero-shot", zero_shot,
                      "omit the workflow from generator prompts");
  suite_cmd->add_option("--attempts", attempts, "attempts per task (k)")
      ->check(CLI::PositiveNumber);

  // dataset
  auto* dataset_cmd =
      app.add_subcommand("dataset", "run the dataset construction pipeline");
  std::string sources_dir;
  std::string dataset_out;
  std::string synonyms_flag;
  dataset::BuildConfig build_config;
  std::string ds_generator_cmd;
  std::string ds_generator_url;
  bool ds_generator_mock = false;
  dataset_cmd->add_option("--sources", sources_dir, "episode source root")
      ->required();
  dataset_cmd->add_option("--out", dataset_out, "output directory")->required();
  dataset_cmd->add_option("--seed", build_config.seed, "rng seed");
  dataset_cmd->add_option("--stride", build_config.stride, "temporal stride")
      ->check(CLI::PositiveNumber);
  dataset_cmd->add_option("--fraction", build_config.structural_fraction,
                          "structural augmentation fraction");
  dataset_cmd->add_option("--lexical-probability",
                          build_config.lexical_probability,
                          "per-primitive replacement probability");
  dataset_cmd->add_option("--eval-fraction", build_config.eval_fraction,
                          "eval split fraction");
  dataset_cmd->add_option("--max-retries", build_config.max_retries,
                          "architect retry bound")
      ->check(CLI::PositiveNumber);
  dataset_cmd->add_option("--synonyms", synonyms_flag, "synonym group config");
  dataset_cmd->add_option("--generator-cmd", ds_generator_cmd,
                          "generator command");
  dataset_cmd->add_option("--generator-url", ds_generator_url,
                          "generator HTTP endpoint");
  dataset_cmd->add_flag("--generator-mock", ds_generator_mock,
                        "use the built-in deterministic mock generator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? kExitSuccess : kExitUsage;
  }

  OutputSink sink;
  sink.format = format;

  try {
    if (validate_cmd->parsed()) {
      sink.open(out_dir, "validate.jsonl");
      return cmd_validate(validate_files, library_flag, allowed_flag, sink);
    }
    if (exec_cmd->parsed()) {
      sink.open(out_dir, "exec.jsonl");
      return cmd_exec(task_file, exec_files, library_flag, sink);
    }
    if (score_cmd->parsed()) {
      sink.open(out_dir, "score.jsonl");
      return cmd_score(ref_dir, hyp_dir, sink);
    }
    if (suite_cmd->parsed()) {
      sink.open(out_dir, "suite.jsonl");
      return cmd_suite(tasks_dir, outputs_dir, generator_cmd_flag,
                       generator_url_flag, generator_mock, zero_shot, attempts,
                       library_flag, sink);
    }
    if (dataset_cmd->parsed()) {
      return cmd_dataset(sources_dir, dataset_out, build_config,
                         ds_generator_cmd, ds_generator_url, ds_generator_mock,
                         library_flag, synonyms_flag, sink);
    }
  } catch (const world::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

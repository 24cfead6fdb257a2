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

#include "btforge/dataset/build.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "btforge/bt/analysis.hpp"
#include "btforge/bt/parse.hpp"
#include "btforge/bt/serialize.hpp"
#include "btforge/dataset/embed.hpp"
#include "btforge/dataset/sheet.hpp"
#include "btforge/dataset/teacher.hpp"
#include "btforge/util/rng.hpp"

namespace btforge::dataset {

using nlohmann::json;

namespace {

std::vector<std::vector<double>> load_embedding_sidecar(
    const std::filesystem::path& path, size_t frame_count) {
  std::ifstream in(path);
  if (!in) throw SourceError("cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw SourceError(path.string() + ": bad number '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != frame_count) {
    throw SourceError(path.string() + ": " + std::to_string(rows.size()) +
                      " embedding rows for " + std::to_string(frame_count) +
                      " frames");
  }
  return rows;
}

void copy_file_to(const std::filesystem::path& from,
                  const std::filesystem::path& to) {
  std::filesystem::copy_file(
      from, to, std::filesystem::copy_options::overwrite_existing);
}

struct Pipeline {
  const BuildConfig& config;
  Generator& generator;
  const conformance::PrimitiveLibrary& library;
  const std::filesystem::path& out_dir;

  EpisodeRecord build_base_record(const EpisodeSource& source) {
    if (source.frames.empty()) {
      throw SourceError("episode has no frames");
    }
    std::vector<size_t> sampled =
        stride_subsample_indices(source.frames.size(), config.stride);

    // Embeddings for the subsampled frames: sidecar rows when supplied,
    // otherwise the built-in embedder.
    std::vector<std::vector<double>> vectors;
    vectors.reserve(sampled.size());
    for (size_t index : sampled) {
      if (source.embeddings) {
        vectors.push_back((*source.embeddings)[index]);
      } else {
        vectors.push_back(
            grayscale_grid_embedding(load_png(source.frames[index])));
      }
    }

    size_t k = std::min(config.sheet_frames, vectors.size());
    std::vector<size_t> chosen =
        kcenter_greedy(vectors, k, /*seed_index=*/0, config.metric);

    // Map back to frame indices; order by timestamp, pad short episodes by
    // repeating the last frame so the sheet stays 3x3.
    std::vector<size_t> frame_indices;
    for (size_t pick : chosen) frame_indices.push_back(sampled[pick]);
    std::sort(frame_indices.begin(), frame_indices.end(),
              [&](size_t a, size_t b) {
                // Frame index breaks timestamp ties deterministically.
                return std::tie(source.timestamps[a], a) <
                       std::tie(source.timestamps[b], b);
              });
    while (frame_indices.size() < config.sheet_frames) {
      frame_indices.push_back(frame_indices.back());
    }

    std::vector<Image> frames;
    frames.reserve(frame_indices.size());
    for (size_t index : frame_indices) {
      frames.push_back(load_png(source.frames[index]));
    }
    Image sheet = contact_sheet(frames);

    std::string sheet_rel = "sheets/" + source.episode_id + ".png";
    std::string frame_rel = "frames/" + source.episode_id + ".png";
    save_png(sheet, out_dir / sheet_rel);
    copy_file_to(source.frames.front(), out_dir / frame_rel);

    TeacherResult teacher =
        teacher_loop(generator, (out_dir / sheet_rel).string(),
                     source.instruction, library, config.max_retries);

    EpisodeRecord record;
    record.episode_id = source.episode_id;
    record.record_id = source.episode_id;
    record.initial_frame = frame_rel;
    record.contact_sheet = sheet_rel;
    record.instruction = source.instruction;
    record.scene_analysis = teacher.scene_analysis;
    // Store the canonical form; conformance already held for the raw output.
    record.bt_xml = bt::serialize(bt::parse_xml(teacher.bt_xml));
    record.allowed_actions = derive_allowed_actions(record.bt_xml);
    return record;
  }
};

json manifest_entry(const EpisodeRecord& record, const std::string& split) {
  return json{{"record", record.record_id},
              {"episode", record.episode_id},
              {"split", split},
              {"structural", record.structurally_augmented},
              {"lexical", record.lexically_augmented},
              {"file", "records/" + record.record_id + ".json"}};
}

}  // namespace

std::vector<EpisodeSource> scan_sources(const std::filesystem::path& root) {
  if (!std::filesystem::is_directory(root)) {
    throw SourceError("source root is not a directory: " + root.string());
  }
  std::vector<EpisodeSource> sources;
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    EpisodeSource source;
    source.episode_id = entry.path().filename().string();
    source.directory = entry.path();

    std::vector<std::filesystem::path> frames;
    for (const auto& file : std::filesystem::directory_iterator(entry.path())) {
      std::string name = file.path().filename().string();
      if (name.rfind("frame_", 0) == 0 && file.path().extension() == ".png") {
        frames.push_back(file.path());
      }
    }
    std::sort(frames.begin(), frames.end());
    source.frames = std::move(frames);

    std::filesystem::path meta_path = entry.path() / "meta";
    std::ifstream meta(meta_path);
    if (!meta) {
      throw SourceError(source.episode_id + ": missing meta file");
    }
    json doc;
    try {
      meta >> doc;
    } catch (const json::parse_error& e) {
      throw SourceError(source.episode_id + ": meta is not valid JSON: " +
                        e.what());
    }
    if (!doc.contains("instruction") || !doc["instruction"].is_string()) {
      throw SourceError(source.episode_id + ": meta.instruction missing");
    }
    source.instruction = doc["instruction"].get<std::string>();
    if (doc.contains("timestamps")) {
      source.timestamps = doc["timestamps"].get<std::vector<double>>();
      if (source.timestamps.size() != source.frames.size()) {
        throw SourceError(source.episode_id + ": " +
                          std::to_string(source.timestamps.size()) +
                          " timestamps for " +
                          std::to_string(source.frames.size()) + " frames");
      }
      if (!std::is_sorted(source.timestamps.begin(), source.timestamps.end())) {
        throw SourceError(source.episode_id + ": timestamps not nondecreasing");
      }
    } else {
      source.timestamps.resize(source.frames.size());
      for (size_t i = 0; i < source.frames.size(); ++i) {
        source.timestamps[i] = static_cast<double>(i);
      }
    }

    std::filesystem::path sidecar = entry.path() / "embeddings.csv";
    if (std::filesystem::exists(sidecar)) {
      source.embeddings = load_embedding_sidecar(sidecar, source.frames.size());
    }
    sources.push_back(std::move(source));
  }
  std::sort(sources.begin(), sources.end(),
            [](const EpisodeSource& a, const EpisodeSource& b) {
              return a.episode_id < b.episode_id;
            });
  return sources;
}

BuildReport build_dataset(const std::vector<EpisodeSource>& sources,
                          const BuildConfig& config, Generator& generator,
                          const conformance::PrimitiveLibrary& library,
                          const SynonymMap& synonyms,
                          const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir / "records");
  fs::create_directories(out_dir / "sheets");
  fs::create_directories(out_dir / "frames");

  BuildReport report;
  Pipeline pipeline{config, generator, library, out_dir};

  std::vector<EpisodeRecord> records;
  for (const EpisodeSource& source : sources) {
    try {
      records.push_back(pipeline.build_base_record(source));
    } catch (const std::exception& e) {
      report.failures.push_back(source.episode_id + ": " + e.what());
    }
  }
  report.base_records = records.size();

  // Structural augmentation of the configured fraction of base episodes.
  std::vector<size_t> order(records.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  util::Rng structural_rng(util::derive_seed(config.seed, "structural"));
  structural_rng.shuffle(order);
  size_t augment_count = static_cast<size_t>(
      std::llround(config.structural_fraction * static_cast<double>(records.size())));
  augment_count = std::min(augment_count, records.size());

  std::vector<size_t> targets(order.begin(), order.begin() + augment_count);
  std::sort(targets.begin(), targets.end());  // deterministic record order
  for (size_t index : targets) {
    const EpisodeRecord& base = records[index];
    util::Rng rng(util::derive_seed(config.seed, "structural/" + base.record_id));
    size_t action_count = bt::action_sequence(bt::parse_xml(base.bt_xml)).size();
    if (action_count == 0) {
      report.failures.push_back(base.record_id + ": no actions to augment");
      continue;
    }
    AugmentConstruct construct;
    switch (rng.index(3)) {
      case 0: {
        constexpr int kAttempts[] = {2, 3, 4};
        construct = AugmentConstruct::retry(kAttempts[rng.index(3)]);
        break;
      }
      case 1: {
        constexpr long long kBudgets[] = {1000, 3000, 5000, 10000};
        construct = AugmentConstruct::timeout(kBudgets[rng.index(4)]);
        break;
      }
      default:
        construct = AugmentConstruct::fallback();
    }
    try {
      EpisodeRecord augmented =
          structural_augment(base, construct, rng.index(action_count));
      augmented.record_id = base.record_id + "_aug";
      records.push_back(std::move(augmented));
      ++report.structural_records;
    } catch (const std::exception& e) {
      report.failures.push_back(base.record_id + ": " + e.what());
    }
  }

  // Lexical augmentation over the full resulting set.
  for (EpisodeRecord& record : records) {
    try {
      record = lexical_augment(
          record, synonyms, config.lexical_probability,
          util::derive_seed(config.seed, "lexical/" + record.record_id));
    } catch (const NoPriorGrasp& e) {
      // Keep the record unchanged; the variant cannot apply to this tree.
      report.failures.push_back(record.record_id + ": " + e.what());
    }
  }

  // Train/eval split.
  std::sort(records.begin(), records.end(),
            [](const EpisodeRecord& a, const EpisodeRecord& b) {
              return a.record_id < b.record_id;
            });
  std::vector<size_t> split_order(records.size());
  for (size_t i = 0; i < split_order.size(); ++i) split_order[i] = i;
  util::Rng split_rng(util::derive_seed(config.seed, "split"));
  split_rng.shuffle(split_order);
  size_t eval_count = static_cast<size_t>(
      std::llround(config.eval_fraction * static_cast<double>(records.size())));
  eval_count = std::min(eval_count, records.size());
  std::set<size_t> eval_set(split_order.begin(),
                            split_order.begin() + eval_count);

  std::ofstream manifest(out_dir / "manifest.jsonl", std::ios::binary);
  if (!manifest) {
    throw SourceError("cannot write " + (out_dir / "manifest.jsonl").string());
  }
  for (size_t i = 0; i < records.size(); ++i) {
    const EpisodeRecord& record = records[i];
    std::string split = eval_set.count(i) != 0 ? "eval" : "train";
    save_record(record, out_dir / "records" / (record.record_id + ".json"));
    manifest << manifest_entry(record, split).dump() << "\n";
    if (split == "eval") {
      ++report.eval_records;
    } else {
      ++report.train_records;
    }
  }
  report.total_records = records.size();
  json summary = {{"summary",
                   {{"base", report.base_records},
                    {"structural", report.structural_records},
                    {"total", report.total_records},
                    {"train", report.train_records},
                    {"eval", report.eval_records},
                    {"failed", report.failures.size()}}}};
  manifest << summary.dump() << "\n";
  report.manifest_path = out_dir / "manifest.jsonl";
  return report;
}

std::vector<std::string> verify_store(
    const std::filesystem::path& out_dir,
    const conformance::PrimitiveLibrary& library) {
  namespace fs = std::filesystem;
  std::vector<std::string> violations;
  fs::path records_dir = out_dir / "records";
  if (!fs::is_directory(records_dir)) {
    return {"record store missing: " + records_dir.string()};
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(records_dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  for (const fs::path& file : files) {
    EpisodeRecord record;
    try {
      record = load_record(file);
    } catch (const std::exception& e) {
      violations.push_back(file.filename().string() + ": " + e.what());
      continue;
    }
    conformance::ValidationReport verdict =
        conformance::validate(record.bt_xml, library);
    if (!verdict.verdict) {
      violations.push_back(record.record_id + ": conformance failed (" +
                           verdict.diagnostic + ")");
      continue;
    }
    std::set<std::string> allowed(record.allowed_actions.begin(),
                                  record.allowed_actions.end());
    for (const std::string& action :
         bt::extract_action_set(bt::parse_xml(record.bt_xml))) {
      if (allowed.count(action) == 0) {
        violations.push_back(record.record_id + ": action " + action +
                             " not in allowed_actions");
      }
    }
  }
  return violations;
}

}  // namespace btforge::dataset

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "made/attack.hpp"
#include "made/baselines.hpp"
#include "made/made.hpp"
#include "made/synthetic.hpp"
#include "made/text.hpp"

namespace made {

struct DatasetConfig {
  /// aids_like | proteins_like | sbm | tu | node_csv
  std::string name = "aids_like";
  /// TU directory (tu) or directory with edges.csv, features.csv, labels.csv (node_csv).
  std::filesystem::path path;
  /// File prefix of a TU dataset, e.g. "AIDS".
  std::string tu_name;
  Task task = Task::Graph;
  /// Generator seed for synthetic data; the run seed when unset.
  std::optional<std::uint64_t> seed;
  double train_fraction = 0.8;
  double val_fraction = 0.1;  // node task
  SbmConfig sbm;
};

struct AttackConfig {
  TriggerConfig trigger;
  double injection_rate = 0.1;  // graph task
  std::size_t victims = 40;     // node task
};

struct DefenseConfig {
  BaselineConfig baseline;  // carries the method
  /// 10 for the graph task and 50 for the node task when unset.
  std::optional<std::size_t> epoch_warm;
  double alpha1 = 0.1;
  double alpha2 = 0.5;
  double unlearn_clip = 5.0;
  bool redetect = true;
};

struct ExperimentConfig {
  DatasetConfig dataset;
  AttackConfig attack;
  DefenseConfig defense;
  ModelConfig model;  // feature_dim and num_classes come from the data
  TrainSchedule schedule;
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4};
  std::filesystem::path output_dir = "runs/experiment";

  Method method() const { return defense.baseline.method; }
  std::size_t epoch_warm() const { return defense.epoch_warm.value_or(dataset.task == Task::Graph ? 10 : 50); }
  /// Model and MADE settings with the data dimensions filled in.
  MadeConfig made_config(std::size_t feature_dim, std::size_t num_classes) const;
  NodeMadeConfig node_made_config(std::size_t feature_dim, std::size_t num_classes) const;
  /// Throws ValidationError on out-of-range values, missing paths, empty
  /// seeds or a method the task does not support.
  void validate() const;
};

/// Unknown keys and wrongly typed values raise ValidationError. Relative
/// paths resolve against base_dir.
ExperimentConfig experiment_config_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json to_json(const ExperimentConfig& c);

/// Reads and validates a JSON config. MADE_OUTPUT_DIR overrides output_dir.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Seeds derived from a run seed, one per pipeline stage.
struct StageSeeds {
  std::uint64_t split, trigger, poison, train, eval;
  explicit StageSeeds(std::uint64_t seed)
      : split(seed), trigger(seed + 1), poison(seed + 2), train(seed + 3), eval(seed + 5) {}
};

struct GraphRun {
  GraphDataset clean;
  TriggerSpec trigger;
  PoisonedGraphs poisoned;
};

struct NodeRun {
  NodeDataset clean;
  TriggerSpec trigger;
  PoisonedNodes poisoned;
};

/// Loads or generates the data, splits it, builds the trigger and poisons.
GraphRun prepare_graph_run(const ExperimentConfig& c, std::uint64_t seed);
NodeRun prepare_node_run(const ExperimentConfig& c, std::uint64_t seed);

struct SeedMetrics {
  std::uint64_t seed = 0;
  double asr = 0.0;
  double acc = 0.0;
  bool has_isolation = false;
  double precision = 0.0;
  double recall = 0.0;
  std::size_t isolated = 0;
  friend bool operator==(const SeedMetrics&, const SeedMetrics&) = default;
};

Json to_json(const SeedMetrics& m);

struct DefendedRun {
  SeedMetrics metrics;
  /// Everything eval needs: method, seed, model, isolation, trigger, ledger, metrics.
  Json checkpoint;
  TrainLog log;
};

/// Trains the configured defense on the prepared run and evaluates it.
/// Throws NumericError when training diverges.
DefendedRun defend_graph_run(const ExperimentConfig& c, const GraphRun& run, std::uint64_t seed);
DefendedRun defend_node_run(const ExperimentConfig& c, const NodeRun& run, std::uint64_t seed);
DefendedRun defend_seed(const ExperimentConfig& c, std::uint64_t seed);

/// Re-evaluates a checkpoint on the data rebuilt from the config and the
/// checkpoint's seed.
SeedMetrics evaluate_checkpoint(const ExperimentConfig& c, const Json& checkpoint);

/// Isolation only (no defended training) for one seed.
IsolationResult isolate_seed(const ExperimentConfig& c, std::uint64_t seed);

struct ExperimentOutcome {
  Json report;
  std::vector<SeedMetrics> rows;
  bool ok = true;
  std::string failure;
};

/// Runs every seed and writes report.json, metrics.csv, timings.json and per
/// seed a checkpoint and a JSONL training log under output_dir. The first
/// failing seed stops the run; the partial report records the failure.
ExperimentOutcome run_experiment(const ExperimentConfig& c);

/// Per-seed rows followed by a mean row.
CsvTable metrics_csv(const std::vector<SeedMetrics>& rows);
SeedMetrics mean_metrics(const std::vector<SeedMetrics>& rows);

/// Diagnostics artifacts for the graph task. `only` selects one of
/// spectrum, gradients, sweep, curves (all when empty). Returns written paths.
std::vector<std::filesystem::path> run_diagnostics(const ExperimentConfig& c, std::uint64_t seed,
                                                   const std::filesystem::path& out, const std::string& only = {});

}  // namespace made

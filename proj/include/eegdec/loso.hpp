#pragma once

#include <map>
#include <string>
#include <vector>

#include "eegdec/dataset.hpp"
#include "eegdec/train.hpp"

namespace eegdec::loso {

struct RunResult {
  std::string test_subject;
  int repetition = 1;  // 1-based
  double test_accuracy = 0.0;
  int best_epoch = 0;
  std::vector<train::EpochStats> history;
};

// Per-subject rows of repetition accuracies plus Average/Std summary rows,
// mirroring the published report layout.
struct LosoReport {
  std::string model_label;
  int n_repetitions = 4;
  std::vector<std::string> subjects;              // row order
  std::vector<std::vector<double>> cells;         // [subject][repetition]
  std::vector<double> subject_average;            // per subject
  std::vector<double> column_average;             // per repetition + grand
  std::vector<double> column_std;                 // population std per column
  double grand_average = 0.0;
  double grand_std = 0.0;  // population std over per-subject averages

  void finalize();  // fills the summary rows from the cells
  std::string to_csv() const;
  std::string to_text() const;
};

LosoReport parse_report_csv(const std::string& csv);

struct LosoOptions {
  int n_repetitions = 4;
  double split_ratio = 0.8;
  int n_jobs = 1;  // folds x repetitions run in parallel; results are
                   // byte-identical to sequential execution
};

// Full leave-one-subject-out pass: for every fold and repetition, split each
// source subject 8:2 with a seed derived from (cfg.seed, fold, repetition),
// pool, standardize by train statistics, train a fresh model and evaluate on
// the held-out subject.
LosoReport run_loso(const models::ArchitectureConfig& arch,
                    const std::map<std::string, EpochSet>& per_subject,
                    const train::TrainConfig& cfg, const LosoOptions& options);

// Same, with an explicit fold plan (validated against leakage).
LosoReport run_loso(const models::ArchitectureConfig& arch,
                    const std::map<std::string, EpochSet>& per_subject,
                    const train::TrainConfig& cfg, const LosoOptions& options,
                    const data::FoldPlan& plan);

// Throws when any pooled trial carries the held-out subject's tag.
void ensure_no_leakage(const std::string& test_subject, const EpochSet& pooled);

struct ModelSummary {
  std::string model_label;
  double grand_average = 0.0;
  double grand_std = 0.0;
  double normalized = 0.0;  // grand mean / across-model mean of grand means
};

std::vector<ModelSummary> summarize_models(const std::vector<LosoReport>& reports);

std::string to_text(const std::vector<ModelSummary>& summary);

}  // namespace eegdec::loso

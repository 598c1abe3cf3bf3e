#include "eegdec/loso.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "eegdec/dsp.hpp"

namespace eegdec::loso {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double pop_std(const std::vector<double>& v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size()));
}

}  // namespace

void LosoReport::finalize() {
  const std::size_t n_subj = subjects.size();
  subject_average.resize(n_subj);
  for (std::size_t s = 0; s < n_subj; ++s) subject_average[s] = mean_of(cells[s]);

  column_average.assign(n_repetitions + 1, 0.0);
  column_std.assign(n_repetitions + 1, 0.0);
  for (int r = 0; r < n_repetitions; ++r) {
    std::vector<double> col(n_subj);
    for (std::size_t s = 0; s < n_subj; ++s) col[s] = cells[s][r];
    column_average[r] = mean_of(col);
    column_std[r] = pop_std(col);
  }
  column_average[n_repetitions] = mean_of(subject_average);
  column_std[n_repetitions] = pop_std(subject_average);
  grand_average = column_average[n_repetitions];
  grand_std = column_std[n_repetitions];
}

std::string LosoReport::to_csv() const {
  std::ostringstream ss;
  ss << "subject";
  for (int r = 1; r <= n_repetitions; ++r) ss << ",acc" << r;
  ss << ",average\n";
  for (std::size_t s = 0; s < subjects.size(); ++s) {
    ss << subjects[s];
    for (int r = 0; r < n_repetitions; ++r) ss << "," << fmt(cells[s][r]);
    ss << "," << fmt(subject_average[s]) << "\n";
  }
  ss << "Average";
  for (int r = 0; r <= n_repetitions; ++r) ss << "," << fmt(column_average[r]);
  ss << "\nStd";
  for (int r = 0; r <= n_repetitions; ++r) ss << "," << fmt(column_std[r]);
  ss << "\n";
  return ss.str();
}

std::string LosoReport::to_text() const {
  std::ostringstream ss;
  ss << "model = " << model_label << "\n";
  ss << "repetitions = " << n_repetitions << "\n";
  ss << "subjects = " << subjects.size() << "\n";
  for (std::size_t s = 0; s < subjects.size(); ++s) {
    ss << subjects[s] << ":";
    for (int r = 0; r < n_repetitions; ++r) ss << " " << fmt(cells[s][r]);
    ss << "  avg " << fmt(subject_average[s]) << "\n";
  }
  ss << "grand_average = " << fmt(grand_average) << "\n";
  ss << "grand_std = " << fmt(grand_std) << "\n";
  return ss.str();
}

LosoReport parse_report_csv(const std::string& csv) {
  LosoReport report;
  std::istringstream in(csv);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string item;
    while (std::getline(ls, item, ',')) fields.push_back(item);
    if (first) {
      first = false;
      report.n_repetitions = static_cast<int>(fields.size()) - 2;
      if (report.n_repetitions < 1) {
        throw Error(ErrorCategory::format, "report csv has no repetition columns");
      }
      continue;
    }
    if (fields.size() != static_cast<std::size_t>(report.n_repetitions) + 2) {
      throw Error(ErrorCategory::format, "report csv row has wrong field count: " + line);
    }
    if (fields[0] == "Average" || fields[0] == "Std") continue;  // recomputed
    report.subjects.push_back(fields[0]);
    std::vector<double> row;
    for (int r = 0; r < report.n_repetitions; ++r) row.push_back(std::stod(fields[1 + r]));
    report.cells.push_back(std::move(row));
  }
  if (report.subjects.empty()) {
    throw Error(ErrorCategory::format, "report csv has no subject rows");
  }
  report.finalize();
  return report;
}

void ensure_no_leakage(const std::string& test_subject, const EpochSet& pooled) {
  for (const std::string& s : pooled.subject_ids) {
    if (s == test_subject) {
      throw Error(ErrorCategory::leakage,
                  "trial tagged with held-out subject " + test_subject +
                      " found in a training pool");
    }
  }
}

LosoReport run_loso(const models::ArchitectureConfig& arch,
                    const std::map<std::string, EpochSet>& per_subject,
                    const train::TrainConfig& cfg, const LosoOptions& options) {
  std::vector<std::string> ids;
  for (const auto& [id, _] : per_subject) ids.push_back(id);
  return run_loso(arch, per_subject, cfg, options, data::make_loso_folds(ids));
}

LosoReport run_loso(const models::ArchitectureConfig& arch,
                    const std::map<std::string, EpochSet>& per_subject,
                    const train::TrainConfig& cfg, const LosoOptions& options,
                    const data::FoldPlan& plan) {
  plan.validate();
  if (options.n_repetitions < 1) {
    throw Error(ErrorCategory::invalid_argument, "need at least one repetition");
  }
  for (const auto& [id, epochs] : per_subject) {
    epochs.validate();
  }
  for (const data::Fold& fold : plan.folds) {
    if (!per_subject.count(fold.test_subject)) {
      throw Error(ErrorCategory::invalid_argument,
                  "no epochs for subject " + fold.test_subject);
    }
    for (const std::string& s : fold.train_subjects) {
      if (!per_subject.count(s)) {
        throw Error(ErrorCategory::invalid_argument, "no epochs for subject " + s);
      }
    }
  }

  const models::ModelStack model = models::build_model(arch);
  const int n_folds = static_cast<int>(plan.folds.size());
  const int n_reps = options.n_repetitions;

  struct Cell {
    double acc = 0.0;
    std::string error;
  };
  std::vector<Cell> cells(static_cast<std::size_t>(n_folds) * n_reps);

  auto run_cell = [&](int f, int r) {
    const data::Fold& fold = plan.folds[f];
    try {
      const std::uint64_t rep_seed =
          derive_seed(cfg.seed, static_cast<std::uint64_t>(f), static_cast<std::uint64_t>(r));

      EpochSet pooled_train, pooled_val;
      for (std::size_t si = 0; si < fold.train_subjects.size(); ++si) {
        const EpochSet& src = per_subject.at(fold.train_subjects[si]);
        auto [tr, va] = data::split_train_val(
            src, options.split_ratio, derive_seed(rep_seed, 0x5b17, si));
        pooled_train.append(tr);
        pooled_val.append(va);
      }
      ensure_no_leakage(fold.test_subject, pooled_train);
      ensure_no_leakage(fold.test_subject, pooled_val);

      dsp::StandardizeResult std_sets =
          dsp::standardize(pooled_train, {pooled_val, per_subject.at(fold.test_subject)});

      train::TrainConfig run_cfg = cfg;
      run_cfg.seed = rep_seed;
      train::TrainResult trained =
          train::train(model, std_sets.train, std_sets.others[0], run_cfg);
      cells[static_cast<std::size_t>(f) * n_reps + r].acc =
          train::evaluate(model, trained.params, std_sets.others[1]);
    } catch (const Error& e) {
      cells[static_cast<std::size_t>(f) * n_reps + r].error =
          "fold " + fold.test_subject + " repetition " + std::to_string(r + 1) + ": " + e.what();
    }
  };

  if (options.n_jobs <= 1) {
    for (int f = 0; f < n_folds; ++f) {
      for (int r = 0; r < n_reps; ++r) run_cell(f, r);
    }
  } else {
    // Tasks are independent and seeded positionally, so any schedule gives
    // byte-identical results.
    std::vector<std::pair<int, int>> tasks;
    for (int f = 0; f < n_folds; ++f) {
      for (int r = 0; r < n_reps; ++r) tasks.emplace_back(f, r);
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        run_cell(tasks[i].first, tasks[i].second);
      }
    };
    std::vector<std::thread> pool;
    const int n_threads = std::min<int>(options.n_jobs, static_cast<int>(tasks.size()));
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (const Cell& c : cells) {
    if (!c.error.empty()) throw Error(ErrorCategory::invalid_argument, c.error);
  }

  LosoReport report;
  report.model_label = arch.label();
  report.n_repetitions = n_reps;
  for (int f = 0; f < n_folds; ++f) {
    report.subjects.push_back(plan.folds[f].test_subject);
    std::vector<double> row(n_reps);
    for (int r = 0; r < n_reps; ++r) row[r] = cells[static_cast<std::size_t>(f) * n_reps + r].acc;
    report.cells.push_back(std::move(row));
  }
  report.finalize();
  return report;
}

std::vector<ModelSummary> summarize_models(const std::vector<LosoReport>& reports) {
  if (reports.empty()) {
    throw Error(ErrorCategory::invalid_argument, "need at least one report to summarize");
  }
  double across = 0.0;
  for (const LosoReport& r : reports) across += r.grand_average;
  across /= static_cast<double>(reports.size());

  std::vector<ModelSummary> summary;
  for (const LosoReport& r : reports) {
    ModelSummary s;
    s.model_label = r.model_label;
    s.grand_average = r.grand_average;
    s.grand_std = r.grand_std;
    s.normalized = r.grand_average / across;
    summary.push_back(std::move(s));
  }
  return summary;
}

std::string to_text(const std::vector<ModelSummary>& summary) {
  std::ostringstream ss;
  ss << "model,grand_average,grand_std,normalized\n";
  for (const ModelSummary& s : summary) {
    ss << s.model_label << "," << fmt(s.grand_average) << "," << fmt(s.grand_std) << ","
       << fmt(s.normalized) << "\n";
  }
  return ss.str();
}

}  // namespace eegdec::loso

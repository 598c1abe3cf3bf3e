#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eegdec/config.hpp"
#include "eegdec/dataset.hpp"
#include "eegdec/dsp.hpp"
#include "eegdec/loso.hpp"
#include "eegdec/models.hpp"
#include "eegdec/stats.hpp"
#include "eegdec/train.hpp"

namespace fs = std::filesystem;
using eegdec::Error;
using eegdec::ErrorCategory;
using eegdec::config::ConfigMap;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  std::string in_dir;
  std::string models = "deep,deep+sefe,shallow,shallow+sefe,eegnet,eegnet+sefe";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int jobs = 1;
};

ConfigMap load_config(const CommonOpts& opts) {
  ConfigMap cfg;
  if (!opts.config_path.empty()) cfg = ConfigMap::load(opts.config_path);
  if (opts.seed_given) cfg.set("seed", std::to_string(opts.seed));
  return cfg;
}

void write_atomic(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorCategory::io, "cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, path);
}

void write_manifest(const fs::path& out_dir, const std::string& command, const ConfigMap& cfg) {
  std::ostringstream ss;
  ss << "command = " << command << "\n";
  ss << "version = " << kVersion << "\n";
  ss << cfg.to_text();
  write_atomic(out_dir / "manifest.txt", ss.str());
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct ModelChoice {
  eegdec::models::Backbone backbone;
  bool with_sefe;
  std::string token;
};

std::vector<ModelChoice> parse_models(const std::string& list) {
  std::vector<ModelChoice> out;
  for (const std::string& token : split_list(list)) {
    ModelChoice c;
    c.token = token;
    std::string base = token;
    c.with_sefe = false;
    auto plus = token.find('+');
    if (plus != std::string::npos) {
      base = token.substr(0, plus);
      const std::string suffix = token.substr(plus + 1);
      if (suffix == "sefe") {
        c.with_sefe = true;
      } else if (suffix != "nosefe") {
        throw Error(ErrorCategory::invalid_argument,
                    "model token '" + token + "' must end in +sefe or +nosefe");
      }
    }
    c.backbone = eegdec::models::backbone_from_string(base);
    out.push_back(c);
  }
  if (out.empty()) throw Error(ErrorCategory::invalid_argument, "empty model list");
  return out;
}

eegdec::data::SynthConfig synth_config(const ConfigMap& cfg) {
  eegdec::data::SynthConfig sc;
  sc.n_subjects = static_cast<int>(cfg.get_int("synth.n_subjects", 10));
  sc.n_channels = static_cast<int>(cfg.get_int("synth.n_channels", 64));
  sc.fs_hz = cfg.get_double("synth.fs_hz", 500.0);
  sc.trials_per_class = static_cast<int>(cfg.get_int("synth.trials_per_class", 50));
  sc.snr_db = cfg.get_double("synth.snr_db", 10.0);
  sc.subject_variability = cfg.get_double("synth.subject_variability", 0.1);
  sc.seed = cfg.get_seed("seed", 0);
  return sc;
}

eegdec::models::ArchitectureConfig arch_config(const ConfigMap& cfg, int n_channels,
                                               long n_samples) {
  eegdec::models::ArchitectureConfig a;
  a.n_channels = static_cast<int>(cfg.get_int("arch.n_channels", n_channels));
  a.n_samples = cfg.get_int("arch.n_samples", n_samples);
  a.n_classes = static_cast<int>(cfg.get_int("arch.n_classes", 3));

  auto filters = split_list(cfg.get_string("arch.deep.filters", "25,50,100,200"));
  if (filters.size() != 4) {
    throw Error(ErrorCategory::invalid_argument, "arch.deep.filters needs 4 entries");
  }
  for (int i = 0; i < 4; ++i) a.deep.filters[i] = std::stoi(filters[i]);
  a.deep.temporal_kernel = static_cast<int>(cfg.get_int("arch.deep.temporal_kernel", 10));
  a.deep.pool = static_cast<int>(cfg.get_int("arch.deep.pool", 3));
  a.deep.pool_stride = static_cast<int>(cfg.get_int("arch.deep.pool_stride", 3));
  a.deep.dropout = cfg.get_double("arch.deep.dropout", 0.5);

  a.shallow.filters = static_cast<int>(cfg.get_int("arch.shallow.filters", 40));
  a.shallow.temporal_kernel = static_cast<int>(cfg.get_int("arch.shallow.temporal_kernel", 25));
  a.shallow.pool = static_cast<int>(cfg.get_int("arch.shallow.pool", 75));
  a.shallow.pool_stride = static_cast<int>(cfg.get_int("arch.shallow.pool_stride", 15));
  a.shallow.dropout = cfg.get_double("arch.shallow.dropout", 0.5);

  a.eegnet.f1 = static_cast<int>(cfg.get_int("arch.eegnet.f1", 8));
  a.eegnet.depth_mult = static_cast<int>(cfg.get_int("arch.eegnet.depth_mult", 2));
  a.eegnet.f2 = static_cast<int>(cfg.get_int("arch.eegnet.f2", 16));
  a.eegnet.temporal_kernel = static_cast<int>(cfg.get_int("arch.eegnet.temporal_kernel", 125));
  a.eegnet.separable_kernel = static_cast<int>(cfg.get_int("arch.eegnet.separable_kernel", 16));
  a.eegnet.pool1 = static_cast<int>(cfg.get_int("arch.eegnet.pool1", 4));
  a.eegnet.pool2 = static_cast<int>(cfg.get_int("arch.eegnet.pool2", 8));
  a.eegnet.dropout = cfg.get_double("arch.eegnet.dropout", 0.25);

  a.sefe.hidden_channels = static_cast<int>(cfg.get_int("sefe.hidden_channels", 64));
  a.sefe.output_channels = static_cast<int>(cfg.get_int("sefe.output_channels", 32));
  return a;
}

eegdec::train::TrainConfig train_config(const ConfigMap& cfg) {
  eegdec::train::TrainConfig tc;
  tc.step_size = cfg.get_double("train.step_size", 1e-3);
  tc.beta1 = cfg.get_double("train.beta1", 0.9);
  tc.beta2 = cfg.get_double("train.beta2", 0.999);
  tc.epsilon = cfg.get_double("train.epsilon", 1e-8);
  tc.batch_size = static_cast<int>(cfg.get_int("train.batch_size", 32));
  tc.max_epochs = static_cast<int>(cfg.get_int("train.max_epochs", 200));
  tc.patience = static_cast<int>(cfg.get_int("train.patience", 20));
  tc.seed = cfg.get_seed("seed", 0);
  return tc;
}

std::vector<fs::path> subject_dirs(const fs::path& root, const std::string& probe_file) {
  if (!fs::is_directory(root)) {
    throw Error(ErrorCategory::io, "not a directory: " + root.string());
  }
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory() && fs::exists(entry.path() / probe_file)) {
      dirs.push_back(entry.path());
    }
  }
  std::sort(dirs.begin(), dirs.end());
  if (dirs.empty()) {
    throw Error(ErrorCategory::io, "no subject directories under " + root.string());
  }
  return dirs;
}

std::map<std::string, eegdec::EpochSet> load_epoch_sets(const fs::path& root) {
  std::map<std::string, eegdec::EpochSet> sets;
  for (const fs::path& dir : subject_dirs(root, "epochs_meta.txt")) {
    eegdec::EpochSet e = eegdec::data::read_epochs(dir);
    if (e.n_trials == 0) continue;
    sets[e.subject_ids.front()] = std::move(e);
  }
  return sets;
}

// ---------------------------------------------------------------------------

int cmd_synth(const CommonOpts& opts) {
  const ConfigMap cfg = load_config(opts);
  const auto sc = synth_config(cfg);
  auto recordings = eegdec::data::synth_generate(sc);

  const fs::path out(opts.out_dir);
  fs::create_directories(out);
  for (const auto& r : recordings) {
    eegdec::data::write_recording(r, out / r.subject_id);
    std::cout << r.subject_id << ": " << r.events.size() << " trials, "
              << r.signal.n_channels << " channels, " << r.signal.n_samples
              << " samples at " << r.signal.fs_hz << " Hz\n";
  }
  write_manifest(out, "synth", cfg);
  return 0;
}

int cmd_preprocess(const CommonOpts& opts) {
  const ConfigMap cfg = load_config(opts);
  const bool notch_enabled = cfg.get_bool("preprocess.notch_enabled", false);
  const double notch_hz = cfg.get_double("preprocess.notch_hz", 60.0);
  const double notch_q = cfg.get_double("preprocess.notch_q", 30.0);
  const int factor = static_cast<int>(cfg.get_int("preprocess.downsample_factor", 2));
  const double offset_s = cfg.get_double("preprocess.epoch_offset_s", 10.0);
  const double len_s = cfg.get_double("preprocess.epoch_len_s", 4.0);
  const bool zero_phase = cfg.get_bool("preprocess.zero_phase", true);

  eegdec::dsp::FilterSpec fspec;
  fspec.order = static_cast<int>(cfg.get_int("preprocess.butter_order", 5));
  fspec.low_hz = cfg.get_double("preprocess.band_low_hz", 0.5);
  fspec.high_hz = cfg.get_double("preprocess.band_high_hz", 50.0);

  const fs::path out(opts.out_dir);
  fs::create_directories(out);

  for (const fs::path& dir : subject_dirs(opts.in_dir, "meta.txt")) {
    eegdec::Recording rec = eegdec::data::read_recording(dir);
    try {
      eegdec::SignalBlock sig = rec.signal;
      if (notch_enabled) sig = eegdec::dsp::apply_notch(sig, notch_hz, notch_q);
      fspec.fs_hz = sig.fs_hz;
      const auto cascade = eegdec::dsp::design_butterworth_bandpass(fspec);
      sig = zero_phase ? eegdec::dsp::apply_zero_phase(cascade, sig)
                       : eegdec::dsp::apply_forward(cascade, sig);
      sig = eegdec::dsp::downsample(sig, factor);

      eegdec::Recording filtered;
      filtered.subject_id = rec.subject_id;
      filtered.signal = std::move(sig);
      for (const eegdec::Event& e : rec.events) {
        filtered.events.push_back({e.sample_index / factor, e.code});
      }
      eegdec::EpochSet epochs = eegdec::dsp::epoch_extract(filtered, offset_s, len_s);
      eegdec::data::write_epochs(epochs, out / rec.subject_id);
      std::cout << rec.subject_id << ": " << epochs.n_trials << " x " << epochs.n_channels
                << " x " << epochs.n_samples << " epochs at " << epochs.fs_hz << " Hz\n";
    } catch (const Error& e) {
      throw Error(e.category(), dir.string() + ": " + e.what());
    }
  }
  write_manifest(out, "preprocess", cfg);
  return 0;
}

int cmd_train(const CommonOpts& opts, const std::string& test_subject) {
  const ConfigMap cfg = load_config(opts);
  auto sets = load_epoch_sets(opts.in_dir);
  if (!sets.count(test_subject)) {
    throw Error(ErrorCategory::invalid_argument, "no epochs for subject " + test_subject);
  }

  const auto choices = parse_models(opts.models);
  if (choices.size() != 1) {
    throw Error(ErrorCategory::invalid_argument, "train expects exactly one --models token");
  }

  const eegdec::EpochSet& probe = sets.begin()->second;
  auto arch = arch_config(cfg, probe.n_channels, probe.n_samples);
  arch.backbone = choices[0].backbone;
  arch.with_sefe = choices[0].with_sefe;
  const auto model = eegdec::models::build_model(arch);

  const double ratio = cfg.get_double("loso.split_ratio", 0.8);
  auto tc = train_config(cfg);

  eegdec::EpochSet pooled_train, pooled_val;
  std::size_t si = 0;
  for (const auto& [id, epochs] : sets) {
    if (id == test_subject) continue;
    auto [tr, va] =
        eegdec::data::split_train_val(epochs, ratio, eegdec::derive_seed(tc.seed, 0x5b17, si++));
    pooled_train.append(tr);
    pooled_val.append(va);
  }
  eegdec::loso::ensure_no_leakage(test_subject, pooled_train);
  eegdec::loso::ensure_no_leakage(test_subject, pooled_val);

  auto std_sets = eegdec::dsp::standardize(pooled_train, {pooled_val, sets.at(test_subject)});
  auto result = eegdec::train::train(model, std_sets.train, std_sets.others[0], tc);
  const double acc = eegdec::train::evaluate(model, result.params, std_sets.others[1]);

  std::cout << "model = " << arch.label() << "\n";
  std::cout << "best_epoch = " << result.best_epoch << "\n";
  std::cout << "test_subject = " << test_subject << "\n";
  std::cout << "test_accuracy = " << acc << "\n";

  if (!opts.out_dir.empty()) {
    std::ostringstream hist;
    hist << "epoch,train_loss,train_acc,val_loss,val_acc\n";
    for (std::size_t i = 0; i < result.history.size(); ++i) {
      const auto& h = result.history[i];
      hist << (i + 1) << "," << h.train_loss << "," << h.train_acc << "," << h.val_loss << ","
           << h.val_acc << "\n";
    }
    write_atomic(fs::path(opts.out_dir) / (arch.label() + "_history.csv"), hist.str());
    write_manifest(fs::path(opts.out_dir), "train", cfg);
  }
  return 0;
}

int cmd_loso(const CommonOpts& opts) {
  const ConfigMap cfg = load_config(opts);
  auto sets = load_epoch_sets(opts.in_dir);
  if (sets.size() < 2) {
    throw Error(ErrorCategory::invalid_argument,
                "leave-one-subject-out needs at least 2 subjects, found " +
                    std::to_string(sets.size()));
  }

  const eegdec::EpochSet& probe = sets.begin()->second;
  auto arch = arch_config(cfg, probe.n_channels, probe.n_samples);
  auto tc = train_config(cfg);

  eegdec::loso::LosoOptions lopt;
  lopt.n_repetitions = static_cast<int>(cfg.get_int("loso.repetitions", 4));
  lopt.split_ratio = cfg.get_double("loso.split_ratio", 0.8);
  lopt.n_jobs = opts.jobs;

  const fs::path out(opts.out_dir);
  fs::create_directories(out);

  std::vector<eegdec::loso::LosoReport> reports;
  for (const ModelChoice& choice : parse_models(opts.models)) {
    arch.backbone = choice.backbone;
    arch.with_sefe = choice.with_sefe;
    eegdec::loso::LosoReport report = eegdec::loso::run_loso(arch, sets, tc, lopt);
    write_atomic(out / (arch.label() + ".csv"), report.to_csv());
    write_atomic(out / (arch.label() + ".txt"), report.to_text());
    std::cout << arch.label() << ": grand average " << report.grand_average << " (std "
              << report.grand_std << ")\n";
    reports.push_back(std::move(report));
  }

  write_atomic(out / "summary.csv", eegdec::loso::to_text(eegdec::loso::summarize_models(reports)));
  write_manifest(out, "loso", cfg);
  return 0;
}

int cmd_audit(const CommonOpts& opts) {
  const ConfigMap cfg = load_config(opts);
  auto arch = arch_config(cfg, static_cast<int>(cfg.get_int("arch.n_channels", 64)),
                          cfg.get_int("arch.n_samples", 1000));

  std::ostringstream all;
  for (eegdec::models::Backbone b :
       {eegdec::models::Backbone::deep, eegdec::models::Backbone::shallow,
        eegdec::models::Backbone::eegnet}) {
    arch.backbone = b;
    all << eegdec::models::to_text(eegdec::models::audit_parameters(arch)) << "\n";
  }
  std::cout << all.str();
  if (!opts.out_dir.empty()) {
    write_atomic(fs::path(opts.out_dir) / "audit.txt", all.str());
    write_manifest(fs::path(opts.out_dir), "audit", cfg);
  }
  return 0;
}

int cmd_stats(const CommonOpts& opts, const std::string& fixtures_dir,
              const std::string& reports_dir, double alpha) {
  const ConfigMap cfg = load_config(opts);
  std::vector<eegdec::stats::FixturePair> pairs;

  auto read_text = [](const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw Error(ErrorCategory::io, "cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  if (!reports_dir.empty()) {
    // pair <model>.csv with <model>+sefe.csv by per-subject averages
    for (const std::string base : {"deep", "shallow", "eegnet"}) {
      const fs::path without = fs::path(reports_dir) / (base + std::string(".csv"));
      const fs::path with = fs::path(reports_dir) / (base + std::string("+sefe.csv"));
      if (!fs::exists(without) || !fs::exists(with)) continue;
      auto rep_wo = eegdec::loso::parse_report_csv(read_text(without));
      auto rep_w = eegdec::loso::parse_report_csv(read_text(with));
      eegdec::stats::FixturePair pair;
      pair.backbone = base;
      pair.without_sefe = rep_wo.subject_average;
      pair.with_sefe = rep_w.subject_average;
      pairs.push_back(std::move(pair));
    }
    if (pairs.empty()) {
      throw Error(ErrorCategory::io,
                  "no report pairs (<model>.csv / <model>+sefe.csv) in " + reports_dir);
    }
  } else if (!fixtures_dir.empty()) {
    for (const std::string base : {"deep", "shallow", "eegnet"}) {
      const fs::path file = fs::path(fixtures_dir) / (base + std::string(".csv"));
      if (!fs::exists(file)) {
        throw Error(ErrorCategory::io, "missing fixture file " + file.string());
      }
      pairs.push_back(eegdec::stats::load_fixture_csv(read_text(file), base));
    }
  } else {
    pairs = eegdec::stats::benchmark_fixtures();
  }

  const auto report = eegdec::stats::run_pipeline(pairs, alpha);
  std::cout << report.to_text();
  if (!opts.out_dir.empty()) {
    write_atomic(fs::path(opts.out_dir) / "stats.txt", report.to_text());
    write_manifest(fs::path(opts.out_dir), "stats", cfg);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subject-independent EEG decoding toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string test_subject;
  std::string fixtures_dir;
  std::string reports_dir;
  double alpha = 0.001;

  auto add_common = [&opts](CLI::App* cmd, bool needs_in, bool needs_out) {
    cmd->add_option("--config", opts.config_path, "key = value configuration file");
    auto* seed_opt = cmd->add_option("--seed", opts.seed, "master seed (overrides config)");
    seed_opt->each([&opts](const std::string&) { opts.seed_given = true; });
    auto* out = cmd->add_option("--out", opts.out_dir, "output directory");
    if (needs_out) out->required();
    if (needs_in) cmd->add_option("--in", opts.in_dir, "input directory")->required();
  };

  CLI::App* synth = app.add_subcommand("synth", "generate synthetic multi-subject recordings");
  add_common(synth, false, true);

  CLI::App* preprocess = app.add_subcommand("preprocess", "filter, decimate and epoch recordings");
  add_common(preprocess, true, true);

  CLI::App* train_cmd = app.add_subcommand("train", "train one model with a held-out subject");
  add_common(train_cmd, true, false);
  train_cmd->add_option("--test-subject", test_subject, "held-out subject id")->required();
  train_cmd->add_option("--models", opts.models, "single model token, e.g. deep+sefe")->required();

  CLI::App* loso_cmd = app.add_subcommand("loso", "leave-one-subject-out evaluation");
  add_common(loso_cmd, true, true);
  loso_cmd->add_option("--models", opts.models,
                       "comma list from {deep,shallow,eegnet} x {sefe,nosefe}");
  loso_cmd->add_option("--jobs", opts.jobs, "parallel fold workers");

  CLI::App* audit = app.add_subcommand("audit", "parameter audit against published totals");
  add_common(audit, false, false);

  CLI::App* stats_cmd = app.add_subcommand("stats", "significance pipeline on fixtures or reports");
  add_common(stats_cmd, false, false);
  stats_cmd->add_option("--fixtures-dir", fixtures_dir, "directory of fixture csv files");
  stats_cmd->add_option("--reports-dir", reports_dir, "directory of loso report csv pairs");
  stats_cmd->add_option("--alpha", alpha, "significance level (default 0.001)");

  try {
    app.parse(argc, argv);
    if (synth->parsed()) return cmd_synth(opts);
    if (preprocess->parsed()) return cmd_preprocess(opts);
    if (train_cmd->parsed()) return cmd_train(opts, test_subject);
    if (loso_cmd->parsed()) return cmd_loso(opts);
    if (audit->parsed()) return cmd_audit(opts);
    if (stats_cmd->parsed()) return cmd_stats(opts, fixtures_dir, reports_dir, alpha);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << eegdec::to_string(e.category()) << ": " << e.what() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << std::endl;
    return 1;
  }
}

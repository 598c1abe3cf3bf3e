#include "eegdec/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace eegdec::data {

namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kSchemaVersion = 1;

void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorCategory::io, "cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorCategory::io, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCategory::io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, std::string> parse_kv(const std::string& text, const fs::path& origin) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCategory::format, "malformed header line in " + origin.string() +
                                             ": \"" + line + "\"");
    }
    auto trim = [](std::string s) {
      const char* ws = " \t\r";
      s.erase(0, s.find_first_not_of(ws));
      s.erase(s.find_last_not_of(ws) + 1);
      return s;
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

const std::string& require(const std::map<std::string, std::string>& kv,
                           const std::string& key, const fs::path& origin) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    throw Error(ErrorCategory::format, "missing header field '" + key + "' in " + origin.string());
  }
  return it->second;
}

std::string f32_payload(const std::vector<double>& values) {
  std::string bytes(values.size() * 4, '\0');
  for (std::size_t i = 0; i < values.size(); ++i) {
    float f = static_cast<float>(values[i]);
    // little-endian on all supported targets
    std::memcpy(&bytes[i * 4], &f, 4);
  }
  return bytes;
}

std::vector<double> f32_parse(const std::string& bytes, std::size_t expected,
                              const fs::path& origin) {
  if (bytes.size() != expected * 4) {
    throw Error(ErrorCategory::format,
                "truncated payload in " + origin.string() + ": " +
                    std::to_string(bytes.size()) + " bytes, expected " +
                    std::to_string(expected * 4));
  }
  std::vector<double> values(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    float f;
    std::memcpy(&f, &bytes[i * 4], 4);
    values[i] = static_cast<double>(f);
  }
  return values;
}

}  // namespace

void FoldPlan::validate() const {
  std::set<std::string> tested;
  std::set<std::string> all;
  for (const Fold& f : folds) {
    all.insert(f.test_subject);
    for (const auto& s : f.train_subjects) all.insert(s);
  }
  for (const Fold& f : folds) {
    for (const auto& s : f.train_subjects) {
      if (s == f.test_subject) {
        throw Error(ErrorCategory::leakage,
                    "fold for subject " + f.test_subject + " contains the test subject "
                    "in its training sources");
      }
    }
    if (!tested.insert(f.test_subject).second) {
      throw Error(ErrorCategory::invalid_argument,
                  "subject " + f.test_subject + " tested more than once");
    }
  }
  if (tested != all) {
    throw Error(ErrorCategory::invalid_argument,
                "fold plan does not test every subject exactly once");
  }
}

void SynthConfig::validate() const {
  if (n_subjects < 1 || n_channels < 1 || trials_per_class < 1) {
    throw Error(ErrorCategory::invalid_argument, "synth counts must be positive");
  }
  if (fs_hz <= 0.0) {
    throw Error(ErrorCategory::invalid_argument, "synth sampling frequency must be positive");
  }
  if (subject_variability < 0.0 || subject_variability > 1.0) {
    throw Error(ErrorCategory::invalid_argument, "subject_variability must lie in [0, 1]");
  }
}

void write_recording(const Recording& recording, const fs::path& dir) {
  recording.validate();
  fs::create_directories(dir);

  std::ostringstream meta;
  meta << "schema_version = " << kSchemaVersion << "\n";
  meta << "subject_id = " << recording.subject_id << "\n";
  meta << "fs_hz = " << recording.signal.fs_hz << "\n";
  meta << "n_channels = " << recording.signal.n_channels << "\n";
  meta << "n_samples = " << recording.signal.n_samples << "\n";
  std::ostringstream labels;
  for (int c = 0; c < recording.signal.n_channels; ++c) {
    if (c) labels << ",";
    labels << recording.signal.channel_labels[c];
  }
  meta << "channel_labels = " << labels.str() << "\n";
  write_file_atomic(dir / "meta.txt", meta.str());

  write_file_atomic(dir / "signal.f32", f32_payload(recording.signal.data));

  std::ostringstream ev;
  ev << "sample_index,code\n";
  for (const Event& e : recording.events) {
    ev << e.sample_index << "," << static_cast<int>(e.code) << "\n";
  }
  write_file_atomic(dir / "events.csv", ev.str());
}

Recording read_recording(const fs::path& dir) {
  const fs::path meta_path = dir / "meta.txt";
  auto kv = parse_kv(read_file(meta_path), meta_path);

  if (std::stoi(require(kv, "schema_version", meta_path)) != kSchemaVersion) {
    throw Error(ErrorCategory::format, "unsupported schema version in " + meta_path.string());
  }

  Recording r;
  r.subject_id = require(kv, "subject_id", meta_path);
  r.signal.fs_hz = std::stod(require(kv, "fs_hz", meta_path));
  r.signal.n_channels = std::stoi(require(kv, "n_channels", meta_path));
  r.signal.n_samples = std::stol(require(kv, "n_samples", meta_path));

  const std::string labels = require(kv, "channel_labels", meta_path);
  std::istringstream ls(labels);
  std::string item;
  while (std::getline(ls, item, ',')) r.signal.channel_labels.push_back(item);
  if (static_cast<int>(r.signal.channel_labels.size()) != r.signal.n_channels) {
    throw Error(ErrorCategory::format,
                "channel/label mismatch in " + meta_path.string() + ": " +
                    std::to_string(r.signal.channel_labels.size()) + " labels for " +
                    std::to_string(r.signal.n_channels) + " channels");
  }

  r.signal.data = f32_parse(read_file(dir / "signal.f32"),
                            static_cast<std::size_t>(r.signal.n_channels) * r.signal.n_samples,
                            dir / "signal.f32");

  const fs::path events_path = dir / "events.csv";
  std::istringstream ev(read_file(events_path));
  std::string line;
  bool first = true;
  while (std::getline(ev, line)) {
    if (line.empty()) continue;
    if (first) {  // header
      first = false;
      continue;
    }
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCategory::format, "malformed event line in " + events_path.string());
    }
    Event e;
    e.sample_index = std::stol(line.substr(0, comma));
    e.code = class_label_from_int(std::stoi(line.substr(comma + 1)));
    r.events.push_back(e);
  }

  r.validate();
  return r;
}

void write_epochs(const EpochSet& epochs, const fs::path& dir) {
  epochs.validate();
  fs::create_directories(dir);

  std::ostringstream meta;
  meta << "schema_version = " << kSchemaVersion << "\n";
  meta << "n_trials = " << epochs.n_trials << "\n";
  meta << "n_channels = " << epochs.n_channels << "\n";
  meta << "n_samples = " << epochs.n_samples << "\n";
  meta << "fs_hz = " << epochs.fs_hz << "\n";
  write_file_atomic(dir / "epochs_meta.txt", meta.str());

  write_file_atomic(dir / "epochs.f32", f32_payload(epochs.data));

  std::ostringstream tr;
  tr << "label,subject\n";
  for (long t = 0; t < epochs.n_trials; ++t) {
    tr << epochs.labels[t] << "," << epochs.subject_ids[t] << "\n";
  }
  write_file_atomic(dir / "trials.csv", tr.str());
}

EpochSet read_epochs(const fs::path& dir) {
  const fs::path meta_path = dir / "epochs_meta.txt";
  auto kv = parse_kv(read_file(meta_path), meta_path);
  if (std::stoi(require(kv, "schema_version", meta_path)) != kSchemaVersion) {
    throw Error(ErrorCategory::format, "unsupported schema version in " + meta_path.string());
  }

  EpochSet e;
  e.n_trials = std::stol(require(kv, "n_trials", meta_path));
  e.n_channels = std::stoi(require(kv, "n_channels", meta_path));
  e.n_samples = std::stol(require(kv, "n_samples", meta_path));
  e.fs_hz = std::stod(require(kv, "fs_hz", meta_path));

  e.data = f32_parse(read_file(dir / "epochs.f32"),
                     static_cast<std::size_t>(e.n_trials) * e.n_channels * e.n_samples,
                     dir / "epochs.f32");

  const fs::path trials_path = dir / "trials.csv";
  std::istringstream tr(read_file(trials_path));
  std::string line;
  bool first = true;
  while (std::getline(tr, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      continue;
    }
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCategory::format, "malformed trial line in " + trials_path.string());
    }
    e.labels.push_back(std::stoi(line.substr(0, comma)));
    e.subject_ids.push_back(line.substr(comma + 1));
  }

  e.validate();
  return e;
}

FoldPlan make_loso_folds(const std::vector<std::string>& subject_ids) {
  if (subject_ids.size() < 2) {
    throw Error(ErrorCategory::invalid_argument,
                "leave-one-subject-out needs at least 2 subjects");
  }
  std::set<std::string> unique(subject_ids.begin(), subject_ids.end());
  if (unique.size() != subject_ids.size()) {
    throw Error(ErrorCategory::invalid_argument, "duplicate subject ids in fold plan");
  }
  FoldPlan plan;
  for (const std::string& test : subject_ids) {
    Fold f;
    f.test_subject = test;
    for (const std::string& s : subject_ids) {
      if (s != test) f.train_subjects.push_back(s);
    }
    plan.folds.push_back(std::move(f));
  }
  plan.validate();
  return plan;
}

std::pair<EpochSet, EpochSet> split_train_val(const EpochSet& epochs, double ratio,
                                              std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw Error(ErrorCategory::invalid_argument, "split ratio must lie in (0, 1)");
  }
  std::map<int, std::vector<long>> by_class;
  for (long t = 0; t < epochs.n_trials; ++t) by_class[epochs.labels[t]].push_back(t);

  for (const auto& [label, idx] : by_class) {
    if (idx.size() < 2) {
      throw Error(ErrorCategory::invalid_argument,
                  "class " + std::to_string(label) + " has fewer than 2 trials");
    }
  }

  std::vector<long> train_idx, val_idx;
  Rng rng(seed);
  for (auto& [label, idx] : by_class) {
    shuffle(idx, rng);
    const long n_train = static_cast<long>(std::floor(ratio * static_cast<double>(idx.size())));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      (static_cast<long>(i) < n_train ? train_idx : val_idx).push_back(idx[i]);
    }
  }
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(val_idx.begin(), val_idx.end());
  return {epochs.select(train_idx), epochs.select(val_idx)};
}

namespace {

// Near-identity channel mixing for one subject; deviation scales with sv.
std::vector<double> subject_mixing(int n_channels, double sv, Rng& rng) {
  std::vector<double> m(static_cast<std::size_t>(n_channels) * n_channels, 0.0);
  const double off_scale = 0.5 * sv / std::sqrt(static_cast<double>(n_channels));
  for (int i = 0; i < n_channels; ++i) {
    for (int j = 0; j < n_channels; ++j) {
      double v = (i == j) ? 1.0 : 0.0;
      // draw even when sv == 0 so the noise stream stays aligned across
      // variability settings
      const double perturb = rng.normal() * off_scale;
      m[static_cast<std::size_t>(i) * n_channels + j] = v + perturb;
    }
  }
  return m;
}

}  // namespace

std::vector<Recording> synth_generate(const SynthConfig& config) {
  config.validate();

  const long trial_len = std::lround(kTrialS * config.fs_hz);
  const long imagery_off = std::lround(kImageryOffsetS * config.fs_hz);
  const long imagery_len = std::lround(kImageryS * config.fs_hz);
  const int n_trials = config.trials_per_class * kNumClasses;
  const long total_len = trial_len * n_trials;

  // tone amplitude for the requested per-channel SNR over unit-variance noise
  const double amp = std::sqrt(2.0 * std::pow(10.0, config.snr_db / 10.0));

  std::vector<Recording> recordings;
  recordings.reserve(config.n_subjects);

  for (int subj = 0; subj < config.n_subjects; ++subj) {
    Rng rng(derive_seed(config.seed, 0xEE6, static_cast<std::uint64_t>(subj)));

    // class order for this subject's trials
    std::vector<int> order;
    for (int k = 0; k < kNumClasses; ++k) {
      order.insert(order.end(), config.trials_per_class, k);
    }
    shuffle(order, rng);

    SignalBlock clean = SignalBlock::zeros(config.n_channels, total_len, config.fs_hz);
    Recording r;
    r.subject_id = "S" + std::string(subj + 1 < 10 ? "0" : "") + std::to_string(subj + 1);

    for (int t = 0; t < n_trials; ++t) {
      const long onset = static_cast<long>(t) * trial_len;
      const int k = order[t];
      r.events.push_back({onset, static_cast<ClassLabel>(k)});

      const double phase = rng.uniform(0.0, 2.0 * kPi);
      const double tone_hz = kClassToneHz[k];
      for (int c = k; c < config.n_channels; c += kNumClasses) {
        double* dst = clean.channel(c) + onset + imagery_off;
        for (long s = 0; s < imagery_len; ++s) {
          dst[s] += amp * std::sin(2.0 * kPi * tone_hz * (static_cast<double>(s) / config.fs_hz) + phase);
        }
      }
    }

    // unit-variance background noise
    SignalBlock noisy = clean;
    for (double& v : noisy.data) v += rng.normal();

    // subject nuisance: near-identity mixing followed by per-channel gain
    const std::vector<double> mix = subject_mixing(config.n_channels, config.subject_variability, rng);
    std::vector<double> gain(config.n_channels);
    for (int c = 0; c < config.n_channels; ++c) {
      const double g = rng.normal() * 0.2;
      gain[c] = 1.0 + config.subject_variability * g;
    }

    r.signal = SignalBlock::zeros(config.n_channels, total_len, config.fs_hz);
    if (config.subject_variability == 0.0) {
      r.signal.data = noisy.data;
      for (int c = 0; c < config.n_channels; ++c) {
        double* dst = r.signal.channel(c);
        const double g = gain[c];
        if (g != 1.0) {
          for (long s = 0; s < total_len; ++s) dst[s] *= g;
        }
      }
    } else {
      for (int i = 0; i < config.n_channels; ++i) {
        double* dst = r.signal.channel(i);
        const double* mrow = &mix[static_cast<std::size_t>(i) * config.n_channels];
        for (int j = 0; j < config.n_channels; ++j) {
          const double w = mrow[j] * gain[i];
          if (w == 0.0) continue;
          const double* src = noisy.channel(j);
          for (long s = 0; s < total_len; ++s) dst[s] += w * src[s];
        }
      }
    }

    quantize_to_f32(r.signal);
    recordings.push_back(std::move(r));
  }

  return recordings;
}

void quantize_to_f32(SignalBlock& signal) {
  for (double& v : signal.data) v = static_cast<double>(static_cast<float>(v));
}

}  // namespace eegdec::data

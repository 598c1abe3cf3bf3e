#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eegdec/common.hpp"

namespace eegdec {

// The three visual-imagery classes, in fixed report order.
enum class ClassLabel : int { spread_out = 0, fall_in = 1, hovering = 2 };

inline constexpr int kNumClasses = 3;

const char* to_string(ClassLabel c);
ClassLabel class_label_from_int(int code);

// Continuous multichannel signal, channel-major storage.
struct SignalBlock {
  int n_channels = 0;
  long n_samples = 0;
  double fs_hz = 0.0;
  std::vector<std::string> channel_labels;  // size n_channels
  std::vector<double> data;                 // n_channels * n_samples, channel-major

  double& at(int ch, long s) { return data[static_cast<std::size_t>(ch) * n_samples + s]; }
  double at(int ch, long s) const { return data[static_cast<std::size_t>(ch) * n_samples + s]; }
  double* channel(int ch) { return data.data() + static_cast<std::size_t>(ch) * n_samples; }
  const double* channel(int ch) const { return data.data() + static_cast<std::size_t>(ch) * n_samples; }

  static SignalBlock zeros(int n_channels, long n_samples, double fs_hz);
  void validate() const;  // finite values, label count
};

// A trial-onset marker.
struct Event {
  long sample_index = 0;
  ClassLabel code = ClassLabel::spread_out;
};

struct Recording {
  std::string subject_id;
  SignalBlock signal;
  std::vector<Event> events;  // strictly increasing sample indices

  void validate() const;
};

// trials x channels x samples, trial-major storage.
struct EpochSet {
  long n_trials = 0;
  int n_channels = 0;
  long n_samples = 0;
  double fs_hz = 0.0;
  std::vector<int> labels;                 // per trial
  std::vector<std::string> subject_ids;    // per trial
  std::vector<double> data;                // n_trials * n_channels * n_samples

  double& at(long t, int c, long s) {
    return data[(static_cast<std::size_t>(t) * n_channels + c) * n_samples + s];
  }
  double at(long t, int c, long s) const {
    return data[(static_cast<std::size_t>(t) * n_channels + c) * n_samples + s];
  }
  const double* trial(long t) const {
    return data.data() + static_cast<std::size_t>(t) * n_channels * n_samples;
  }

  static EpochSet empty_like(const EpochSet& proto, long n_trials);
  void append(const EpochSet& other);  // concatenates trials; shapes must match
  EpochSet select(const std::vector<long>& trial_indices) const;
  void validate() const;
};

}  // namespace eegdec

#include "eegdec/types.hpp"

#include <cmath>

namespace eegdec {

const char* to_string(ClassLabel c) {
  switch (c) {
    case ClassLabel::spread_out: return "spread-out";
    case ClassLabel::fall_in: return "fall-in";
    case ClassLabel::hovering: return "hovering";
  }
  return "unknown";
}

ClassLabel class_label_from_int(int code) {
  if (code < 0 || code >= kNumClasses) {
    throw Error(ErrorCategory::format,
                "unknown event code " + std::to_string(code) + " (expected 0..2)");
  }
  return static_cast<ClassLabel>(code);
}

SignalBlock SignalBlock::zeros(int n_channels, long n_samples, double fs_hz) {
  SignalBlock s;
  s.n_channels = n_channels;
  s.n_samples = n_samples;
  s.fs_hz = fs_hz;
  s.channel_labels.resize(n_channels);
  for (int c = 0; c < n_channels; ++c) s.channel_labels[c] = "ch" + std::to_string(c);
  s.data.assign(static_cast<std::size_t>(n_channels) * n_samples, 0.0);
  return s;
}

void SignalBlock::validate() const {
  if (static_cast<int>(channel_labels.size()) != n_channels) {
    throw Error(ErrorCategory::format,
                "channel label count " + std::to_string(channel_labels.size()) +
                    " does not match channel count " + std::to_string(n_channels));
  }
  if (data.size() != static_cast<std::size_t>(n_channels) * n_samples) {
    throw Error(ErrorCategory::shape, "signal buffer size does not match dimensions");
  }
  for (double v : data) {
    if (!std::isfinite(v)) throw Error(ErrorCategory::numeric, "non-finite sample in signal");
  }
}

void Recording::validate() const {
  signal.validate();
  long prev = -1;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    if (e.sample_index <= prev) {
      throw Error(ErrorCategory::format,
                  "event " + std::to_string(i) + " sample index not strictly increasing");
    }
    if (e.sample_index < 0 || e.sample_index >= signal.n_samples) {
      throw Error(ErrorCategory::format,
                  "event " + std::to_string(i) + " at sample " +
                      std::to_string(e.sample_index) + " outside signal of length " +
                      std::to_string(signal.n_samples));
    }
    prev = e.sample_index;
  }
}

EpochSet EpochSet::empty_like(const EpochSet& proto, long n_trials) {
  EpochSet e;
  e.n_trials = n_trials;
  e.n_channels = proto.n_channels;
  e.n_samples = proto.n_samples;
  e.fs_hz = proto.fs_hz;
  e.labels.resize(n_trials, 0);
  e.subject_ids.resize(n_trials);
  e.data.assign(static_cast<std::size_t>(n_trials) * proto.n_channels * proto.n_samples, 0.0);
  return e;
}

void EpochSet::append(const EpochSet& other) {
  if (n_trials == 0 && data.empty()) {
    *this = other;
    return;
  }
  if (other.n_channels != n_channels || other.n_samples != n_samples) {
    throw Error(ErrorCategory::shape, "cannot append epoch sets with different shapes");
  }
  data.insert(data.end(), other.data.begin(), other.data.end());
  labels.insert(labels.end(), other.labels.begin(), other.labels.end());
  subject_ids.insert(subject_ids.end(), other.subject_ids.begin(), other.subject_ids.end());
  n_trials += other.n_trials;
}

EpochSet EpochSet::select(const std::vector<long>& trial_indices) const {
  EpochSet out = empty_like(*this, static_cast<long>(trial_indices.size()));
  const std::size_t stride = static_cast<std::size_t>(n_channels) * n_samples;
  for (std::size_t i = 0; i < trial_indices.size(); ++i) {
    long t = trial_indices[i];
    if (t < 0 || t >= n_trials) {
      throw Error(ErrorCategory::invalid_argument, "trial index out of range");
    }
    std::copy(data.begin() + t * stride, data.begin() + (t + 1) * stride,
              out.data.begin() + i * stride);
    out.labels[i] = labels[t];
    out.subject_ids[i] = subject_ids[t];
  }
  return out;
}

void EpochSet::validate() const {
  if (static_cast<long>(labels.size()) != n_trials ||
      static_cast<long>(subject_ids.size()) != n_trials) {
    throw Error(ErrorCategory::shape, "label/subject count does not match trial count");
  }
  if (data.size() != static_cast<std::size_t>(n_trials) * n_channels * n_samples) {
    throw Error(ErrorCategory::shape, "epoch buffer size does not match dimensions");
  }
  for (double v : data) {
    if (!std::isfinite(v)) throw Error(ErrorCategory::numeric, "non-finite value in epochs");
  }
}

}  // namespace eegdec

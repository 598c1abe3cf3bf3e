#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "eegdec/types.hpp"

namespace eegdec::dsp {

struct FilterSpec {
  enum class Kind { band_pass, notch };
  Kind kind = Kind::band_pass;
  int order = 5;
  double low_hz = 0.5;
  double high_hz = 50.0;
  double fs_hz = 500.0;

  void validate() const;
};

// One second-order section: (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2)
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;

  bool stable() const;
};

struct BiquadCascade {
  std::vector<Biquad> sections;
  double gain = 1.0;

  // H(e^{jw}), w in radians per sample.
  std::complex<double> response(double w) const;
  double magnitude_at(double freq_hz, double fs_hz) const;
  int order() const { return 2 * static_cast<int>(sections.size()); }
};

// Analog-prototype Butterworth band-pass mapped by the bilinear transform with
// frequency prewarping; `spec.order` second-order sections, digital order 2x.
BiquadCascade design_butterworth_bandpass(const FilterSpec& spec);

// Second-order notch at notch_hz with quality factor q.
BiquadCascade design_notch(double notch_hz, double q, double fs_hz);

// Forward-backward filtering: zero net phase, |H|^2 net magnitude. Edges are
// padded by odd reflection over 3x the filter order and trimmed afterwards.
SignalBlock apply_zero_phase(const BiquadCascade& cascade, const SignalBlock& signal);

// Single-pass (causal) application, exposed for the pipeline's causal option.
SignalBlock apply_forward(const BiquadCascade& cascade, const SignalBlock& signal);

SignalBlock apply_notch(const SignalBlock& signal, double notch_hz, double q);

// Keeps every factor-th sample starting at index 0.
SignalBlock downsample(const SignalBlock& signal, int factor);

// One epoch per trial-onset event: samples in [onset + offset, onset + offset + len).
EpochSet epoch_extract(const Recording& recording, double window_offset_s,
                       double window_len_s);

struct ChannelStats {
  std::vector<double> mean;  // per channel
  std::vector<double> stddev;
};

// Per-channel statistics over every sample of every trial in `epochs`.
ChannelStats channel_stats(const EpochSet& epochs);

// Shift/scale all sets by the training set's per-channel statistics.
struct StandardizeResult {
  EpochSet train;
  std::vector<EpochSet> others;
  ChannelStats stats;
};
StandardizeResult standardize(const EpochSet& train, const std::vector<EpochSet>& others);

}  // namespace eegdec::dsp

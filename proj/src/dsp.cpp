#include "eegdec/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace eegdec::dsp {

namespace {

constexpr double kPi = 3.14159265358979323846;

using cd = std::complex<double>;

}  // namespace

void FilterSpec::validate() const {
  if (order < 1) {
    throw Error(ErrorCategory::invalid_argument, "filter order must be >= 1");
  }
  if (fs_hz <= 0.0) {
    throw Error(ErrorCategory::invalid_argument, "sampling frequency must be positive");
  }
  if (!(low_hz > 0.0)) {
    throw Error(ErrorCategory::invalid_argument, "low cutoff must be > 0");
  }
  if (!(low_hz < high_hz)) {
    throw Error(ErrorCategory::invalid_argument, "low cutoff must be below high cutoff");
  }
  if (!(high_hz < fs_hz / 2.0)) {
    throw Error(ErrorCategory::invalid_argument, "high cutoff must be below Nyquist");
  }
}

bool Biquad::stable() const {
  // Poles of z^2 + a1 z + a2 are inside the unit circle iff
  // |a2| < 1 and |a1| < 1 + a2 (Jury conditions for a monic quadratic).
  return std::abs(a2) < 1.0 && std::abs(a1) < 1.0 + a2;
}

std::complex<double> BiquadCascade::response(double w) const {
  const cd z1 = std::exp(cd(0.0, -w));
  const cd z2 = z1 * z1;
  cd h(gain, 0.0);
  for (const Biquad& s : sections) {
    h *= (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
  }
  return h;
}

double BiquadCascade::magnitude_at(double freq_hz, double fs_hz) const {
  return std::abs(response(2.0 * kPi * freq_hz / fs_hz));
}

BiquadCascade design_butterworth_bandpass(const FilterSpec& spec) {
  spec.validate();
  if (spec.kind != FilterSpec::Kind::band_pass) {
    throw Error(ErrorCategory::invalid_argument, "spec kind must be band-pass");
  }

  const int n = spec.order;
  const double fs2 = 2.0 * spec.fs_hz;

  // Prewarped analog edges; the bilinear transform then lands the -3 dB points
  // exactly on low_hz/high_hz.
  const double w1 = fs2 * std::tan(kPi * spec.low_hz / spec.fs_hz);
  const double w2 = fs2 * std::tan(kPi * spec.high_hz / spec.fs_hz);
  const double bw = w2 - w1;
  const double w0sq = w1 * w2;

  // Low-pass prototype poles on the unit circle, left half plane.
  // The band-pass transform maps each prototype pole p to the pair
  //   s = (bw*p +- sqrt((bw*p)^2 - 4*w0^2)) / 2,
  // and the bilinear transform maps s to z = (fs2 + s) / (fs2 - s).
  // Each section gets the numerator (1 - z^-2): one zero at DC, one at Nyquist.
  BiquadCascade cascade;
  auto add_section = [&cascade](cd p1, cd p2) {
    Biquad s;
    s.b0 = 1.0;
    s.b1 = 0.0;
    s.b2 = -1.0;
    s.a1 = -(p1 + p2).real();
    s.a2 = (p1 * p2).real();
    if (!s.stable()) {
      throw Error(ErrorCategory::numeric, "designed section is unstable");
    }
    cascade.sections.push_back(s);
  };

  auto bilinear = [fs2](cd s) { return (fs2 + s) / (fs2 - s); };

  for (int k = 0; k < n; ++k) {
    const double theta = kPi * (2.0 * k + n + 1.0) / (2.0 * n);
    const cd p(std::cos(theta), std::sin(theta));
    if (p.imag() < -1e-12) continue;  // conjugates handled with their partner

    const cd bp = bw * p;
    const cd disc = std::sqrt(bp * bp - 4.0 * w0sq);
    const cd s_hi = (bp + disc) / 2.0;
    const cd s_lo = (bp - disc) / 2.0;

    if (p.imag() > 1e-12) {
      // Complex prototype pole: two sections, each pairing a mapped pole with
      // its conjugate.
      add_section(bilinear(s_hi), std::conj(bilinear(s_hi)));
      add_section(bilinear(s_lo), std::conj(bilinear(s_lo)));
    } else {
      // Real prototype pole (odd order): s_hi/s_lo are either both real or a
      // conjugate pair; either way one section with real coefficients.
      add_section(bilinear(s_hi), bilinear(s_lo));
    }
  }

  // Unit gain at the mapped center frequency (the analog response peaks at
  // w0 with magnitude exactly 1).
  const double w_center = 2.0 * std::atan(std::sqrt(w0sq) / fs2);
  cascade.gain = 1.0;
  cascade.gain = 1.0 / std::abs(cascade.response(w_center));
  return cascade;
}

BiquadCascade design_notch(double notch_hz, double q, double fs_hz) {
  if (fs_hz <= 0.0 || !(notch_hz > 0.0) || !(notch_hz < fs_hz / 2.0)) {
    throw Error(ErrorCategory::invalid_argument,
                "notch frequency must lie in (0, Nyquist)");
  }
  if (q <= 0.0) {
    throw Error(ErrorCategory::invalid_argument, "notch quality factor must be positive");
  }
  const double w0 = 2.0 * kPi * notch_hz / fs_hz;
  const double alpha = std::sin(w0) / (2.0 * q);
  const double c = std::cos(w0);
  const double a0 = 1.0 + alpha;

  Biquad s;
  s.b0 = 1.0 / a0;
  s.b1 = -2.0 * c / a0;
  s.b2 = 1.0 / a0;
  s.a1 = -2.0 * c / a0;
  s.a2 = (1.0 - alpha) / a0;

  BiquadCascade cascade;
  cascade.sections.push_back(s);
  cascade.gain = 1.0;
  return cascade;
}

namespace {

// Steady-state (direct form II transposed) state for a constant input level,
// so filtering starts without a step transient. Solves, per section,
//   z1 = b1*x - a1*y + z2,  z2 = b2*x - a2*y,  y = H(1)*x.
struct SectionState {
  double z1 = 0.0, z2 = 0.0;
};

std::vector<SectionState> steady_state(const BiquadCascade& c, double x0) {
  std::vector<SectionState> st(c.sections.size());
  double x = x0 * c.gain;
  for (std::size_t i = 0; i < c.sections.size(); ++i) {
    const Biquad& s = c.sections[i];
    const double h1 = (s.b0 + s.b1 + s.b2) / (1.0 + s.a1 + s.a2);
    const double y = h1 * x;
    st[i].z2 = s.b2 * x - s.a2 * y;
    st[i].z1 = s.b1 * x - s.a1 * y + st[i].z2;
    x = y;
  }
  return st;
}

void filter_inplace(const BiquadCascade& c, std::vector<double>& x,
                    std::vector<SectionState>& st) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) x[i] *= c.gain;
  for (std::size_t k = 0; k < c.sections.size(); ++k) {
    const Biquad& s = c.sections[k];
    double z1 = st[k].z1, z2 = st[k].z2;
    for (std::size_t i = 0; i < n; ++i) {
      const double in = x[i];
      const double out = s.b0 * in + z1;
      z1 = s.b1 * in - s.a1 * out + z2;
      z2 = s.b2 * in - s.a2 * out;
      x[i] = out;
    }
    st[k].z1 = z1;
    st[k].z2 = z2;
  }
}

std::vector<double> filtfilt_channel(const BiquadCascade& c, const double* x, long n) {
  const long pad = 3L * c.order();
  if (n <= pad) {
    throw Error(ErrorCategory::invalid_argument,
                "signal of length " + std::to_string(n) +
                    " too short for zero-phase filtering (needs > " +
                    std::to_string(pad) + " samples)");
  }

  // Odd reflection about the endpoints.
  std::vector<double> ext(static_cast<std::size_t>(n) + 2 * pad);
  for (long i = 0; i < pad; ++i) ext[i] = 2.0 * x[0] - x[pad - i];
  std::copy(x, x + n, ext.begin() + pad);
  for (long i = 0; i < pad; ++i) ext[pad + n + i] = 2.0 * x[n - 1] - x[n - 2 - i];

  auto st = steady_state(c, ext.front());
  filter_inplace(c, ext, st);

  std::reverse(ext.begin(), ext.end());
  st = steady_state(c, ext.front());
  filter_inplace(c, ext, st);
  std::reverse(ext.begin(), ext.end());

  return std::vector<double>(ext.begin() + pad, ext.begin() + pad + n);
}

}  // namespace

SignalBlock apply_zero_phase(const BiquadCascade& cascade, const SignalBlock& signal) {
  SignalBlock out = signal;
  for (int ch = 0; ch < signal.n_channels; ++ch) {
    std::vector<double> y = filtfilt_channel(cascade, signal.channel(ch), signal.n_samples);
    std::copy(y.begin(), y.end(), out.channel(ch));
  }
  return out;
}

SignalBlock apply_forward(const BiquadCascade& cascade, const SignalBlock& signal) {
  SignalBlock out = signal;
  for (int ch = 0; ch < signal.n_channels; ++ch) {
    std::vector<double> y(signal.channel(ch), signal.channel(ch) + signal.n_samples);
    auto st = steady_state(cascade, y.empty() ? 0.0 : y.front());
    filter_inplace(cascade, y, st);
    std::copy(y.begin(), y.end(), out.channel(ch));
  }
  return out;
}

SignalBlock apply_notch(const SignalBlock& signal, double notch_hz, double q) {
  return apply_zero_phase(design_notch(notch_hz, q, signal.fs_hz), signal);
}

SignalBlock downsample(const SignalBlock& signal, int factor) {
  if (factor < 1) {
    throw Error(ErrorCategory::invalid_argument, "downsample factor must be >= 1");
  }
  const long out_len = (signal.n_samples + factor - 1) / factor;
  SignalBlock out = SignalBlock::zeros(signal.n_channels, out_len, signal.fs_hz / factor);
  out.channel_labels = signal.channel_labels;
  for (int ch = 0; ch < signal.n_channels; ++ch) {
    const double* src = signal.channel(ch);
    double* dst = out.channel(ch);
    for (long i = 0; i < out_len; ++i) dst[i] = src[i * static_cast<long>(factor)];
  }
  return out;
}

EpochSet epoch_extract(const Recording& recording, double window_offset_s,
                       double window_len_s) {
  const SignalBlock& sig = recording.signal;
  const long offset = std::lround(window_offset_s * sig.fs_hz);
  const long len = std::lround(window_len_s * sig.fs_hz);
  if (len < 1) {
    throw Error(ErrorCategory::invalid_argument, "epoch window must contain samples");
  }

  EpochSet epochs;
  epochs.n_trials = static_cast<long>(recording.events.size());
  epochs.n_channels = sig.n_channels;
  epochs.n_samples = len;
  epochs.fs_hz = sig.fs_hz;
  epochs.labels.resize(epochs.n_trials);
  epochs.subject_ids.assign(epochs.n_trials, recording.subject_id);
  epochs.data.resize(static_cast<std::size_t>(epochs.n_trials) * sig.n_channels * len);

  for (long t = 0; t < epochs.n_trials; ++t) {
    const Event& e = recording.events[t];
    const long start = e.sample_index + offset;
    if (start < 0 || start + len > sig.n_samples) {
      throw Error(ErrorCategory::invalid_argument,
                  "trial " + std::to_string(t) + " (onset sample " +
                      std::to_string(e.sample_index) + ") window [" +
                      std::to_string(start) + ", " + std::to_string(start + len) +
                      ") exceeds recording of length " + std::to_string(sig.n_samples));
    }
    epochs.labels[t] = static_cast<int>(e.code);
    for (int ch = 0; ch < sig.n_channels; ++ch) {
      const double* src = sig.channel(ch) + start;
      std::copy(src, src + len, &epochs.at(t, ch, 0));
    }
  }
  return epochs;
}

ChannelStats channel_stats(const EpochSet& epochs) {
  ChannelStats st;
  st.mean.assign(epochs.n_channels, 0.0);
  st.stddev.assign(epochs.n_channels, 0.0);
  const double count = static_cast<double>(epochs.n_trials) * epochs.n_samples;
  for (long t = 0; t < epochs.n_trials; ++t) {
    for (int c = 0; c < epochs.n_channels; ++c) {
      const double* p = &epochs.data[(static_cast<std::size_t>(t) * epochs.n_channels + c) *
                                     epochs.n_samples];
      double acc = 0.0;
      for (long s = 0; s < epochs.n_samples; ++s) acc += p[s];
      st.mean[c] += acc;
    }
  }
  for (int c = 0; c < epochs.n_channels; ++c) st.mean[c] /= count;
  for (long t = 0; t < epochs.n_trials; ++t) {
    for (int c = 0; c < epochs.n_channels; ++c) {
      const double* p = &epochs.data[(static_cast<std::size_t>(t) * epochs.n_channels + c) *
                                     epochs.n_samples];
      double acc = 0.0;
      for (long s = 0; s < epochs.n_samples; ++s) {
        const double d = p[s] - st.mean[c];
        acc += d * d;
      }
      st.stddev[c] += acc;
    }
  }
  for (int c = 0; c < epochs.n_channels; ++c) st.stddev[c] = std::sqrt(st.stddev[c] / count);
  return st;
}

namespace {

void apply_stats(EpochSet& e, const ChannelStats& st) {
  for (long t = 0; t < e.n_trials; ++t) {
    for (int c = 0; c < e.n_channels; ++c) {
      double* p = &e.data[(static_cast<std::size_t>(t) * e.n_channels + c) * e.n_samples];
      const double m = st.mean[c];
      const double inv = 1.0 / st.stddev[c];
      for (long s = 0; s < e.n_samples; ++s) p[s] = (p[s] - m) * inv;
    }
  }
}

}  // namespace

StandardizeResult standardize(const EpochSet& train, const std::vector<EpochSet>& others) {
  if (train.n_trials == 0) {
    throw Error(ErrorCategory::invalid_argument, "standardize requires a non-empty train set");
  }
  StandardizeResult r;
  r.stats = channel_stats(train);
  for (int c = 0; c < train.n_channels; ++c) {
    if (r.stats.stddev[c] <= 0.0) {
      throw Error(ErrorCategory::numeric,
                  "channel " + std::to_string(c) + " has zero variance in training data");
    }
  }
  r.train = train;
  apply_stats(r.train, r.stats);
  r.others = others;
  for (EpochSet& e : r.others) {
    if (e.n_channels != train.n_channels) {
      throw Error(ErrorCategory::shape, "channel count mismatch in standardize");
    }
    apply_stats(e, r.stats);
  }
  return r;
}

}  // namespace eegdec::dsp

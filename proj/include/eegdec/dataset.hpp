#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "eegdec/types.hpp"

namespace eegdec::data {

// One LOSO fold: the held-out subject and its training sources.
struct Fold {
  std::string test_subject;
  std::vector<std::string> train_subjects;
};

struct FoldPlan {
  std::vector<Fold> folds;

  void validate() const;  // no leakage, each subject tested exactly once
};

struct SynthConfig {
  int n_subjects = 10;
  int n_channels = 64;
  double fs_hz = 500.0;
  int trials_per_class = 50;
  double snr_db = 10.0;
  double subject_variability = 0.1;
  std::uint64_t seed = 0;

  void validate() const;
};

// Trial timeline of the recording protocol, in seconds.
inline constexpr double kFixationS = 2.0;
inline constexpr double kVideoS = 4.0;
inline constexpr double kPostFixationS = 4.0;
inline constexpr double kImageryS = 4.0;
inline constexpr double kTrialS = kFixationS + kVideoS + kPostFixationS + kImageryS;
inline constexpr double kImageryOffsetS = kFixationS + kVideoS + kPostFixationS;

// Class-defining oscillation bands injected by the generator (Hz).
inline constexpr double kClassToneHz[kNumClasses] = {6.0, 10.0, 22.0};

// Recording container: a directory holding meta.txt, signal.f32 (little-endian
// float32, channel-major) and events.csv. Round trips are bit-exact because
// every writer quantizes to float32 first.
void write_recording(const Recording& recording, const std::filesystem::path& dir);
Recording read_recording(const std::filesystem::path& dir);

// Epoch container: a directory holding epochs_meta.txt, epochs.f32
// (trial-major float32) and trials.csv (label, subject per trial).
void write_epochs(const EpochSet& epochs, const std::filesystem::path& dir);
EpochSet read_epochs(const std::filesystem::path& dir);

// One fold per subject; subjects must be unique.
FoldPlan make_loso_folds(const std::vector<std::string>& subject_ids);

// Stratified split: per class, floor(ratio * n_class) trials go to train.
// Shuffling is driven solely by the seed.
std::pair<EpochSet, EpochSet> split_train_val(const EpochSet& epochs, double ratio,
                                              std::uint64_t seed);

// Multi-subject synthetic EEG laid out on the recording timeline. Each class
// has a fixed spatio-spectral signature during the imagery window; each
// subject applies a near-identity mixing + gain nuisance transform scaled by
// subject_variability; noise level set by snr_db. Deterministic in the seed.
std::vector<Recording> synth_generate(const SynthConfig& config);

// Quantize a signal to float32-representable values (the on-disk precision).
void quantize_to_f32(SignalBlock& signal);

}  // namespace eegdec::data

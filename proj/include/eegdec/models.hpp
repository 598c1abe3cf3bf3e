#pragma once

#include <array>
#include <string>
#include <vector>

#include "eegdec/nn.hpp"

namespace eegdec::models {

enum class Backbone { deep, shallow, eegnet };

const char* to_string(Backbone b);
Backbone backbone_from_string(const std::string& s);

// 1x1 convolutional block inserted between the feature extractor and the
// classifier: conv C_f -> hidden, ReLU, conv hidden -> output. Pointwise over
// the temporal axis, so every temporal position is encoded independently.
struct SefeConfig {
  int hidden_channels = 64;
  int output_channels = 32;
};

struct DeepParams {
  std::array<int, 4> filters{25, 50, 100, 200};
  int temporal_kernel = 10;
  int pool = 3;
  int pool_stride = 3;
  double dropout = 0.5;
};

struct ShallowParams {
  int filters = 40;
  int temporal_kernel = 25;
  int pool = 75;
  int pool_stride = 15;
  double dropout = 0.5;
};

struct EegnetParams {
  int f1 = 8;           // temporal filters
  int depth_mult = 2;   // spatial filters per temporal filter
  int f2 = 16;          // pointwise filters
  int temporal_kernel = 125;
  int separable_kernel = 16;
  int pool1 = 4;
  int pool2 = 8;
  double dropout = 0.25;
};

struct ArchitectureConfig {
  Backbone backbone = Backbone::deep;
  int n_channels = 64;
  long n_samples = 1000;
  int n_classes = 3;
  bool with_sefe = false;
  DeepParams deep;
  ShallowParams shallow;
  EegnetParams eegnet;
  SefeConfig sefe;

  std::string label() const;  // e.g. "deep+sefe"
};

// A layer stack together with its input contract.
struct ModelStack {
  nn::LayerStack layers;
  nn::Shape input_shape;  // batch dimension left at 1
  int n_classes = 3;

  nn::Shape pre_flatten_shape() const;  // feature map entering the flatten layer
};

ModelStack build_deepconvnet(const ArchitectureConfig& cfg);
ModelStack build_shallowconvnet(const ArchitectureConfig& cfg);
ModelStack build_eegnet(const ArchitectureConfig& cfg);

// Dispatches on cfg.backbone and attaches the SEFE block when requested.
ModelStack build_model(const ArchitectureConfig& cfg);

// Inserts the 1x1 block before the flatten+dense tail and rewires the dense
// input size. Errors if the stack does not end in flatten+dense.
ModelStack attach_sefe(const ModelStack& stack, const SefeConfig& sefe);

// Published reference totals for the six variants, reported alongside the
// computed counts (hyperparameters behind them are unpublished, so deviation
// is informational).
long reference_param_total(Backbone b, bool with_sefe);

struct AuditRow {
  std::string layer;
  std::string shape;
  long count = 0;
};

struct AuditReport {
  Backbone backbone = Backbone::deep;
  std::vector<AuditRow> without_sefe;
  std::vector<AuditRow> with_sefe;
  long total_without = 0;
  long total_with = 0;
  long delta = 0;            // total_with - total_without
  long closed_form_delta = 0;  // (C_f*hid+hid) + (hid*out+out) + (out-C_f)*T_f*n_classes
  long reference_without = 0;
  long reference_with = 0;
  double rel_deviation_without = 0.0;
  double rel_deviation_with = 0.0;
};

AuditReport audit_parameters(const ArchitectureConfig& cfg);

std::string to_text(const AuditReport& report);

}  // namespace eegdec::models

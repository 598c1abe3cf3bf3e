#include "eegdec/models.hpp"

#include <cmath>
#include <sstream>

namespace eegdec::models {

using nn::ActivationSpec;
using nn::AvgPoolSpec;
using nn::BatchNormSpec;
using nn::Conv2dSpec;
using nn::DenseSpec;
using nn::DropoutSpec;
using nn::FlattenSpec;
using nn::LayerSpec;
using nn::MaxPoolSpec;
using nn::Shape;

const char* to_string(Backbone b) {
  switch (b) {
    case Backbone::deep: return "deep";
    case Backbone::shallow: return "shallow";
    case Backbone::eegnet: return "eegnet";
  }
  return "unknown";
}

Backbone backbone_from_string(const std::string& s) {
  if (s == "deep") return Backbone::deep;
  if (s == "shallow") return Backbone::shallow;
  if (s == "eegnet") return Backbone::eegnet;
  throw Error(ErrorCategory::invalid_argument, "unknown backbone '" + s + "'");
}

std::string ArchitectureConfig::label() const {
  return std::string(to_string(backbone)) + (with_sefe ? "+sefe" : "");
}

Shape ModelStack::pre_flatten_shape() const {
  auto shapes = nn::infer_shapes(layers, input_shape);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].is<FlattenSpec>()) {
      return i == 0 ? input_shape : shapes[i - 1];
    }
  }
  throw Error(ErrorCategory::invalid_argument, "stack has no flatten layer");
}

namespace {

void validate_common(const ArchitectureConfig& cfg) {
  if (cfg.n_channels < 1 || cfg.n_samples < 1) {
    throw Error(ErrorCategory::invalid_argument, "model input dimensions must be positive");
  }
  if (cfg.n_classes < 2) {
    throw Error(ErrorCategory::invalid_argument, "need at least 2 classes");
  }
}

// Validates the stack against the input and reports the minimal sample count
// when the time axis collapses.
void check_length(const ModelStack& m, const ArchitectureConfig& cfg) {
  try {
    nn::infer_shapes(m.layers, m.input_shape);
  } catch (const Error&) {
    // binary search for the smallest workable length
    long lo = 1, hi = 1 << 20;
    while (lo < hi) {
      long mid = lo + (hi - lo) / 2;
      ModelStack probe = m;
      probe.input_shape.w = static_cast<int>(mid);
      try {
        nn::infer_shapes(probe.layers, probe.input_shape);
        hi = mid;
      } catch (const Error&) {
        lo = mid + 1;
      }
    }
    throw Error(ErrorCategory::invalid_argument,
                std::string(to_string(cfg.backbone)) + " needs at least " + std::to_string(lo) +
                    " samples, got " + std::to_string(cfg.n_samples));
  }
}

LayerSpec conv(std::string name, Conv2dSpec c) { return {std::move(name), c}; }
LayerSpec bnorm(std::string name, int channels) { return {std::move(name), BatchNormSpec{channels}}; }
LayerSpec act(std::string name, nn::Act fn) { return {std::move(name), ActivationSpec{fn}}; }
LayerSpec dropout(std::string name, double rate) { return {std::move(name), DropoutSpec{rate}}; }

// TensorFlow-style same padding for stride 1.
void same_pad_w(Conv2dSpec& c) {
  c.pad_left = (c.kw - 1) / 2;
  c.pad_right = c.kw - 1 - c.pad_left;
}

}  // namespace

ModelStack build_deepconvnet(const ArchitectureConfig& cfg) {
  validate_common(cfg);
  const DeepParams& p = cfg.deep;

  ModelStack m;
  m.input_shape = {1, 1, cfg.n_channels, static_cast<int>(cfg.n_samples)};
  m.n_classes = cfg.n_classes;

  m.layers.push_back(conv("conv_temporal",
                          {p.filters[0], 1, 1, p.temporal_kernel}));
  m.layers.push_back(conv("conv_spatial",
                          {p.filters[0], p.filters[0], cfg.n_channels, 1}));
  m.layers.push_back(bnorm("bn1", p.filters[0]));
  m.layers.push_back(act("elu1", nn::Act::elu));
  m.layers.push_back({"pool1", MaxPoolSpec{1, p.pool, 1, p.pool_stride}});
  m.layers.push_back(dropout("drop1", p.dropout));

  int in_ch = p.filters[0];
  for (int blk = 1; blk < 4; ++blk) {
    const std::string b = std::to_string(blk + 1);
    m.layers.push_back(conv("conv" + b, {p.filters[blk], in_ch, 1, p.temporal_kernel}));
    m.layers.push_back(bnorm("bn" + b, p.filters[blk]));
    m.layers.push_back(act("elu" + b, nn::Act::elu));
    m.layers.push_back({"pool" + b, MaxPoolSpec{1, p.pool, 1, p.pool_stride}});
    m.layers.push_back(dropout("drop" + b, p.dropout));
    in_ch = p.filters[blk];
  }

  check_length(m, cfg);
  const Shape feat = nn::infer_shapes(m.layers, m.input_shape).back();
  m.layers.push_back({"flatten", FlattenSpec{}});
  m.layers.push_back({"classifier", DenseSpec{feat.c * feat.h * feat.w, cfg.n_classes}});
  return m;
}

ModelStack build_shallowconvnet(const ArchitectureConfig& cfg) {
  validate_common(cfg);
  const ShallowParams& p = cfg.shallow;

  ModelStack m;
  m.input_shape = {1, 1, cfg.n_channels, static_cast<int>(cfg.n_samples)};
  m.n_classes = cfg.n_classes;

  m.layers.push_back(conv("conv_temporal", {p.filters, 1, 1, p.temporal_kernel}));
  m.layers.push_back(conv("conv_spatial", {p.filters, p.filters, cfg.n_channels, 1}));
  m.layers.push_back(bnorm("bn", p.filters));
  m.layers.push_back(act("square", nn::Act::square));
  m.layers.push_back({"pool", AvgPoolSpec{1, p.pool, 1, p.pool_stride}});
  m.layers.push_back(act("log", nn::Act::safelog));
  m.layers.push_back(dropout("drop", p.dropout));

  check_length(m, cfg);
  const Shape feat = nn::infer_shapes(m.layers, m.input_shape).back();
  m.layers.push_back({"flatten", FlattenSpec{}});
  m.layers.push_back({"classifier", DenseSpec{feat.c * feat.h * feat.w, cfg.n_classes}});
  return m;
}

ModelStack build_eegnet(const ArchitectureConfig& cfg) {
  validate_common(cfg);
  const EegnetParams& p = cfg.eegnet;

  ModelStack m;
  m.input_shape = {1, 1, cfg.n_channels, static_cast<int>(cfg.n_samples)};
  m.n_classes = cfg.n_classes;

  Conv2dSpec temporal{p.f1, 1, 1, p.temporal_kernel};
  temporal.bias = false;
  same_pad_w(temporal);
  m.layers.push_back(conv("conv_temporal", temporal));
  m.layers.push_back(bnorm("bn1", p.f1));

  Conv2dSpec depthwise{p.f1 * p.depth_mult, p.f1, cfg.n_channels, 1};
  depthwise.groups = p.f1;
  depthwise.bias = false;
  m.layers.push_back(conv("conv_depthwise", depthwise));
  m.layers.push_back(bnorm("bn2", p.f1 * p.depth_mult));
  m.layers.push_back(act("elu1", nn::Act::elu));
  m.layers.push_back({"pool1", AvgPoolSpec{1, p.pool1, 1, p.pool1}});
  m.layers.push_back(dropout("drop1", p.dropout));

  Conv2dSpec sep_depth{p.f1 * p.depth_mult, p.f1 * p.depth_mult, 1, p.separable_kernel};
  sep_depth.groups = p.f1 * p.depth_mult;
  sep_depth.bias = false;
  same_pad_w(sep_depth);
  m.layers.push_back(conv("conv_sep_depthwise", sep_depth));

  Conv2dSpec pointwise{p.f2, p.f1 * p.depth_mult, 1, 1};
  pointwise.bias = false;
  m.layers.push_back(conv("conv_sep_pointwise", pointwise));
  m.layers.push_back(bnorm("bn3", p.f2));
  m.layers.push_back(act("elu2", nn::Act::elu));
  m.layers.push_back({"pool2", AvgPoolSpec{1, p.pool2, 1, p.pool2}});
  m.layers.push_back(dropout("drop2", p.dropout));

  check_length(m, cfg);
  const Shape feat = nn::infer_shapes(m.layers, m.input_shape).back();
  m.layers.push_back({"flatten", FlattenSpec{}});
  m.layers.push_back({"classifier", DenseSpec{feat.c * feat.h * feat.w, cfg.n_classes}});
  return m;
}

ModelStack attach_sefe(const ModelStack& stack, const SefeConfig& sefe) {
  const std::size_t n = stack.layers.size();
  if (n < 2 || !stack.layers[n - 2].is<FlattenSpec>() || !stack.layers[n - 1].is<DenseSpec>()) {
    throw Error(ErrorCategory::invalid_argument,
                "stack must end with flatten followed by dense to attach the encoder");
  }
  const Shape feat = stack.pre_flatten_shape();
  const int c_f = feat.c;
  const int t_f = feat.h * feat.w;  // electrode axis already collapsed

  ModelStack out = stack;
  out.layers.pop_back();
  out.layers.pop_back();

  out.layers.push_back(conv("sefe_conv1", {sefe.hidden_channels, c_f, 1, 1}));
  out.layers.push_back(act("sefe_relu", nn::Act::relu));
  out.layers.push_back(conv("sefe_conv2", {sefe.output_channels, sefe.hidden_channels, 1, 1}));
  out.layers.push_back({"flatten", FlattenSpec{}});
  out.layers.push_back({"classifier",
                        DenseSpec{sefe.output_channels * t_f, stack.n_classes}});
  return out;
}

ModelStack build_model(const ArchitectureConfig& cfg) {
  ModelStack m;
  switch (cfg.backbone) {
    case Backbone::deep: m = build_deepconvnet(cfg); break;
    case Backbone::shallow: m = build_shallowconvnet(cfg); break;
    case Backbone::eegnet: m = build_eegnet(cfg); break;
  }
  if (cfg.with_sefe) m = attach_sefe(m, cfg.sefe);
  return m;
}

long reference_param_total(Backbone b, bool with_sefe) {
  switch (b) {
    case Backbone::deep: return with_sefe ? 318669 : 108485;
    case Backbone::shallow: return with_sefe ? 108224 : 103520;
    case Backbone::eegnet: return with_sefe ? 9832 : 3400;
  }
  return 0;
}

AuditReport audit_parameters(const ArchitectureConfig& cfg) {
  ArchitectureConfig base = cfg;
  base.with_sefe = false;

  const ModelStack without = build_model(base);
  const ModelStack with = attach_sefe(without, cfg.sefe);

  AuditReport r;
  r.backbone = cfg.backbone;

  const auto count_without = nn::count_params(without.layers);
  const auto count_with = nn::count_params(with.layers);
  for (const auto& lc : count_without.per_layer) r.without_sefe.push_back({lc.name, lc.shape, lc.count});
  for (const auto& lc : count_with.per_layer) r.with_sefe.push_back({lc.name, lc.shape, lc.count});
  r.total_without = count_without.total;
  r.total_with = count_with.total;
  r.delta = r.total_with - r.total_without;

  const Shape feat = without.pre_flatten_shape();
  const long c_f = feat.c;
  const long t_f = static_cast<long>(feat.h) * feat.w;
  const long hid = cfg.sefe.hidden_channels;
  const long out = cfg.sefe.output_channels;
  r.closed_form_delta = (c_f * hid + hid) + (hid * out + out) +
                        (out - c_f) * t_f * cfg.n_classes;

  r.reference_without = reference_param_total(cfg.backbone, false);
  r.reference_with = reference_param_total(cfg.backbone, true);
  r.rel_deviation_without =
      static_cast<double>(r.total_without - r.reference_without) / r.reference_without;
  r.rel_deviation_with =
      static_cast<double>(r.total_with - r.reference_with) / r.reference_with;
  return r;
}

std::string to_text(const AuditReport& r) {
  std::ostringstream ss;
  ss << "model: " << to_string(r.backbone) << "\n";
  auto table = [&ss](const char* title, const std::vector<AuditRow>& rows) {
    ss << title << "\n";
    for (const AuditRow& row : rows) {
      ss << "  " << row.layer << "  [" << row.shape << "]  " << row.count << "\n";
    }
  };
  table("layers (without sefe):", r.without_sefe);
  table("layers (with sefe):", r.with_sefe);
  ss << "total_without = " << r.total_without << "\n";
  ss << "total_with = " << r.total_with << "\n";
  ss << "delta = " << r.delta << "\n";
  ss << "closed_form_delta = " << r.closed_form_delta << "\n";
  ss << "reference_without = " << r.reference_without << "\n";
  ss << "reference_with = " << r.reference_with << "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", r.rel_deviation_without);
  ss << "rel_deviation_without = " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.4f", r.rel_deviation_with);
  ss << "rel_deviation_with = " << buf << "\n";
  return ss.str();
}

}  // namespace eegdec::models

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "eegdec/common.hpp"

namespace eegdec::nn {

// Layout: batch x feature channels x electrode axis x time axis.
struct Shape {
  int n = 0, c = 0, h = 0, w = 0;

  std::size_t count() const {
    return static_cast<std::size_t>(n) * c * h * w;
  }
  bool operator==(const Shape&) const = default;
  std::string str() const;
};

struct Tensor {
  Shape shape;
  std::vector<double> v;

  static Tensor zeros(Shape s) {
    Tensor t;
    t.shape = s;
    t.v.assign(s.count(), 0.0);
    return t;
  }

  double& at(int n, int c, int h, int w) {
    return v[((static_cast<std::size_t>(n) * shape.c + c) * shape.h + h) * shape.w + w];
  }
  double at(int n, int c, int h, int w) const {
    return v[((static_cast<std::size_t>(n) * shape.c + c) * shape.h + h) * shape.w + w];
  }
  double* plane(int n, int c) {
    return v.data() + (static_cast<std::size_t>(n) * shape.c + c) * shape.h * shape.w;
  }
  const double* plane(int n, int c) const {
    return v.data() + (static_cast<std::size_t>(n) * shape.c + c) * shape.h * shape.w;
  }
};

enum class Act { relu, elu, square, safelog };

// log(max(x, eps)); the square activation upstream keeps inputs non-negative.
inline constexpr double kSafeLogEps = 1e-6;

struct Conv2dSpec {
  int out_channels = 1;
  int in_channels = 1;
  int kh = 1, kw = 1;
  int stride_h = 1, stride_w = 1;
  int pad_top = 0, pad_bottom = 0, pad_left = 0, pad_right = 0;
  int groups = 1;
  bool bias = true;
};

struct BatchNormSpec {
  int channels = 0;
  double momentum = 0.1;
  double epsilon = 1e-5;
};

struct ActivationSpec {
  Act fn = Act::relu;
};

struct MaxPoolSpec {
  int kh = 1, kw = 1;
  int stride_h = 1, stride_w = 1;
};

struct AvgPoolSpec {
  int kh = 1, kw = 1;
  int stride_h = 1, stride_w = 1;
};

struct DropoutSpec {
  double rate = 0.5;
};

struct FlattenSpec {};

struct DenseSpec {
  int in = 0, out = 0;
  bool bias = true;
};

using LayerConfig = std::variant<Conv2dSpec, BatchNormSpec, ActivationSpec, MaxPoolSpec,
                                 AvgPoolSpec, DropoutSpec, FlattenSpec, DenseSpec>;

struct LayerSpec {
  std::string name;
  LayerConfig config;

  template <typename T>
  bool is() const { return std::holds_alternative<T>(config); }
  template <typename T>
  const T& as() const { return std::get<T>(config); }

  const char* kind() const;
};

using LayerStack = std::vector<LayerSpec>;

// Parameters and (for batch norm) running statistics of one layer.
struct LayerParams {
  std::vector<double> weight;        // conv/dense
  std::vector<double> bias;          // conv/dense
  std::vector<double> gamma, beta;   // batch norm affine
  std::vector<double> running_mean;  // batch norm state, not trainable
  std::vector<double> running_var;
};

struct ParamStore {
  std::vector<LayerParams> layers;
};

enum class Mode { train, eval };

struct LayerCache {
  Tensor input;
  Shape out_shape;
  // batch norm
  Tensor bn_xhat;
  std::vector<double> bn_inv_std;
  // max pool
  std::vector<std::size_t> pool_argmax;
  // dropout multipliers (0 or 1/(1-rate))
  std::vector<double> dropout_mask;
};

struct ForwardCache {
  Mode mode = Mode::train;
  std::vector<LayerCache> layers;
};

// Output shape of one layer; throws on invalid configurations (e.g. feature
// map shrunk below the kernel).
Shape infer_output_shape(const LayerSpec& layer, const Shape& in);

// Per-layer output shapes for a whole stack; errors name the layer index.
std::vector<Shape> infer_shapes(const LayerStack& stack, const Shape& input);

// Deterministic given (input, params, mode, seed). Dropout is active only in
// train mode; batch norm uses batch statistics in train mode (and updates the
// running statistics in `params`) and running statistics in eval mode.
Tensor forward(const LayerStack& stack, ParamStore& params, const Tensor& input,
               Mode mode, std::uint64_t seed, ForwardCache* cache = nullptr);

struct GradientStore {
  std::vector<LayerParams> layers;  // same layout as ParamStore, trainables only
};

struct BackwardResult {
  Tensor input_grad;
  GradientStore grads;
};

// Gradients of the scalar loss w.r.t. the input and all trainable parameters;
// `cache` must come from a matching train-mode forward call.
BackwardResult backward(const LayerStack& stack, const ParamStore& params,
                        const ForwardCache& cache, const Tensor& upstream);

struct LossResult {
  double loss = 0.0;
  Tensor logit_grad;
};

// Mean over the batch of -log softmax(logits)[label].
LossResult softmax_xent(const Tensor& logits, const std::vector<int>& labels);

struct LayerCount {
  std::string name;
  std::string shape;
  long count = 0;
};

struct ParamCountReport {
  std::vector<LayerCount> per_layer;
  long total = 0;
};

ParamCountReport count_params(const LayerStack& stack);

// Variance-scaled symmetric (uniform) initialization: 2/fan_in ahead of
// relu/elu activations, 1/fan_in otherwise; zero biases; batch norm at
// identity. Deterministic under the seed.
ParamStore init_params(const LayerStack& stack, std::uint64_t seed);

}  // namespace eegdec::nn

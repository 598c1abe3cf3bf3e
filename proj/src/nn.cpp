#include "eegdec/nn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace eegdec::nn {

namespace {

[[noreturn]] void shape_error(std::size_t layer_index, const LayerSpec& layer,
                              const std::string& detail) {
  throw Error(ErrorCategory::shape,
              "layer " + std::to_string(layer_index) + " (" + layer.name + ", " +
                  layer.kind() + "): " + detail);
}

}  // namespace

std::string Shape::str() const {
  std::ostringstream ss;
  ss << n << "x" << c << "x" << h << "x" << w;
  return ss.str();
}

const char* LayerSpec::kind() const {
  switch (config.index()) {
    case 0: return "conv2d";
    case 1: return "batch_norm";
    case 2: return "activation";
    case 3: return "max_pool";
    case 4: return "avg_pool";
    case 5: return "dropout";
    case 6: return "flatten";
    case 7: return "dense";
  }
  return "unknown";
}

Shape infer_output_shape(const LayerSpec& layer, const Shape& in) {
  if (in.n < 1 || in.c < 1 || in.h < 1 || in.w < 1) {
    throw Error(ErrorCategory::shape, "input shape " + in.str() + " has empty dimensions");
  }
  if (const auto* c = std::get_if<Conv2dSpec>(&layer.config)) {
    if (c->in_channels != in.c) {
      throw Error(ErrorCategory::shape, "conv expects " + std::to_string(c->in_channels) +
                                            " input channels, got " + std::to_string(in.c));
    }
    if (c->groups < 1 || c->in_channels % c->groups != 0 || c->out_channels % c->groups != 0) {
      throw Error(ErrorCategory::shape, "conv group count must divide channel counts");
    }
    if (c->kh < 1 || c->kw < 1 || c->stride_h < 1 || c->stride_w < 1) {
      throw Error(ErrorCategory::shape, "conv kernel and stride must be positive");
    }
    const int ih = in.h + c->pad_top + c->pad_bottom;
    const int iw = in.w + c->pad_left + c->pad_right;
    if (ih < c->kh || iw < c->kw) {
      throw Error(ErrorCategory::shape, "feature map " + in.str() + " smaller than kernel " +
                                            std::to_string(c->kh) + "x" + std::to_string(c->kw));
    }
    return {in.n, c->out_channels, (ih - c->kh) / c->stride_h + 1,
            (iw - c->kw) / c->stride_w + 1};
  }
  if (const auto* b = std::get_if<BatchNormSpec>(&layer.config)) {
    if (b->channels != in.c) {
      throw Error(ErrorCategory::shape, "batch norm over " + std::to_string(b->channels) +
                                            " channels applied to " + std::to_string(in.c));
    }
    return in;
  }
  if (std::holds_alternative<ActivationSpec>(layer.config)) return in;
  if (const auto* p = std::get_if<MaxPoolSpec>(&layer.config)) {
    if (in.h < p->kh || in.w < p->kw) {
      throw Error(ErrorCategory::shape, "feature map " + in.str() + " smaller than pool window");
    }
    return {in.n, in.c, (in.h - p->kh) / p->stride_h + 1, (in.w - p->kw) / p->stride_w + 1};
  }
  if (const auto* p = std::get_if<AvgPoolSpec>(&layer.config)) {
    if (in.h < p->kh || in.w < p->kw) {
      throw Error(ErrorCategory::shape, "feature map " + in.str() + " smaller than pool window");
    }
    return {in.n, in.c, (in.h - p->kh) / p->stride_h + 1, (in.w - p->kw) / p->stride_w + 1};
  }
  if (const auto* d = std::get_if<DropoutSpec>(&layer.config)) {
    if (d->rate < 0.0 || d->rate >= 1.0) {
      throw Error(ErrorCategory::invalid_argument, "dropout rate must lie in [0, 1)");
    }
    return in;
  }
  if (std::holds_alternative<FlattenSpec>(layer.config)) {
    return {in.n, in.c * in.h * in.w, 1, 1};
  }
  if (const auto* d = std::get_if<DenseSpec>(&layer.config)) {
    const int flat = in.c * in.h * in.w;
    if (flat != d->in) {
      throw Error(ErrorCategory::shape, "dense expects " + std::to_string(d->in) +
                                            " inputs, got " + in.str());
    }
    return {in.n, d->out, 1, 1};
  }
  throw Error(ErrorCategory::invalid_argument, "unknown layer kind");
}

std::vector<Shape> infer_shapes(const LayerStack& stack, const Shape& input) {
  std::vector<Shape> shapes;
  shapes.reserve(stack.size());
  Shape cur = input;
  for (std::size_t i = 0; i < stack.size(); ++i) {
    try {
      cur = infer_output_shape(stack[i], cur);
    } catch (const Error& e) {
      shape_error(i, stack[i], e.what());
    }
    shapes.push_back(cur);
  }
  return shapes;
}

// ---------------------------------------------------------------------------
// conv2d

namespace {

void conv2d_forward(const Conv2dSpec& c, const Tensor& x, const LayerParams& p, Tensor& y) {
  const Shape& is = x.shape;
  const Shape& os = y.shape;
  const int icg = c.in_channels / c.groups;
  const int ocg = c.out_channels / c.groups;
  const std::size_t kelems = static_cast<std::size_t>(icg) * c.kh * c.kw;

  for (int n = 0; n < is.n; ++n) {
    for (int oc = 0; oc < c.out_channels; ++oc) {
      double* out = y.plane(n, oc);
      const double b = c.bias ? p.bias[oc] : 0.0;
      std::fill(out, out + static_cast<std::size_t>(os.h) * os.w, b);
      const int g = oc / ocg;
      for (int k = 0; k < icg; ++k) {
        const int ic = g * icg + k;
        const double* in = x.plane(n, ic);
        const double* wk = p.weight.data() + oc * kelems + static_cast<std::size_t>(k) * c.kh * c.kw;
        for (int kh = 0; kh < c.kh; ++kh) {
          for (int kw = 0; kw < c.kw; ++kw) {
            const double wv = wk[kh * c.kw + kw];
            if (wv == 0.0) continue;
            if (c.stride_h == 1 && c.stride_w == 1) {
              for (int oh = 0; oh < os.h; ++oh) {
                const int ih = oh - c.pad_top + kh;
                if (ih < 0 || ih >= is.h) continue;
                const int shift = kw - c.pad_left;
                const int ow_lo = std::max(0, -shift);
                const int ow_hi = std::min(os.w, is.w - shift);
                const double* src = in + static_cast<std::size_t>(ih) * is.w + shift;
                double* dst = out + static_cast<std::size_t>(oh) * os.w;
                for (int ow = ow_lo; ow < ow_hi; ++ow) dst[ow] += wv * src[ow];
              }
            } else {
              for (int oh = 0; oh < os.h; ++oh) {
                const int ih = oh * c.stride_h - c.pad_top + kh;
                if (ih < 0 || ih >= is.h) continue;
                const double* src = in + static_cast<std::size_t>(ih) * is.w;
                double* dst = out + static_cast<std::size_t>(oh) * os.w;
                for (int ow = 0; ow < os.w; ++ow) {
                  const int iw = ow * c.stride_w - c.pad_left + kw;
                  if (iw >= 0 && iw < is.w) dst[ow] += wv * src[iw];
                }
              }
            }
          }
        }
      }
    }
  }
}

void conv2d_backward(const Conv2dSpec& c, const Tensor& x, const LayerParams& p,
                     const Tensor& gy, Tensor& gx, LayerParams& gp) {
  const Shape& is = x.shape;
  const Shape& os = gy.shape;
  const int icg = c.in_channels / c.groups;
  const int ocg = c.out_channels / c.groups;
  const std::size_t kelems = static_cast<std::size_t>(icg) * c.kh * c.kw;

  gp.weight.assign(p.weight.size(), 0.0);
  if (c.bias) gp.bias.assign(p.bias.size(), 0.0);

  for (int n = 0; n < is.n; ++n) {
    for (int oc = 0; oc < c.out_channels; ++oc) {
      const double* g = gy.plane(n, oc);
      if (c.bias) {
        double acc = 0.0;
        for (std::size_t i = 0; i < static_cast<std::size_t>(os.h) * os.w; ++i) acc += g[i];
        gp.bias[oc] += acc;
      }
      const int grp = oc / ocg;
      for (int k = 0; k < icg; ++k) {
        const int ic = grp * icg + k;
        const double* in = x.plane(n, ic);
        double* gin = gx.plane(n, ic);
        const std::size_t wbase = oc * kelems + static_cast<std::size_t>(k) * c.kh * c.kw;
        for (int kh = 0; kh < c.kh; ++kh) {
          for (int kw = 0; kw < c.kw; ++kw) {
            const double wv = p.weight[wbase + kh * c.kw + kw];
            double wacc = 0.0;
            if (c.stride_h == 1 && c.stride_w == 1) {
              const int shift = kw - c.pad_left;
              const int ow_lo = std::max(0, -shift);
              const int ow_hi = std::min(os.w, is.w - shift);
              for (int oh = 0; oh < os.h; ++oh) {
                const int ih = oh - c.pad_top + kh;
                if (ih < 0 || ih >= is.h) continue;
                const double* src = in + static_cast<std::size_t>(ih) * is.w + shift;
                double* gsrc = gin + static_cast<std::size_t>(ih) * is.w + shift;
                const double* grow = g + static_cast<std::size_t>(oh) * os.w;
                for (int ow = ow_lo; ow < ow_hi; ++ow) {
                  wacc += grow[ow] * src[ow];
                  gsrc[ow] += wv * grow[ow];
                }
              }
            } else {
              for (int oh = 0; oh < os.h; ++oh) {
                const int ih = oh * c.stride_h - c.pad_top + kh;
                if (ih < 0 || ih >= is.h) continue;
                const double* src = in + static_cast<std::size_t>(ih) * is.w;
                double* gsrc = gin + static_cast<std::size_t>(ih) * is.w;
                const double* grow = g + static_cast<std::size_t>(oh) * os.w;
                for (int ow = 0; ow < os.w; ++ow) {
                  const int iw = ow * c.stride_w - c.pad_left + kw;
                  if (iw < 0 || iw >= is.w) continue;
                  wacc += grow[ow] * src[iw];
                  gsrc[iw] += wv * grow[ow];
                }
              }
            }
            gp.weight[wbase + kh * c.kw + kw] += wacc;
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// batch norm

void batch_norm_forward(const BatchNormSpec& b, const Tensor& x, LayerParams& p,
                        Mode mode, Tensor& y, LayerCache* cache) {
  const Shape s = x.shape;
  const std::size_t plane = static_cast<std::size_t>(s.h) * s.w;
  const double m_count = static_cast<double>(s.n) * plane;

  std::vector<double> mean(s.c), var(s.c);
  if (mode == Mode::train) {
    for (int c = 0; c < s.c; ++c) {
      double acc = 0.0;
      for (int n = 0; n < s.n; ++n) {
        const double* in = x.plane(n, c);
        for (std::size_t i = 0; i < plane; ++i) acc += in[i];
      }
      mean[c] = acc / m_count;
      double vacc = 0.0;
      for (int n = 0; n < s.n; ++n) {
        const double* in = x.plane(n, c);
        for (std::size_t i = 0; i < plane; ++i) {
          const double d = in[i] - mean[c];
          vacc += d * d;
        }
      }
      var[c] = vacc / m_count;
      p.running_mean[c] = (1.0 - b.momentum) * p.running_mean[c] + b.momentum * mean[c];
      p.running_var[c] = (1.0 - b.momentum) * p.running_var[c] + b.momentum * var[c];
    }
  } else {
    mean = p.running_mean;
    var = p.running_var;
  }

  if (cache) {
    cache->bn_xhat = Tensor::zeros(s);
    cache->bn_inv_std.resize(s.c);
  }
  for (int c = 0; c < s.c; ++c) {
    const double inv_std = 1.0 / std::sqrt(var[c] + b.epsilon);
    if (cache) cache->bn_inv_std[c] = inv_std;
    const double gam = p.gamma[c];
    const double bet = p.beta[c];
    const double mu = mean[c];
    for (int n = 0; n < s.n; ++n) {
      const double* in = x.plane(n, c);
      double* out = y.plane(n, c);
      double* xh = cache ? cache->bn_xhat.plane(n, c) : nullptr;
      for (std::size_t i = 0; i < plane; ++i) {
        const double xhat = (in[i] - mu) * inv_std;
        if (xh) xh[i] = xhat;
        out[i] = gam * xhat + bet;
      }
    }
  }
}

void batch_norm_backward(const BatchNormSpec&, const LayerParams& p, const LayerCache& cache,
                         Mode mode, const Tensor& gy, Tensor& gx, LayerParams& gp) {
  const Shape s = gy.shape;
  const std::size_t plane = static_cast<std::size_t>(s.h) * s.w;
  const double m_count = static_cast<double>(s.n) * plane;

  gp.gamma.assign(p.gamma.size(), 0.0);
  gp.beta.assign(p.beta.size(), 0.0);

  for (int c = 0; c < s.c; ++c) {
    double sum_g = 0.0, sum_gx = 0.0;
    for (int n = 0; n < s.n; ++n) {
      const double* g = gy.plane(n, c);
      const double* xh = cache.bn_xhat.plane(n, c);
      for (std::size_t i = 0; i < plane; ++i) {
        sum_g += g[i];
        sum_gx += g[i] * xh[i];
      }
    }
    gp.gamma[c] = sum_gx;
    gp.beta[c] = sum_g;

    const double gam_inv_std = p.gamma[c] * cache.bn_inv_std[c];
    if (mode == Mode::train) {
      const double mean_g = sum_g / m_count;
      const double mean_gx = sum_gx / m_count;
      for (int n = 0; n < s.n; ++n) {
        const double* g = gy.plane(n, c);
        const double* xh = cache.bn_xhat.plane(n, c);
        double* out = gx.plane(n, c);
        for (std::size_t i = 0; i < plane; ++i) {
          out[i] = gam_inv_std * (g[i] - mean_g - xh[i] * mean_gx);
        }
      }
    } else {
      for (int n = 0; n < s.n; ++n) {
        const double* g = gy.plane(n, c);
        double* out = gx.plane(n, c);
        for (std::size_t i = 0; i < plane; ++i) out[i] = gam_inv_std * g[i];
      }
    }
  }
}

// ---------------------------------------------------------------------------
// activations

double act_forward_value(Act fn, double x) {
  switch (fn) {
    case Act::relu: return x > 0.0 ? x : 0.0;
    case Act::elu: return x > 0.0 ? x : std::expm1(x);
    case Act::square: return x * x;
    case Act::safelog: return std::log(std::max(x, kSafeLogEps));
  }
  return x;
}

double act_backward_value(Act fn, double x, double g) {
  switch (fn) {
    case Act::relu: return x > 0.0 ? g : 0.0;
    case Act::elu: return x > 0.0 ? g : g * std::exp(x);
    case Act::square: return 2.0 * x * g;
    case Act::safelog: return x > kSafeLogEps ? g / x : 0.0;
  }
  return g;
}

// ---------------------------------------------------------------------------
// pooling

void max_pool_forward(const MaxPoolSpec& p, const Tensor& x, Tensor& y, LayerCache* cache) {
  const Shape& is = x.shape;
  const Shape& os = y.shape;
  if (cache) cache->pool_argmax.assign(os.count(), 0);
  std::size_t oi = 0;
  for (int n = 0; n < is.n; ++n) {
    for (int c = 0; c < is.c; ++c) {
      const double* in = x.plane(n, c);
      for (int oh = 0; oh < os.h; ++oh) {
        for (int ow = 0; ow < os.w; ++ow, ++oi) {
          const int h0 = oh * p.stride_h;
          const int w0 = ow * p.stride_w;
          double best = in[static_cast<std::size_t>(h0) * is.w + w0];
          std::size_t best_idx = static_cast<std::size_t>(h0) * is.w + w0;
          for (int kh = 0; kh < p.kh; ++kh) {
            for (int kw = 0; kw < p.kw; ++kw) {
              const std::size_t idx = static_cast<std::size_t>(h0 + kh) * is.w + (w0 + kw);
              if (in[idx] > best) {
                best = in[idx];
                best_idx = idx;
              }
            }
          }
          y.v[oi] = best;
          if (cache) {
            cache->pool_argmax[oi] =
                (static_cast<std::size_t>(n) * is.c + c) * is.h * is.w + best_idx;
          }
        }
      }
    }
  }
}

void avg_pool_forward(const AvgPoolSpec& p, const Tensor& x, Tensor& y) {
  const Shape& is = x.shape;
  const Shape& os = y.shape;
  const double inv = 1.0 / (static_cast<double>(p.kh) * p.kw);
  std::size_t oi = 0;
  for (int n = 0; n < is.n; ++n) {
    for (int c = 0; c < is.c; ++c) {
      const double* in = x.plane(n, c);
      for (int oh = 0; oh < os.h; ++oh) {
        for (int ow = 0; ow < os.w; ++ow, ++oi) {
          const int h0 = oh * p.stride_h;
          const int w0 = ow * p.stride_w;
          double acc = 0.0;
          for (int kh = 0; kh < p.kh; ++kh) {
            const double* row = in + static_cast<std::size_t>(h0 + kh) * is.w + w0;
            for (int kw = 0; kw < p.kw; ++kw) acc += row[kw];
          }
          y.v[oi] = acc * inv;
        }
      }
    }
  }
}

void avg_pool_backward(const AvgPoolSpec& p, const Shape& is, const Tensor& gy, Tensor& gx) {
  const Shape& os = gy.shape;
  const double inv = 1.0 / (static_cast<double>(p.kh) * p.kw);
  std::size_t oi = 0;
  for (int n = 0; n < is.n; ++n) {
    for (int c = 0; c < is.c; ++c) {
      double* gin = gx.plane(n, c);
      for (int oh = 0; oh < os.h; ++oh) {
        for (int ow = 0; ow < os.w; ++ow, ++oi) {
          const double g = gy.v[oi] * inv;
          const int h0 = oh * p.stride_h;
          const int w0 = ow * p.stride_w;
          for (int kh = 0; kh < p.kh; ++kh) {
            double* row = gin + static_cast<std::size_t>(h0 + kh) * is.w + w0;
            for (int kw = 0; kw < p.kw; ++kw) row[kw] += g;
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// dense

void dense_forward(const DenseSpec& d, const Tensor& x, const LayerParams& p, Tensor& y) {
  const int n_batch = x.shape.n;
  for (int n = 0; n < n_batch; ++n) {
    const double* in = x.v.data() + static_cast<std::size_t>(n) * d.in;
    double* out = y.v.data() + static_cast<std::size_t>(n) * d.out;
    for (int o = 0; o < d.out; ++o) {
      const double* w = p.weight.data() + static_cast<std::size_t>(o) * d.in;
      double acc = d.bias ? p.bias[o] : 0.0;
      for (int i = 0; i < d.in; ++i) acc += w[i] * in[i];
      out[o] = acc;
    }
  }
}

void dense_backward(const DenseSpec& d, const Tensor& x, const LayerParams& p,
                    const Tensor& gy, Tensor& gx, LayerParams& gp) {
  const int n_batch = x.shape.n;
  gp.weight.assign(p.weight.size(), 0.0);
  if (d.bias) gp.bias.assign(p.bias.size(), 0.0);
  for (int n = 0; n < n_batch; ++n) {
    const double* in = x.v.data() + static_cast<std::size_t>(n) * d.in;
    const double* g = gy.v.data() + static_cast<std::size_t>(n) * d.out;
    double* gin = gx.v.data() + static_cast<std::size_t>(n) * d.in;
    for (int o = 0; o < d.out; ++o) {
      const double go = g[o];
      if (d.bias) gp.bias[o] += go;
      const double* w = p.weight.data() + static_cast<std::size_t>(o) * d.in;
      double* gw = gp.weight.data() + static_cast<std::size_t>(o) * d.in;
      for (int i = 0; i < d.in; ++i) {
        gw[i] += go * in[i];
        gin[i] += go * w[i];
      }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Tensor forward(const LayerStack& stack, ParamStore& params, const Tensor& input,
               Mode mode, std::uint64_t seed, ForwardCache* cache) {
  if (params.layers.size() != stack.size()) {
    throw Error(ErrorCategory::shape, "parameter store does not match the layer stack");
  }
  if (cache) {
    cache->mode = mode;
    cache->layers.assign(stack.size(), LayerCache{});
  }

  Tensor cur = input;
  for (std::size_t li = 0; li < stack.size(); ++li) {
    const LayerSpec& layer = stack[li];
    Shape out_shape;
    try {
      out_shape = infer_output_shape(layer, cur.shape);
    } catch (const Error& e) {
      shape_error(li, layer, e.what());
    }
    LayerCache* lc = cache ? &cache->layers[li] : nullptr;
    if (lc) {
      lc->input = cur;
      lc->out_shape = out_shape;
    }

    Tensor out = Tensor::zeros(out_shape);
    if (const auto* c = std::get_if<Conv2dSpec>(&layer.config)) {
      conv2d_forward(*c, cur, params.layers[li], out);
    } else if (const auto* b = std::get_if<BatchNormSpec>(&layer.config)) {
      batch_norm_forward(*b, cur, params.layers[li], mode, out, lc);
    } else if (const auto* a = std::get_if<ActivationSpec>(&layer.config)) {
      for (std::size_t i = 0; i < cur.v.size(); ++i) out.v[i] = act_forward_value(a->fn, cur.v[i]);
    } else if (const auto* p = std::get_if<MaxPoolSpec>(&layer.config)) {
      max_pool_forward(*p, cur, out, lc);
    } else if (const auto* p = std::get_if<AvgPoolSpec>(&layer.config)) {
      avg_pool_forward(*p, cur, out);
    } else if (const auto* d = std::get_if<DropoutSpec>(&layer.config)) {
      if (mode == Mode::train && d->rate > 0.0) {
        Rng rng(derive_seed(seed, 0xD0, li));
        const double keep_scale = 1.0 / (1.0 - d->rate);
        if (lc) lc->dropout_mask.resize(cur.v.size());
        for (std::size_t i = 0; i < cur.v.size(); ++i) {
          const double m = rng.uniform01() < d->rate ? 0.0 : keep_scale;
          if (lc) lc->dropout_mask[i] = m;
          out.v[i] = cur.v[i] * m;
        }
      } else {
        out.v = cur.v;
      }
    } else if (std::holds_alternative<FlattenSpec>(layer.config)) {
      out.v = cur.v;
    } else if (const auto* d = std::get_if<DenseSpec>(&layer.config)) {
      dense_forward(*d, cur, params.layers[li], out);
    }
    cur = std::move(out);
  }
  return cur;
}

BackwardResult backward(const LayerStack& stack, const ParamStore& params,
                        const ForwardCache& cache, const Tensor& upstream) {
  if (cache.layers.size() != stack.size()) {
    throw Error(ErrorCategory::shape, "cache does not match the layer stack");
  }
  if (!stack.empty() && upstream.shape != cache.layers.back().out_shape) {
    throw Error(ErrorCategory::shape,
                "upstream gradient shape " + upstream.shape.str() + " does not match output " +
                    cache.layers.back().out_shape.str());
  }

  BackwardResult result;
  result.grads.layers.assign(stack.size(), LayerParams{});

  Tensor g = upstream;
  for (std::size_t idx = stack.size(); idx-- > 0;) {
    const LayerSpec& layer = stack[idx];
    const LayerCache& lc = cache.layers[idx];
    Tensor gx = Tensor::zeros(lc.input.shape);

    if (const auto* c = std::get_if<Conv2dSpec>(&layer.config)) {
      conv2d_backward(*c, lc.input, params.layers[idx], g, gx, result.grads.layers[idx]);
    } else if (const auto* b = std::get_if<BatchNormSpec>(&layer.config)) {
      batch_norm_backward(*b, params.layers[idx], lc, cache.mode, g, gx,
                          result.grads.layers[idx]);
    } else if (const auto* a = std::get_if<ActivationSpec>(&layer.config)) {
      for (std::size_t i = 0; i < g.v.size(); ++i) {
        gx.v[i] = act_backward_value(a->fn, lc.input.v[i], g.v[i]);
      }
    } else if (std::holds_alternative<MaxPoolSpec>(layer.config)) {
      for (std::size_t i = 0; i < g.v.size(); ++i) gx.v[lc.pool_argmax[i]] += g.v[i];
    } else if (const auto* p = std::get_if<AvgPoolSpec>(&layer.config)) {
      avg_pool_backward(*p, lc.input.shape, g, gx);
    } else if (std::holds_alternative<DropoutSpec>(layer.config)) {
      if (!lc.dropout_mask.empty()) {
        for (std::size_t i = 0; i < g.v.size(); ++i) gx.v[i] = g.v[i] * lc.dropout_mask[i];
      } else {
        gx.v = g.v;
      }
    } else if (std::holds_alternative<FlattenSpec>(layer.config)) {
      gx.v = g.v;
    } else if (const auto* d = std::get_if<DenseSpec>(&layer.config)) {
      dense_backward(*d, lc.input, params.layers[idx], g, gx, result.grads.layers[idx]);
    }
    g = std::move(gx);
  }
  result.input_grad = std::move(g);
  return result;
}

LossResult softmax_xent(const Tensor& logits, const std::vector<int>& labels) {
  const int n = logits.shape.n;
  const int k = logits.shape.c * logits.shape.h * logits.shape.w;
  if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCategory::shape, "label count does not match batch size");
  }

  LossResult r;
  r.logit_grad = Tensor::zeros(logits.shape);
  double loss = 0.0;
  for (int i = 0; i < n; ++i) {
    if (labels[i] < 0 || labels[i] >= k) {
      throw Error(ErrorCategory::invalid_argument,
                  "label " + std::to_string(labels[i]) + " out of range for " +
                      std::to_string(k) + " classes");
    }
    const double* row = logits.v.data() + static_cast<std::size_t>(i) * k;
    double mx = row[0];
    for (int j = 1; j < k; ++j) mx = std::max(mx, row[j]);
    double denom = 0.0;
    for (int j = 0; j < k; ++j) denom += std::exp(row[j] - mx);
    const double log_denom = std::log(denom) + mx;
    loss += log_denom - row[labels[i]];

    double* grow = r.logit_grad.v.data() + static_cast<std::size_t>(i) * k;
    for (int j = 0; j < k; ++j) {
      const double soft = std::exp(row[j] - log_denom);
      grow[j] = (soft - (j == labels[i] ? 1.0 : 0.0)) / n;
    }
  }
  r.loss = loss / n;
  return r;
}

ParamCountReport count_params(const LayerStack& stack) {
  ParamCountReport report;
  for (const LayerSpec& layer : stack) {
    LayerCount lc;
    lc.name = layer.name;
    if (const auto* c = std::get_if<Conv2dSpec>(&layer.config)) {
      const int icg = c->in_channels / c->groups;
      lc.count = static_cast<long>(c->out_channels) * icg * c->kh * c->kw +
                 (c->bias ? c->out_channels : 0);
      std::ostringstream ss;
      ss << c->out_channels << "x" << icg << "x" << c->kh << "x" << c->kw
         << (c->bias ? "+b" : "");
      lc.shape = ss.str();
    } else if (const auto* b = std::get_if<BatchNormSpec>(&layer.config)) {
      lc.count = 2L * b->channels;
      lc.shape = "2x" + std::to_string(b->channels);
    } else if (const auto* d = std::get_if<DenseSpec>(&layer.config)) {
      lc.count = static_cast<long>(d->out) * d->in + (d->bias ? d->out : 0);
      lc.shape = std::to_string(d->out) + "x" + std::to_string(d->in) + (d->bias ? "+b" : "");
    } else {
      lc.count = 0;
      lc.shape = "-";
    }
    report.total += lc.count;
    report.per_layer.push_back(std::move(lc));
  }
  return report;
}

ParamStore init_params(const LayerStack& stack, std::uint64_t seed) {
  ParamStore store;
  store.layers.resize(stack.size());

  // gain 2/fan_in ahead of relu/elu, 1/fan_in otherwise
  auto downstream_gain = [&stack](std::size_t li) {
    for (std::size_t j = li + 1; j < stack.size(); ++j) {
      if (const auto* a = std::get_if<ActivationSpec>(&stack[j].config)) {
        return (a->fn == Act::relu || a->fn == Act::elu) ? 2.0 : 1.0;
      }
      if (stack[j].is<Conv2dSpec>() || stack[j].is<DenseSpec>()) break;
    }
    return 1.0;
  };

  for (std::size_t li = 0; li < stack.size(); ++li) {
    LayerParams& p = store.layers[li];
    Rng rng(derive_seed(seed, 0x1417, li));
    if (const auto* c = std::get_if<Conv2dSpec>(&stack[li].config)) {
      const int icg = c->in_channels / c->groups;
      const double fan_in = static_cast<double>(icg) * c->kh * c->kw;
      const double a = std::sqrt(3.0 * downstream_gain(li) / fan_in);
      p.weight.resize(static_cast<std::size_t>(c->out_channels) * icg * c->kh * c->kw);
      for (double& w : p.weight) w = rng.uniform(-a, a);
      if (c->bias) p.bias.assign(c->out_channels, 0.0);
    } else if (const auto* b = std::get_if<BatchNormSpec>(&stack[li].config)) {
      p.gamma.assign(b->channels, 1.0);
      p.beta.assign(b->channels, 0.0);
      p.running_mean.assign(b->channels, 0.0);
      p.running_var.assign(b->channels, 1.0);
    } else if (const auto* d = std::get_if<DenseSpec>(&stack[li].config)) {
      const double a = std::sqrt(3.0 * downstream_gain(li) / d->in);
      p.weight.resize(static_cast<std::size_t>(d->out) * d->in);
      for (double& w : p.weight) w = rng.uniform(-a, a);
      if (d->bias) p.bias.assign(d->out, 0.0);
    }
  }
  return store;
}

}  // namespace eegdec::nn

#include "eegdec/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eegdec::train {

void TrainConfig::validate() const {
  if (batch_size < 1) throw Error(ErrorCategory::invalid_argument, "batch_size must be >= 1");
  if (max_epochs < 1) throw Error(ErrorCategory::invalid_argument, "max_epochs must be >= 1");
  if (patience < 0 || patience > max_epochs) {
    throw Error(ErrorCategory::invalid_argument, "patience must lie in [0, max_epochs]");
  }
  if (step_size <= 0.0) throw Error(ErrorCategory::invalid_argument, "step_size must be positive");
}

nn::Tensor to_tensor(const EpochSet& epochs, const std::vector<long>& trial_indices) {
  nn::Tensor t = nn::Tensor::zeros({static_cast<int>(trial_indices.size()), 1,
                                    epochs.n_channels, static_cast<int>(epochs.n_samples)});
  const std::size_t stride = static_cast<std::size_t>(epochs.n_channels) * epochs.n_samples;
  for (std::size_t i = 0; i < trial_indices.size(); ++i) {
    const double* src = epochs.trial(trial_indices[i]);
    std::copy(src, src + stride, t.v.begin() + i * stride);
  }
  return t;
}

namespace {

// Adam moment buffers mirroring the trainable entries of a ParamStore.
struct Moments {
  std::vector<nn::LayerParams> m, v;
};

Moments make_moments(const nn::ParamStore& params) {
  Moments mom;
  mom.m.resize(params.layers.size());
  mom.v.resize(params.layers.size());
  for (std::size_t i = 0; i < params.layers.size(); ++i) {
    const nn::LayerParams& p = params.layers[i];
    mom.m[i].weight.assign(p.weight.size(), 0.0);
    mom.m[i].bias.assign(p.bias.size(), 0.0);
    mom.m[i].gamma.assign(p.gamma.size(), 0.0);
    mom.m[i].beta.assign(p.beta.size(), 0.0);
    mom.v[i] = mom.m[i];
  }
  return mom;
}

void adam_update(std::vector<double>& param, const std::vector<double>& grad,
                 std::vector<double>& m, std::vector<double>& v, const TrainConfig& cfg,
                 double bias_corr1, double bias_corr2) {
  for (std::size_t i = 0; i < param.size(); ++i) {
    m[i] = cfg.beta1 * m[i] + (1.0 - cfg.beta1) * grad[i];
    v[i] = cfg.beta2 * v[i] + (1.0 - cfg.beta2) * grad[i] * grad[i];
    const double mhat = m[i] / bias_corr1;
    const double vhat = v[i] / bias_corr2;
    param[i] -= cfg.step_size * mhat / (std::sqrt(vhat) + cfg.epsilon);
  }
}

struct EvalResult {
  double loss = 0.0;
  double acc = 0.0;
};

EvalResult eval_pass(const models::ModelStack& model, nn::ParamStore& params,
                     const EpochSet& set, int batch_size) {
  EvalResult r;
  long correct = 0;
  double loss_sum = 0.0;
  for (long start = 0; start < set.n_trials; start += batch_size) {
    const long end = std::min<long>(start + batch_size, set.n_trials);
    std::vector<long> idx(end - start);
    std::iota(idx.begin(), idx.end(), start);
    nn::Tensor x = to_tensor(set, idx);
    nn::Tensor logits = nn::forward(model.layers, params, x, nn::Mode::eval, 0);
    std::vector<int> labels(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) labels[i] = set.labels[idx[i]];
    nn::LossResult lr = nn::softmax_xent(logits, labels);
    loss_sum += lr.loss * static_cast<double>(idx.size());

    const int k = logits.shape.c;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const double* row = logits.v.data() + i * k;
      int arg = 0;
      for (int j = 1; j < k; ++j) {
        if (row[j] > row[arg]) arg = j;
      }
      if (arg == labels[i]) ++correct;
    }
  }
  r.loss = loss_sum / static_cast<double>(set.n_trials);
  r.acc = static_cast<double>(correct) / static_cast<double>(set.n_trials);
  return r;
}

}  // namespace

TrainResult train(const models::ModelStack& model, const EpochSet& train_set,
                  const EpochSet& val_set, const TrainConfig& cfg) {
  cfg.validate();
  if (train_set.n_trials == 0 || val_set.n_trials == 0) {
    throw Error(ErrorCategory::invalid_argument, "train and validation sets must be non-empty");
  }
  if (train_set.n_channels != model.input_shape.h ||
      train_set.n_samples != model.input_shape.w) {
    throw Error(ErrorCategory::shape,
                "epochs of " + std::to_string(train_set.n_channels) + "x" +
                    std::to_string(train_set.n_samples) + " do not match model input " +
                    std::to_string(model.input_shape.h) + "x" +
                    std::to_string(model.input_shape.w));
  }

  nn::ParamStore params = nn::init_params(model.layers, derive_seed(cfg.seed, 0x111));
  Moments mom = make_moments(params);

  TrainResult result;
  nn::ParamStore best_params = params;
  double best_val_acc = -1.0;
  int best_epoch = 0;
  int epochs_since_best = 0;
  long step = 0;

  std::vector<long> order(train_set.n_trials);
  std::iota(order.begin(), order.end(), 0L);

  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    Rng shuffle_rng(derive_seed(cfg.seed, 0x5f1e, static_cast<std::uint64_t>(epoch)));
    shuffle(order, shuffle_rng);

    double loss_sum = 0.0;
    long correct = 0;
    for (long start = 0; start < train_set.n_trials; start += cfg.batch_size) {
      const long end = std::min<long>(start + cfg.batch_size, train_set.n_trials);
      std::vector<long> idx(order.begin() + start, order.begin() + end);
      nn::Tensor x = to_tensor(train_set, idx);
      std::vector<int> labels(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) labels[i] = train_set.labels[idx[i]];

      nn::ForwardCache cache;
      const std::uint64_t batch_seed =
          derive_seed(cfg.seed, 0xba7c, static_cast<std::uint64_t>(epoch),
                      static_cast<std::uint64_t>(start));
      nn::Tensor logits = nn::forward(model.layers, params, x, nn::Mode::train, batch_seed, &cache);
      nn::LossResult lr = nn::softmax_xent(logits, labels);
      if (!std::isfinite(lr.loss)) {
        throw Error(ErrorCategory::numeric,
                    "training diverged (non-finite loss) at epoch " + std::to_string(epoch));
      }
      loss_sum += lr.loss * static_cast<double>(idx.size());
      const int k = logits.shape.c;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        const double* row = logits.v.data() + i * k;
        int arg = 0;
        for (int j = 1; j < k; ++j) {
          if (row[j] > row[arg]) arg = j;
        }
        if (arg == labels[i]) ++correct;
      }

      nn::BackwardResult back = nn::backward(model.layers, params, cache, lr.logit_grad);

      ++step;
      const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(step));
      const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(step));
      for (std::size_t li = 0; li < params.layers.size(); ++li) {
        nn::LayerParams& p = params.layers[li];
        nn::LayerParams& g = back.grads.layers[li];
        if (!p.weight.empty()) adam_update(p.weight, g.weight, mom.m[li].weight, mom.v[li].weight, cfg, bc1, bc2);
        if (!p.bias.empty() && !g.bias.empty()) adam_update(p.bias, g.bias, mom.m[li].bias, mom.v[li].bias, cfg, bc1, bc2);
        if (!p.gamma.empty()) adam_update(p.gamma, g.gamma, mom.m[li].gamma, mom.v[li].gamma, cfg, bc1, bc2);
        if (!p.beta.empty()) adam_update(p.beta, g.beta, mom.m[li].beta, mom.v[li].beta, cfg, bc1, bc2);
      }
    }

    EpochStats stats;
    stats.train_loss = loss_sum / static_cast<double>(train_set.n_trials);
    stats.train_acc = static_cast<double>(correct) / static_cast<double>(train_set.n_trials);
    EvalResult val = eval_pass(model, params, val_set, cfg.batch_size);
    stats.val_loss = val.loss;
    stats.val_acc = val.acc;
    result.history.push_back(stats);

    if (val.acc > best_val_acc) {
      best_val_acc = val.acc;
      best_params = params;
      best_epoch = epoch;
      epochs_since_best = 0;
    } else {
      if (val.acc == best_val_acc) {
        // tie: keep the later checkpoint (batch-norm running statistics are
        // fresher once training has settled)
        best_params = params;
        best_epoch = epoch;
      }
      ++epochs_since_best;
    }
    if (epochs_since_best >= cfg.patience) break;
  }

  result.params = std::move(best_params);
  result.best_epoch = best_epoch;
  return result;
}

double evaluate(const models::ModelStack& model, const nn::ParamStore& params,
                const EpochSet& test_set) {
  if (test_set.n_trials == 0) {
    throw Error(ErrorCategory::invalid_argument, "test set must be non-empty");
  }
  nn::ParamStore local = params;  // eval mode never mutates, but forward takes mutable
  return eval_pass(model, local, test_set, 64).acc;
}

}  // namespace eegdec::train

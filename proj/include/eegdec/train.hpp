#pragma once

#include <cstdint>
#include <vector>

#include "eegdec/models.hpp"
#include "eegdec/nn.hpp"
#include "eegdec/types.hpp"

namespace eegdec::train {

struct TrainConfig {
  double step_size = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int batch_size = 32;
  int max_epochs = 200;
  int patience = 20;  // epochs without validation improvement before stopping
  std::uint64_t seed = 0;

  void validate() const;
};

struct EpochStats {
  double train_loss = 0.0;
  double train_acc = 0.0;
  double val_loss = 0.0;
  double val_acc = 0.0;
};

struct TrainResult {
  nn::ParamStore params;  // best-validation-epoch checkpoint
  std::vector<EpochStats> history;
  int best_epoch = 0;  // 1-based
};

// Mini-batch gradient descent with adaptive moments on softmax cross-entropy.
// Keeps the parameters of the best validation epoch; stops once `patience`
// epochs pass without improvement. Deterministic under cfg.seed.
TrainResult train(const models::ModelStack& model, const EpochSet& train_set,
                  const EpochSet& val_set, const TrainConfig& cfg);

// Eval-mode forward; returns correct / total.
double evaluate(const models::ModelStack& model, const nn::ParamStore& params,
                const EpochSet& test_set);

// Batch of epochs as a network input tensor.
nn::Tensor to_tensor(const EpochSet& epochs, const std::vector<long>& trial_indices);

}  // namespace eegdec::train

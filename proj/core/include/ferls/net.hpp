#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ferls/numerics.hpp"

namespace ferls {

// Small feed-forward network: tanh hidden layers, identity output.
// weights[l] is (layer_sizes[l+1] x layer_sizes[l]); column-batched
// forward/backward so callers can push whole datasets through one GEMM.
struct Mlp {
  std::vector<int> layer_sizes;
  std::vector<Mat> weights;
  std::vector<Vec> biases;
  std::uint64_t seed = 0;  // recorded init seed, for checkpoints

  int input_dim() const { return layer_sizes.front(); }
  int output_dim() const { return layer_sizes.back(); }
  int num_layers() const { return static_cast<int>(weights.size()); }

  static Mlp xavier(const std::vector<int>& sizes, std::uint64_t seed);
};

// Per-parameter gradient accumulator aligned with an Mlp.
struct GradTape {
  std::vector<Mat> dw;
  std::vector<Vec> db;

  static GradTape zeros_like(const Mlp& net);
  void add(const GradTape& other);
  void scale(double s);
  bool finite() const;
  double max_abs() const;
};

// Post-activation values per layer for one batch; acts[0] is the input.
// tanh'(z) = 1 - tanh(z)^2, so post-activations are all backward needs.
struct ForwardTrace {
  std::vector<Mat> acts;
};

Vec forward(const Mlp& net, const Vec& input);
Mat forward_batch(const Mlp& net, const Mat& inputs);
Mat forward_batch_traced(const Mlp& net, const Mat& inputs, ForwardTrace& trace);

/// Gradient of <cotangent, forward(net, input)> with respect to every
/// parameter. If input_cotangent is non-null it also receives the gradient
/// with respect to the input (needed to chain through unrolled integrators).
GradTape backward(const Mlp& net, const Vec& input, const Vec& cotangent,
                  Vec* input_cotangent = nullptr);

/// Batched reverse pass over a cached forward trace. Accumulates parameter
/// gradients into `accum` and returns the per-column input cotangents.
Mat backward_batch(const Mlp& net, const ForwardTrace& trace,
                   const Mat& cotangents, GradTape& accum);

struct AdamState {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  long step = 0;
  std::vector<Mat> m_w, v_w;
  std::vector<Vec> m_b, v_b;

  static AdamState init(const Mlp& net, double lr);
};

/// Standard Adam update, in place. Throws NonFiniteGradient if the tape or
/// the updated parameters are non-finite.
void adam_step(AdamState& state, Mlp& net, const GradTape& grads);

// Checkpoint format: {layer_sizes, activation, weights, biases, seed}.
nlohmann::json mlp_to_json(const Mlp& net);
Mlp mlp_from_json(const nlohmann::json& j);

}  // namespace ferls

#ifndef GLYPHNET_MLP_HPP
#define GLYPHNET_MLP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "glyphnet/features.hpp"

namespace glyphnet {

enum class Activation { Identity, Logsig, Tansig };

std::string_view to_string(Activation a) noexcept;
/// Throws InvalidArgument for anything other than identity/logsig/tansig.
Activation parse_activation(std::string_view tag);

/// 1 / (1 + exp(-x))
double logsig(double x) noexcept;
/// 2 / (1 + exp(-2x)) - 1
double tansig(double x) noexcept;

double activate(Activation a, double x) noexcept;
/// Derivative expressed through the activation output y.
double activation_slope(Activation a, double y) noexcept;

struct LayerSpec {
  std::size_t units = 0;
  Activation activation = Activation::Identity;

  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

class NetworkTopology {
 public:
  /// Throws InvalidArgument unless there are >= 2 layers, the first is an
  /// identity input layer, and every later layer is logsig or tansig.
  explicit NetworkTopology(std::vector<LayerSpec> layers);

  /// [25 input, 25 logsig, 25 tansig, 26 logsig]
  static NetworkTopology multiclass(std::size_t inputs = 25);
  /// [25 input, 25 logsig, 25 tansig, 1 logsig]
  static NetworkTopology one_vs_rest(std::size_t inputs = 25);

  const std::vector<LayerSpec>& layers() const noexcept { return layers_; }
  std::size_t input_width() const noexcept { return layers_.front().units; }
  std::size_t output_width() const noexcept { return layers_.back().units; }

  friend bool operator==(const NetworkTopology&, const NetworkTopology&) = default;

 private:
  std::vector<LayerSpec> layers_;
};

/// Weights (rows = this layer's units, cols = previous layer's units,
/// row-major) and biases of one non-input layer. Also used for gradients.
struct LayerParams {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> weights;
  std::vector<double> biases;

  LayerParams() = default;
  LayerParams(std::size_t rows, std::size_t cols)
      : rows(rows), cols(cols), weights(rows * cols, 0.0), biases(rows, 0.0) {}

  double& w(std::size_t r, std::size_t c) { return weights[r * cols + c]; }
  double w(std::size_t r, std::size_t c) const { return weights[r * cols + c]; }

  friend bool operator==(const LayerParams&, const LayerParams&) = default;
};

using Gradient = std::vector<LayerParams>;

class Network {
 public:
  /// Zero-initialized parameters.
  explicit Network(NetworkTopology topology);
  /// Throws ShapeMismatch or NonFiniteValue when params do not fit.
  Network(NetworkTopology topology, std::vector<LayerParams> params);

  const NetworkTopology& topology() const noexcept { return topology_; }
  /// params()[l - 1] belongs to layer l.
  const std::vector<LayerParams>& params() const noexcept { return params_; }
  std::vector<LayerParams>& mutable_params() noexcept { return params_; }

  std::size_t parameter_count() const noexcept;

 private:
  NetworkTopology topology_;
  std::vector<LayerParams> params_;
};

/// Bit-level equality (distinguishes -0.0 from 0.0 and compares NaNs by payload).
bool bit_identical(const Network& a, const Network& b) noexcept;

enum class InitMode {
  Paper,      ///< uniform [0, 1)
  Symmetric,  ///< uniform [-0.5, 0.5)
};

/// Batch: one step per epoch on the mean gradient. PerSample: one step per
/// sample, in sample order.
enum class UpdateMode { Batch, PerSample };

struct TrainConfig {
  double learning_rate = 0.05;
  std::size_t max_epochs = 1000;
  double tolerance = 0.005;
  InitMode init_mode = InitMode::Symmetric;
  UpdateMode update_mode = UpdateMode::PerSample;
  std::uint64_t seed = 1;

  /// Throws InvalidArgument for learning_rate <= 0, max_epochs == 0 or a
  /// negative tolerance.
  void validate() const;
};

enum class StopReason { ToleranceMet, MaxEpochs };

std::string_view to_string(StopReason r) noexcept;

struct TrainReport {
  std::size_t epochs_run = 0;
  double final_mean_loss = 0.0;
  StopReason stop_reason = StopReason::MaxEpochs;
};

struct Sample {
  std::vector<double> input;
  std::vector<double> target;
};

/// Draws every layer's weights (row-major) then biases, layer by layer, from
/// a DeterministicRng seeded with config.seed.
Network init_network(const NetworkTopology& topology, const TrainConfig& config);

/// Activations of every layer; the input is element 0 and the output last.
std::vector<std::vector<double>> forward(const Network& net, std::span<const double> input);

/// Half the summed squared error.
double loss(std::span<const double> output, std::span<const double> target);

/// Arithmetic mean of the per-sample loss. Throws EmptyDataset.
double mean_loss(const Network& net, std::span<const Sample> samples);

/// Exact gradient of the per-sample loss with respect to every parameter.
Gradient backprop(const Network& net, std::span<const double> input,
                  std::span<const double> target);

/// p <- p - learning_rate * g for every parameter.
Network gd_step(const Network& net, const Gradient& gradient, double learning_rate);

struct TrainResult {
  Network network;
  TrainReport report;
};

/// Gradient descent until the mean loss is <= tolerance or max_epochs
/// epochs have run. The loss is evaluated before every epoch, so a network
/// that already meets the tolerance reports zero epochs.
TrainResult train(Network net, std::span<const Sample> samples, const TrainConfig& config);

struct Prediction {
  /// Arg-max output index (lowest index on ties).
  std::size_t label = 0;
  /// For single-output networks: output >= 0.5.
  bool positive = false;
  std::vector<double> outputs;
};

Prediction predict(const Network& net, std::span<const double> features);
Prediction predict(const Network& net, const FeatureVector& features);

/// Index of the maximum, lowest index on ties. Empty input returns 0.
std::size_t argmax(std::span<const double> values) noexcept;

/// Relative error |a - n| / max(1e-12, |a| + |n|).
double relative_error(double analytic, double numeric) noexcept;

/// Largest relative error between backprop and central differences over
/// every parameter of a seeded network with random binary input and a
/// random one-hot target. Throws InvalidEpsilon for epsilon <= 0.
double gradient_check(const NetworkTopology& topology, std::uint64_t seed, double epsilon);

}  // namespace glyphnet

#endif  // GLYPHNET_MLP_HPP

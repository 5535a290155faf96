#include "glyphnet/mlp.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "glyphnet/error.hpp"
#include "glyphnet/rng.hpp"

namespace glyphnet {

std::string_view to_string(Activation a) noexcept {
  switch (a) {
    case Activation::Identity: return "identity";
    case Activation::Logsig: return "logsig";
    case Activation::Tansig: return "tansig";
  }
  return "identity";
}

Activation parse_activation(std::string_view tag) {
  if (tag == "identity") return Activation::Identity;
  if (tag == "logsig") return Activation::Logsig;
  if (tag == "tansig") return Activation::Tansig;
  throw Error(ErrorKind::InvalidArgument, "unknown activation tag '" + std::string(tag) + "'");
}

std::string_view to_string(StopReason r) noexcept {
  return r == StopReason::ToleranceMet ? "tolerance_met" : "max_epochs";
}

double logsig(double x) noexcept { return 1.0 / (1.0 + std::exp(-x)); }

double tansig(double x) noexcept { return 2.0 / (1.0 + std::exp(-2.0 * x)) - 1.0; }

double activate(Activation a, double x) noexcept {
  switch (a) {
    case Activation::Logsig: return logsig(x);
    case Activation::Tansig: return tansig(x);
    case Activation::Identity: break;
  }
  return x;
}

double activation_slope(Activation a, double y) noexcept {
  switch (a) {
    case Activation::Logsig: return y * (1.0 - y);
    case Activation::Tansig: return 1.0 - y * y;
    case Activation::Identity: break;
  }
  return 1.0;
}

NetworkTopology::NetworkTopology(std::vector<LayerSpec> layers) : layers_(std::move(layers)) {
  if (layers_.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "a network needs at least two layers");
  }
  if (layers_.front().activation != Activation::Identity) {
    throw Error(ErrorKind::InvalidArgument, "the input layer must use the identity activation");
  }
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    if (layers_[l].units == 0) {
      throw Error(ErrorKind::InvalidArgument, "layer " + std::to_string(l) + " has no units");
    }
    if (l > 0 && layers_[l].activation == Activation::Identity) {
      throw Error(ErrorKind::InvalidArgument,
                  "layer " + std::to_string(l) + " must use logsig or tansig");
    }
  }
}

NetworkTopology NetworkTopology::multiclass(std::size_t inputs) {
  return NetworkTopology({{inputs, Activation::Identity},
                          {25, Activation::Logsig},
                          {25, Activation::Tansig},
                          {26, Activation::Logsig}});
}

NetworkTopology NetworkTopology::one_vs_rest(std::size_t inputs) {
  return NetworkTopology({{inputs, Activation::Identity},
                          {25, Activation::Logsig},
                          {25, Activation::Tansig},
                          {1, Activation::Logsig}});
}

namespace {

std::vector<LayerParams> zero_params(const NetworkTopology& topology) {
  std::vector<LayerParams> params;
  const auto& layers = topology.layers();
  for (std::size_t l = 1; l < layers.size(); ++l) {
    params.emplace_back(layers[l].units, layers[l - 1].units);
  }
  return params;
}

void require(bool ok, ErrorKind kind, const char* what) {
  if (!ok) throw Error(kind, what);
}

}  // namespace

Network::Network(NetworkTopology topology)
    : topology_(std::move(topology)), params_(zero_params(topology_)) {}

Network::Network(NetworkTopology topology, std::vector<LayerParams> params)
    : topology_(std::move(topology)), params_(std::move(params)) {
  const auto& layers = topology_.layers();
  if (params_.size() != layers.size() - 1) {
    throw Error(ErrorKind::ShapeMismatch, "parameter block count does not match the topology");
  }
  for (std::size_t l = 1; l < layers.size(); ++l) {
    const auto& p = params_[l - 1];
    if (p.rows != layers[l].units || p.cols != layers[l - 1].units ||
        p.weights.size() != p.rows * p.cols || p.biases.size() != p.rows) {
      throw Error(ErrorKind::ShapeMismatch,
                  "layer " + std::to_string(l) + " parameters do not match the topology");
    }
    for (double v : p.weights) require(std::isfinite(v), ErrorKind::NonFiniteValue, "weight");
    for (double v : p.biases) require(std::isfinite(v), ErrorKind::NonFiniteValue, "bias");
  }
}

std::size_t Network::parameter_count() const noexcept {
  std::size_t n = 0;
  for (const auto& p : params_) n += p.weights.size() + p.biases.size();
  return n;
}

bool bit_identical(const Network& a, const Network& b) noexcept {
  if (!(a.topology() == b.topology())) return false;
  const auto same = [](const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (std::bit_cast<std::uint64_t>(x[i]) != std::bit_cast<std::uint64_t>(y[i])) return false;
    }
    return true;
  };
  for (std::size_t l = 0; l < a.params().size(); ++l) {
    if (!same(a.params()[l].weights, b.params()[l].weights) ||
        !same(a.params()[l].biases, b.params()[l].biases)) {
      return false;
    }
  }
  return true;
}

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw Error(ErrorKind::InvalidArgument, "learning rate must be > 0");
  }
  if (max_epochs == 0) throw Error(ErrorKind::InvalidArgument, "max_epochs must be >= 1");
  if (!(tolerance >= 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be >= 0");
}

Network init_network(const NetworkTopology& topology, const TrainConfig& config) {
  DeterministicRng rng(config.seed);
  const double lo = config.init_mode == InitMode::Paper ? 0.0 : -0.5;
  Network net(topology);
  for (auto& p : net.mutable_params()) {
    for (auto& w : p.weights) w = lo + rng.next_unit();
    for (auto& b : p.biases) b = lo + rng.next_unit();
  }
  return net;
}

namespace {

void check_input(const Network& net, std::span<const double> input) {
  if (input.size() != net.topology().input_width()) {
    throw Error(ErrorKind::DimensionMismatch,
                "input has " + std::to_string(input.size()) + " values, network expects " +
                    std::to_string(net.topology().input_width()));
  }
}

void check_target(const Network& net, std::span<const double> target) {
  if (target.size() != net.topology().output_width()) {
    throw Error(ErrorKind::DimensionMismatch,
                "target has " + std::to_string(target.size()) + " values, network emits " +
                    std::to_string(net.topology().output_width()));
  }
}

// Reusable buffers for the training loop.
struct Workspace {
  std::vector<std::vector<double>> acts;
  std::vector<std::vector<double>> deltas;

  explicit Workspace(const NetworkTopology& t) {
    for (const auto& layer : t.layers()) {
      acts.emplace_back(layer.units, 0.0);
      deltas.emplace_back(layer.units, 0.0);
    }
  }
};

void forward_into(const Network& net, std::span<const double> input, Workspace& ws) {
  const auto& layers = net.topology().layers();
  std::copy(input.begin(), input.end(), ws.acts[0].begin());
  for (std::size_t l = 1; l < layers.size(); ++l) {
    const auto& p = net.params()[l - 1];
    const auto& prev = ws.acts[l - 1];
    auto& out = ws.acts[l];
    for (std::size_t r = 0; r < p.rows; ++r) {
      double z = p.biases[r];
      const double* row = &p.weights[r * p.cols];
      for (std::size_t c = 0; c < p.cols; ++c) z += row[c] * prev[c];
      out[r] = activate(layers[l].activation, z);
    }
  }
}

// Adds scale * dLoss/dParams for one sample into `grad`; ws must hold the
// forward activations for that sample.
void accumulate_gradient(const Network& net, std::span<const double> target, Workspace& ws,
                         Gradient& grad, double scale) {
  const auto& layers = net.topology().layers();
  const std::size_t last = layers.size() - 1;
  for (std::size_t k = 0; k < layers[last].units; ++k) {
    const double y = ws.acts[last][k];
    ws.deltas[last][k] = (y - target[k]) * activation_slope(layers[last].activation, y);
  }
  for (std::size_t l = last; l >= 1; --l) {
    const auto& p = net.params()[l - 1];
    auto& g = grad[l - 1];
    const auto& delta = ws.deltas[l];
    const auto& prev = ws.acts[l - 1];
    for (std::size_t r = 0; r < p.rows; ++r) {
      const double d = scale * delta[r];
      g.biases[r] += d;
      double* grow = &g.weights[r * p.cols];
      for (std::size_t c = 0; c < p.cols; ++c) grow[c] += d * prev[c];
    }
    if (l == 1) break;
    auto& back = ws.deltas[l - 1];
    for (std::size_t c = 0; c < p.cols; ++c) {
      double s = 0.0;
      for (std::size_t r = 0; r < p.rows; ++r) s += p.w(r, c) * delta[r];
      back[c] = s * activation_slope(layers[l - 1].activation, prev[c]);
    }
  }
}

void apply_step(Network& net, const Gradient& grad, double learning_rate) {
  auto& params = net.mutable_params();
  for (std::size_t l = 0; l < params.size(); ++l) {
    for (std::size_t i = 0; i < params[l].weights.size(); ++i) {
      params[l].weights[i] -= learning_rate * grad[l].weights[i];
    }
    for (std::size_t i = 0; i < params[l].biases.size(); ++i) {
      params[l].biases[i] -= learning_rate * grad[l].biases[i];
    }
  }
}

void zero(Gradient& grad) {
  for (auto& g : grad) {
    std::fill(g.weights.begin(), g.weights.end(), 0.0);
    std::fill(g.biases.begin(), g.biases.end(), 0.0);
  }
}

double mean_loss_with(const Network& net, std::span<const Sample> samples, Workspace& ws) {
  double total = 0.0;
  for (const auto& s : samples) {
    forward_into(net, s.input, ws);
    total += loss(ws.acts.back(), s.target);
  }
  return total / static_cast<double>(samples.size());
}

}  // namespace

std::vector<std::vector<double>> forward(const Network& net, std::span<const double> input) {
  check_input(net, input);
  Workspace ws(net.topology());
  forward_into(net, input, ws);
  return std::move(ws.acts);
}

double loss(std::span<const double> output, std::span<const double> target) {
  if (output.size() != target.size()) {
    throw Error(ErrorKind::DimensionMismatch, "output and target lengths differ");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < output.size(); ++k) {
    const double d = output[k] - target[k];
    sum += d * d;
  }
  return 0.5 * sum;
}

double mean_loss(const Network& net, std::span<const Sample> samples) {
  if (samples.empty()) throw Error(ErrorKind::EmptyDataset, "no samples");
  for (const auto& s : samples) {
    check_input(net, s.input);
    check_target(net, s.target);
  }
  Workspace ws(net.topology());
  return mean_loss_with(net, samples, ws);
}

Gradient backprop(const Network& net, std::span<const double> input,
                  std::span<const double> target) {
  check_input(net, input);
  check_target(net, target);
  Workspace ws(net.topology());
  Gradient grad = zero_params(net.topology());
  forward_into(net, input, ws);
  accumulate_gradient(net, target, ws, grad, 1.0);
  return grad;
}

Network gd_step(const Network& net, const Gradient& gradient, double learning_rate) {
  const auto& params = net.params();
  bool ok = gradient.size() == params.size();
  for (std::size_t l = 0; ok && l < params.size(); ++l) {
    ok = gradient[l].weights.size() == params[l].weights.size() &&
         gradient[l].biases.size() == params[l].biases.size();
  }
  if (!ok) throw Error(ErrorKind::DimensionMismatch, "gradient shape does not match network");
  Network out = net;
  apply_step(out, gradient, learning_rate);
  return out;
}

TrainResult train(Network net, std::span<const Sample> samples, const TrainConfig& config) {
  config.validate();
  if (samples.empty()) throw Error(ErrorKind::EmptyDataset, "no training samples");
  for (const auto& s : samples) {
    check_input(net, s.input);
    check_target(net, s.target);
  }

  Workspace ws(net.topology());
  Gradient grad = zero_params(net.topology());
  const double inv_n = 1.0 / static_cast<double>(samples.size());

  TrainReport report;
  for (std::size_t epoch = 0;; ++epoch) {
    report.final_mean_loss = mean_loss_with(net, samples, ws);
    report.epochs_run = epoch;
    if (report.final_mean_loss <= config.tolerance) {
      report.stop_reason = StopReason::ToleranceMet;
      break;
    }
    if (epoch == config.max_epochs) {
      report.stop_reason = StopReason::MaxEpochs;
      break;
    }
    if (config.update_mode == UpdateMode::Batch) {
      zero(grad);
      for (const auto& s : samples) {
        forward_into(net, s.input, ws);
        accumulate_gradient(net, s.target, ws, grad, inv_n);
      }
      apply_step(net, grad, config.learning_rate);
    } else {
      for (const auto& s : samples) {
        zero(grad);
        forward_into(net, s.input, ws);
        accumulate_gradient(net, s.target, ws, grad, 1.0);
        apply_step(net, grad, config.learning_rate);
      }
    }
  }
  return {std::move(net), report};
}

std::size_t argmax(std::span<const double> values) noexcept {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

Prediction predict(const Network& net, std::span<const double> features) {
  auto acts = forward(net, features);
  Prediction p;
  p.outputs = std::move(acts.back());
  p.label = argmax(p.outputs);
  p.positive = p.outputs.size() == 1 && p.outputs[0] >= 0.5;
  return p;
}

Prediction predict(const Network& net, const FeatureVector& features) {
  const auto reals = features.as_reals();
  return predict(net, std::span<const double>(reals));
}

double relative_error(double analytic, double numeric) noexcept {
  return std::abs(analytic - numeric) /
         std::max(1e-12, std::abs(analytic) + std::abs(numeric));
}

double gradient_check(const NetworkTopology& topology, std::uint64_t seed, double epsilon) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorKind::InvalidEpsilon, "epsilon must be > 0");
  }
  TrainConfig cfg;
  cfg.seed = seed;
  Network net = init_network(topology, cfg);

  DeterministicRng rng(mix_seed(seed, 0));
  std::vector<double> input(topology.input_width());
  for (auto& v : input) v = rng.next_unit() < 0.5 ? 0.0 : 1.0;
  std::vector<double> target(topology.output_width(), 0.0);
  target[rng.next_u64() % target.size()] = 1.0;

  const Gradient analytic = backprop(net, input, target);
  Workspace ws(topology);
  const auto sample_loss = [&] {
    forward_into(net, input, ws);
    return loss(ws.acts.back(), target);
  };

  double worst = 0.0;
  const auto probe = [&](double& param, double a) {
    const double saved = param;
    param = saved + epsilon;
    const double up = sample_loss();
    param = saved - epsilon;
    const double down = sample_loss();
    param = saved;
    worst = std::max(worst, relative_error(a, (up - down) / (2.0 * epsilon)));
  };
  auto& params = net.mutable_params();
  for (std::size_t l = 0; l < params.size(); ++l) {
    for (std::size_t i = 0; i < params[l].weights.size(); ++i) {
      probe(params[l].weights[i], analytic[l].weights[i]);
    }
    for (std::size_t i = 0; i < params[l].biases.size(); ++i) {
      probe(params[l].biases[i], analytic[l].biases[i]);
    }
  }
  return worst;
}

}  // namespace glyphnet

#include "absynth/ops/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace absynth::ops {

std::string name_of(OperatorKind op) {
  switch (op) {
    case OperatorKind::ReLU: return "relu";
    case OperatorKind::ReLU6: return "relu6";
    case OperatorKind::HardTanh: return "hardtanh";
    case OperatorKind::HardSigmoid: return "hardsigmoid";
    case OperatorKind::HardSwish: return "hardswish";
    case OperatorKind::GELU: return "gelu";
    case OperatorKind::ELU: return "elu";
    case OperatorKind::Sigmoid: return "sigmoid";
    case OperatorKind::Abs: return "abs";
    case OperatorKind::Affine: return "affine";
    case OperatorKind::Add: return "add";
  }
  return "?";
}

std::optional<OperatorKind> parse_operator(const std::string& token) {
  std::string t;
  t.reserve(token.size());
  for (char c : token) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  static const std::pair<const char*, OperatorKind> table[] = {
      {"relu", OperatorKind::ReLU},
      {"relu6", OperatorKind::ReLU6},
      {"hardtanh", OperatorKind::HardTanh},
      {"hardsigmoid", OperatorKind::HardSigmoid},
      {"hardswish", OperatorKind::HardSwish},
      {"gelu", OperatorKind::GELU},
      {"elu", OperatorKind::ELU},
      {"sigmoid", OperatorKind::Sigmoid},
      {"abs", OperatorKind::Abs},
      {"affine", OperatorKind::Affine},
      {"add", OperatorKind::Add},
  };
  for (const auto& [name, kind] : table)
    if (t == name) return kind;
  return std::nullopt;
}

int arity_of(OperatorKind op) {
  switch (op) {
    case OperatorKind::Add: return 2;
    case OperatorKind::Affine: return 0;
    default: return 1;
  }
}

const std::vector<double>& breakpoints_of(OperatorKind op) {
  static const std::vector<double> none;
  static const std::vector<double> zero{0.0};
  static const std::vector<double> relu6{0.0, 6.0};
  static const std::vector<double> tanh_k{-1.0, 1.0};
  static const std::vector<double> sig_k{-3.0, 3.0};
  switch (op) {
    case OperatorKind::ReLU: return zero;
    case OperatorKind::ReLU6: return relu6;
    case OperatorKind::HardTanh: return tanh_k;
    case OperatorKind::HardSigmoid: return sig_k;
    case OperatorKind::HardSwish: return sig_k;
    case OperatorKind::ELU: return zero;
    case OperatorKind::Abs: return zero;
    default: return none;
  }
}

namespace {

double hard_sigmoid(double x) {
  if (x <= -3.0) return 0.0;
  if (x >= 3.0) return 1.0;
  return (x + 3.0) / 6.0;
}

double stable_sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

double eval_unary(OperatorKind op, double x, const OperatorParams& p) {
  switch (op) {
    case OperatorKind::ReLU: return x > 0.0 ? x : 0.0;
    case OperatorKind::ReLU6: return std::clamp(x, 0.0, 6.0);
    case OperatorKind::HardTanh: return std::clamp(x, -1.0, 1.0);
    case OperatorKind::HardSigmoid: return hard_sigmoid(x);
    case OperatorKind::HardSwish: return x * hard_sigmoid(x);
    case OperatorKind::GELU: return 0.5 * x * (1.0 + std::erf(x / std::sqrt(2.0)));
    case OperatorKind::ELU: return x > 0.0 ? x : p.alpha * (std::exp(x) - 1.0);
    case OperatorKind::Sigmoid: return stable_sigmoid(x);
    case OperatorKind::Abs: return std::fabs(x);
    default: throw std::invalid_argument("eval_unary: operator is not unary");
  }
}

}  // namespace

double eval(OperatorKind op, std::span<const double> inputs, const OperatorParams& p) {
  switch (op) {
    case OperatorKind::Add:
      if (inputs.size() != 2) throw std::invalid_argument("add expects 2 inputs");
      return inputs[0] + inputs[1];
    case OperatorKind::Affine: {
      if (inputs.size() != p.weights.size())
        throw std::invalid_argument("affine weight/input arity mismatch");
      double acc = p.bias;
      for (size_t i = 0; i < inputs.size(); ++i) acc += p.weights[i] * inputs[i];
      return acc;
    }
    default:
      if (inputs.size() != 1) throw std::invalid_argument("unary operator expects 1 input");
      return eval_unary(op, inputs[0], p);
  }
}

double eval1(OperatorKind op, double x, const OperatorParams& p) {
  const double in[1] = {x};
  return eval(op, in, p);
}

double numeric_gradient(OperatorKind op, double x, double h, const OperatorParams& p) {
  if (h <= 0.0) throw std::invalid_argument("numeric_gradient: h must be positive");
  auto f = [&](double v) { return eval_unary(op, v, p); };
  for (double b : breakpoints_of(op)) {
    if (std::fabs(x - b) < h) {
      double left = std::fabs(f(x) - f(x - h)) / h;
      double right = std::fabs(f(x + h) - f(x)) / h;
      return std::max(left, right);
    }
  }
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double coordinate_gradient(OperatorKind op, int coord, double x,
                           const OperatorParams& p, double h) {
  switch (op) {
    case OperatorKind::Add: return 1.0;
    case OperatorKind::Affine:
      return coord < static_cast<int>(p.weights.size()) ? std::fabs(p.weights[coord]) : 0.0;
    default:
      (void)coord;
      return numeric_gradient(op, x, h, p);
  }
}

std::vector<double> weights(OperatorKind op, std::span<const double> samples, int coord,
                            const OperatorParams& p) {
  if (samples.empty()) throw std::invalid_argument("weights: empty sample set");
  std::vector<double> phi(samples.size());
  double total = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    double g = std::fabs(coordinate_gradient(op, coord, samples[i], p));
    phi[i] = std::log1p(std::exp(g));
    total += phi[i];
  }
  for (double& w : phi) w /= total;
  return phi;
}

}  // namespace absynth::ops

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace absynth::ops {

enum class OperatorKind {
  ReLU,
  ReLU6,
  HardTanh,
  HardSigmoid,
  HardSwish,
  GELU,
  ELU,
  Sigmoid,
  Abs,
  Affine,
  Add,
};

/// Lower-case token used in CLI flags, config files and transformer rule names.
std::string name_of(OperatorKind op);
std::optional<OperatorKind> parse_operator(const std::string& token);

/// Number of input neurons the operator reads. Affine is variadic (returns 0).
int arity_of(OperatorKind op);

/// Kinks of the piecewise definition; empty for smooth operators.
const std::vector<double>& breakpoints_of(OperatorKind op);

/// Parameters for the non-unary forms. ELU's alpha defaults to 1.
struct OperatorParams {
  std::vector<double> weights;  // Affine only
  double bias = 0.0;            // Affine only
  double alpha = 1.0;           // ELU
};

/// Exact value of the concrete function on the given inputs.
double eval(OperatorKind op, std::span<const double> inputs,
            const OperatorParams& params = {});

/// Unary convenience wrapper.
double eval1(OperatorKind op, double x, const OperatorParams& params = {});

/// Central difference away from breakpoints; at a breakpoint (|x-b| < h) the
/// larger of the two one-sided difference magnitudes.
double numeric_gradient(OperatorKind op, double x, double h = 1e-6,
                        const OperatorParams& params = {});

/// Gradient magnitude along one coordinate of a multi-input operator, holding
/// the others fixed. For Affine this is |w[coord]|, for Add it is 1.
double coordinate_gradient(OperatorKind op, int coord, double x,
                           const OperatorParams& params = {}, double h = 1e-6);

/// Softplus-of-gradient importance weights, normalized to sum to 1.
std::vector<double> weights(OperatorKind op, std::span<const double> samples,
                            int coord = 0, const OperatorParams& params = {});

}  // namespace absynth::ops

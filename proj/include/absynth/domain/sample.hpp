#pragma once

#include <cstdint>
#include <vector>

#include "absynth/domain/element.hpp"

namespace absynth::domain {

/// Uniform grid over the target neuron's box. Endpoints are always included,
/// as are any of `mandatory_points` (operator breakpoints) falling inside.
struct GridSpec {
  double step = 1.0;
  std::vector<double> mandatory_points;
};

/// Grid values for one scalar box under a GridSpec, sorted and deduplicated.
std::vector<double> grid_points(double l, double u, const GridSpec& grid);

/// Finite subset of the concretization. The target neuron sweeps the grid;
/// every other neuron takes its 3-point stencil {l, mid, u}; states violating
/// any affine constraint of the element are filtered out. Deterministic for a
/// fixed seed (the seed only breaks ties in downstream users; sampling itself
/// is fully deterministic).
std::vector<ConcreteState> sample_concretization(const AbstractElement& elem, NeuronId target,
                                                 const GridSpec& grid, uint64_t seed = 0);

/// True iff x satisfies every constraint of every neuron of the element.
bool satisfies(const AbstractElement& elem, const ConcreteState& x, double tol = 1e-9);

}  // namespace absynth::domain

#include "absynth/domain/sample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace absynth::domain {

std::vector<double> grid_points(double l, double u, const GridSpec& grid) {
  if (!(l <= u)) throw std::invalid_argument("grid_points: l > u");
  std::vector<double> pts;
  if (grid.step > 0.0) {
    long long k = 0;
    for (double v = l; v < u; v = l + (++k) * grid.step) pts.push_back(v);
  } else {
    pts.push_back(l);
  }
  pts.push_back(u);
  for (double b : grid.mandatory_points)
    if (b >= l && b <= u) pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool satisfies(const AbstractElement& elem, const ConcreteState& x, double tol) {
  if (static_cast<int>(x.size()) != elem.size()) return false;
  for (int i = 0; i < elem.size(); ++i) {
    for (const Constraint& c : constraints_of(elem, i)) {
      switch (c.kind) {
        case Constraint::Kind::ScalarLe:
          if (x[i] > c.c + tol) return false;
          break;
        case Constraint::Kind::ScalarGe:
          if (x[i] < c.c - tol) return false;
          break;
        case Constraint::Kind::AffineLe:
          if (x[i] > eval_affine(c.a, x) + tol) return false;
          break;
        case Constraint::Kind::AffineGe:
          if (x[i] < eval_affine(c.a, x) - tol) return false;
          break;
      }
    }
  }
  return true;
}

std::vector<ConcreteState> sample_concretization(const AbstractElement& elem, NeuronId target,
                                                 const GridSpec& grid, uint64_t /*seed*/) {
  if (target < 0 || target >= elem.size())
    throw std::out_of_range("sample_concretization: unknown neuron id");

  // Per-neuron candidate values: grid for the target, 3-point stencil for the rest.
  std::vector<std::vector<double>> axes(elem.size());
  for (int i = 0; i < elem.size(); ++i) {
    auto [l, u] = elem.box_of(i);
    if (i == target) {
      axes[i] = grid_points(l, u, grid);
    } else if (l == u) {
      axes[i] = {l};
    } else {
      axes[i] = {l, (l + u) / 2.0, u};
    }
  }

  std::vector<ConcreteState> out;
  ConcreteState x(elem.size(), 0.0);
  // Cartesian product in lexicographic axis order; small by construction
  // (3-point stencils everywhere except the target axis).
  std::vector<size_t> idx(elem.size(), 0);
  while (true) {
    for (int i = 0; i < elem.size(); ++i) x[i] = axes[i][idx[i]];
    if (satisfies(elem, x)) out.push_back(x);
    int axis = elem.size() - 1;
    while (axis >= 0) {
      if (++idx[axis] < axes[axis].size()) break;
      idx[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  if (out.empty()) throw std::runtime_error("sample_concretization: infeasible abstract element");
  return out;
}

}  // namespace absynth::domain

#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "absynth/domain/affine_expr.hpp"

namespace absynth::domain {

enum class Domain { Interval, Zonotope, DeepPoly };

std::string name_of(Domain d);
std::optional<Domain> parse_domain(const std::string& token);

struct IntervalShape {
  double l = 0.0;
  double u = 0.0;
  bool operator==(const IntervalShape&) const = default;
};

struct ZonotopeShape {
  double center = 0.0;
  std::map<int, double> generators;  // noise symbol id -> coefficient
  double radius() const;
  bool operator==(const ZonotopeShape&) const = default;
};

/// Per-neuron DeepPoly tuple <l, u, L, U>: scalar box plus affine bounds over
/// earlier neurons. Output shapes produced by candidate transformers are not
/// required to satisfy l <= u; input elements are.
struct DeepPolyShape {
  double l = 0.0;
  double u = 0.0;
  AffineExpr L;
  AffineExpr U;
  bool operator==(const DeepPolyShape&) const = default;
};

using NeuronShape = std::variant<IntervalShape, ZonotopeShape, DeepPolyShape>;

/// One-sided bound on a single neuron value.
struct Constraint {
  enum class Kind { ScalarLe, ScalarGe, AffineLe, AffineGe };
  Kind kind = Kind::ScalarLe;
  double c = 0.0;   // scalar payload
  AffineExpr a;     // affine payload

  static Constraint scalar_le(double c) { return {Kind::ScalarLe, c, {}}; }
  static Constraint scalar_ge(double c) { return {Kind::ScalarGe, c, {}}; }
  static Constraint affine_le(AffineExpr a) { return {Kind::AffineLe, 0.0, std::move(a)}; }
  static Constraint affine_ge(AffineExpr a) { return {Kind::AffineGe, 0.0, std::move(a)}; }

  bool operator==(const Constraint&) const = default;
  std::string to_string() const;
};

using ConcreteState = std::vector<double>;

/// Abstract element: domain tag plus one shape per neuron 0..n-1. Affine
/// bounds may only reference strictly smaller neuron ids.
class AbstractElement {
 public:
  AbstractElement() = default;
  AbstractElement(Domain domain, std::vector<NeuronShape> shapes);

  /// Box element over n independent neurons (the falsifier's input form).
  static AbstractElement box(Domain domain, const std::vector<std::pair<double, double>>& bounds);

  Domain domain() const { return domain_; }
  int size() const { return static_cast<int>(shapes_.size()); }
  const NeuronShape& shape(NeuronId i) const;
  NeuronShape& shape(NeuronId i);

  /// Scalar box of a neuron (zonotopes concretize to center +/- radius).
  std::pair<double, double> box_of(NeuronId i) const;

  bool operator==(const AbstractElement&) const = default;

 private:
  Domain domain_ = Domain::Interval;
  std::vector<NeuronShape> shapes_;
};

/// Ordered, total constraint view of one neuron: DeepPoly yields
/// [ScalarGe(l), ScalarLe(u), AffineGe(L), AffineLe(U)], Interval and
/// Zonotope yield the two scalar box constraints.
std::vector<Constraint> constraints_of(const AbstractElement& elem, NeuronId neuron);

/// Constraint view of a freestanding output shape (same ordering).
std::vector<Constraint> constraints_of(const NeuronShape& shape);

}  // namespace absynth::domain

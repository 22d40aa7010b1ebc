#include "absynth/domain/element.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace absynth::domain {

std::string name_of(Domain d) {
  switch (d) {
    case Domain::Interval: return "interval";
    case Domain::Zonotope: return "zonotope";
    case Domain::DeepPoly: return "deeppoly";
  }
  return "?";
}

std::optional<Domain> parse_domain(const std::string& token) {
  if (token == "interval") return Domain::Interval;
  if (token == "zonotope" || token == "zono" || token == "deepz") return Domain::Zonotope;
  if (token == "deeppoly") return Domain::DeepPoly;
  return std::nullopt;
}

double ZonotopeShape::radius() const {
  double r = 0.0;
  for (const auto& [id, g] : generators) r += std::fabs(g);
  return r;
}

std::string Constraint::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::ScalarLe: os << "y <= " << c; break;
    case Kind::ScalarGe: os << "y >= " << c; break;
    case Kind::AffineLe: os << "y <= " << a.to_string(); break;
    case Kind::AffineGe: os << "y >= " << a.to_string(); break;
  }
  return os.str();
}

AbstractElement::AbstractElement(Domain domain, std::vector<NeuronShape> shapes)
    : domain_(domain), shapes_(std::move(shapes)) {
  for (int i = 0; i < size(); ++i) {
    if (const auto* dp = std::get_if<DeepPolyShape>(&shapes_[i])) {
      if (!(dp->l <= dp->u)) throw std::invalid_argument("abstract element with l > u");
      for (const auto& [id, c] : dp->L.coeffs())
        if (id >= i) throw std::invalid_argument("affine bound references later neuron");
      for (const auto& [id, c] : dp->U.coeffs())
        if (id >= i) throw std::invalid_argument("affine bound references later neuron");
    } else if (const auto* iv = std::get_if<IntervalShape>(&shapes_[i])) {
      if (!(iv->l <= iv->u)) throw std::invalid_argument("abstract element with l > u");
    }
  }
}

AbstractElement AbstractElement::box(Domain domain,
                                     const std::vector<std::pair<double, double>>& bounds) {
  std::vector<NeuronShape> shapes;
  shapes.reserve(bounds.size());
  for (const auto& [l, u] : bounds) {
    switch (domain) {
      case Domain::Interval:
        shapes.push_back(IntervalShape{l, u});
        break;
      case Domain::Zonotope: {
        ZonotopeShape z;
        z.center = (l + u) / 2.0;
        if (u > l) z.generators[static_cast<int>(shapes.size())] = (u - l) / 2.0;
        shapes.push_back(z);
        break;
      }
      case Domain::DeepPoly: {
        // Input-layer neurons carry their box as constant affine bounds.
        DeepPolyShape s;
        s.l = l;
        s.u = u;
        s.L = AffineExpr(l);
        s.U = AffineExpr(u);
        shapes.push_back(s);
        break;
      }
    }
  }
  return AbstractElement(domain, std::move(shapes));
}

const NeuronShape& AbstractElement::shape(NeuronId i) const {
  if (i < 0 || i >= size()) throw std::out_of_range("unknown neuron id");
  return shapes_[i];
}

NeuronShape& AbstractElement::shape(NeuronId i) {
  if (i < 0 || i >= size()) throw std::out_of_range("unknown neuron id");
  return shapes_[i];
}

std::pair<double, double> AbstractElement::box_of(NeuronId i) const {
  const NeuronShape& s = shape(i);
  if (const auto* iv = std::get_if<IntervalShape>(&s)) return {iv->l, iv->u};
  if (const auto* z = std::get_if<ZonotopeShape>(&s))
    return {z->center - z->radius(), z->center + z->radius()};
  const auto& dp = std::get<DeepPolyShape>(s);
  return {dp.l, dp.u};
}

std::vector<Constraint> constraints_of(const NeuronShape& shape) {
  if (const auto* iv = std::get_if<IntervalShape>(&shape))
    return {Constraint::scalar_ge(iv->l), Constraint::scalar_le(iv->u)};
  if (const auto* z = std::get_if<ZonotopeShape>(&shape)) {
    double r = z->radius();
    return {Constraint::scalar_ge(z->center - r), Constraint::scalar_le(z->center + r)};
  }
  const auto& dp = std::get<DeepPolyShape>(shape);
  return {Constraint::scalar_ge(dp.l), Constraint::scalar_le(dp.u),
          Constraint::affine_ge(dp.L), Constraint::affine_le(dp.U)};
}

std::vector<Constraint> constraints_of(const AbstractElement& elem, NeuronId neuron) {
  return constraints_of(elem.shape(neuron));
}

}  // namespace absynth::domain

#include "absynth/domain/json_io.hpp"

#include <stdexcept>

namespace absynth::domain {

using nlohmann::json;

json to_json(const AffineExpr& a) {
  json coeffs = json::object();
  for (const auto& [id, c] : a.coeffs()) coeffs[std::to_string(id)] = c;
  return json{{"c", a.constant()}, {"coeffs", coeffs}};
}

AffineExpr affine_from_json(const json& j) {
  AffineExpr a(j.at("c").get<double>());
  if (j.contains("coeffs"))
    for (const auto& [key, val] : j.at("coeffs").items())
      a.add_term(std::stoi(key), val.get<double>());
  return a;
}

json to_json(const AbstractElement& e) {
  json shapes = json::array();
  for (int i = 0; i < e.size(); ++i) {
    const NeuronShape& s = e.shape(i);
    if (const auto* iv = std::get_if<IntervalShape>(&s)) {
      shapes.push_back(json{{"l", iv->l}, {"u", iv->u}});
    } else if (const auto* z = std::get_if<ZonotopeShape>(&s)) {
      json gens = json::object();
      for (const auto& [id, g] : z->generators) gens[std::to_string(id)] = g;
      shapes.push_back(json{{"center", z->center}, {"generators", gens}});
    } else {
      const auto& dp = std::get<DeepPolyShape>(s);
      shapes.push_back(
          json{{"l", dp.l}, {"u", dp.u}, {"L", to_json(dp.L)}, {"U", to_json(dp.U)}});
    }
  }
  return json{{"domain", name_of(e.domain())}, {"n", e.size()}, {"shapes", shapes}};
}

AbstractElement element_from_json(const json& j) {
  auto dom = parse_domain(j.at("domain").get<std::string>());
  if (!dom) throw std::invalid_argument("unknown domain tag in element JSON");
  std::vector<NeuronShape> shapes;
  size_t index = 0;
  for (const json& s : j.at("shapes")) {
    switch (*dom) {
      case Domain::Interval:
        shapes.push_back(IntervalShape{s.at("l").get<double>(), s.at("u").get<double>()});
        break;
      case Domain::Zonotope: {
        ZonotopeShape z;
        z.center = s.at("center").get<double>();
        if (s.contains("generators"))
          for (const auto& [key, val] : s.at("generators").items())
            z.generators[std::stoi(key)] = val.get<double>();
        shapes.push_back(z);
        break;
      }
      case Domain::DeepPoly: {
        DeepPolyShape dp;
        dp.l = s.at("l").get<double>();
        dp.u = s.at("u").get<double>();
        if (s.contains("L")) dp.L = affine_from_json(s.at("L"));
        else dp.L = AffineExpr(dp.l);
        if (s.contains("U")) dp.U = affine_from_json(s.at("U"));
        else dp.U = AffineExpr(dp.u);
        shapes.push_back(dp);
        break;
      }
    }
    ++index;
  }
  if (j.contains("n") && j.at("n").get<size_t>() != shapes.size())
    throw std::invalid_argument("element JSON: n does not match shapes length");
  return AbstractElement(*dom, std::move(shapes));
}

json to_json(const Constraint& c) {
  switch (c.kind) {
    case Constraint::Kind::ScalarLe: return json{{"kind", "scalar_le"}, {"c", c.c}};
    case Constraint::Kind::ScalarGe: return json{{"kind", "scalar_ge"}, {"c", c.c}};
    case Constraint::Kind::AffineLe: return json{{"kind", "affine_le"}, {"a", to_json(c.a)}};
    case Constraint::Kind::AffineGe: return json{{"kind", "affine_ge"}, {"a", to_json(c.a)}};
  }
  return {};
}

}  // namespace absynth::domain

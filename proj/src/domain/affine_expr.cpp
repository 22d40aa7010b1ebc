#include "absynth/domain/affine_expr.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace absynth::domain {

AffineExpr AffineExpr::variable(NeuronId id, double coeff) {
  AffineExpr e;
  e.add_term(id, coeff);
  return e;
}

double AffineExpr::coeff(NeuronId id) const {
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? 0.0 : it->second;
}

void AffineExpr::add_term(NeuronId id, double coeff) {
  if (coeff == 0.0) return;
  auto [it, inserted] = coeffs_.try_emplace(id, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0.0) coeffs_.erase(it);
  }
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
  constant_ += o.constant_;
  for (const auto& [id, c] : o.coeffs_) add_term(id, c);
  return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& o) {
  constant_ -= o.constant_;
  for (const auto& [id, c] : o.coeffs_) add_term(id, -c);
  return *this;
}

AffineExpr& AffineExpr::operator*=(double k) {
  if (k == 0.0) {
    constant_ = 0.0;
    coeffs_.clear();
    return *this;
  }
  constant_ *= k;
  for (auto& [id, c] : coeffs_) c *= k;
  return *this;
}

std::string AffineExpr::to_string() const {
  std::ostringstream os;
  os << constant_;
  for (const auto& [id, c] : coeffs_) os << " + " << c << "*x" << id;
  return os.str();
}

double eval_affine(const AffineExpr& a, std::span<const double> x) {
  double acc = a.constant();
  for (const auto& [id, c] : a.coeffs()) {
    if (id < 0 || static_cast<size_t>(id) >= x.size())
      throw std::out_of_range("eval_affine: neuron id outside state");
    acc += c * x[id];
  }
  return acc;
}

}  // namespace absynth::domain

#pragma once

#include <map>
#include <span>
#include <string>

namespace absynth::domain {

using NeuronId = int;

/// Sparse affine form c0 + sum coeffs[i] * x_i. Canonical: no stored zeros.
class AffineExpr {
 public:
  AffineExpr() = default;
  explicit AffineExpr(double constant) : constant_(constant) {}
  static AffineExpr variable(NeuronId id, double coeff = 1.0);

  double constant() const { return constant_; }
  const std::map<NeuronId, double>& coeffs() const { return coeffs_; }
  bool is_constant() const { return coeffs_.empty(); }

  double coeff(NeuronId id) const;
  void set_constant(double c) { constant_ = c; }
  void add_term(NeuronId id, double coeff);
  void add_constant(double c) { constant_ += c; }

  AffineExpr& operator+=(const AffineExpr& o);
  AffineExpr& operator-=(const AffineExpr& o);
  AffineExpr& operator*=(double k);

  friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
  friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
  friend AffineExpr operator*(AffineExpr a, double k) { return a *= k; }
  friend AffineExpr operator*(double k, AffineExpr a) { return a *= k; }

  bool operator==(const AffineExpr& o) const = default;

  std::string to_string() const;

 private:
  double constant_ = 0.0;
  std::map<NeuronId, double> coeffs_;
};

/// a.constant + sum a.coeffs[i] * x[i]; throws on out-of-range neuron ids.
double eval_affine(const AffineExpr& a, std::span<const double> x);

}  // namespace absynth::domain

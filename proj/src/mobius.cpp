#include "campanato/mobius.hpp"

#include <cmath>

namespace campanato {

namespace {
constexpr double kBoundaryTol = 1e-12;
constexpr double kDenominatorFloor = 1e-300;
}  // namespace

MobiusMap::MobiusMap(Complex w) : w_(checked(w, "MobiusMap")) {
  if (std::abs(w) > 1.0 + kBoundaryTol) {
    throw DomainError("MobiusMap: |w| must not exceed 1");
  }
}

Complex MobiusMap::apply(Complex z) const {
  const Complex den = 1.0 - std::conj(w_) * z;
  if (std::abs(den) <= kDenominatorFloor) {
    throw DomainError("mobius_apply: vanishing denominator 1 - conj(w) z");
  }
  return (w_ - z) / den;
}

Complex MobiusMap::derivative(Complex z) const {
  const Complex den = 1.0 - std::conj(w_) * z;
  if (std::abs(den) <= kDenominatorFloor) {
    throw DomainError("mobius derivative: vanishing denominator");
  }
  return (std::norm(w_) - 1.0) / (den * den);
}

double MobiusMap::one_minus_abs2(Complex z) const {
  const double den = std::norm(1.0 - std::conj(w_) * z);
  if (den <= kDenominatorFloor) throw DomainError("mobius: vanishing denominator");
  return (1.0 - std::norm(w_)) * (1.0 - std::norm(z)) / den;
}

Complex mobius_apply(const MobiusMap& m, Complex z) {
  if (std::abs(z) > 1.0 + kBoundaryTol) throw DomainError("mobius_apply: |z| > 1");
  return m.apply(z);
}

}  // namespace campanato

#pragma once

#include "campanato/types.hpp"

namespace campanato {

/// The disk automorphism sigma_w(z) = (w - z) / (1 - conj(w) z).
///
/// For |w| < 1 it is an involution exchanging 0 and w. |w| = 1 is admitted
/// (the map degenerates to the constant w away from z = w).
class MobiusMap {
 public:
  MobiusMap() = default;
  explicit MobiusMap(Complex w);

  Complex center() const { return w_; }

  Complex apply(Complex z) const;
  Complex derivative(Complex z) const;

  /// 1 - |sigma_w(z)|^2 through (1-|w|^2)(1-|z|^2)/|1-conj(w)z|^2, which keeps
  /// full relative accuracy near the boundary.
  double one_minus_abs2(Complex z) const;

 private:
  Complex w_{0.0, 0.0};
};

/// sigma_w(z); DomainError on a vanishing denominator.
Complex mobius_apply(const MobiusMap& m, Complex z);

}  // namespace campanato

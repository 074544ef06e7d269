#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "campanato/function_spec.hpp"
#include "campanato/mobius.hpp"
#include "campanato/types.hpp"

namespace campanato {

class SelfMapSpec;

namespace selfmap {

/// phi = sigma_a
struct Mobius {
  MobiusMap map;
};

/// sum_k coeffs[k] z^k with certified margin 1 - max_{|z|=1} |phi(z)|.
struct Polynomial {
  std::vector<Complex> coeffs;
  double margin = 0.0;
};

/// u prod_j (z - a_j) / (1 - conj(a_j) z)
struct Blaschke {
  std::vector<Complex> zeros;
  Complex rotation{1.0, 0.0};
};

/// c * inner(z), 0 < c <= 1
struct Scaled {
  double c = 1.0;
  std::shared_ptr<const SelfMapSpec> inner;
};

}  // namespace selfmap

struct Preimage {
  Complex z;
  int multiplicity = 1;
};

struct PreimageSet {
  std::vector<Preimage> roots;
  Flag flags = Flag::None;
};

/// Analytic self-map of the disk with computable preimages.
class SelfMapSpec {
 public:
  using Node = std::variant<selfmap::Mobius, selfmap::Polynomial, selfmap::Blaschke, selfmap::Scaled>;

  static SelfMapSpec identity();
  static SelfMapSpec mobius(Complex a);
  /// Certifies max |phi| <= 1 on max(4096, 64 deg) boundary nodes;
  /// CertificationError otherwise, DomainError for constants.
  static SelfMapSpec polynomial(std::vector<Complex> coeffs);
  static SelfMapSpec blaschke(std::vector<Complex> zeros, Complex rotation = 1.0);
  static SelfMapSpec scaled(double c, SelfMapSpec inner);

  const Node& node() const { return node_; }

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  /// 1 - |phi(z)|^2 given 1 - |z|^2; exact identity for Mobius maps.
  double one_minus_abs2(Complex z, double one_minus_abs2_z) const;
  double one_minus_abs2(Complex z) const { return one_minus_abs2(z, 1.0 - std::norm(z)); }

  /// Degree (valence). Mobius maps have degree 1.
  int degree() const;
  /// 1 - certified boundary sup (0 for inner functions).
  double margin() const;

  /// The map as a FunctionSpec (Mobius, polynomial and scaled variants).
  std::optional<FunctionSpec> as_function() const;

 private:
  explicit SelfMapSpec(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// Disk roots of phi(z) = w with multiplicities. Companion-matrix eigenvalues,
/// Newton polish to residual <= 1e-10, clustering at 1e-7. CONDITIONING-WARNING
/// when two distinct roots lie within 1e-6. ConvergenceError when polish fails.
PreimageSet preimages(const SelfMapSpec& phi, Complex w);

/// Roots of sum_k coeffs[k] z^k = 0 (all, not only disk roots).
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

}  // namespace campanato

#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "campanato/mobius.hpp"
#include "campanato/types.hpp"

namespace campanato {

class FunctionSpec;

namespace spec {

/// z^n
struct Monomial {
  int n = 0;
};

/// sum_k coeffs[k] z^k
struct Polynomial {
  std::vector<Complex> coeffs;
};

/// f_b(z) = 1 / (1 - conj(b) z)
struct CauchyKernel {
  Complex b;
};

/// F_b(z) = (1-|b|^2)^((p+eta-1)/p) / (1 - conj(b) z)
struct ScaledCauchy {
  Complex b;
  double p = 2.0;
  double eta = 1.0;
};

/// log(1 / (1 - z))
struct LogKernel {};

/// sum_{k>=0} base^(m_k (alpha-1)) z^(base^m_k) with m_k = stride*k + offset.
/// `terms` = 0 sums the full series (interior only); terms > 0 truncates to a
/// polynomial, which is then finite on the closed disk.
struct Lacunary {
  int base = 2;
  double alpha = 1.0;
  int stride = 1;
  int offset = 0;
  int terms = 0;
};

/// outer(sigma_w(z))
struct MobiusPullback {
  MobiusMap inner;
  std::shared_ptr<const FunctionSpec> outer;
};

struct Sum {
  std::vector<FunctionSpec> terms;
};

/// c * inner(z)
struct Scale {
  Complex c;
  std::shared_ptr<const FunctionSpec> inner;
};

/// outer(inner(z)); inner must map the disk into the closed disk.
struct Compose {
  std::shared_ptr<const FunctionSpec> outer;
  std::shared_ptr<const FunctionSpec> inner;
};

}  // namespace spec

/// Closed-form analytic function on the disk. Immutable value type; the
/// composite variants share their children.
class FunctionSpec {
 public:
  using Node = std::variant<spec::Monomial, spec::Polynomial, spec::CauchyKernel,
                            spec::ScaledCauchy, spec::LogKernel, spec::Lacunary,
                            spec::MobiusPullback, spec::Sum, spec::Scale, spec::Compose>;

  FunctionSpec();  // the zero polynomial

  static FunctionSpec monomial(int n);
  static FunctionSpec polynomial(std::vector<Complex> coeffs);
  static FunctionSpec constant(Complex c);
  static FunctionSpec cauchy(Complex b);
  static FunctionSpec scaled_cauchy(Complex b, double p, double eta);
  static FunctionSpec log_kernel();
  static FunctionSpec lacunary(int base, double alpha, int stride = 1, int offset = 0,
                               int terms = 0);
  static FunctionSpec mobius_pullback(const MobiusMap& inner, FunctionSpec outer);
  static FunctionSpec sum(std::vector<FunctionSpec> terms);
  static FunctionSpec scale(Complex c, FunctionSpec inner);
  static FunctionSpec compose(FunctionSpec outer, FunctionSpec inner);

  const Node& node() const { return node_; }

  /// True when the closed form is finite on the whole unit circle.
  bool finite_on_boundary() const;

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  /// Value and derivative in one pass (shares powers / denominators).
  std::pair<Complex, Complex> value_and_derivative(Complex z) const;

 private:
  explicit FunctionSpec(Node node) : node_(std::move(node)) {}
  Node node_;
};

Complex evaluate(const FunctionSpec& f, Complex z);
Complex derivative_at(const FunctionSpec& f, Complex z);

/// f - f(z0): used for the oscillation f o sigma_w - f(w).
FunctionSpec subtract_constant(const FunctionSpec& f, Complex c);

}  // namespace campanato

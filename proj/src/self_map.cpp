#include "campanato/self_map.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

namespace campanato {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kResidualTol = 1e-10;
constexpr double kClusterTol = 1e-7;
constexpr double kConditioningTol = 1e-6;

std::vector<Complex> trimmed(std::vector<Complex> coeffs) {
  while (!coeffs.empty() && coeffs.back() == Complex{0.0, 0.0}) coeffs.pop_back();
  return coeffs;
}

/// Value, derivative and sum_k |a_k| |z|^k (the rounding scale of the value).
struct Horner {
  Complex value;
  Complex derivative;
  double scale;
};

Horner horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex v{0.0, 0.0};
  Complex d{0.0, 0.0};
  double s = 0.0;
  const double r = std::abs(z);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
    s = s * r + std::abs(*it);
  }
  return {v, d, s};
}

Complex polish(const std::vector<Complex>& coeffs, Complex z) {
  Horner h = horner(coeffs, z);
  for (int it = 0; it < 60; ++it) {
    if (std::abs(h.value) <= 1e-16 * h.scale || h.derivative == Complex{0.0, 0.0}) break;
    const Complex next = z - h.value / h.derivative;
    const Horner hn = horner(coeffs, next);
    if (!(std::abs(hn.value) < std::abs(h.value))) break;
    z = next;
    h = hn;
  }
  return z;
}

std::vector<Complex> product_coefficients(const std::vector<std::pair<Complex, Complex>>& linear_factors) {
  // Each factor is c0 + c1 z.
  std::vector<Complex> out{Complex{1.0, 0.0}};
  for (const auto& [c0, c1] : linear_factors) {
    std::vector<Complex> next(out.size() + 1, Complex{0.0, 0.0});
    for (std::size_t k = 0; k < out.size(); ++k) {
      next[k] += c0 * out[k];
      next[k + 1] += c1 * out[k];
    }
    out = std::move(next);
  }
  return out;
}

/// Polish, keep disk roots, cluster, and verify the residual against phi.
template <class Residual>
PreimageSet finish_roots(const std::vector<Complex>& coeffs, const std::vector<Complex>& raw, Residual residual) {
  std::vector<Complex> roots;
  roots.reserve(raw.size());
  for (Complex z : raw) roots.push_back(polish(coeffs, z));

  PreimageSet out;
  std::vector<Complex> sums;
  std::vector<int> counts;
  for (Complex z : roots) {
    bool merged = false;
    for (std::size_t c = 0; c < sums.size(); ++c) {
      if (std::abs(z - sums[c] / static_cast<double>(counts[c])) <= kClusterTol) {
        sums[c] += z;
        ++counts[c];
        merged = true;
        break;
      }
    }
    if (!merged) {
      sums.push_back(z);
      counts.push_back(1);
    }
  }
  std::vector<Complex> centers;
  for (std::size_t c = 0; c < sums.size(); ++c) centers.push_back(sums[c] / static_cast<double>(counts[c]));
  for (std::size_t a = 0; a < centers.size(); ++a) {
    for (std::size_t b = a + 1; b < centers.size(); ++b) {
      if (std::abs(centers[a] - centers[b]) <= kConditioningTol) out.flags |= Flag::ConditioningWarning;
    }
  }
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const Complex z = centers[c];
    if (!(std::abs(z) < 1.0)) continue;
    const auto [res, scale] = residual(z);
    if (!(res <= kResidualTol * std::max(1.0, scale))) {
      throw ConvergenceError("preimages: root polish left residual " + std::to_string(res));
    }
    out.roots.push_back({z, counts[c]});
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Preimage& x, const Preimage& y) {
    return std::arg(x.z) != std::arg(y.z) ? std::arg(x.z) < std::arg(y.z) : std::abs(x.z) < std::abs(y.z);
  });
  return out;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs_in) {
  const std::vector<Complex> coeffs = trimmed(coeffs_in);
  if (coeffs.empty()) throw DomainError("polynomial_roots: zero polynomial");
  const int d = static_cast<int>(coeffs.size()) - 1;
  if (d == 0) return {};
  if (d == 1) return {-coeffs[0] / coeffs[1]};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -coeffs[i] / coeffs[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("polynomial_roots: eigenvalue iteration failed");
  std::vector<Complex> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = solver.eigenvalues()(i);
  return roots;
}

SelfMapSpec SelfMapSpec::identity() { return polynomial({0.0, 1.0}); }

SelfMapSpec SelfMapSpec::mobius(Complex a) {
  checked(a, "SelfMap mobius");
  if (!(std::abs(a) < 1.0)) throw DomainError("SelfMap mobius: |a| must be < 1");
  return SelfMapSpec(selfmap::Mobius{MobiusMap(a)});
}

SelfMapSpec SelfMapSpec::polynomial(std::vector<Complex> coeffs_in) {
  for (const auto& c : coeffs_in) checked(c, "SelfMap polynomial coefficient");
  std::vector<Complex> coeffs = trimmed(std::move(coeffs_in));
  if (coeffs.size() < 2) throw DomainError("SelfMap polynomial: constant maps are not admitted");
  const int degree = static_cast<int>(coeffs.size()) - 1;
  const int nodes = std::max(4096, 64 * degree);
  double sup = 0.0;
  for (int k = 0; k < nodes; ++k) sup = std::max(sup, std::abs(horner(coeffs, std::polar(1.0, kTwoPi * k / nodes)).value));
  if (sup > 1.0 + 1e-12) {
    throw CertificationError("SelfMap polynomial: boundary sup " + std::to_string(sup) + " exceeds 1");
  }
  return SelfMapSpec(selfmap::Polynomial{std::move(coeffs), std::max(0.0, 1.0 - sup)});
}

SelfMapSpec SelfMapSpec::blaschke(std::vector<Complex> zeros, Complex rotation) {
  if (zeros.empty()) throw DomainError("SelfMap blaschke: need at least one zero");
  for (const auto& a : zeros) {
    checked(a, "SelfMap blaschke zero");
    if (!(std::abs(a) < 1.0)) throw DomainError("SelfMap blaschke: zeros must lie in the disk");
  }
  checked(rotation, "SelfMap blaschke rotation");
  if (std::abs(std::abs(rotation) - 1.0) > 1e-12) throw DomainError("SelfMap blaschke: rotation must be unimodular");
  return SelfMapSpec(selfmap::Blaschke{std::move(zeros), rotation / std::abs(rotation)});
}

SelfMapSpec SelfMapSpec::scaled(double c, SelfMapSpec inner) {
  if (!(c > 0.0 && c <= 1.0)) throw DomainError("SelfMap scaled: c must lie in (0, 1]");
  return SelfMapSpec(selfmap::Scaled{c, std::make_shared<const SelfMapSpec>(std::move(inner))});
}

Complex SelfMapSpec::operator()(Complex z) const {
  return std::visit(Overloaded{
                        [&](const selfmap::Mobius& m) { return m.map.apply(z); },
                        [&](const selfmap::Polynomial& p) { return horner(p.coeffs, z).value; },
                        [&](const selfmap::Blaschke& b) {
                          Complex v = b.rotation;
                          for (const auto& a : b.zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
                          return v;
                        },
                        [&](const selfmap::Scaled& s) { return s.c * (*s.inner)(z); },
                    },
                    node_);
}

Complex SelfMapSpec::derivative(Complex z) const {
  return std::visit(Overloaded{
                        [&](const selfmap::Mobius& m) { return m.map.derivative(z); },
                        [&](const selfmap::Polynomial& p) { return horner(p.coeffs, z).derivative; },
                        [&](const selfmap::Blaschke& b) {
                          const std::size_t d = b.zeros.size();
                          std::vector<Complex> factor(d);
                          std::vector<Complex> dfactor(d);
                          for (std::size_t j = 0; j < d; ++j) {
                            const Complex a = b.zeros[j];
                            const Complex den = 1.0 - std::conj(a) * z;
                            factor[j] = (z - a) / den;
                            dfactor[j] = (1.0 - std::norm(a)) / (den * den);
                          }
                          Complex total{0.0, 0.0};
                          for (std::size_t j = 0; j < d; ++j) {
                            Complex term = dfactor[j];
                            for (std::size_t i = 0; i < d; ++i) {
                              if (i != j) term *= factor[i];
                            }
                            total += term;
                          }
                          return b.rotation * total;
                        },
                        [&](const selfmap::Scaled& s) { return s.c * s.inner->derivative(z); },
                    },
                    node_);
}

double SelfMapSpec::one_minus_abs2(Complex z, double omz) const {
  return std::visit(Overloaded{
                        [&](const selfmap::Mobius& m) {
                          const Complex a = m.map.center();
                          return (1.0 - std::norm(a)) * omz / std::norm(1.0 - std::conj(a) * z);
                        },
                        [&](const selfmap::Polynomial& p) { return 1.0 - std::norm(horner(p.coeffs, z).value); },
                        [&](const selfmap::Blaschke& b) {
                          // 1 - prod(1 - x_j) accumulated as x + y - x y.
                          double acc = 0.0;
                          for (const auto& a : b.zeros) {
                            const double x = (1.0 - std::norm(a)) * omz / std::norm(1.0 - std::conj(a) * z);
                            acc = acc + x - acc * x;
                          }
                          return acc;
                        },
                        [&](const selfmap::Scaled& s) {
                          return (1.0 - s.c * s.c) + s.c * s.c * s.inner->one_minus_abs2(z, omz);
                        },
                    },
                    node_);
}

int SelfMapSpec::degree() const {
  return std::visit(Overloaded{
                        [](const selfmap::Mobius&) { return 1; },
                        [](const selfmap::Polynomial& p) { return static_cast<int>(p.coeffs.size()) - 1; },
                        [](const selfmap::Blaschke& b) { return static_cast<int>(b.zeros.size()); },
                        [](const selfmap::Scaled& s) { return s.inner->degree(); },
                    },
                    node_);
}

double SelfMapSpec::margin() const {
  return std::visit(Overloaded{
                        [](const selfmap::Mobius&) { return 0.0; },
                        [](const selfmap::Polynomial& p) { return p.margin; },
                        [](const selfmap::Blaschke&) { return 0.0; },
                        [](const selfmap::Scaled& s) { return 1.0 - s.c * (1.0 - s.inner->margin()); },
                    },
                    node_);
}

std::optional<FunctionSpec> SelfMapSpec::as_function() const {
  return std::visit(Overloaded{
                        [](const selfmap::Mobius& m) -> std::optional<FunctionSpec> {
                          return FunctionSpec::mobius_pullback(m.map, FunctionSpec::monomial(1));
                        },
                        [](const selfmap::Polynomial& p) -> std::optional<FunctionSpec> {
                          return FunctionSpec::polynomial(p.coeffs);
                        },
                        [](const selfmap::Blaschke&) -> std::optional<FunctionSpec> { return std::nullopt; },
                        [](const selfmap::Scaled& s) -> std::optional<FunctionSpec> {
                          auto inner = s.inner->as_function();
                          if (!inner) return std::nullopt;
                          return FunctionSpec::scale(s.c, *inner);
                        },
                    },
                    node_);
}

PreimageSet preimages(const SelfMapSpec& phi, Complex w) {
  checked(w, "preimages");
  if (!(std::abs(w) < 1.0)) throw DomainError("preimages: |w| must be < 1");
  return std::visit(
      Overloaded{
          [&](const selfmap::Mobius& m) {
            PreimageSet out;
            out.roots.push_back({m.map.apply(w), 1});
            return out;
          },
          [&](const selfmap::Polynomial& p) {
            std::vector<Complex> coeffs = p.coeffs;
            coeffs[0] -= w;
            return finish_roots(coeffs, polynomial_roots(coeffs), [&](Complex z) {
              const Horner h = horner(coeffs, z);
              return std::pair<double, double>{std::abs(h.value), h.scale};
            });
          },
          [&](const selfmap::Blaschke& b) {
            std::vector<std::pair<Complex, Complex>> num;
            std::vector<std::pair<Complex, Complex>> den;
            for (const auto& a : b.zeros) {
              num.emplace_back(-a, 1.0);
              den.emplace_back(1.0, -std::conj(a));
            }
            const std::vector<Complex> pn = product_coefficients(num);
            const std::vector<Complex> pd = product_coefficients(den);
            std::vector<Complex> coeffs(pn.size());
            for (std::size_t k = 0; k < pn.size(); ++k) coeffs[k] = b.rotation * pn[k] - w * pd[k];
            return finish_roots(coeffs, polynomial_roots(coeffs), [&](Complex z) {
              return std::pair<double, double>{std::abs(phi(z) - w), 1.0};
            });
          },
          [&](const selfmap::Scaled& s) {
            const Complex inner_w = w / s.c;
            if (!(std::abs(inner_w) < 1.0)) return PreimageSet{};
            return preimages(*s.inner, inner_w);
          },
      },
      phi.node());
}

}  // namespace campanato

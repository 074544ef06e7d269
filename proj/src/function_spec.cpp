#include "campanato/function_spec.hpp"

#include <cmath>
#include <string>

namespace campanato {

namespace {

constexpr double kBoundaryTol = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Complex ipow(Complex z, long long n) {
  Complex result{1.0, 0.0};
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

void require_closed_disk(Complex z) {
  checked(z, "evaluate");
  if (std::abs(z) > 1.0 + kBoundaryTol) throw DomainError("evaluate: |z| > 1");
}

void require_inside(Complex z, const char* what) {
  if (std::abs(z) >= 1.0) {
    throw DomainError(std::string(what) + ": |z| >= 1 for a function singular on the boundary");
  }
}

void require_kernel_parameter(Complex b) {
  checked(b, "CauchyKernel");
  if (std::abs(b) >= 1.0) throw DomainError("CauchyKernel: |b| must be < 1");
}

using VD = std::pair<Complex, Complex>;

VD lacunary_vd(const spec::Lacunary& l, Complex z) {
  if (l.terms <= 0) require_inside(z, "Lacunary");
  const double log_base = std::log(static_cast<double>(l.base));
  const double abs_z = std::abs(z);
  const double log_abs = abs_z > 0.0 ? std::log(abs_z) : -INFINITY;

  // u = z^(base^m); raise to base^offset first, then base^stride per term.
  Complex u = z;
  for (int i = 0; i < l.offset; ++i) u = ipow(u, l.base);
  const long long stride_pow = static_cast<long long>(std::llround(std::pow(l.base, l.stride)));

  Complex value{0.0, 0.0};
  Complex deriv{0.0, 0.0};
  const int max_terms = l.terms > 0 ? l.terms : 4096;
  for (int k = 0; k < max_terms; ++k) {
    const double m = static_cast<double>(l.stride) * k + l.offset;
    const double n = std::exp(m * log_base);
    if (!std::isfinite(n) || m * log_base > 700.0) {
      if (l.terms > 0) throw DomainError("Lacunary: exponent overflow for truncated series");
      break;
    }
    const double c = std::exp(m * (l.alpha - 1.0) * log_base);
    value += c * u;
    if (abs_z > 0.0) {
      deriv += c * n * (u / z);
    } else if (m == 0.0) {
      deriv += c;
    }
    if (l.terms <= 0) {
      if (abs_z == 0.0) break;
      // Past the peak of n^alpha |z|^n the terms decay super-exponentially.
      const double log_term = m * (l.alpha - 1.0) * log_base + std::log(n) + n * log_abs;
      const double scale = std::max(1.0, std::abs(deriv));
      if (-n * log_abs > std::max(1.0, l.alpha) + 1.0 && log_term < std::log(1e-18 * scale)) break;
    }
    u = ipow(u, stride_pow);
  }
  return {value, deriv};
}

}  // namespace

FunctionSpec::FunctionSpec() : node_(spec::Polynomial{}) {}

FunctionSpec FunctionSpec::monomial(int n) {
  if (n < 0) throw DomainError("Monomial: n must be >= 0");
  return FunctionSpec(spec::Monomial{n});
}

FunctionSpec FunctionSpec::polynomial(std::vector<Complex> coeffs) {
  for (const auto& c : coeffs) checked(c, "Polynomial coefficient");
  return FunctionSpec(spec::Polynomial{std::move(coeffs)});
}

FunctionSpec FunctionSpec::constant(Complex c) { return polynomial({c}); }

FunctionSpec FunctionSpec::cauchy(Complex b) {
  require_kernel_parameter(b);
  return FunctionSpec(spec::CauchyKernel{b});
}

FunctionSpec FunctionSpec::scaled_cauchy(Complex b, double p, double eta) {
  require_kernel_parameter(b);
  if (!(p >= 1.0) || !(eta >= 0.0)) throw DomainError("ScaledCauchy: need p >= 1, eta >= 0");
  return FunctionSpec(spec::ScaledCauchy{b, p, eta});
}

FunctionSpec FunctionSpec::log_kernel() { return FunctionSpec(spec::LogKernel{}); }

FunctionSpec FunctionSpec::lacunary(int base, double alpha, int stride, int offset, int terms) {
  if (base < 2) throw DomainError("Lacunary: base must be an integer >= 2");
  if (stride < 1 || offset < 0 || terms < 0) {
    throw DomainError("Lacunary: need stride >= 1, offset >= 0, terms >= 0");
  }
  if (!std::isfinite(alpha)) throw DomainError("Lacunary: non-finite alpha");
  return FunctionSpec(spec::Lacunary{base, alpha, stride, offset, terms});
}

FunctionSpec FunctionSpec::mobius_pullback(const MobiusMap& inner, FunctionSpec outer) {
  if (std::abs(inner.center()) >= 1.0) {
    throw DomainError("MobiusPullback: |w| must be < 1");
  }
  return FunctionSpec(
      spec::MobiusPullback{inner, std::make_shared<const FunctionSpec>(std::move(outer))});
}

FunctionSpec FunctionSpec::sum(std::vector<FunctionSpec> terms) {
  return FunctionSpec(spec::Sum{std::move(terms)});
}

FunctionSpec FunctionSpec::scale(Complex c, FunctionSpec inner) {
  checked(c, "Scale");
  return FunctionSpec(spec::Scale{c, std::make_shared<const FunctionSpec>(std::move(inner))});
}

FunctionSpec FunctionSpec::compose(FunctionSpec outer, FunctionSpec inner) {
  return FunctionSpec(spec::Compose{std::make_shared<const FunctionSpec>(std::move(outer)),
                                    std::make_shared<const FunctionSpec>(std::move(inner))});
}

bool FunctionSpec::finite_on_boundary() const {
  return std::visit(
      Overloaded{
          [](const spec::LogKernel&) { return false; },
          [](const spec::Lacunary& l) { return l.terms > 0; },
          [](const spec::MobiusPullback& m) { return m.outer->finite_on_boundary(); },
          [](const spec::Sum& s) {
            for (const auto& t : s.terms) {
              if (!t.finite_on_boundary()) return false;
            }
            return true;
          },
          [](const spec::Scale& s) { return s.inner->finite_on_boundary(); },
          [](const spec::Compose& c) {
            return c.outer->finite_on_boundary() && c.inner->finite_on_boundary();
          },
          [](const auto&) { return true; },
      },
      node_);
}

std::pair<Complex, Complex> FunctionSpec::value_and_derivative(Complex z) const {
  require_closed_disk(z);
  return std::visit(
      Overloaded{
          [&](const spec::Monomial& m) -> VD {
            if (m.n == 0) return {1.0, 0.0};
            const Complex lower = ipow(z, m.n - 1);
            return {lower * z, static_cast<double>(m.n) * lower};
          },
          [&](const spec::Polynomial& p) -> VD {
            Complex v{0.0, 0.0};
            Complex d{0.0, 0.0};
            for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
              d = d * z + v;
              v = v * z + *it;
            }
            return {v, d};
          },
          [&](const spec::CauchyKernel& c) -> VD {
            const Complex den = 1.0 - std::conj(c.b) * z;
            return {1.0 / den, std::conj(c.b) / (den * den)};
          },
          [&](const spec::ScaledCauchy& c) -> VD {
            const double amp = std::pow(1.0 - std::norm(c.b), (c.p + c.eta - 1.0) / c.p);
            const Complex den = 1.0 - std::conj(c.b) * z;
            return {amp / den, amp * std::conj(c.b) / (den * den)};
          },
          [&](const spec::LogKernel&) -> VD {
            require_inside(z, "LogKernel");
            const Complex one_minus = 1.0 - z;
            return {-std::log(one_minus), 1.0 / one_minus};
          },
          [&](const spec::Lacunary& l) -> VD { return lacunary_vd(l, z); },
          [&](const spec::MobiusPullback& m) -> VD {
            const Complex w = m.inner.apply(z);
            const auto [v, d] = m.outer->value_and_derivative(w);
            return {v, d * m.inner.derivative(z)};
          },
          [&](const spec::Sum& s) -> VD {
            Complex v{0.0, 0.0};
            Complex d{0.0, 0.0};
            for (const auto& t : s.terms) {
              const auto [tv, td] = t.value_and_derivative(z);
              v += tv;
              d += td;
            }
            return {v, d};
          },
          [&](const spec::Scale& s) -> VD {
            const auto [v, d] = s.inner->value_and_derivative(z);
            return {s.c * v, s.c * d};
          },
          [&](const spec::Compose& c) -> VD {
            const auto [iv, id] = c.inner->value_and_derivative(z);
            const auto [ov, od] = c.outer->value_and_derivative(iv);
            return {ov, od * id};
          },
      },
      node_);
}

Complex FunctionSpec::operator()(Complex z) const { return value_and_derivative(z).first; }

Complex FunctionSpec::derivative(Complex z) const { return value_and_derivative(z).second; }

Complex evaluate(const FunctionSpec& f, Complex z) { return f(z); }

Complex derivative_at(const FunctionSpec& f, Complex z) { return f.derivative(z); }

FunctionSpec subtract_constant(const FunctionSpec& f, Complex c) {
  return FunctionSpec::sum({f, FunctionSpec::constant(-c)});
}

}  // namespace campanato

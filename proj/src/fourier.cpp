#include "campanato/fourier.hpp"

#include <cmath>
#include <string>

namespace campanato {

FourierSeries::FourierSeries(int max_degree) : degree_(max_degree) {
  if (max_degree < 0) throw DomainError("FourierSeries: negative degree");
  coeffs_.assign(2 * static_cast<std::size_t>(max_degree) + 1, Complex{});
}

FourierSeries::FourierSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() % 2 == 0) throw DomainError("FourierSeries: need 2M+1 coefficients");
  degree_ = static_cast<int>(coeffs_.size() / 2);
}

FourierSeries FourierSeries::from_polynomial(const std::vector<Complex>& coeffs) {
  const int m = coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1;
  FourierSeries out(m);
  for (int n = 0; n <= m && n < static_cast<int>(coeffs.size()); ++n) out.set_coefficient(n, coeffs[n]);
  return out;
}

FourierSeries FourierSeries::from_samples(const std::vector<Complex>& samples, int max_degree) {
  const int n = static_cast<int>(samples.size());
  if (n == 0) throw DomainError("FourierSeries::from_samples: no samples");
  if (2 * max_degree + 1 > n) throw ResolutionError("FourierSeries::from_samples: degree exceeds Nyquist");
  FourierSeries out(max_degree);
  for (int m = -max_degree; m <= max_degree; ++m) {
    Complex acc{};
    for (int k = 0; k < n; ++k) {
      const long long phase = (static_cast<long long>(-m) * k) % n;
      acc += samples[k] * std::polar(1.0, kTwoPi * static_cast<double>(phase) / n);
    }
    out.set_coefficient(m, acc / static_cast<double>(n));
  }
  return out;
}

Complex FourierSeries::coefficient(int n) const {
  if (n < -degree_ || n > degree_) return {};
  return coeffs_[n + degree_];
}

void FourierSeries::set_coefficient(int n, Complex c) {
  if (n < -degree_ || n > degree_) throw DomainError("FourierSeries: index outside support");
  coeffs_[n + degree_] = checked(c, "FourierSeries coefficient");
}

Complex FourierSeries::operator()(double theta) const {
  Complex acc{};
  for (int n = -degree_; n <= degree_; ++n) acc += coeffs_[n + degree_] * std::polar(1.0, n * theta);
  return acc;
}

std::vector<Complex> FourierSeries::sample(const CircleGrid& grid) const {
  std::vector<Complex> out(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    Complex acc{};
    for (int n = -degree_; n <= degree_; ++n) {
      const long long phase = (static_cast<long long>(n) * k) % grid.size();
      acc += coeffs_[n + degree_] * std::polar(1.0, kTwoPi * static_cast<double>(phase) / grid.size());
    }
    out[k] = acc;
  }
  return out;
}

FourierSeries FourierSeries::operator+(const FourierSeries& other) const {
  FourierSeries out(std::max(degree_, other.degree_));
  for (int n = -out.degree_; n <= out.degree_; ++n) out.set_coefficient(n, coefficient(n) + other.coefficient(n));
  return out;
}

FourierSeries FourierSeries::operator-(const FourierSeries& other) const { return *this + other * -1.0; }

FourierSeries FourierSeries::operator*(Complex c) const {
  FourierSeries out = *this;
  for (auto& v : out.coeffs_) v *= c;
  return out;
}

BoundarySamples BoundarySamples::of(const FunctionSpec& f, const CircleGrid& grid) {
  if (!f.finite_on_boundary()) throw DomainError("BoundarySamples: function is singular on the circle");
  BoundarySamples out{grid, {}};
  out.values.reserve(grid.size());
  for (int k = 0; k < grid.size(); ++k) out.values.push_back(f(grid.point(k)));
  return out;
}

BoundarySamples BoundarySamples::of(const FourierSeries& f, const CircleGrid& grid) {
  return {grid, f.sample(grid)};
}

Complex poisson_extension(const FourierSeries& f, Complex z) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw DomainError("poisson_extension: |z| must be < 1");
  const double theta = std::arg(z);
  Complex acc = f.coefficient(0);
  double rn = 1.0;
  for (int n = 1; n <= f.max_degree(); ++n) {
    rn *= r;
    acc += rn * (f.coefficient(n) * std::polar(1.0, n * theta) + f.coefficient(-n) * std::polar(1.0, -n * theta));
  }
  return acc;
}

Complex poisson_extension(const BoundarySamples& f, Complex z) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw DomainError("poisson_extension: |z| must be < 1");
  const int n = f.grid.size();
  if (1.0 - r < 32.0 / n) {
    throw ResolutionError("poisson_extension: 1-|z| = " + std::to_string(1.0 - r) +
                          " is below the grid guard 32/N");
  }
  const double one_minus = (1.0 - r) * (1.0 + r);
  Complex acc{};
  for (int k = 0; k < n; ++k) {
    acc += f.values[k] * (one_minus / std::norm(f.grid.point(k) - z));
  }
  return acc / static_cast<double>(n);
}

FourierSeries szego_series(const FourierSeries& f) {
  FourierSeries out(f.max_degree());
  for (int n = 0; n <= f.max_degree(); ++n) out.set_coefficient(n, f.coefficient(n));
  return out;
}

FunctionSpec szego_project(const FourierSeries& f) {
  std::vector<Complex> coeffs(f.max_degree() + 1);
  for (int n = 0; n <= f.max_degree(); ++n) coeffs[n] = f.coefficient(n);
  return FunctionSpec::polynomial(std::move(coeffs));
}

FourierSeries conjugate_function(const FourierSeries& f) {
  FourierSeries out(f.max_degree());
  const Complex minus_i(0.0, -1.0);
  for (int n = 1; n <= f.max_degree(); ++n) {
    out.set_coefficient(n, minus_i * f.coefficient(n));
    out.set_coefficient(-n, -minus_i * f.coefficient(-n));
  }
  return out;
}

Complex arc_mean(const BoundarySamples& f, const Arc& arc) {
  const ArcNodes nodes = arc_nodes(f.grid, arc);
  if (nodes.indices.size() < 8) {
    throw ResolutionError("arc_mean: arc of length " + std::to_string(arc.length) + " holds " +
                          std::to_string(nodes.indices.size()) + " nodes, need 8");
  }
  Complex acc{};
  for (std::size_t i = 0; i < nodes.indices.size(); ++i) acc += nodes.weights[i] * f.values[nodes.indices[i]];
  return acc;
}

}  // namespace campanato

#pragma once

#include <vector>

#include "campanato/function_spec.hpp"
#include "campanato/quadrature.hpp"
#include "campanato/types.hpp"

namespace campanato {

/// Trigonometric polynomial sum_{|n| <= M} c_n e^{i n theta}.
class FourierSeries {
 public:
  FourierSeries() : FourierSeries(0) {}
  explicit FourierSeries(int max_degree);
  /// coeffs[n + M] holds c_n; the size must be odd.
  explicit FourierSeries(std::vector<Complex> coeffs);

  /// Boundary values of sum_k a_k z^k.
  static FourierSeries from_polynomial(const std::vector<Complex>& coeffs);
  /// Discrete Fourier coefficients |n| <= max_degree of uniform samples.
  static FourierSeries from_samples(const std::vector<Complex>& samples, int max_degree);

  int max_degree() const { return degree_; }
  Complex coefficient(int n) const;
  void set_coefficient(int n, Complex c);

  Complex operator()(double theta) const;
  std::vector<Complex> sample(const CircleGrid& grid) const;

  FourierSeries operator+(const FourierSeries& other) const;
  FourierSeries operator-(const FourierSeries& other) const;
  FourierSeries operator*(Complex c) const;

 private:
  int degree_;
  std::vector<Complex> coeffs_;
};

/// Values of a boundary function at the nodes of a CircleGrid.
struct BoundarySamples {
  CircleGrid grid{1};
  std::vector<Complex> values;

  static BoundarySamples of(const FunctionSpec& f, const CircleGrid& grid);
  static BoundarySamples of(const FourierSeries& f, const CircleGrid& grid);
};

/// Exact harmonic extension sum_n c_n r^|n| e^{i n theta}.
Complex poisson_extension(const FourierSeries& f, Complex z);

/// Trapezoid quadrature of the Poisson integral. ResolutionError when
/// 1 - |z| < 32 / N, where the kernel peak is no longer resolved.
Complex poisson_extension(const BoundarySamples& f, Complex z);

/// Nonnegative-frequency part of f as a polynomial in z.
FunctionSpec szego_project(const FourierSeries& f);
/// The same projection kept as a Fourier series.
FourierSeries szego_series(const FourierSeries& f);

/// c_n -> -i sign(n) c_n.
FourierSeries conjugate_function(const FourierSeries& f);

/// Mean of the samples over the closed arc (trapezoid with half-weight
/// endpoints). ResolutionError when fewer than 8 nodes fall inside.
Complex arc_mean(const BoundarySamples& f, const Arc& arc);

}  // namespace campanato

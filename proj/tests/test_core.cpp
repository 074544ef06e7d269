#include <cmath>
#include <random>

#include "campanato/function_spec.hpp"
#include "campanato/mobius.hpp"
#include "campanato/quadrature.hpp"
#include "doctest.h"

using namespace campanato;

namespace {

Complex random_disk_point(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(rmax * std::sqrt(u(rng)), kTwoPi * u(rng));
}

Complex central_difference(const FunctionSpec& f, Complex z, double h) {
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("evaluate closed forms") {
  CHECK(std::abs(evaluate(FunctionSpec::monomial(3), 0.5) - 0.125) < 1e-15);
  CHECK(std::abs(evaluate(FunctionSpec::cauchy(0.0), Complex(0.3, 0.4)) - 1.0) < 1e-15);
  CHECK(std::abs(evaluate(FunctionSpec::cauchy(0.5), 0.5) - 4.0 / 3.0) < 1e-15);
  CHECK(std::abs(derivative_at(FunctionSpec::monomial(2), 0.3) - 0.6) < 1e-15);
  CHECK(std::abs(derivative_at(FunctionSpec::cauchy(0.5), 0.0) - 0.5) < 1e-15);
}

TEST_CASE("boundary domain errors") {
  CHECK_THROWS_AS(evaluate(FunctionSpec::log_kernel(), 1.0), DomainError);
  CHECK_THROWS_AS(FunctionSpec::cauchy(1.0), DomainError);
  CHECK_NOTHROW(evaluate(FunctionSpec::cauchy(0.5), Complex(0.0, 1.0)));
  CHECK_THROWS_AS(evaluate(FunctionSpec::monomial(2), 1.5), DomainError);
}

TEST_CASE("derivatives agree with central differences") {
  std::mt19937_64 rng(7);
  const std::vector<FunctionSpec> family{
      FunctionSpec::monomial(5),
      FunctionSpec::polynomial({{1, 2}, {0.5, -1}, {0, 0.3}, {-0.2, 0.1}}),
      FunctionSpec::cauchy({0.6, -0.3}),
      FunctionSpec::scaled_cauchy({-0.4, 0.7}, 2.0, 0.5),
      FunctionSpec::log_kernel(),
      FunctionSpec::lacunary(3, 1.0),
      FunctionSpec::lacunary(2, 0.5, 2, 1, 6),
      FunctionSpec::mobius_pullback(MobiusMap({0.3, 0.5}), FunctionSpec::cauchy({0.2, 0.1})),
      FunctionSpec::sum({FunctionSpec::monomial(2), FunctionSpec::log_kernel()}),
      FunctionSpec::scale({0.0, 2.0}, FunctionSpec::cauchy(0.7)),
      FunctionSpec::compose(FunctionSpec::log_kernel(), FunctionSpec::polynomial({0.0, 0.5, 0.3})),
  };
  int checked_pairs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const FunctionSpec& f = family[trial % std::ssize(family)];
    const Complex z = random_disk_point(rng, 0.85);
    const Complex exact = derivative_at(f, z);
    const Complex approx = central_difference(f, z, 1e-6);
    CHECK(std::abs(exact - approx) <= 1e-6 * std::max(1.0, std::abs(exact)));
    ++checked_pairs;
  }
  CHECK(checked_pairs == 100);
}

TEST_CASE("value_and_derivative matches separate calls") {
  const auto f = FunctionSpec::mobius_pullback(MobiusMap(0.4), FunctionSpec::monomial(3));
  const Complex z(0.1, -0.6);
  const auto [v, d] = f.value_and_derivative(z);
  CHECK(std::abs(v - f(z)) < 1e-14);
  CHECK(std::abs(d - f.derivative(z)) < 1e-14);
}

TEST_CASE("Mobius map fixed points and involution") {
  const MobiusMap zero(0.0);
  CHECK(std::abs(zero.apply({0.3, 0.2}) + Complex(0.3, 0.2)) < 1e-16);
  const MobiusMap half(0.5);
  CHECK(std::abs(half.apply(0.0) - 0.5) < 1e-16);
  CHECK(std::abs(half.apply(0.5)) < 1e-16);

  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const MobiusMap m(random_disk_point(rng, 0.999));
    const Complex z = random_disk_point(rng, 0.999);
    worst = std::max(worst, std::abs(m.apply(m.apply(z)) - z));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("Mobius map boundary behaviour and errors") {
  const MobiusMap m({0.3, -0.4});
  const Complex zeta = std::polar(1.0, 0.7);
  CHECK(std::abs(std::abs(m.apply(zeta)) - 1.0) < 1e-14);
  CHECK(std::abs(m.apply({0.2, 0.1})) < 1.0);
  const MobiusMap unit(1.0);
  CHECK_THROWS_AS(mobius_apply(unit, 1.0), DomainError);
  CHECK_THROWS_AS(MobiusMap(1.5), DomainError);
  const Complex z(0.95, 0.2);
  const double direct = 1.0 - std::norm(m.apply(z));
  CHECK(std::abs(m.one_minus_abs2(z) - direct) < 1e-13);
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const GaussRule g = gauss_legendre(8);
  for (int k = 0; k <= 15; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], k);
    const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
    CHECK(std::abs(s - exact) < 1e-14);
  }
  CHECK(gauss_legendre(7).nodes.size() == 7);
}

TEST_CASE("grids carry unit mass") {
  const GridConfig config;
  const CircleRule circle = CircleRule::uniform(CircleGrid(config.circle_nodes));
  CHECK(std::abs(circle.total_weight() - 1.0) < 1e-12);

  const DiskGrid disk(config, config.area_angles);
  CHECK(std::abs(disk.area_rule().total_weight() - 1.0) < 1e-10);
  const AreaRule moved = disk.recentered({0.6, 0.3});
  CHECK(std::abs(moved.total_weight() - 1.0) < 1e-10);

  const CircleRule adapted = CircleRule::mobius_adapted({0.0, 0.999}, 1024, 8);
  CHECK(std::abs(adapted.total_weight() - 1.0) < 1e-10);
}

TEST_CASE("area quadrature of log(1/|w|)") {
  const GridConfig config;
  const DiskGrid disk(config, 16);
  const AreaRule rule = disk.area_rule();
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * -std::log(std::abs(rule.points[i]));
  CHECK(std::abs(s - 0.5) < 1e-6);

  // Recentering at c puts log(1/|sigma_c(w)|) on the polar origin.
  // Closed form: int log(1/|sigma_c|) dA = (1 - |c|^2) / 2.
  const Complex c(0.5, 0.4);
  const AreaRule moved = DiskGrid(config, config.area_angles).recentered(c);
  double t = 0.0;
  const MobiusMap sigma(c);
  for (std::size_t i = 0; i < moved.size(); ++i) {
    t += moved.weights[i] * -std::log(std::abs(sigma.apply(moved.points[i])));
  }
  CHECK(std::abs(t - 0.5 * (1.0 - std::norm(c))) < 1e-6);
}

TEST_CASE("radial rule reaches delta_min and absorbs weights") {
  const RadialGrid radial(16, 1e-4, 8);
  const RadialRule rule = radial.rule(1.0);
  double smallest = 1.0;
  for (double d : rule.d) smallest = std::min(smallest, d);
  CHECK(smallest < 1e-4);

  for (double s : {0.0, 1.0, -0.5, -0.9}) {
    for (double h : {1.0, 0.25, 1.0 / 1024}) {
      const RadialRule rr = radial.rule(h, s);
      double sum = 0.0;
      for (double w : rr.weights) sum += w;
      const double exact = std::pow(h, 1.0 + s) / (1.0 + s);
      CHECK(std::abs(sum - exact) < 1e-12 * std::max(1.0, exact));
    }
  }
  CHECK_THROWS_AS(radial.rule(0.5, -1.0), SingularWeightError);
}

TEST_CASE("refined grids extend the base grid") {
  const GridConfig base;
  const GridConfig fine = base.refined();
  CHECK(fine.circle_nodes == 2 * base.circle_nodes);
  CHECK(fine.radial_panels == 2 * base.radial_panels);
  CHECK(std::abs(fine.delta_min - 1e-8) < 1e-20);
  CHECK_NOTHROW(fine.validate());
  GridConfig bad;
  bad.delta_min = -1.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("arc node selection") {
  const CircleGrid grid(64);
  const ArcNodes half = arc_nodes(grid, Arc(0.0, 0.5));
  CHECK(half.indices.size() == 33);
  double total = 0.0;
  for (double w : half.weights) total += w;
  CHECK(std::abs(total - 1.0) < 1e-14);

  const AngleRange range = angle_range(64, Arc(0.0, 0.25));
  CHECK(range.count == 16);
  CHECK(range.first == 56);
  CHECK(angle_range(64, Arc(1.0, 1.0)).count == 64);
  CHECK_THROWS_AS(Arc(0.0, 1.5), DomainError);
}

TEST_CASE("arc families are dyadic") {
  const ArcFamily family(4, 256, 4);
  const auto levels = family.levels();
  REQUIRE(levels.size() == 5);
  CHECK(levels[0].centers.size() == 1);
  CHECK(levels[1].centers.size() == 8);
  CHECK(levels[4].centers.size() == 64);
  CHECK(std::abs(levels[4].length - 1.0 / 16) < 1e-16);
  const WGrid w(3, 8);
  CHECK(w.points().size() == 25);
}

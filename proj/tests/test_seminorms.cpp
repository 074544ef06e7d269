#include <cmath>
#include <random>

#include "campanato/fourier.hpp"
#include "campanato/seminorms.hpp"
#include "doctest.h"

using namespace campanato;

namespace {

GridConfig small_grid() {
  GridConfig g;
  g.circle_nodes = 2048;
  g.arc_depth = 8;
  g.disk_angles = 256;
  g.w_angles = 32;
  return g;
}

double campanato_of(const FunctionSpec& f, const IndexParams& ip, const GridConfig& g) {
  const CircleGrid circle(g.circle_nodes);
  return campanato_seminorm(BoundarySamples::of(f, circle), ip, ArcFamily(g.arc_depth, g.circle_nodes)).value;
}

}  // namespace

TEST_CASE("index parameters and regimes") {
  const IndexParams ip(2.0, 1.0);
  CHECK(ip.alpha() == doctest::Approx(1.0));
  CHECK(ip.in_equivalence_regime());
  CHECK(IndexParams(2.0, 3.5).regime() != ip.regime());
  CHECK_THROWS_AS(IndexParams(0.5, 1.0), DomainError);
}

TEST_CASE("hardy norms") {
  const CircleGrid circle(1024);
  CHECK(hardy_norm(FunctionSpec::monomial(5), 2.0, circle) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(hardy_norm(FunctionSpec::constant(Complex(3.0, 4.0)), 3.0, circle) == doctest::Approx(5.0).epsilon(1e-14));
  // Coefficient oracle: ||f_b||_2^2 = sum |b|^(2n) = 1 / (1 - |b|^2).
  CHECK(hardy_norm(FunctionSpec::cauchy(0.5), 2.0, circle) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("seminorms vanish on constants") {
  const GridConfig g = small_grid();
  const IndexParams ip(2.0, 1.0);
  const FunctionSpec c = FunctionSpec::constant(Complex(2.0, -1.0));
  CHECK(campanato_of(c, ip, g) < 1e-13);
  CHECK(mobius_seminorm(c, ip, WGrid(g), g).value < 1e-13);
  CHECK(lp_star_seminorm(c, ip, ArcFamily(g.arc_depth, g.circle_nodes), RadialGrid(g)).value == 0.0);
  CHECK(bloch_norm(c, 1.0, DiskGrid(g, g.disk_angles)).value == 0.0);
}

TEST_CASE("identity function closed forms") {
  const GridConfig g = small_grid();
  const IndexParams ip(2.0, 1.0);
  const FunctionSpec z = FunctionSpec::monomial(1);
  // Geometric-series oracle: ||sigma_w - w||_2 = (1 - |w|^2)^(1/2), largest at w = 0.
  const SeminormReport m = mobius_seminorm(z, ip, WGrid(g), g);
  CHECK(m.value == doctest::Approx(1.0).epsilon(1e-10));
  REQUIRE(m.point);
  CHECK(std::abs(*m.point) < 1e-15);
  // Radial oracle: (h^-1 h h^2 / 2)^(1/2) at h = 1.
  const SeminormReport l = lp_star_seminorm(z, ip, ArcFamily(g.arc_depth, g.circle_nodes), RadialGrid(g));
  CHECK(l.value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
  CHECK(l.arc->length == 1.0);
  CHECK(bloch_norm(z, 1.0, DiskGrid(g, g.disk_angles)).value == doctest::Approx(1.0));
  const double c = campanato_of(z, ip, g);
  CHECK(c > 0.0);
  CHECK(std::isfinite(c));
}

TEST_CASE("bloch norm along the ray") {
  const GridConfig g;
  const double b = 0.9;
  double best = 0.0;
  for (int k = 0; k <= 200000; ++k) {
    const double t = k / 200000.0 * 0.9999;
    best = std::max(best, (1.0 - t * t) * b / ((1.0 - b * t) * (1.0 - b * t)));
  }
  const SeminormReport r = bloch_norm(FunctionSpec::cauchy(b), 1.0, DiskGrid(g, g.disk_angles));
  CHECK(r.value <= best * (1.0 + 1e-9));
  CHECK(r.value == doctest::Approx(best).epsilon(1e-3));
  CHECK(std::abs(std::arg(*r.point)) < 1e-12);
}

TEST_CASE("seminorms are absolutely homogeneous") {
  const GridConfig g = small_grid();
  const IndexParams ip(2.0, 0.5);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 4; ++trial) {
    const FunctionSpec f = FunctionSpec::polynomial({gauss(rng), {gauss(rng), gauss(rng)}, gauss(rng), {0.0, gauss(rng)}});
    const Complex c(gauss(rng), gauss(rng));
    const FunctionSpec cf = FunctionSpec::scale(c, f);
    CHECK(campanato_of(cf, ip, g) == doctest::Approx(std::abs(c) * campanato_of(f, ip, g)).epsilon(1e-11));
    const ArcFamily arcs(g.arc_depth, g.circle_nodes);
    const RadialGrid radial(g);
    CHECK(lp_star_seminorm(cf, ip, arcs, radial).value ==
          doctest::Approx(std::abs(c) * lp_star_seminorm(f, ip, arcs, radial).value).epsilon(1e-11));
  }
}

TEST_CASE("out of regime inputs are flagged") {
  const GridConfig g = small_grid();
  const CircleGrid circle(g.circle_nodes);
  const BoundarySamples z = BoundarySamples::of(FunctionSpec::monomial(1), circle);
  const SeminormReport r = campanato_seminorm(z, IndexParams(2.0, 4.0), ArcFamily(g.arc_depth, g.circle_nodes));
  CHECK(has_flag(r.flags, Flag::ConstantsOnly));
  CHECK(has_flag(r.flags, Flag::Divergent));
  CHECK(finest_level_grows({1.0, 1.0, 1.2}));
  CHECK_FALSE(finest_level_grows({1.0, 1.0, 1.05}));
}

TEST_CASE("tent seminorm rejects unresolved arcs") {
  GridConfig g = small_grid();
  g.delta_min = 1e-2;
  CHECK_THROWS_AS(lp_star_seminorm(FunctionSpec::monomial(1), IndexParams(2.0, 1.0), ArcFamily(8, 2048), RadialGrid(g)),
                  ResolutionError);
}

TEST_CASE("equivalence report") {
  const Seminorm a = [](const FunctionSpec& f) { return std::abs(f.derivative(0.0)); };
  const RatioStats same = equivalence_report(a, a, {FunctionSpec::monomial(1), FunctionSpec::cauchy(0.5)});
  CHECK(same.spread == doctest::Approx(1.0));
  CHECK_THROWS_AS(equivalence_report(a, a, {}), DomainError);
  const RatioStats consts = equivalence_report(a, a, {FunctionSpec::constant(1.0)});
  CHECK(has_flag(consts.flags, Flag::Degenerate));
}

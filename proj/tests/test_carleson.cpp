#include <cmath>

#include "campanato/carleson.hpp"
#include "doctest.h"

using namespace campanato;

namespace {

GridConfig box_grid() {
  GridConfig g;
  g.arc_depth = 8;
  g.disk_angles = 512;
  return g;
}

}  // namespace

TEST_CASE("box masses") {
  const GridConfig g = box_grid();
  const DiskGrid disk(g, g.disk_angles);
  CHECK(box_mass(Density::constant(0.0), CarlesonBox{Arc(0.3, 0.5)}, disk) == 0.0);
  CHECK(box_mass(Density::constant(1.0), CarlesonBox{Arc(0.0, 1.0)}, disk) == doctest::Approx(1.0).epsilon(1e-12));
  for (double h : {0.5, 0.25, 0.125, 1.0 / 64}) {
    CHECK(box_mass(Density::constant(1.0), CarlesonBox{Arc(1.0, h)}, disk) ==
          doctest::Approx(2.0 * h * h - h * h * h).epsilon(1e-9));
  }
  CHECK_THROWS_AS(box_mass(Density::constant(1.0), CarlesonBox{Arc(0.001, 1e-6)}, DiskGrid(g, 64)),
                  ResolutionError);
}

TEST_CASE("carleson norm closed forms") {
  const GridConfig g = box_grid();
  const DiskGrid disk(g, g.disk_angles);
  const ArcFamily arcs(g.arc_depth, g.disk_angles);
  const SeminormReport one = carleson_norm(Density::constant(1.0), 2.0, arcs, disk);
  CHECK(one.value == doctest::Approx(2.0 - std::ldexp(1.0, -g.arc_depth)).epsilon(1e-9));
  CHECK(one.arc->length == doctest::Approx(std::ldexp(1.0, -g.arc_depth)));
  CHECK(carleson_norm(Density::constant(0.0), 1.0, arcs, disk).value == 0.0);
  // rho = 1 - |z|^2 has box mass <= 2 h^2, so the eta = 1 norm is at most 2.
  const double id = carleson_norm(Density::derivative_energy(FunctionSpec::monomial(1)), 1.0, arcs, disk).value;
  CHECK(id > 0.0);
  CHECK(id <= 2.0);
  CHECK_THROWS_AS(carleson_norm(Density::constant(1.0), 1.0, ArcFamily(g.arc_depth, 256), disk), Error);
}

TEST_CASE("carleson norm is monotone and homogeneous") {
  const GridConfig g = box_grid();
  const DiskGrid disk(g, g.disk_angles);
  const ArcFamily arcs(g.arc_depth, g.disk_angles);
  const FunctionSpec f = FunctionSpec::polynomial({0.0, 1.0, Complex(0.0, 0.4), 0.2});
  const double a = carleson_norm(Density::derivative_energy(f, 1.0), 1.0, arcs, disk).value;
  const double b = carleson_norm(Density::derivative_energy(f, 0.5), 1.0, arcs, disk).value;
  const double c = carleson_norm(Density::scaled(2.5, Density::derivative_energy(f, 1.0)), 1.0, arcs, disk).value;
  CHECK(a <= b);
  CHECK(c == doctest::Approx(2.5 * a).epsilon(1e-14));
}

TEST_CASE("T_ab at the origin") {
  const GridConfig g;
  const DiskGrid area(g, g.area_angles);
  CHECK(t_ab_apply(1.0, 1.0, Density::constant(1.0), 0.0, area) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t_ab_apply(1.0, 2.0, Density::constant(1.0), 0.0, area) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(t_ab_apply(1.0, 2.0, Density::constant(0.0), Complex(0.2, 0.3), area) == 0.0);
  CHECK_THROWS_AS(t_ab_apply(1.0, 2.0, Density::constant(1.0), 0.99999, area), ResolutionError);
}

TEST_CASE("lemma31 ratio") {
  const GridConfig g;
  const Lemma31Grids grids = Lemma31Grids::from(g);
  const Lemma31Result zero = lemma31_ratio(Density::constant(0.0), 1.0, 2.0, 1.0, grids.arcs, grids.eval, grids.area);
  CHECK(zero.ratio == 0.0);
  CHECK(has_flag(zero.flags, Flag::Degenerate));
  const Lemma31Result r = lemma31_ratio(Density::boundary_power(-0.5), 1.0, 2.0, 1.0, grids.arcs, grids.eval, grids.area);
  CHECK(std::isfinite(r.ratio));
  CHECK(r.ratio > 0.0);
}

TEST_CASE("level sets shrink as eps grows") {
  const FunctionSpec f = FunctionSpec::cauchy(0.8);
  const LevelSetSpec lo{f, 1.0, 0.1};
  const LevelSetSpec hi{f, 1.0, 0.6};
  for (double r : {0.1, 0.5, 0.9, 0.99}) {
    const Complex z = r;
    const double oma = (1.0 - r) * (1.0 + r);
    if (hi.contains(z, oma)) CHECK(lo.contains(z, oma));
  }
}

TEST_CASE("distance to the little space") {
  GridConfig g = box_grid();
  const ProfileGrids grids = ProfileGrids::from(g);
  CHECK(distance_estimate(FunctionSpec::constant(2.0), 1.0, grids).value == 0.0);
  const DistanceEstimate poly = distance_estimate(FunctionSpec::polynomial({1.0, -1.0, 0.0, 2.0}), 1.0, grids);
  CHECK(poly.value == 0.0);
  CHECK_FALSE(poly.transition);

  const FunctionSpec raw = FunctionSpec::lacunary(3, 1.0);
  const FunctionSpec lac = FunctionSpec::scale(1.0 / bloch_norm(raw, 1.0, grids.base).value, raw);
  const std::vector<ProfileRow> rows = distance_profile(lac, 1.0, {0.02, 0.2, 0.6, 1.0, 1.5}, grids);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(rows[k].norm <= rows[k - 1].norm);
    CHECK(rows[k].refined_norm <= rows[k - 1].refined_norm);
  }
  CHECK(rows.front().flag == Flag::Divergent);
  CHECK(rows.back().flag == Flag::Bounded);
  CHECK(distance_estimate(lac, 1.0, grids).value > 0.0);
}

#include <algorithm>
#include <cmath>

#include "campanato/composition.hpp"
#include "campanato/mobius.hpp"
#include "doctest.h"

using namespace campanato;

TEST_CASE("preimages") {
  const SelfMapSpec sq = SelfMapSpec::polynomial({0.0, 0.0, 1.0});
  PreimageSet r = preimages(sq, 0.25);
  REQUIRE(r.roots.size() == 2);
  std::sort(r.roots.begin(), r.roots.end(), [](const Preimage& a, const Preimage& b) { return a.z.real() < b.z.real(); });
  CHECK(std::abs(r.roots[0].z + 0.5) < 1e-14);
  CHECK(std::abs(r.roots[1].z - 0.5) < 1e-14);
  CHECK(r.roots[0].multiplicity == 1);
  const PreimageSet zero = preimages(sq, 0.0);
  REQUIRE(zero.roots.size() == 1);
  CHECK(zero.roots[0].multiplicity == 2);
  const Complex a(0.3, -0.4);
  const Complex w(-0.2, 0.6);
  const PreimageSet m = preimages(SelfMapSpec::mobius(a), w);
  REQUIRE(m.roots.size() == 1);
  CHECK(std::abs(m.roots[0].z - MobiusMap(a).apply(w)) < 1e-13);
}

TEST_CASE("self-map certification") {
  CHECK_THROWS_AS(SelfMapSpec::polynomial({0.0, 1.2}), CertificationError);
  CHECK_THROWS_AS(SelfMapSpec::polynomial({0.5}), Error);
  CHECK_THROWS_AS(SelfMapSpec::scaled(1.5, SelfMapSpec::identity()), Error);
  CHECK_NOTHROW(SelfMapSpec::polynomial({0.0, 0.0, 0.5, 0.5}));
}

TEST_CASE("Nevanlinna counting function") {
  const SelfMapSpec sq = SelfMapSpec::polynomial({0.0, 0.0, 1.0});
  for (double r : {0.1, 0.5, 0.9}) {
    const Complex w = std::polar(r, 0.7);
    CHECK(nevanlinna(sq, w) == doctest::Approx(std::log(1.0 / r)).epsilon(1e-12));
    CHECK(nevanlinna(SelfMapSpec::identity(), w) == doctest::Approx(std::log(1.0 / r)).epsilon(1e-12));
    const Complex a(0.4, 0.2);
    CHECK(nevanlinna(SelfMapSpec::mobius(a), w) ==
          doctest::Approx(std::log(1.0 / std::abs(MobiusMap(a).apply(w)))).epsilon(1e-12));
  }
  CHECK_THROWS_AS(nevanlinna(sq, 0.0), InfiniteValueError);
  CHECK(nevanlinna(SelfMapSpec::polynomial({0.0, 0.5}), 0.7) == 0.0);
}

TEST_CASE("Stanton formula") {
  const GridConfig g;
  const DiskGrid disk(g, g.area_angles);
  for (int n = 1; n <= 4; ++n) {
    CHECK(stanton_norm(FunctionSpec::monomial(n), SelfMapSpec::identity(), 2.0, disk).value ==
          doctest::Approx(1.0).epsilon(1e-6));
  }
  CHECK(stanton_norm(FunctionSpec::constant(Complex(0.0, 2.0)), SelfMapSpec::mobius(0.5), 3.0, disk).value ==
        doctest::Approx(2.0));
  const StantonResult sq = stanton_norm(FunctionSpec::monomial(1), SelfMapSpec::polynomial({0.0, 0.0, 1.0}), 2.0, disk);
  CHECK(sq.value == doctest::Approx(hardy_norm(SelfMapSpec::polynomial({0.0, 0.0, 1.0}), 2.0, CircleGrid(1024))).epsilon(1e-5));
}

TEST_CASE("counting identity and logarithmic bound") {
  const GridConfig g;
  const DiskGrid disk(g, g.area_angles);
  const CircleGrid circle(g.circle_nodes);
  const Lemma42Report half = lemma42_checks(SelfMapSpec::polynomial({0.0, 0.5}), disk, circle, 1e-4);
  CHECK(half.norm_sq == doctest::Approx(0.25));
  CHECK(half.gap <= 1e-4);
  CHECK(half.max_ratio <= 1.0);
  CHECK(half.nodes_checked > 0);
}

TEST_CASE("splitting ratio") {
  const CircleGrid circle(512);
  CHECK(splitting_ratio(FunctionSpec::monomial(1), SelfMapSpec::identity(), 2.0, circle) == doctest::Approx(1.0));
  CHECK(splitting_ratio(FunctionSpec::monomial(2), SelfMapSpec::polynomial({0.0, 0.5}), 2.0, circle) ==
        doctest::Approx(0.5));
  CHECK_THROWS_AS(splitting_ratio(FunctionSpec::constant(1.0), SelfMapSpec::identity(), 2.0, circle), PreconditionError);
  CHECK_THROWS_AS(splitting_ratio(FunctionSpec::monomial(1), SelfMapSpec::identity(), 1.5, circle), DomainError);
}

TEST_CASE("boundedness criteria") {
  GridConfig g;
  g.w_angles = 16;
  g.arc_depth = 6;
  const WGrid wgrid(g);
  CHECK(thm42_criterion(SelfMapSpec::identity(), 2.0, 0.7, 0.7, wgrid, g).value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(thm42_criterion(SelfMapSpec::mobius(Complex(0.2, 0.5)), 2.0, 1.0, 1.0, wgrid, g).value ==
        doctest::Approx(1.0).epsilon(1e-8));

  const DiskGrid disk(g, 256);
  CHECK(thm43i_criterion(SelfMapSpec::identity(), 1.0, 2.0, 1.0, disk).value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(thm43i_criterion(SelfMapSpec::polynomial({0.0, 0.5}), 1.0, 2.0, 1.0, disk).value == doctest::Approx(0.5));
  CHECK(thm43i_criterion(SelfMapSpec::mobius(Complex(0.0, 0.7)), 1.0, 2.0, 1.0, disk).value ==
        doctest::Approx(1.0).epsilon(1e-12));

  const ArcFamily arcs(g.arc_depth, 2048);
  const RadialGrid radial(g);
  CHECK(thm43ii_criterion(SelfMapSpec::identity(), 0.5, 2.0, 1.0, arcs, radial).value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(thm43ii_criterion(SelfMapSpec::polynomial({0.0, 0.5}), 0.5, 2.0, 1.0, arcs, radial).value ==
        doctest::Approx(0.5).epsilon(1e-10));
  // (1/4) h^(2 - 2 alpha) / (2 - 2 alpha) at h = 1, alpha = 1/4.
  CHECK(thm43ii_criterion(SelfMapSpec::polynomial({0.0, 0.5}), 0.25, 2.0, 1.0, arcs, radial).value ==
        doctest::Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-6));
  CHECK_THROWS_AS(thm43ii_criterion(SelfMapSpec::identity(), 1.0, 2.0, 1.0, arcs, radial), SingularWeightError);
}

TEST_CASE("Bloch pair") {
  const GridConfig g;
  const DiskGrid disk(g, g.disk_angles);
  const BlochPair pair = bloch_pair(1.0, disk, 4);
  CHECK(pair.certificate.ratio() >= 0.05);
  CHECK(pair_statistic(1.0, {pair.f1}, disk).ratio() < 0.05);
  CHECK_THROWS_AS(bloch_pair(0.0, disk, 4), DomainError);
}

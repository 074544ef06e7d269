#include "campanato/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "campanato/carleson.hpp"
#include "campanato/composition.hpp"
#include "campanato/fourier.hpp"
#include "campanato/seminorms.hpp"
#include "campanato/thresholds.hpp"

namespace campanato {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

double rel_change(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

CheckResult run_check(const std::string& id, const std::string& name,
                      const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.id = id;
  r.name = name;
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const Error& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

void bound(CheckResult& r, double value, double threshold) {
  r.value = value;
  r.threshold = threshold;
  r.passed = value <= threshold;
}

void within_runtime(CheckResult& r, Clock::time_point start, double limit) {
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  r.data["runtime_limit_s"] = limit;
  if (s >= limit) {
    r.passed = false;
    r.detail += "; runtime " + fmt(s) + " s exceeds " + fmt(limit) + " s";
  }
}

const std::vector<double>& f_b_moduli() {
  static const std::vector<double> kModuli{0.3, 0.6, 0.9, 0.97};
  return kModuli;
}

const std::vector<IndexParams>& equivalence_indices() {
  static const std::vector<IndexParams> kIndices{IndexParams(2.0, 0.5), IndexParams(2.0, 1.0)};
  return kIndices;
}

Json index_json(const IndexParams& ip) { return Json{{"p", ip.p}, {"eta", ip.eta}}; }

// ----------------------------------------------------------------- criteria

CheckResult criterion_stanton(const GridConfig& g) {
  return run_check("A1", "Stanton formula: ||z^n o id||_2 = 1 for n = 1..4", [&](CheckResult& r) {
    const auto start = Clock::now();
    const DiskGrid disk(g, g.area_angles);
    double worst = 0.0;
    Json values = Json::array();
    for (int n = 1; n <= 4; ++n) {
      const double v = stanton_norm(FunctionSpec::monomial(n), SelfMapSpec::identity(), 2.0, disk).value;
      values.push_back(v);
      worst = std::max(worst, std::abs(v - 1.0));
    }
    r.data["values"] = values;
    bound(r, worst, 1e-5);
    r.detail = "max |stanton_norm - 1|";
    within_runtime(r, start, 10.0);
  });
}

std::vector<SelfMapSpec> lemma42_family() {
  return {SelfMapSpec::identity(), SelfMapSpec::polynomial({0.0, 0.0, 1.0}),
          SelfMapSpec::polynomial({0.0, 0.0, 0.0, 0.5}), SelfMapSpec::polynomial({0.0, 0.0, 0.5, 0.5})};
}

CheckResult criterion_lemma42_identity(const GridConfig& g) {
  return run_check("A2", "||phi||_2^2 = 2 int N(phi, w) dA(w) for z, z^2, z^3/2, (z^2+z^3)/2", [&](CheckResult& r) {
    const auto start = Clock::now();
    const DiskGrid disk(g, g.area_angles);
    const CircleGrid circle(g.circle_nodes);
    double worst = 0.0;
    Json gaps = Json::array();
    for (const auto& phi : lemma42_family()) {
      const Lemma42Report rep = lemma42_checks(phi, disk, circle, g.delta_min);
      gaps.push_back(rep.gap);
      worst = std::max(worst, rep.gap);
    }
    r.data["gaps"] = gaps;
    bound(r, worst, 1e-4);
    r.detail = "max identity gap";
    within_runtime(r, start, 30.0);
  });
}

CheckResult criterion_lemma42_bound(const GridConfig& g) {
  return run_check("A3", "N(phi, z) <= (4/log 2) ||phi||_2^2 log(1/|z|) on 1/2 < |z| < 1 - 1e-4", [&](CheckResult& r) {
    const auto start = Clock::now();
    const DiskGrid disk(g, g.area_angles);
    const CircleGrid circle(g.circle_nodes);
    double worst = 0.0;
    std::size_t nodes = 0;
    Json ratios = Json::array();
    for (const auto& phi : lemma42_family()) {
      const Lemma42Report rep = lemma42_checks(phi, disk, circle, 1e-4);
      ratios.push_back(rep.max_ratio);
      worst = std::max(worst, rep.max_ratio);
      nodes += rep.nodes_checked;
    }
    r.data["max_ratios"] = ratios;
    r.data["nodes_checked"] = nodes;
    bound(r, worst, 1.0 + 1e-3);
    if (nodes == 0) r.passed = false;
    r.detail = "max ratio over " + std::to_string(nodes) + " nodes";
    within_runtime(r, start, 30.0);
  });
}

using NormOnGrid = std::function<double(const FunctionSpec&, const IndexParams&, const GridConfig&)>;

double campanato_on_grid(const FunctionSpec& f, const IndexParams& ip, const GridConfig& g) {
  const CircleGrid circle(g.circle_nodes);
  return campanato_seminorm(BoundarySamples::of(f, circle), ip, ArcFamily(g.arc_depth, g.circle_nodes)).value;
}

double mobius_on_grid(const FunctionSpec& f, const IndexParams& ip, const GridConfig& g) {
  return mobius_seminorm(f, ip, WGrid(g), g).value;
}

double lp_star_on_grid(const FunctionSpec& f, const IndexParams& ip, const GridConfig& g) {
  return lp_star_seminorm(f, ip, ArcFamily(g.arc_depth, g.circle_nodes), RadialGrid(g)).value;
}

double bloch_on_grid(const FunctionSpec& f, const IndexParams& ip, const GridConfig& g) {
  return bloch_norm(f, ip.alpha(), DiskGrid(g, g.disk_angles)).value;
}

/// Spread over the f_b family of num / campanato and the refinement change of each ratio.
CheckResult equivalence_check(const std::string& id, const std::string& name, const GridConfig& g,
                              double spread_limit, const NormOnGrid& num) {
  return run_check(id, name, [&](CheckResult& r) {
    const GridConfig fine = g.refined();
    double worst_spread = 0.0;
    double worst_change = 0.0;
    r.data["indices"] = Json::array();
    for (const IndexParams& ip : equivalence_indices()) {
      std::vector<double> base;
      std::vector<double> refined;
      for (double b : f_b_moduli()) {
        const FunctionSpec f = FunctionSpec::cauchy(b);
        base.push_back(num(f, ip, g) / campanato_on_grid(f, ip, g));
        refined.push_back(num(f, ip, fine) / campanato_on_grid(f, ip, fine));
      }
      const double lo = *std::min_element(base.begin(), base.end());
      const double hi = *std::max_element(base.begin(), base.end());
      double change = 0.0;
      for (std::size_t i = 0; i < base.size(); ++i) change = std::max(change, rel_change(base[i], refined[i]));
      worst_spread = std::max(worst_spread, hi / lo);
      worst_change = std::max(worst_change, change);
      r.data["indices"].push_back(Json{{"index", index_json(ip)},
                                       {"ratios", base},
                                       {"refined_ratios", refined},
                                       {"spread", hi / lo},
                                       {"max_refinement_change", change}});
    }
    bound(r, worst_spread, spread_limit);
    r.data["max_refinement_change"] = worst_change;
    r.data["ceiling"] = thresholds::kSpreadCeiling;
    r.detail = "spread " + fmt(worst_spread) + ", refinement change " + fmt(worst_change);
    if (worst_change >= thresholds::kRefinementTolerance || spread_limit > thresholds::kSpreadCeiling) {
      r.passed = false;
    }
  });
}

CheckResult criterion_mobius_equivalence(const GridConfig& g) {
  return equivalence_check("A4", "mobius_seminorm / campanato_seminorm spread on f_b", g,
                           thresholds::kMobiusCampanatoSpread, mobius_on_grid);
}

CheckResult criterion_lp_star_equivalence(const GridConfig& g) {
  return equivalence_check("A5", "lp_star_seminorm / campanato_seminorm spread on f_b", g,
                           thresholds::kLpStarCampanatoSpread, lp_star_on_grid);
}

std::vector<std::pair<std::string, FunctionSpec>> embedding_family() {
  std::vector<std::pair<std::string, FunctionSpec>> out;
  for (int n = 1; n <= 6; ++n) out.emplace_back("z^" + std::to_string(n), FunctionSpec::monomial(n));
  for (double b : f_b_moduli()) out.emplace_back("f_b(" + fmt(b) + ")", FunctionSpec::cauchy(b));
  out.emplace_back("log", FunctionSpec::log_kernel());
  return out;
}

CheckResult criterion_embedding(const GridConfig& g) {
  return run_check("A6", "bloch_norm(f, (p+1-eta)/p) <= C lp_star_seminorm(f, p, eta)", [&](CheckResult& r) {
    const GridConfig fine = g.refined();
    double worst = 0.0;
    double worst_change = 0.0;
    r.data["rows"] = Json::array();
    for (const IndexParams& ip : equivalence_indices()) {
      for (const auto& [label, f] : embedding_family()) {
        const double base = bloch_on_grid(f, ip, g) / lp_star_on_grid(f, ip, g);
        const double refined = bloch_on_grid(f, ip, fine) / lp_star_on_grid(f, ip, fine);
        worst = std::max({worst, base, refined});
        worst_change = std::max(worst_change, rel_change(base, refined));
        r.data["rows"].push_back(Json{{"function", label}, {"index", index_json(ip)}, {"ratio", base}, {"refined_ratio", refined}});
      }
    }
    bound(r, worst, thresholds::kEmbeddingConstant);
    r.data["max_refinement_change"] = worst_change;
    r.detail = "max ratio " + fmt(worst) + ", refinement change " + fmt(worst_change);
    if (worst_change >= thresholds::kRefinementTolerance) r.passed = false;
  });
}

CheckResult criterion_carleson_constant(const GridConfig& g) {
  return run_check("A7", "carleson_norm(1, eta = 2) = 2 - h_min", [&](CheckResult& r) {
    const DiskGrid disk(g, g.disk_angles);
    const ArcFamily arcs(g.arc_depth, g.disk_angles);
    const double h_min = std::ldexp(1.0, -g.arc_depth);
    const double v = carleson_norm(Density::constant(1.0), 2.0, arcs, disk).value;
    r.data["norm"] = v;
    r.data["expected"] = 2.0 - h_min;
    bound(r, std::abs(v - (2.0 - h_min)) / (2.0 - h_min), 0.02);
    r.detail = "relative error";
  });
}

FunctionSpec normalized_lacunary(double alpha, const DiskGrid& disk) {
  const FunctionSpec raw = FunctionSpec::lacunary(3, alpha);
  const double b = bloch_norm(raw, alpha, disk).value;
  return FunctionSpec::scale(1.0 / b, raw);
}

CheckResult criterion_distance(const GridConfig& g) {
  return run_check("A8", "distance_estimate: 0 on polynomials, > 0 on the lacunary input, monotone profile",
                   [&](CheckResult& r) {
    const double eta = 1.0;
    const ProfileGrids grids = ProfileGrids::from(g);
    const std::vector<std::pair<std::string, FunctionSpec>> polys{
        {"constant", FunctionSpec::constant(2.0)},
        {"z", FunctionSpec::monomial(1)},
        {"z^5", FunctionSpec::monomial(5)},
        {"1+2z-z^3+0.5z^8", FunctionSpec::polynomial({1.0, 2.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.5})}};
    bool ok = true;
    double worst_poly = 0.0;
    r.data["polynomials"] = Json::array();
    for (const auto& [label, f] : polys) {
      const DistanceEstimate e = distance_estimate(f, eta, grids);
      worst_poly = std::max(worst_poly, e.value);
      ok = ok && e.value == 0.0;
      r.data["polynomials"].push_back(Json{{"function", label}, {"distance", e.value}});
    }
    const FunctionSpec lac = normalized_lacunary(0.5 * (3.0 - eta), grids.base);
    const DistanceEstimate e = distance_estimate(lac, eta, grids);
    r.data["lacunary_distance"] = e.value;
    ok = ok && e.value > 0.0;

    // Profile on a fixed eps ladder; exact monotonicity on both grids.
    std::vector<double> ladder;
    for (int k = 0; k <= 24; ++k) ladder.push_back(0.01 + k * 0.05);
    const auto rows = distance_profile(lac, eta, ladder, grids);
    bool monotone = true;
    for (std::size_t k = 1; k < rows.size(); ++k) {
      monotone = monotone && rows[k].norm <= rows[k - 1].norm && rows[k].refined_norm <= rows[k - 1].refined_norm;
    }
    r.data["profile_monotone"] = monotone;
    r.value = e.value;
    r.threshold = 0.0;
    r.passed = ok && monotone;
    r.detail = "max polynomial distance " + fmt(worst_poly) + ", lacunary distance " + fmt(e.value) +
               (monotone ? ", profile monotone" : ", profile NOT monotone");
  });
}

std::vector<Complex> mobius_points() { return {0.0, 0.5, Complex(0.0, 0.7)}; }

CheckResult criterion_mobius_fixed_points(const GridConfig& g) {
  return run_check("A9", "thm42_criterion(sigma_a) = 1 and thm43i_criterion(sigma_a, 1, 2, 1) = 1", [&](CheckResult& r) {
    const WGrid wgrid(g);
    const DiskGrid disk(g, g.disk_angles);
    double worst42 = 0.0;
    double worst43 = 0.0;
    r.data["rows"] = Json::array();
    for (Complex a : mobius_points()) {
      const SelfMapSpec phi = SelfMapSpec::mobius(a);
      const double v42 = thm42_criterion(phi, 2.0, 1.0, 1.0, wgrid, g).value;
      const double v43 = thm43i_criterion(phi, 1.0, 2.0, 1.0, disk).value;
      worst42 = std::max(worst42, std::abs(v42 - 1.0));
      worst43 = std::max(worst43, std::abs(v43 - 1.0));
      r.data["rows"].push_back(Json{{"a", complex_to_json(a)}, {"thm42", v42}, {"thm43i", v43}});
    }
    r.value = std::max(worst42 / 1e-3, worst43 / 1e-8);
    r.threshold = 1.0;
    r.passed = worst42 <= 1e-3 && worst43 <= 1e-8;
    r.data["thm42_max_error"] = worst42;
    r.data["thm43i_max_error"] = worst43;
    r.detail = "thm42 error " + fmt(worst42) + " (tol 1e-3), thm43i error " + fmt(worst43) + " (tol 1e-8), eta = lambda = 1";
  });
}

CheckResult criterion_splitting(const GridConfig& g) {
  return run_check("A10", "splitting_ratio <= C_split on z^n o (z^m / s), p in {2, 4}", [&](CheckResult& r) {
    const CircleGrid circle(g.circle_nodes);
    double worst = 0.0;
    std::size_t cases = 0;
    for (double p : {2.0, 4.0}) {
      for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 3; ++m) {
          for (double s : {1.0, 2.0, 4.0}) {
            std::vector<Complex> coeffs(m + 1, 0.0);
            coeffs[m] = 1.0;
            const SelfMapSpec phi = SelfMapSpec::scaled(1.0 / s, SelfMapSpec::polynomial(coeffs));
            worst = std::max(worst, splitting_ratio(FunctionSpec::monomial(n), phi, p, circle));
            ++cases;
          }
        }
      }
    }
    r.data["cases"] = cases;
    bound(r, worst, thresholds::kSplitConstant);
    r.detail = "max ratio over " + std::to_string(cases) + " cases";
  });
}

CheckResult criterion_conjugate_identity(const GridConfig&) {
  return run_check("A11", "i conj(f) + Pf = 2 Sf - Pf(0) coefficientwise", [&](CheckResult& r) {
    std::mt19937_64 rng(20261014);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Complex i(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 64; ++trial) {
      const int degree = trial % 33;
      FourierSeries f(degree);
      for (int n = -degree; n <= degree; ++n) f.set_coefficient(n, {gauss(rng), gauss(rng)});
      const FourierSeries lhs = conjugate_function(f) * i + f;
      FourierSeries rhs = szego_series(f) * 2.0;
      rhs.set_coefficient(0, rhs.coefficient(0) - poisson_extension(f, 0.0));
      for (int n = -degree; n <= degree; ++n) worst = std::max(worst, std::abs(lhs.coefficient(n) - rhs.coefficient(n)));
    }
    bound(r, worst, 1e-12);
    r.detail = "max coefficient residual over 64 random polynomials of degree <= 32";
  });
}

// ------------------------------------------------------------ suite checks

CheckResult core_involution(const GridConfig&) {
  return run_check("core.involution", "sigma_w(sigma_w(z)) = z on 1000 random pairs", [](CheckResult& r) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const MobiusMap m(std::polar(0.999 * std::sqrt(u(rng)), kTwoPi * u(rng)));
      const Complex z = std::polar(0.999 * std::sqrt(u(rng)), kTwoPi * u(rng));
      worst = std::max(worst, std::abs(m.apply(m.apply(z)) - z));
    }
    bound(r, worst, 1e-12);
  });
}

CheckResult core_quadrature(const GridConfig& g) {
  return run_check("core.quadrature", "DiskGrid mass 1 and int log(1/|w|) dA = 1/2", [&](CheckResult& r) {
    const AreaRule rule = DiskGrid(g, g.area_angles).area_rule();
    double log_integral = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) log_integral += rule.weights[k] * -std::log(std::abs(rule.points[k]));
    const double mass_error = std::abs(rule.total_weight() - 1.0);
    const double log_error = std::abs(log_integral - 0.5);
    r.data["mass_error"] = mass_error;
    r.data["log_error"] = log_error;
    r.value = std::max(mass_error / 1e-10, log_error / 1e-6);
    r.threshold = 1.0;
    r.passed = mass_error <= 1e-10 && log_error <= 1e-6;
    r.detail = "mass error " + fmt(mass_error) + ", log integral error " + fmt(log_error);
  });
}

CheckResult core_poisson(const GridConfig& g) {
  return run_check("core.poisson", "Poisson extension of boundary values reproduces analytic functions", [&](CheckResult& r) {
    const CircleGrid circle(g.circle_nodes);
    double worst = 0.0;
    for (const FunctionSpec& f : {FunctionSpec::cauchy({0.5, 0.3}), FunctionSpec::monomial(7),
                                  FunctionSpec::polynomial({1.0, Complex(0.0, 2.0), -0.5})}) {
      const BoundarySamples s = BoundarySamples::of(f, circle);
      for (Complex z : {Complex(0.0, 0.0), Complex(0.3, -0.2), Complex(-0.8, 0.1), Complex(0.0, 0.95)}) {
        worst = std::max(worst, std::abs(poisson_extension(s, z) - f(z)));
      }
    }
    bound(r, worst, 1e-10);
  });
}

CheckResult core_derivatives(const GridConfig&) {
  return run_check("core.derivatives", "closed-form derivatives match central differences", [](CheckResult& r) {
    const std::vector<FunctionSpec> family{
        FunctionSpec::monomial(4), FunctionSpec::polynomial({1.0, -2.0, Complex(0.0, 0.5)}),
        FunctionSpec::cauchy({0.6, 0.2}), FunctionSpec::scaled_cauchy(-0.7, 2.0, 0.5), FunctionSpec::log_kernel(),
        FunctionSpec::lacunary(3, 1.0), FunctionSpec::mobius_pullback(MobiusMap(0.4), FunctionSpec::cauchy(0.3)),
        FunctionSpec::scale(Complex(0.0, 3.0), FunctionSpec::monomial(2))};
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const FunctionSpec& f = family[k % family.size()];
      const Complex z = std::polar(0.85 * std::sqrt(u(rng)), kTwoPi * u(rng));
      const Complex exact = f.derivative(z);
      const Complex fd = (f(z + 1e-6) - f(z - 1e-6)) / 2e-6;
      worst = std::max(worst, std::abs(exact - fd) / std::max(1.0, std::abs(exact)));
    }
    bound(r, worst, 1e-6);
  });
}

CheckResult core_szego(const GridConfig&) {
  return run_check("core.szego", "Szego projection is idempotent", [](CheckResult& r) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 16; ++trial) {
      FourierSeries f(12);
      for (int n = -12; n <= 12; ++n) f.set_coefficient(n, {gauss(rng), gauss(rng)});
      const FourierSeries once = szego_series(f);
      const FourierSeries twice = szego_series(once);
      for (int n = -12; n <= 12; ++n) worst = std::max(worst, std::abs(once.coefficient(n) - twice.coefficient(n)));
    }
    bound(r, worst, 0.0);
  });
}

CheckResult seminorm_homogeneity(const GridConfig& g) {
  return run_check("seminorm.homogeneity", "seminorms vanish on constants and scale by |c|", [&](CheckResult& r) {
    const IndexParams ip(2.0, 1.0);
    const FunctionSpec f = FunctionSpec::cauchy(0.6);
    const Complex c(1.5, -2.0);
    const FunctionSpec cf = FunctionSpec::scale(c, f);
    const FunctionSpec k = FunctionSpec::constant(Complex(3.0, 1.0));
    double worst = 0.0;
    double on_constants = 0.0;
    for (const NormOnGrid& norm : {NormOnGrid(campanato_on_grid), NormOnGrid(mobius_on_grid),
                                   NormOnGrid(lp_star_on_grid), NormOnGrid(bloch_on_grid)}) {
      worst = std::max(worst, rel_change(norm(cf, ip, g), std::abs(c) * norm(f, ip, g)));
      on_constants = std::max(on_constants, norm(k, ip, g));
    }
    r.data["constants_max"] = on_constants;
    bound(r, worst, 1e-10);
    if (on_constants > 1e-12) r.passed = false;
    r.detail = "homogeneity error " + fmt(worst) + ", max on constants " + fmt(on_constants);
  });
}

CheckResult seminorm_monotone_arcs(const GridConfig& g) {
  return run_check("seminorm.arc-monotone", "enlarging the arc family never decreases the sup", [&](CheckResult& r) {
    const IndexParams ip(2.0, 0.5);
    const FunctionSpec f = FunctionSpec::cauchy(Complex(0.5, 0.7));
    const CircleGrid circle(g.circle_nodes);
    const BoundarySamples s = BoundarySamples::of(f, circle);
    const RadialGrid radial(g);
    const ArcFamily small(g.arc_depth - 1, g.circle_nodes, 2);
    const ArcFamily large(g.arc_depth, g.circle_nodes, 4);
    const double c0 = campanato_seminorm(s, ip, small).value;
    const double c1 = campanato_seminorm(s, ip, large).value;
    const double l0 = lp_star_seminorm(f, ip, small, radial).value;
    const double l1 = lp_star_seminorm(f, ip, large, radial).value;
    r.passed = c1 >= c0 && l1 >= l0;
    r.value = std::min(c1 - c0, l1 - l0);
    r.detail = "campanato " + fmt(c0) + " -> " + fmt(c1) + ", lp_star " + fmt(l0) + " -> " + fmt(l1);
  });
}

CheckResult seminorm_regime(const GridConfig& g) {
  return run_check("seminorm.regime", "eta > 1+p flags constants-only and diverges on z", [&](CheckResult& r) {
    const CircleGrid circle(g.circle_nodes);
    const ArcFamily arcs(g.arc_depth, g.circle_nodes);
    const BoundarySamples z = BoundarySamples::of(FunctionSpec::monomial(1), circle);
    const SeminormReport inside = campanato_seminorm(z, IndexParams(2.0, 3.0), arcs);
    const SeminormReport outside = campanato_seminorm(z, IndexParams(2.0, 3.5), arcs);
    r.passed = !has_flag(inside.flags, Flag::Divergent) && has_flag(outside.flags, Flag::Divergent) &&
               has_flag(outside.flags, Flag::ConstantsOnly) && std::isfinite(inside.value);
    r.value = outside.value;
    r.detail = "eta = 3: " + fmt(inside.value) + ", eta = 3.5: " + fmt(outside.value);
  });
}

CheckResult seminorm_mobius_invariance(const GridConfig& g) {
  return run_check("seminorm.mobius-invariance", "mobius_seminorm(f) ~ mobius_seminorm(f o sigma_a - f(a))", [&](CheckResult& r) {
    const IndexParams ip(2.0, 1.0);
    const FunctionSpec f = FunctionSpec::cauchy(0.6);
    const Complex a = 0.5;
    const FunctionSpec moved = subtract_constant(FunctionSpec::mobius_pullback(MobiusMap(a), f), f(a));
    const double v0 = mobius_on_grid(f, ip, g);
    const double v1 = mobius_on_grid(moved, ip, g);
    bound(r, rel_change(v0, v1), 0.05);
    r.detail = fmt(v0) + " vs " + fmt(v1);
  });
}

CheckResult seminorm_bloch_oracle(const GridConfig& g) {
  return run_check("seminorm.bloch-ray", "bloch_norm(f_0.9, 1) against the ray maximum", [&](CheckResult& r) {
    const double b = 0.9;
    // Golden-section maximum of (1 - t^2) b / (1 - b t)^2 on [0, 1).
    auto q = [b](double t) { return (1.0 - t * t) * b / ((1.0 - b * t) * (1.0 - b * t)); };
    double lo = 0.0;
    double hi = 1.0;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 200; ++it) {
      const double x1 = hi - phi * (hi - lo);
      const double x2 = lo + phi * (hi - lo);
      (q(x1) < q(x2) ? lo : hi) = q(x1) < q(x2) ? x1 : x2;
    }
    const double oracle = q(0.5 * (lo + hi));
    const double v = bloch_norm(FunctionSpec::cauchy(b), 1.0, DiskGrid(g, g.disk_angles)).value;
    bound(r, std::abs(v - oracle) / oracle, 1e-3);
    if (v > oracle * (1.0 + 1e-12)) r.passed = false;
    r.detail = "grid " + fmt(v) + ", ray oracle " + fmt(oracle);
  });
}

CheckResult carleson_box_mass(const GridConfig& g) {
  return run_check("carleson.box-mass", "box_mass(1, h) = 2h^2 - h^3 for h = 1/2, 1/4, 1/8", [&](CheckResult& r) {
    const DiskGrid disk(g, g.disk_angles);
    double worst = 0.0;
    for (double h : {0.5, 0.25, 0.125}) {
      const double m = box_mass(Density::constant(1.0), CarlesonBox{Arc(1.0, h)}, disk);
      worst = std::max(worst, std::abs(m - (2.0 * h * h - h * h * h)) / (2.0 * h * h - h * h * h));
    }
    bound(r, worst, 0.02);
  });
}

CheckResult carleson_structure(const GridConfig& g) {
  return run_check("carleson.structure", "monotone in rho, homogeneous, level sets nested", [&](CheckResult& r) {
    const DiskGrid disk(g, g.disk_angles);
    const ArcFamily arcs(g.arc_depth, g.disk_angles);
    const FunctionSpec f = FunctionSpec::cauchy(Complex(0.3, 0.6));
    const Density small = Density::derivative_energy(f, 1.0);
    const Density large = Density::derivative_energy(f, 0.5);  // (1-|z|^2)^0.5 >= (1-|z|^2)
    const double n_small = carleson_norm(small, 1.0, arcs, disk).value;
    const double n_large = carleson_norm(large, 1.0, arcs, disk).value;
    const double n_scaled = carleson_norm(Density::scaled(3.0, small), 1.0, arcs, disk).value;
    bool nested = true;
    const LevelSetSpec lo{f, 1.0, 0.2};
    const LevelSetSpec hi{f, 1.0, 0.4};
    for (std::size_t j = 0; j < disk.radial().size(); ++j) {
      for (int i = 0; i < disk.angles(); ++i) {
        const Complex z = disk.point(j, i);
        if (hi.contains(z, disk.one_minus_r2(j)) && !lo.contains(z, disk.one_minus_r2(j))) nested = false;
      }
    }
    const double homogeneity = rel_change(n_scaled, 3.0 * n_small);
    bound(r, homogeneity, 1e-14);
    r.passed = r.passed && n_small <= n_large && nested;
    r.detail = "norms " + fmt(n_small) + " <= " + fmt(n_large) + ", homogeneity error " + fmt(homogeneity) +
               (nested ? ", level sets nested" : ", level sets NOT nested");
  });
}

CheckResult carleson_identity_map(const GridConfig& g) {
  return run_check("carleson.identity", "carleson_norm(|z'|^2 (1-|z|^2), 1) is finite and <= 2", [&](CheckResult& r) {
    const DiskGrid disk(g, g.disk_angles);
    const ArcFamily arcs(g.arc_depth, g.disk_angles);
    const double v = carleson_norm(Density::derivative_energy(FunctionSpec::monomial(1)), 1.0, arcs, disk).value;
    bound(r, v, 2.0);
  });
}

CheckResult carleson_tab(const GridConfig& g) {
  return run_check("carleson.tab", "T_{1,1} 1 (0) = 1, T_{1,2} 1 (0) = 1/2", [&](CheckResult& r) {
    const DiskGrid area(g, g.area_angles);
    const double t11 = t_ab_apply(1.0, 1.0, Density::constant(1.0), 0.0, area);
    const double t12 = t_ab_apply(1.0, 2.0, Density::constant(1.0), 0.0, area);
    bound(r, std::max(std::abs(t11 - 1.0), std::abs(t12 - 0.5)), 1e-10);
  });
}

CheckResult carleson_lemma31(const GridConfig& g) {
  return run_check("carleson.lemma31", "T_{1,2} Carleson ratio for (1-|w|^2)^(-1/2) is stable under refinement",
                   [&](CheckResult& r) {
    const Density f = Density::boundary_power(-0.5);
    const Lemma31Grids base = Lemma31Grids::from(g);
    const Lemma31Grids fine = Lemma31Grids::from(g.refined());
    const double r0 = lemma31_ratio(f, 1.0, 2.0, 1.0, base.arcs, base.eval, base.area).ratio;
    const double r1 = lemma31_ratio(f, 1.0, 2.0, 1.0, fine.arcs, fine.eval, fine.area).ratio;
    r.data["ratio"] = r0;
    r.data["refined_ratio"] = r1;
    bound(r, rel_change(r0, r1), thresholds::kLemma31Stability);
    if (!std::isfinite(r0) || !(r0 > 0.0)) r.passed = false;
    r.detail = "ratio " + fmt(r0) + " -> " + fmt(r1);
  });
}

CheckResult carleson_lower_bound(const GridConfig& g) {
  return run_check("carleson.level-bound", "level-set norm <= eps^-2 carleson_norm(|g'|^2 (1-|z|^2)) for a polynomial",
                   [&](CheckResult& r) {
    const DiskGrid disk(g, g.disk_angles);
    const ArcFamily arcs(g.arc_depth, g.disk_angles);
    const double eta = 1.0;
    const FunctionSpec poly = FunctionSpec::polynomial({0.0, 1.0, 0.0, 0.5});
    const double energy = carleson_norm(Density::derivative_energy(poly, 1.0), eta, arcs, disk).value;
    double worst = 0.0;
    for (double eps : {0.5, 1.0}) {
      const double lhs = carleson_norm(Density::level_set({poly, eta, eps}), eta, arcs, disk).value;
      worst = std::max(worst, lhs / (energy / (eps * eps)));
    }
    bound(r, worst, 1.0);
  });
}

CheckResult composition_stanton_mobius(const GridConfig& g) {
  return run_check("composition.stanton-mobius", "stanton_norm(f, sigma_a) = ||f o sigma_a||_2", [&](CheckResult& r) {
    const DiskGrid disk(g, g.area_angles);
    const CircleGrid circle(g.circle_nodes);
    double worst = 0.0;
    for (Complex a : mobius_points()) {
      for (int n = 1; n <= 3; ++n) {
        const FunctionSpec f = FunctionSpec::monomial(n);
        const double s = stanton_norm(f, SelfMapSpec::mobius(a), 2.0, disk).value;
        const double d = hardy_norm(FunctionSpec::mobius_pullback(MobiusMap(a), f), 2.0, circle);
        worst = std::max(worst, std::abs(s - d) / d);
      }
    }
    bound(r, worst, 1e-4);
  });
}

CheckResult composition_bloch_pair(const GridConfig& g) {
  return run_check("composition.bloch-pair", "lacunary pair certified, single function fails", [&](CheckResult& r) {
    const DiskGrid disk(g, g.disk_angles);
    const BlochPair pair = bloch_pair(1.0, disk, thresholds::kBlochPairBase);
    const PairStatistic single = pair_statistic(1.0, {pair.f1}, disk);
    const double b1 = bloch_norm(pair.f1, 1.0, disk).value;
    const double b2 = bloch_norm(pair.f2, 1.0, disk).value;
    r.data["pair_ratio"] = pair.certificate.ratio();
    r.data["single_ratio"] = single.ratio();
    r.value = pair.certificate.ratio();
    r.threshold = thresholds::kBlochPairFloor;
    r.passed = pair.certificate.ratio() >= thresholds::kBlochPairFloor && single.ratio() < thresholds::kBlochPairFloor &&
               std::isfinite(b1) && std::isfinite(b2);
    r.detail = "pair min/max " + fmt(pair.certificate.ratio()) + ", single " + fmt(single.ratio());
  });
}

CheckResult composition_schwarz_pick(const GridConfig& g) {
  return run_check("composition.thm43", "thm43i(z/2) = 1/2 and thm43ii(identity, 1/2, 2, 1) = 1", [&](CheckResult& r) {
    const DiskGrid disk(g, g.disk_angles);
    const double v = thm43i_criterion(SelfMapSpec::polynomial({0.0, 0.5}), 1.0, 2.0, 1.0, disk).value;
    const double w = thm43ii_criterion(SelfMapSpec::identity(), 0.5, 2.0, 1.0, ArcFamily(g.arc_depth, g.circle_nodes),
                                       RadialGrid(g)).value;
    bound(r, std::max(std::abs(v - 0.5), std::abs(w - 1.0)), 1e-10);
    r.detail = "thm43i " + fmt(v) + ", thm43ii " + fmt(w);
  });
}

CheckResult composition_necessity(const GridConfig& g) {
  return run_check("composition.thm42-necessity", "criterion against the F_b test-function chain (report only)",
                   [&](CheckResult& r) {
    GridConfig coarse = g;
    coarse.circle_nodes = std::min(g.circle_nodes, 4096);
    coarse.w_angles = std::min(g.w_angles, 32);
    coarse.arc_depth = std::min(g.arc_depth, 8);
    const WGrid wgrid(coarse);
    const double eta = 1.0;
    const double lambda = 1.0;
    r.data["rows"] = Json::array();
    bool finite = true;
    for (const auto& [label, phi] : std::vector<std::pair<std::string, SelfMapSpec>>{
             {"z/2", SelfMapSpec::polynomial({0.0, 0.5})},
             {"z^2", SelfMapSpec::polynomial({0.0, 0.0, 1.0})},
             {"sigma_0.5", SelfMapSpec::mobius(0.5)}}) {
      const double direct = thm42_criterion(phi, 2.0, eta, lambda, wgrid, coarse).value;
      double chain = 0.0;
      for (double b : f_b_moduli()) {
        const FunctionSpec fb = FunctionSpec::scaled_cauchy(b, 2.0, eta);
        const double top = mobius_seminorm(FunctionSpec::compose(fb, *phi.as_function()), IndexParams(2.0, lambda), wgrid, coarse).value;
        const double bottom = mobius_seminorm(fb, IndexParams(2.0, eta), wgrid, coarse).value;
        chain = std::max(chain, top / bottom);
      }
      finite = finite && std::isfinite(direct) && std::isfinite(chain) && chain > 0.0;
      r.data["rows"].push_back(Json{{"map", label}, {"criterion", direct}, {"chain_sup", chain}, {"ratio", direct / chain}});
    }
    r.passed = finite;
    r.detail = "ratios recorded; equivalence constants are not asserted";
  });
}

using CheckFn = CheckResult (*)(const GridConfig&);

const std::vector<CheckFn>& criteria() {
  static const std::vector<CheckFn> kCriteria{
      criterion_stanton,           criterion_lemma42_identity,    criterion_lemma42_bound, criterion_mobius_equivalence,
      criterion_lp_star_equivalence, criterion_embedding,         criterion_carleson_constant, criterion_distance,
      criterion_mobius_fixed_points, criterion_splitting,         criterion_conjugate_identity};
  return kCriteria;
}

std::vector<CheckFn> suite_checks(const std::string& name) {
  const auto& c = criteria();
  if (name == "core") return {core_involution, core_quadrature, core_poisson, core_derivatives, core_szego, c[10]};
  if (name == "seminorm-equivalence") {
    return {c[3], c[4], c[5], seminorm_homogeneity, seminorm_monotone_arcs, seminorm_regime,
            seminorm_mobius_invariance, seminorm_bloch_oracle};
  }
  if (name == "carleson") {
    return {c[6], c[7], carleson_box_mass, carleson_structure, carleson_identity_map, carleson_tab, carleson_lemma31,
            carleson_lower_bound};
  }
  if (name == "composition") {
    return {c[0], c[1], c[2], c[8], c[9], composition_stanton_mobius, composition_bloch_pair,
            composition_schwarz_pick, composition_necessity};
  }
  throw ConfigError("suite: unknown suite '" + name + "'");
}

}  // namespace

CheckResult acceptance_criterion(int number, const GridConfig& grid) {
  if (number < 1 || number > kAcceptanceCount) throw ConfigError("criterion: number must lie in [1, 11]");
  return criteria()[number - 1](grid);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames{"core", "seminorm-equivalence", "carleson", "composition", "all"};
  return kNames;
}

std::vector<CheckResult> run_suite(const std::string& name, const GridConfig& grid) {
  std::vector<CheckResult> out;
  if (name == "all") {
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      for (CheckFn fn : suite_checks(s)) out.push_back(fn(grid));
    }
    return out;
  }
  for (CheckFn fn : suite_checks(name)) out.push_back(fn(grid));
  return out;
}

Json to_json(const CheckResult& c) {
  return Json{{"id", c.id},       {"name", c.name},     {"passed", c.passed}, {"value", c.value},
              {"threshold", c.threshold}, {"detail", c.detail}, {"data", c.data}};
}

}  // namespace campanato

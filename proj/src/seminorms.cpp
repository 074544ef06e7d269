#include "campanato/seminorms.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace campanato {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Hardy: return "hardy";
    case Regime::Morrey: return "morrey";
    case Regime::BMOA: return "bmoa";
    case Regime::Lipschitz: return "lipschitz";
    case Regime::ConstantsOnly: return "constants";
  }
  return "unknown";
}

IndexParams::IndexParams(double p_, double eta_) : p(p_), eta(eta_) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("IndexParams: p must be >= 1");
  if (!(eta >= 0.0) || !std::isfinite(eta)) throw DomainError("IndexParams: eta must be >= 0");
}

Regime IndexParams::regime() const {
  if (eta == 0.0) return Regime::Hardy;
  if (eta < 1.0) return Regime::Morrey;
  if (eta == 1.0) return Regime::BMOA;
  if (eta <= 1.0 + p) return Regime::Lipschitz;
  return Regime::ConstantsOnly;
}

bool IndexParams::in_equivalence_regime() const { return eta > 0.0 && eta < 2.0 && 2.0 <= 1.0 + p; }

namespace {

Flag regime_flags(const IndexParams& params) {
  Flag flags = Flag::None;
  if (params.regime() == Regime::ConstantsOnly) flags |= Flag::ConstantsOnly;
  if (!params.in_equivalence_regime()) flags |= Flag::OutOfRegime;
  return flags;
}

double pow_abs(double x, double p) { return p == 2.0 ? x * x : std::pow(x, p); }

void finish_levels(SeminormReport& report) {
  if (finest_level_grows(report.level_maxima)) report.flags |= Flag::Divergent;
}

}  // namespace

bool finest_level_grows(const std::vector<double>& level_maxima, double tolerance) {
  if (level_maxima.size() < 2) return false;
  const double last = level_maxima.back();
  const double prev = level_maxima[level_maxima.size() - 2];
  return last > (1.0 + tolerance) * prev && last > 0.0;
}

double hardy_norm(const FunctionSpec& f, double p, const CircleRule& rule, double fallback_delta) {
  if (!(p >= 1.0)) throw DomainError("hardy_norm: p must be >= 1");
  double radius = 1.0;
  if (!f.finite_on_boundary()) {
    if (!(fallback_delta > 0.0)) {
      throw DomainError("hardy_norm: function is singular on the circle and no fallback radius is set");
    }
    radius = 1.0 - fallback_delta;
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < rule.points.size(); ++k) {
    acc += rule.weights[k] * pow_abs(std::abs(f(radius * rule.points[k])), p);
  }
  return std::pow(acc, 1.0 / p);
}

double hardy_norm(const FunctionSpec& f, double p, const CircleGrid& grid, double fallback_delta) {
  return hardy_norm(f, p, CircleRule::uniform(grid), fallback_delta);
}

SeminormReport campanato_seminorm(const BoundarySamples& f, const IndexParams& params,
                                  const ArcFamily& arcs) {
  SeminormReport report;
  report.flags = regime_flags(params);
  report.value = -1.0;
  const double p = params.p;
  for (const auto& level : arcs.levels()) {
    double level_max = 0.0;
    for (double center : level.centers) {
      const Arc arc(center, level.length);
      const ArcNodes nodes = arc_nodes(f.grid, arc);
      if (nodes.indices.size() < 8) {
        throw ResolutionError("campanato_seminorm: arc of length " + std::to_string(level.length) +
                              " holds fewer than 8 grid nodes");
      }
      Complex mean{};
      for (std::size_t i = 0; i < nodes.indices.size(); ++i) mean += nodes.weights[i] * f.values[nodes.indices[i]];
      double osc = 0.0;
      for (std::size_t i = 0; i < nodes.indices.size(); ++i) {
        osc += nodes.weights[i] * pow_abs(std::abs(f.values[nodes.indices[i]] - mean), p);
      }
      report.evaluations += nodes.indices.size();
      const double value = std::pow(std::pow(level.length, 1.0 - params.eta) * osc, 1.0 / p);
      level_max = std::max(level_max, value);
      if (value > report.value) {
        report.value = value;
        report.arc = arc;
      }
    }
    report.level_maxima.push_back(level_max);
  }
  report.value = std::max(report.value, 0.0);
  finish_levels(report);
  return report;
}

SeminormReport mobius_seminorm(const FunctionSpec& f, const IndexParams& params, const WGrid& wgrid,
                               const GridConfig& grid) {
  SeminormReport report;
  report.flags = regime_flags(params);
  report.value = -1.0;
  report.level_maxima.assign(wgrid.depth + 1, 0.0);
  const double p = params.p;
  const double radius = f.finite_on_boundary() ? 1.0 : 1.0 - grid.delta_min;
  const auto points = wgrid.points();
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const Complex w = points[idx];
    const int level = idx == 0 ? 0 : 1 + static_cast<int>((idx - 1) / wgrid.angles);
    const Complex fw = f(w);
    const FunctionSpec pulled = FunctionSpec::mobius_pullback(MobiusMap(w), f);
    const CircleRule rule = CircleRule::mobius_adapted(w, grid.circle_nodes, grid.gauss_order);
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.points.size(); ++k) {
      acc += rule.weights[k] * pow_abs(std::abs(pulled(radius * rule.points[k]) - fw), p);
    }
    report.evaluations += rule.points.size();
    const double factor = std::pow((1.0 - std::abs(w)) * (1.0 + std::abs(w)), (1.0 - params.eta) / p);
    const double value = factor * std::pow(acc, 1.0 / p);
    report.level_maxima[level] = std::max(report.level_maxima[level], value);
    if (value > report.value) {
      report.value = value;
      report.point = w;
    }
  }
  report.value = std::max(report.value, 0.0);
  finish_levels(report);
  return report;
}

SeminormReport tent_seminorm(const TentEnergy& energy, double s, double p, double eta, const ArcFamily& arcs,
                             const RadialGrid& radial) {
  const auto levels = arcs.levels();
  const double h_min = levels.back().length;
  if (!(radial.delta_min() < h_min)) {
    throw ResolutionError("tent_seminorm: delta_min must be below the smallest arc length");
  }
  SeminormReport report;
  report.value = -1.0;
  const CircleGrid circle(arcs.resolution);
  std::vector<Complex> boundary(circle.size());
  // Nodes sit half a cell off the grid so no ray hits a boundary singularity.
  const double offset = 0.5 * kTwoPi / circle.size();
  for (int i = 0; i < circle.size(); ++i) boundary[i] = std::polar(1.0, circle.angle(i) + offset);

  std::vector<double> inner(circle.size());
  for (const auto& level : levels) {
    const RadialRule rule = radial.rule(level.length, s);
    for (int i = 0; i < circle.size(); ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < rule.size(); ++j) acc += rule.weights[j] * energy(rule.r[j] * boundary[i], rule.d[j]);
      inner[i] = pow_abs(std::sqrt(acc), p);
    }
    report.evaluations += rule.size() * circle.size();

    double level_max = 0.0;
    for (double center : level.centers) {
      const Arc arc(center, level.length);
      const ArcNodes nodes = arc_nodes(circle, arc);
      double mean = 0.0;
      for (std::size_t i = 0; i < nodes.indices.size(); ++i) mean += nodes.weights[i] * inner[nodes.indices[i]];
      const double value = std::pow(std::pow(level.length, 1.0 - eta) * mean, 1.0 / p);
      level_max = std::max(level_max, value);
      if (value > report.value) {
        report.value = value;
        report.arc = arc;
      }
    }
    report.level_maxima.push_back(level_max);
  }
  report.value = std::max(report.value, 0.0);
  finish_levels(report);
  return report;
}

SeminormReport lp_star_seminorm(const FunctionSpec& f, const IndexParams& params, const ArcFamily& arcs,
                                const RadialGrid& radial, LpVariant variant) {
  TentEnergy energy;
  if (variant == LpVariant::Analytic) {
    energy = [&f](Complex z, double) { return std::norm(f.derivative(z)); };
  } else {
    // |grad Pf|^2 = 2|f'|^2 and 1 - r^2 = (1 - r)(2 - d).
    energy = [&f](Complex z, double d) { return 2.0 * (2.0 - d) * std::norm(f.derivative(z)); };
  }
  SeminormReport report = tent_seminorm(energy, 1.0, params.p, params.eta, arcs, radial);
  report.flags |= regime_flags(params);
  return report;
}

SeminormReport bloch_norm(const FunctionSpec& f, double alpha, const DiskGrid& disk) {
  if (!(alpha > 0.0)) throw DomainError("bloch_norm: alpha must be > 0");
  SeminormReport report;
  report.value = std::abs(f.derivative(0.0));
  report.point = Complex{0.0, 0.0};
  const RadialRule& radial = disk.radial();
  for (std::size_t j = 0; j < radial.size(); ++j) {
    const double factor = std::pow(disk.one_minus_r2(j), alpha);
    for (int i = 0; i < disk.angles(); ++i) {
      const Complex w = disk.point(j, i);
      const double value = factor * std::abs(f.derivative(w));
      if (value > report.value) {
        report.value = value;
        report.point = w;
      }
    }
  }
  report.evaluations = disk.size() + 1;
  return report;
}

RatioStats equivalence_report(const Seminorm& norm_a, const Seminorm& norm_b,
                              const std::vector<FunctionSpec>& family) {
  if (family.empty()) throw DomainError("equivalence_report: empty family");
  RatioStats stats;
  stats.min = std::numeric_limits<double>::infinity();
  stats.max = 0.0;
  for (const auto& f : family) {
    const double a = norm_a(f);
    const double b = norm_b(f);
    if (b == 0.0) {
      if (a != 0.0) throw DegenerateError("equivalence_report: norm_b vanishes where norm_a does not");
      stats.ratios.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const double r = a / b;
    stats.ratios.push_back(r);
    stats.min = std::min(stats.min, r);
    stats.max = std::max(stats.max, r);
  }
  if (stats.max == 0.0 && !(stats.min < std::numeric_limits<double>::infinity())) {
    stats.flags |= Flag::Degenerate;
    stats.min = stats.max = stats.spread = 0.0;
    return stats;
  }
  stats.spread = stats.min > 0.0 ? stats.max / stats.min : std::numeric_limits<double>::infinity();
  return stats;
}

}  // namespace campanato

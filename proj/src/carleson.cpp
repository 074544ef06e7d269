#include "campanato/carleson.hpp"

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

bool is_radial(const Density& rho) {
  return std::visit(Overloaded{
                        [](const density::Constant&) { return true; },
                        [](const density::BoundaryPower&) { return true; },
                        [](const density::DerivativeEnergy&) { return false; },
                        [](const density::LevelSet&) { return false; },
                        [](const density::Scaled& s) { return is_radial(*s.inner); },
                    },
                    rho.node());
}

/// Rows j with d_j <= h; the radial nodes are ordered by decreasing d.
std::size_t first_row_inside(const RadialRule& radial, double h) {
  std::size_t j = 0;
  while (j < radial.size() && radial.d[j] > h * (1.0 + 1e-12)) ++j;
  return j;
}

/// Column sums C(i) = sum_{d_j <= h} w_j v(j, i), accumulated in increasing j.
std::vector<double> column_sums(const std::vector<double>& values, const DiskGrid& disk, std::size_t first) {
  const int m = disk.angles();
  std::vector<double> sums(m, 0.0);
  for (std::size_t j = first; j < disk.radial().size(); ++j) {
    const double w = disk.weight(j);
    const double* row = values.data() + j * m;
    for (int i = 0; i < m; ++i) sums[i] += w * row[i];
  }
  return sums;
}

double sum_range(const std::vector<double>& sums, const AngleRange& range) {
  const int m = static_cast<int>(sums.size());
  double acc = 0.0;
  for (int t = 0; t < range.count; ++t) acc += sums[(range.first + t) % m];
  return acc;
}

void require_resolved(std::size_t rows, int count, double h) {
  if (rows * static_cast<std::size_t>(count) < 16) {
    throw ResolutionError("box_mass: box with h = " + std::to_string(h) + " holds fewer than 16 grid nodes");
  }
}

}  // namespace

double LevelSetSpec::statistic(Complex z, double one_minus_abs2) const {
  return std::pow(one_minus_abs2, 0.5 * (3.0 - eta)) * std::abs(f.derivative(z));
}

Density Density::constant(double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("Density: constant must be finite and >= 0");
  return Density(density::Constant{c});
}

Density Density::boundary_power(double s) {
  if (!std::isfinite(s)) throw DomainError("Density: non-finite exponent");
  return Density(density::BoundaryPower{s});
}

Density Density::derivative_energy(FunctionSpec f, double s) {
  if (!std::isfinite(s)) throw DomainError("Density: non-finite exponent");
  return Density(density::DerivativeEnergy{std::move(f), s});
}

Density Density::level_set(LevelSetSpec set) {
  if (!(set.eps > 0.0)) throw DomainError("Density: level-set eps must be > 0");
  return Density(density::LevelSet{std::move(set)});
}

Density Density::scaled(double c, Density inner) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("Density: scale must be finite and >= 0");
  return Density(density::Scaled{c, std::make_shared<const Density>(std::move(inner))});
}

double Density::operator()(Complex z, double oma) const {
  return std::visit(Overloaded{
                        [](const density::Constant& c) { return c.c; },
                        [&](const density::BoundaryPower& b) { return b.s == 0.0 ? 1.0 : std::pow(oma, b.s); },
                        [&](const density::DerivativeEnergy& e) {
                          const double g = std::norm(e.f.derivative(z));
                          return g == 0.0 ? 0.0 : g * std::pow(oma, e.s);
                        },
                        [&](const density::LevelSet& l) {
                          return l.set.contains(z, oma) ? std::pow(oma, l.set.eta - 2.0) : 0.0;
                        },
                        [&](const density::Scaled& s) { return s.c == 0.0 ? 0.0 : s.c * (*s.inner)(z, oma); },
                    },
                    node_);
}

bool CarlesonBox::contains(Complex z) const {
  const double r = std::abs(z);
  if (r >= 1.0 || r < 1.0 - arc.length) return false;
  if (arc.length >= 1.0) return true;
  double offset = std::fmod(std::arg(z) - arc.center_angle + kPi * arc.length, kTwoPi);
  if (offset < 0.0) offset += kTwoPi;
  return offset < kTwoPi * arc.length;
}

std::vector<double> sample_density(const Density& rho, const DiskGrid& disk) {
  const int m = disk.angles();
  std::vector<double> values(disk.size());
  for (std::size_t j = 0; j < disk.radial().size(); ++j) {
    const double oma = disk.one_minus_r2(j);
    for (int i = 0; i < m; ++i) {
      const double v = rho(disk.point(j, i), oma);
      if (!(v >= 0.0)) throw DomainError("Density: negative or NaN value at a grid node");
      values[j * m + i] = v;
    }
  }
  return values;
}

double box_mass(const std::vector<double>& values, const CarlesonBox& box, const DiskGrid& disk) {
  const std::size_t first = first_row_inside(disk.radial(), box.arc.length);
  const AngleRange range = angle_range(disk.angles(), box.arc);
  require_resolved(disk.radial().size() - first, range.count, box.arc.length);
  return sum_range(column_sums(values, disk, first), range);
}

double box_mass(const Density& rho, const CarlesonBox& box, const DiskGrid& disk) {
  return box_mass(sample_density(rho, disk), box, disk);
}

SeminormReport carleson_norm(const std::vector<double>& values, double eta, const ArcFamily& arcs,
                             const DiskGrid& disk) {
  if (!(eta > 0.0)) throw DomainError("carleson_norm: eta must be > 0");
  if (arcs.resolution != disk.angles()) {
    throw DomainError("carleson_norm: arc centers must lie on the disk grid angles");
  }
  SeminormReport report;
  report.value = -1.0;
  for (const auto& level : arcs.levels()) {
    const std::size_t first = first_row_inside(disk.radial(), level.length);
    const std::vector<double> sums = column_sums(values, disk, first);
    const double scale = std::pow(level.length, -eta);
    double level_max = 0.0;
    for (double center : level.centers) {
      const Arc arc(center, level.length);
      const AngleRange range = angle_range(disk.angles(), arc);
      require_resolved(disk.radial().size() - first, range.count, level.length);
      const double value = sum_range(sums, range) * scale;
      level_max = std::max(level_max, value);
      if (value > report.value) {
        report.value = value;
        report.arc = arc;
      }
    }
    report.evaluations += level.centers.size();
    report.level_maxima.push_back(level_max);
  }
  report.value = std::max(report.value, 0.0);
  return report;
}

SeminormReport carleson_norm(const Density& rho, double eta, const ArcFamily& arcs, const DiskGrid& disk) {
  return carleson_norm(sample_density(rho, disk), eta, arcs, disk);
}

double t_ab_apply(double a, double b, const Density& f, Complex z, const DiskGrid& area) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("t_ab_apply: a and b must be > 0");
  const double rz = std::abs(z);
  if (!(rz < 1.0)) throw DomainError("t_ab_apply: |z| must be < 1");
  if (1.0 - rz < area.delta_min()) {
    throw ResolutionError("t_ab_apply: 1-|z| is below the grid delta_min");
  }
  // Substitute w = sigma_z(u): 1 - |w|^2 = (1-|z|^2)(1-|u|^2)/D, |1 - conj(w) z| =
  // (1-|z|^2)/sqrt(D) and dA(w) = (1-|z|^2)^2 / D^2 dA(u), with D = |1 - conj(z) u|^2.
  const double omz = (1.0 - rz) * (1.0 + rz);
  const MobiusMap sigma(z);
  const double prefactor = std::pow(omz, 2.0 - a - b);
  const double half_ab = 0.5 * (a + b);
  double acc = 0.0;
  for (std::size_t j = 0; j < area.radial().size(); ++j) {
    const double omu = area.one_minus_r2(j);
    const double wj = area.weight(j);
    double row = 0.0;
    for (int i = 0; i < area.angles(); ++i) {
      const Complex u = area.point(j, i);
      const double dd = std::norm(1.0 - std::conj(z) * u);
      const double omw = omz * omu / dd;
      const double fw = f(sigma.apply(u), omw);
      if (fw == 0.0) continue;
      row += std::pow(omw, b - 1.0) * std::pow(dd, half_ab - 2.0) * fw;
    }
    acc += wj * row;
  }
  return prefactor * acc;
}

Lemma31Grids Lemma31Grids::from(const GridConfig& config) {
  const int depth = std::min(config.arc_depth, 5);
  const int eval_angles = 32;
  const RadialGrid eval_radial(std::max(2, config.radial_panels / 2), 1e-2, config.gauss_order);
  return Lemma31Grids{DiskGrid(eval_radial, eval_angles, depth), ArcFamily(depth, eval_angles, 4),
                      DiskGrid(RadialGrid(config), config.area_angles / 2, config.arc_depth)};
}

Lemma31Result lemma31_ratio(const Density& f, double a, double b, double eta, const ArcFamily& arcs,
                            const DiskGrid& eval, const DiskGrid& area) {
  if (!(eta > 0.0 && eta < 2.0)) throw DomainError("lemma31_ratio: eta must lie in (0, 2)");
  if (!(a > 0.5 * (2.0 - eta)) || !(b > 0.5 * (1.0 + eta))) {
    throw DomainError("lemma31_ratio: need a > (2-eta)/2 and b > (1+eta)/2");
  }
  const int m = eval.angles();
  std::vector<double> num(eval.size());
  std::vector<double> den(eval.size());
  const bool radial = is_radial(f);
  for (std::size_t j = 0; j < eval.radial().size(); ++j) {
    const double oma = eval.one_minus_r2(j);
    const double num_weight = std::pow(oma, eta + 2.0 * a - 2.0);
    const double den_weight = std::pow(oma, eta);
    double cached = 0.0;
    for (int i = 0; i < m; ++i) {
      const Complex z = eval.point(j, i);
      const double fz = f(z, oma);
      if (!radial || i == 0) cached = t_ab_apply(a, b, f, z, area);
      num[j * m + i] = cached * cached * num_weight;
      den[j * m + i] = fz * fz * den_weight;
    }
  }
  Lemma31Result result;
  result.numerator = carleson_norm(num, eta, arcs, eval).value;
  result.denominator = carleson_norm(den, eta, arcs, eval).value;
  if (result.denominator == 0.0) {
    if (result.numerator != 0.0) throw DegenerateError("lemma31_ratio: denominator vanishes");
    result.flags |= Flag::Degenerate;
    return result;
  }
  result.ratio = result.numerator / result.denominator;
  return result;
}

ProfileGrids ProfileGrids::from(const GridConfig& config) {
  const GridConfig fine = config.refined();
  return ProfileGrids{DiskGrid(config, config.disk_angles), DiskGrid(fine, config.disk_angles),
                      ArcFamily(config.arc_depth, config.disk_angles, 4)};
}

namespace {

/// Level-set statistic and the weight (1-|z|^2)^(eta-2) at every node of a grid.
struct LevelSetSampler {
  std::vector<double> statistic;
  std::vector<double> weight;

  LevelSetSampler(const FunctionSpec& f, double eta, const DiskGrid& disk) {
    const int m = disk.angles();
    statistic.resize(disk.size());
    weight.resize(disk.size());
    const LevelSetSpec set{f, eta, 1.0};
    for (std::size_t j = 0; j < disk.radial().size(); ++j) {
      const double oma = disk.one_minus_r2(j);
      const double wv = std::pow(oma, eta - 2.0);
      for (int i = 0; i < m; ++i) {
        statistic[j * m + i] = set.statistic(disk.point(j, i), oma);
        weight[j * m + i] = wv;
      }
    }
  }

  std::vector<double> values(double eps) const {
    std::vector<double> out(statistic.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = statistic[k] >= eps ? weight[k] : 0.0;
    return out;
  }

  double max() const { return statistic.empty() ? 0.0 : *std::max_element(statistic.begin(), statistic.end()); }
};

ProfileRow profile_row(double eps, double eta, const LevelSetSampler& base, const LevelSetSampler& fine,
                       const ProfileGrids& grids) {
  const SeminormReport b = carleson_norm(base.values(eps), eta, grids.arcs, grids.base);
  const SeminormReport r = carleson_norm(fine.values(eps), eta, grids.arcs, grids.refined);
  ProfileRow row;
  row.eps = eps;
  row.norm = b.value;
  row.refined_norm = r.value;
  row.witness = r.arc;
  bool divergent = r.value > 1.1 * b.value || (b.value == 0.0 && r.value > 0.0);
  // For eta > 1 the weight is integrable at the boundary and delta refinement is
  // blind; growth across the finest dyadic levels is the remaining signature.
  if (eta > 1.0 && finest_level_grows(r.level_maxima)) divergent = true;
  row.flag = divergent ? Flag::Divergent : Flag::Bounded;
  return row;
}

void check_eta(double eta) {
  if (!(eta > 0.0 && eta < 2.0)) throw DomainError("distance: eta must lie in (0, 2)");
}

}  // namespace

std::vector<ProfileRow> distance_profile(const FunctionSpec& f, double eta, const std::vector<double>& eps_list,
                                         const ProfileGrids& grids) {
  check_eta(eta);
  const LevelSetSampler base(f, eta, grids.base);
  const LevelSetSampler fine(f, eta, grids.refined);
  std::vector<ProfileRow> rows;
  for (double eps : eps_list) {
    if (!(eps > 0.0)) throw DomainError("distance_profile: eps must be > 0");
    rows.push_back(profile_row(eps, eta, base, fine, grids));
  }
  return rows;
}

DistanceEstimate distance_estimate(const FunctionSpec& f, double eta, const ProfileGrids& grids, int iterations) {
  check_eta(eta);
  const LevelSetSampler base(f, eta, grids.base);
  const LevelSetSampler fine(f, eta, grids.refined);
  DistanceEstimate est;
  const double top = std::max(base.max(), fine.max());
  if (top == 0.0) return est;
  double hi = top * (1.0 + 1e-12);
  double lo = top / 64.0;
  est.probes.push_back(profile_row(lo, eta, base, fine, grids));
  if (est.probes.back().flag == Flag::Bounded) {
    est.eps_high = lo;
    return est;
  }
  est.transition = true;
  for (int it = 0; it < iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    est.probes.push_back(profile_row(mid, eta, base, fine, grids));
    if (est.probes.back().flag == Flag::Divergent) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  est.eps_low = lo;
  est.eps_high = hi;
  est.value = hi;
  return est;
}

}  // namespace campanato

#include "campanato/composition.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace campanato {

namespace {

constexpr double kZeroRoot = 1e-14;

double pow_abs(double x, double p) { return p == 2.0 ? x * x : std::pow(x, p); }

}  // namespace

CountingSample counting_sample(const SelfMapSpec& phi, Complex w) {
  const PreimageSet set = preimages(phi, w);
  CountingSample out;
  out.w = w;
  out.preimages = set.roots;
  out.flags = set.flags;
  for (const auto& root : set.roots) {
    const double r = std::abs(root.z);
    if (r < kZeroRoot) throw InfiniteValueError("nevanlinna: 0 is a preimage of w, N(phi, w) is infinite");
    out.value += root.multiplicity * -std::log(r);
  }
  return out;
}

double nevanlinna(const SelfMapSpec& phi, Complex w) { return counting_sample(phi, w).value; }

double hardy_norm(const SelfMapSpec& phi, double p, const CircleGrid& grid) {
  if (!(p >= 1.0)) throw DomainError("hardy_norm: p must be >= 1");
  double acc = 0.0;
  for (int k = 0; k < grid.size(); ++k) acc += pow_abs(std::abs(phi(grid.point(k))), p);
  return std::pow(acc * grid.weight(), 1.0 / p);
}

StantonResult stanton_norm(const FunctionSpec& f, const SelfMapSpec& phi, double p, const DiskGrid& disk) {
  if (!(p >= 1.0)) throw DomainError("stanton_norm: p must be >= 1");
  const Complex center = phi(0.0);
  const AreaRule rule = disk.recentered(center);
  StantonResult out;
  double acc = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const Complex w = rule.points[k];
    const auto [fv, fd] = f.value_and_derivative(w);
    const double grad = std::norm(fd);
    if (grad == 0.0) continue;
    double n_value = 0.0;
    try {
      n_value = nevanlinna(phi, w);
    } catch (const InfiniteValueError&) {
      out.skipped_mass += rule.weights[k];
      out.flags |= Flag::SkippedMass;
      continue;
    }
    if (n_value == 0.0) continue;
    double modulus = 1.0;
    if (p != 2.0) {
      const double a = std::abs(fv);
      if (a == 0.0 && p < 2.0) {
        out.skipped_mass += rule.weights[k];
        out.flags |= Flag::SkippedMass;
        continue;
      }
      modulus = std::pow(a, p - 2.0);
    }
    acc += rule.weights[k] * modulus * grad * n_value;
  }
  out.area_term = 0.5 * p * p * acc;
  out.value = std::pow(pow_abs(std::abs(f(center)), p) + out.area_term, 1.0 / p);
  return out;
}

Lemma42Report lemma42_checks(const SelfMapSpec& phi, const DiskGrid& disk, const CircleGrid& circle,
                             double delta_min) {
  if (std::abs(phi(0.0)) > kZeroRoot) throw PreconditionError("lemma42_checks: need phi(0) = 0");
  Lemma42Report out;
  const double norm = hardy_norm(phi, 2.0, circle);
  out.norm_sq = norm * norm;

  const RadialRule& radial = disk.radial();
  const double bound_scale = 4.0 / std::log(2.0) * out.norm_sq;
  double area = 0.0;
  for (std::size_t j = 0; j < radial.size(); ++j) {
    double row = 0.0;
    const double log_inv = -std::log1p(-radial.d[j]);
    const bool checked_row = radial.r[j] > 0.5 && radial.d[j] > delta_min;
    for (int i = 0; i < disk.angles(); ++i) {
      const Complex w = disk.point(j, i);
      const CountingSample s = counting_sample(phi, w);
      out.flags |= s.flags;
      row += s.value;
      if (checked_row) {
        const double ratio = s.value / (bound_scale * log_inv);
        ++out.nodes_checked;
        if (ratio > out.max_ratio) {
          out.max_ratio = ratio;
          out.witness = w;
        }
      }
    }
    area += disk.weight(j) * row;
  }
  out.area_side = 2.0 * area;
  out.gap = std::abs(out.norm_sq - out.area_side);
  return out;
}

double splitting_ratio(const FunctionSpec& f, const SelfMapSpec& phi, double p, const CircleGrid& circle) {
  if (!(p >= 2.0)) throw DomainError("splitting_ratio: p must be >= 2");
  if (std::abs(f(0.0)) > kZeroRoot || std::abs(phi(0.0)) > kZeroRoot) {
    throw PreconditionError("splitting_ratio: need f(0) = phi(0) = 0");
  }
  double acc = 0.0;
  for (int k = 0; k < circle.size(); ++k) acc += pow_abs(std::abs(f(phi(circle.point(k)))), p);
  const double composed = std::pow(acc * circle.weight(), 1.0 / p);
  const double nf = hardy_norm(f, p, circle);
  const double nphi = hardy_norm(phi, p, circle);
  if (nf == 0.0 || nphi == 0.0) throw DegenerateError("splitting_ratio: f or phi vanishes identically");
  return composed / (nf * std::pow(nphi, 2.0 / p));
}

SeminormReport thm42_criterion(const SelfMapSpec& phi, double p, double eta, double lambda, const WGrid& wgrid,
                               const GridConfig& grid) {
  constexpr double q = 2.0;
  SeminormReport report;
  if (!(eta > 0.0 && eta < 2.0 && lambda > 0.0 && lambda < 2.0 && p >= q)) report.flags |= Flag::OutOfRegime;
  report.value = -1.0;
  report.level_maxima.assign(wgrid.depth + 1, 0.0);
  const auto points = wgrid.points();
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const Complex w = points[idx];
    const int level = idx == 0 ? 0 : 1 + static_cast<int>((idx - 1) / wgrid.angles);
    const double omw = (1.0 - std::abs(w)) * (1.0 + std::abs(w));
    const MobiusMap sigma_w(w);
    const MobiusMap sigma_c(phi(w));
    const CircleRule rule = CircleRule::mobius_adapted(w, grid.circle_nodes, grid.gauss_order);
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.points.size(); ++k) {
      const Complex g = sigma_c.apply(phi(sigma_w.apply(rule.points[k])));
      acc += rule.weights[k] * std::norm(g);
    }
    report.evaluations += rule.points.size();
    const double factor =
        std::pow(omw, (1.0 - lambda) / q) / std::pow(phi.one_minus_abs2(w, omw), (1.0 - eta) / p);
    const double value = factor * std::sqrt(acc);
    report.level_maxima[level] = std::max(report.level_maxima[level], value);
    if (value > report.value) {
      report.value = value;
      report.point = w;
    }
  }
  if (finest_level_grows(report.level_maxima)) report.flags |= Flag::Divergent;
  return report;
}

SeminormReport thm43i_criterion(const SelfMapSpec& phi, double alpha, double p, double eta, const DiskGrid& disk) {
  if (!(alpha > 0.0)) throw DomainError("thm43i_criterion: alpha must be > 0");
  SeminormReport report;
  if (!(eta > 0.0 && eta < 1.0 + p)) report.flags |= Flag::OutOfRegime;
  const double beta = (p + 1.0 - eta) / p;
  auto quantity = [&](Complex w, double omw) {
    return std::pow(omw, alpha) * std::abs(phi.derivative(w)) / std::pow(phi.one_minus_abs2(w, omw), beta);
  };
  report.value = quantity(0.0, 1.0);
  report.point = Complex{0.0, 0.0};
  const RadialRule& radial = disk.radial();
  for (std::size_t j = 0; j < radial.size(); ++j) {
    const double omw = disk.one_minus_r2(j);
    for (int i = 0; i < disk.angles(); ++i) {
      const Complex w = disk.point(j, i);
      const double value = quantity(w, omw);
      if (value > report.value) {
        report.value = value;
        report.point = w;
      }
    }
  }
  report.evaluations = disk.size() + 1;
  return report;
}

SeminormReport thm43ii_criterion(const SelfMapSpec& phi, double alpha, double p, double eta, const ArcFamily& arcs,
                                 const RadialGrid& radial) {
  if (!(alpha > 0.0)) throw DomainError("thm43ii_criterion: alpha must be > 0");
  if (alpha >= 1.0) {
    throw SingularWeightError("thm43ii_criterion: (1-r)^(1-2 alpha) is not integrable for alpha >= 1");
  }
  const TentEnergy energy = [&phi](Complex z, double) { return std::norm(phi.derivative(z)); };
  SeminormReport report = tent_seminorm(energy, 1.0 - 2.0 * alpha, p, eta, arcs, radial);
  if (!(eta > 0.0 && eta < 1.0 + p)) report.flags |= Flag::OutOfRegime;
  return report;
}

PairStatistic pair_statistic(double alpha, const std::vector<FunctionSpec>& fs, const DiskGrid& disk) {
  if (!(alpha > 0.0)) throw DomainError("pair_statistic: alpha must be > 0");
  auto energy = [&](Complex z) {
    double s = 0.0;
    for (const auto& f : fs) s += std::norm(f.derivative(z));
    return s;
  };
  PairStatistic out;
  out.min = out.max = energy(0.0);
  out.argmin = 0.0;
  const RadialRule& radial = disk.radial();
  for (std::size_t j = 0; j < radial.size(); ++j) {
    const double weight = std::pow(disk.one_minus_r2(j), 2.0 * alpha);
    for (int i = 0; i < disk.angles(); ++i) {
      const Complex z = disk.point(j, i);
      const double v = weight * energy(z);
      out.max = std::max(out.max, v);
      if (v < out.min) {
        out.min = v;
        out.argmin = z;
      }
    }
  }
  return out;
}

BlochPair bloch_pair(double alpha, const DiskGrid& disk, int base) {
  if (!(alpha > 0.0)) throw DomainError("bloch_pair: alpha must be > 0");
  BlochPair out{FunctionSpec::lacunary(base, alpha, 2, 0), FunctionSpec::lacunary(base, alpha, 2, 1), base, {}};
  out.certificate = pair_statistic(alpha, {out.f1, out.f2}, disk);
  if (!(out.certificate.min > 0.01 * out.certificate.max)) {
    throw CertificationError("bloch_pair: grid minimum " + std::to_string(out.certificate.min) +
                             " is at most 1% of the maximum " + std::to_string(out.certificate.max));
  }
  return out;
}

}  // namespace campanato

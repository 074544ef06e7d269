#include "campanato/quadrature.hpp"

#include <algorithm>
#include <boost/math/special_functions/legendre.hpp>
#include <cmath>
#include <string>

namespace campanato {

GaussRule gauss_legendre(int order) {
  if (order < 1 || order > 128) throw DomainError("gauss_legendre: order must lie in [1, 128]");
  const auto positive = boost::math::legendre_p_zeros<double>(order);
  GaussRule rule;
  auto push = [&](double x) {
    const double dp = boost::math::legendre_p_prime(order, x);
    rule.nodes.push_back(x);
    rule.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  };
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
    if (*it != 0.0) push(-*it);
  }
  for (double x : positive) push(x);
  return rule;
}

GridConfig GridConfig::refined() const {
  GridConfig r = *this;
  r.circle_nodes *= 2;
  r.radial_panels *= 2;
  r.delta_min = delta_min * delta_min;
  r.w_angles *= 2;
  r.area_angles *= 2;
  return r;
}

void GridConfig::validate() const {
  auto fail = [](const std::string& field, const std::string& why) {
    throw ConfigError("grid." + field + ": " + why);
  };
  if (circle_nodes < 16) fail("circle_nodes", "must be >= 16");
  if (radial_panels < 1) fail("radial_panels", "must be >= 1");
  if (arc_depth < 0 || arc_depth > 30) fail("arc_depth", "must lie in [0, 30]");
  if (!(delta_min > 0.0) || !(delta_min < 0.5)) fail("delta_min", "must lie in (0, 0.5)");
  if (gauss_order < 2 || gauss_order > 64) fail("gauss_order", "must lie in [2, 64]");
  if (w_angles < 1) fail("w_angles", "must be >= 1");
  if (disk_angles < 4) fail("disk_angles", "must be >= 4");
  if (area_angles < 4) fail("area_angles", "must be >= 4");
}

CircleGrid::CircleGrid(int n) : n_(n) {
  if (n < 1) throw DomainError("CircleGrid: need at least one node");
}

Complex CircleGrid::point(int k) const { return std::polar(1.0, angle(k)); }

CircleRule CircleRule::uniform(const CircleGrid& grid) {
  CircleRule rule;
  rule.points.reserve(grid.size());
  for (int k = 0; k < grid.size(); ++k) rule.points.push_back(grid.point(k));
  rule.weights.assign(grid.size(), grid.weight());
  return rule;
}

CircleRule CircleRule::mobius_adapted(Complex w, int n, int gauss_order) {
  const double rho = std::abs(w);
  if (rho > 1.0 - 1e-15) throw DomainError("mobius_adapted: |w| must be < 1");
  if (rho < 0.5) return uniform(CircleGrid(n));

  const GaussRule gauss = gauss_legendre(gauss_order);
  const double core = 1.0 - rho;
  const double panel = std::min(kPi, gauss_order * kTwoPi / n);

  // Breakpoints in |t|, t the angular offset of the image point from w/|w|.
  std::vector<double> breaks{0.0};
  for (double t = core; t < panel && t < kPi; t *= 2.0) breaks.push_back(t);
  for (double t = breaks.back() + panel; t < kPi - 1e-12; t += panel) breaks.push_back(t);
  breaks.push_back(kPi);

  const double center = std::arg(w);
  const MobiusMap sigma(w);
  const double one_minus = (1.0 - rho) * (1.0 + rho);
  CircleRule rule;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double mid = 0.5 * (breaks[p] + breaks[p + 1]);
    const double half = 0.5 * (breaks[p + 1] - breaks[p]);
    for (int sign : {-1, 1}) {
      for (std::size_t q = 0; q < gauss.nodes.size(); ++q) {
        const double t = sign * (mid + half * gauss.nodes[q]);
        const Complex xi = std::polar(1.0, center + t);
        Complex zeta = sigma.apply(xi);
        zeta /= std::abs(zeta);
        const double jac = one_minus / std::norm(1.0 - std::conj(w) * xi);
        rule.points.push_back(zeta);
        rule.weights.push_back(half * gauss.weights[q] / kTwoPi * jac);
      }
    }
  }
  return rule;
}

double CircleRule::total_weight() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

RadialGrid::RadialGrid(int panels, double delta_min, int gauss_order)
    : panels_(panels), delta_min_(delta_min), gauss_(gauss_legendre(gauss_order)) {
  if (panels < 1) throw DomainError("RadialGrid: need at least one panel");
  if (!(delta_min > 0.0) || !(delta_min < 1.0)) throw DomainError("RadialGrid: delta_min in (0,1)");
}

RadialGrid::RadialGrid(const GridConfig& config)
    : RadialGrid(config.radial_panels, config.delta_min, config.gauss_order) {}

RadialRule RadialGrid::rule(double h, double s) const { return build(h, s, {}, false); }

RadialRule RadialGrid::area_rule(const std::vector<double>& extra_breaks) const {
  return build(1.0, 0.0, extra_breaks, true);
}

RadialRule RadialGrid::build(double h, double s, const std::vector<double>& extra,
                             bool grade_origin) const {
  if (!(h > 0.0) || h > 1.0 + 1e-12) throw DomainError("RadialGrid: h must lie in (0, 1]");
  if (!(s > -1.0)) throw SingularWeightError("RadialGrid: weight (1-r)^s needs s > -1");
  h = std::min(h, 1.0);

  constexpr double kMaxPanel = 1.0 / 16.0;
  const double ratio = std::pow(delta_min_, 1.0 / panels_);
  std::vector<double> breaks{h};
  for (double d = ratio; d > delta_min_ * (1.0 + 1e-9); d *= ratio) {
    if (d < h) breaks.push_back(d);
  }
  if (delta_min_ < h) breaks.push_back(delta_min_);
  for (double d : extra) {
    if (d > 0.0 && d < h) breaks.push_back(d);
  }
  if (grade_origin && h >= 1.0) {
    for (double r = kMaxPanel; r > 1e-3; r /= 4.0) breaks.push_back(1.0 - r);
  }
  std::sort(breaks.begin(), breaks.end(), std::greater<>());
  std::vector<double> unique;
  for (double d : breaks) {
    if (unique.empty() || unique.back() - d > 1e-12 * unique.back()) unique.push_back(d);
  }

  RadialRule out;
  auto push = [&](double d, double w) {
    out.d.push_back(d);
    out.r.push_back(1.0 - d);
    out.weights.push_back(w);
  };
  for (std::size_t p = 0; p + 1 < unique.size(); ++p) {
    const double hi = unique[p];
    const double lo = unique[p + 1];
    const int pieces = static_cast<int>(std::ceil((hi - lo) / kMaxPanel - 1e-9));
    const double width = (hi - lo) / pieces;
    for (int piece = 0; piece < pieces; ++piece) {
      const double top = hi - piece * width;
      const double mid = top - 0.5 * width;
      for (std::size_t q = gauss_.nodes.size(); q-- > 0;) {
        const double d = mid + 0.5 * width * gauss_.nodes[q];
        push(d, 0.5 * width * gauss_.weights[q] * std::pow(d, s));
      }
    }
  }
  // Final panel [0, last]: d = last * u^(1/(1+s)) removes the weight singularity.
  const double last = unique.back();
  const double expo = 1.0 / (1.0 + s);
  const double scale = std::pow(last, 1.0 + s) / (1.0 + s);
  for (std::size_t q = gauss_.nodes.size(); q-- > 0;) {
    const double u = 0.5 * (gauss_.nodes[q] + 1.0);
    push(last * std::pow(u, expo), 0.5 * gauss_.weights[q] * scale);
  }
  return out;
}

double AreaRule::total_weight() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

DiskGrid::DiskGrid(const RadialGrid& radial, int angles, int dyadic_depth)
    : angles_(angles), delta_min_(radial.delta_min()) {
  if (angles < 1) throw DomainError("DiskGrid: need at least one angle");
  std::vector<double> dyadic;
  for (int k = 1; k <= dyadic_depth; ++k) dyadic.push_back(std::ldexp(1.0, -k));
  radial_ = radial.area_rule(dyadic);
}

DiskGrid::DiskGrid(const GridConfig& config, int angles)
    : DiskGrid(RadialGrid(config), angles, config.arc_depth) {}

Complex DiskGrid::point(std::size_t j, int i) const { return std::polar(radial_.r[j], angle(i)); }

AreaRule DiskGrid::area_rule() const {
  AreaRule rule;
  rule.points.reserve(size());
  rule.weights.reserve(size());
  rule.one_minus_abs2.reserve(size());
  for (std::size_t j = 0; j < radial_.size(); ++j) {
    for (int i = 0; i < angles_; ++i) {
      rule.points.push_back(point(j, i));
      rule.weights.push_back(weight(j));
      rule.one_minus_abs2.push_back(one_minus_r2(j));
    }
  }
  return rule;
}

AreaRule DiskGrid::recentered(Complex c) const {
  if (std::abs(c) >= 1.0) throw DomainError("DiskGrid::recentered: |c| must be < 1");
  if (c == Complex{0.0, 0.0}) return area_rule();
  const MobiusMap sigma(c);
  const double one_minus_c = 1.0 - std::norm(c);
  AreaRule rule;
  rule.points.reserve(size());
  rule.weights.reserve(size());
  rule.one_minus_abs2.reserve(size());
  for (std::size_t j = 0; j < radial_.size(); ++j) {
    for (int i = 0; i < angles_; ++i) {
      const Complex u = point(j, i);
      const double den = std::norm(1.0 - std::conj(c) * u);
      rule.points.push_back(sigma.apply(u));
      rule.weights.push_back(weight(j) * one_minus_c * one_minus_c / (den * den));
      rule.one_minus_abs2.push_back(one_minus_c * one_minus_r2(j) / den);
    }
  }
  return rule;
}

WGrid::WGrid(int depth_, int angles_) : depth(depth_), angles(angles_) {
  if (depth < 0 || angles < 1) throw DomainError("WGrid: need depth >= 0 and angles >= 1");
}

WGrid::WGrid(const GridConfig& config) : WGrid(config.arc_depth, config.w_angles) {}

std::vector<Complex> WGrid::points() const {
  std::vector<Complex> pts{Complex{0.0, 0.0}};
  for (int k = 1; k <= depth; ++k) {
    const double r = 1.0 - std::ldexp(1.0, -k);
    for (int j = 0; j < angles; ++j) pts.push_back(std::polar(r, kTwoPi * j / angles));
  }
  return pts;
}

ArcFamily::ArcFamily(int depth_, int resolution_, int center_density_)
    : depth(depth_), resolution(resolution_), center_density(center_density_) {
  if (depth < 0 || resolution < 1 || center_density < 1) {
    throw DomainError("ArcFamily: need depth >= 0, resolution >= 1, density >= 1");
  }
}

std::vector<ArcFamily::Level> ArcFamily::levels() const {
  std::vector<Level> out;
  for (int k = 0; k <= depth; ++k) {
    Level level{std::ldexp(1.0, -k), {}};
    const long long wanted = k == 0 ? 1 : static_cast<long long>(center_density) << k;
    const int count = static_cast<int>(std::min<long long>(resolution, wanted));
    const int stride = std::max(1, resolution / count);
    for (int j = 0; j < resolution; j += stride) level.centers.push_back(kTwoPi * j / resolution);
    out.push_back(std::move(level));
  }
  return out;
}

std::vector<Arc> ArcFamily::arcs() const {
  std::vector<Arc> out;
  for (const auto& level : levels()) {
    for (double c : level.centers) out.emplace_back(c, level.length);
  }
  return out;
}

ArcNodes arc_nodes(const CircleGrid& grid, const Arc& arc) {
  const int n = grid.size();
  ArcNodes out;
  if (arc.length >= 1.0 - 1e-12) {
    out.indices.resize(n);
    for (int k = 0; k < n; ++k) out.indices[k] = k;
    out.weights.assign(n, 1.0 / n);
    return out;
  }
  const double step = kTwoPi / n;
  const double a = (arc.center_angle - kPi * arc.length) / step;
  const double b = (arc.center_angle + kPi * arc.length) / step;
  constexpr double kTol = 1e-9;
  const long long lo = static_cast<long long>(std::ceil(a - kTol));
  const long long hi = static_cast<long long>(std::floor(b + kTol));
  double total = 0.0;
  for (long long k = lo; k <= hi; ++k) {
    double w = 1.0;
    if (std::abs(k - a) < kTol || std::abs(k - b) < kTol) w = 0.5;
    out.indices.push_back(static_cast<int>(((k % n) + n) % n));
    out.weights.push_back(w);
    total += w;
  }
  for (double& w : out.weights) w /= total;
  return out;
}

AngleRange angle_range(int m, const Arc& arc) {
  if (arc.length >= 1.0 - 1e-12) return {0, m};
  const double step = kTwoPi / m;
  constexpr double kTol = 1e-9;
  const long long lo =
      static_cast<long long>(std::ceil((arc.center_angle - kPi * arc.length) / step - kTol));
  const long long hi =
      static_cast<long long>(std::ceil((arc.center_angle + kPi * arc.length) / step - kTol));
  return {static_cast<int>(((lo % m) + m) % m), static_cast<int>(hi - lo)};
}

}  // namespace campanato

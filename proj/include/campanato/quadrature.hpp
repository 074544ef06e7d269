#pragma once

#include <vector>

#include "campanato/mobius.hpp"
#include "campanato/types.hpp"

namespace campanato {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int order);

/// Resolution knobs shared by every operation. Defaults are the desk-scale
/// settings used by the verification suites.
struct GridConfig {
  int circle_nodes = 8192;  // N: uniform boundary nodes
  int radial_panels = 16;   // J: geometric panels between 1 and delta_min
  int arc_depth = 10;       // K: dyadic arcs 2^-k, k = 0..K
  double delta_min = 1e-4;  // smallest resolved distance to the boundary
  int gauss_order = 8;      // Q: Gauss-Legendre points per panel
  int w_angles = 64;        // angles of the Mobius parameter grid
  int disk_angles = 1024;   // angular nodes of the Carleson-box disk grid
  int area_angles = 256;    // angular nodes of the area-integral disk grid

  /// Doubles N, J and the angular counts and squares delta_min. With J doubled
  /// and delta_min squared the geometric panel ratio is unchanged, so the
  /// refined radial grid extends the original one toward the boundary.
  /// K and disk_angles stay fixed: finer boxes would need 2^K-fold more
  /// angular nodes.
  GridConfig refined() const;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// N equispaced nodes exp(2 pi i k / N) with weights 1/N.
class CircleGrid {
 public:
  explicit CircleGrid(int n);

  int size() const { return n_; }
  double angle(int k) const { return kTwoPi * k / n_; }
  Complex point(int k) const;
  double weight() const { return 1.0 / n_; }

 private:
  int n_;
};

/// General quadrature rule for |d zeta| / 2 pi on the circle.
struct CircleRule {
  std::vector<Complex> points;
  std::vector<double> weights;

  static CircleRule uniform(const CircleGrid& grid);

  /// Rule for integrals of g o sigma_w: the images sigma_w(zeta_k) are graded
  /// geometrically around w/|w| (down to a core of width 1-|w|) and uniform at
  /// spacing 2 pi / n elsewhere, so both the Poisson peak and the features of
  /// g are resolved. Reduces to the uniform rule for |w| < 1/2.
  static CircleRule mobius_adapted(Complex w, int n, int gauss_order);

  double total_weight() const;
};

/// Nodes and weights for int_{1-h}^1 g(r) (1-r)^s dr.
struct RadialRule {
  std::vector<double> r;
  std::vector<double> d;  // 1 - r, kept separately for accuracy near r = 1
  std::vector<double> weights;

  std::size_t size() const { return r.size(); }
};

/// Breakpoints d_j = delta_min^(j/J) (distance to the boundary), Gauss-Legendre
/// panels between them, and a final panel [1 - delta_min, 1].
class RadialGrid {
 public:
  RadialGrid(int panels, double delta_min, int gauss_order);
  explicit RadialGrid(const GridConfig& config);

  int panels() const { return panels_; }
  double delta_min() const { return delta_min_; }

  /// Rule for int_{1-h}^1 g(r) (1-r)^s dr, s > -1. The final panel absorbs
  /// the weight singularity through d = delta u^(1/(1+s)).
  RadialRule rule(double h, double s = 0.0) const;

  /// Rule on [0, 1] with extra breakpoints at the given distances, a capped
  /// panel width, and grading toward r = 0. Used for area quadrature.
  RadialRule area_rule(const std::vector<double>& extra_breaks) const;

 private:
  RadialRule build(double h, double s, const std::vector<double>& extra, bool grade_origin) const;

  int panels_;
  double delta_min_;
  GaussRule gauss_;
};

/// Nodes and weights for the normalized area measure dA, plus 1 - |z|^2.
struct AreaRule {
  std::vector<Complex> points;
  std::vector<double> weights;
  std::vector<double> one_minus_abs2;

  std::size_t size() const { return points.size(); }
  double total_weight() const;
};

/// Tensor polar grid: radial Gauss panels (with dyadic breakpoints 2^-k up to
/// the arc depth) times M equispaced angles. Weights integrate dA, total 1.
class DiskGrid {
 public:
  DiskGrid(const RadialGrid& radial, int angles, int dyadic_depth);
  DiskGrid(const GridConfig& config, int angles);

  int angles() const { return angles_; }
  double delta_min() const { return delta_min_; }
  const RadialRule& radial() const { return radial_; }
  std::size_t size() const { return radial_.size() * static_cast<std::size_t>(angles_); }

  double angle(int i) const { return kTwoPi * i / angles_; }
  Complex point(std::size_t j, int i) const;
  double weight(std::size_t j) const { return 2.0 * radial_.r[j] * radial_.weights[j] / angles_; }
  double one_minus_r2(std::size_t j) const { return radial_.d[j] * (2.0 - radial_.d[j]); }

  AreaRule area_rule() const;

  /// The same nodes pushed through sigma_c with Jacobian |sigma_c'|^2, so a
  /// singularity at w = c sits at the polar origin of the rule.
  AreaRule recentered(Complex c) const;

 private:
  RadialRule radial_;
  int angles_;
  double delta_min_;
};

/// Parameter grid for suprema over w: the origin plus radii 1 - 2^-k,
/// k = 1..K, times `angles` equispaced angles.
struct WGrid {
  int depth = 10;
  int angles = 64;

  WGrid() = default;
  WGrid(int depth, int angles);
  explicit WGrid(const GridConfig& config);

  std::vector<Complex> points() const;
};

/// Dyadic arcs h = 2^-k, k = 0..K. At level k there are min(M, density 2^k)
/// centers placed on every (M / count)-th node of an M-node circle.
struct ArcFamily {
  struct Level {
    double length;
    std::vector<double> centers;
  };

  int depth = 10;
  int resolution = 8192;
  int center_density = 4;

  ArcFamily() = default;
  ArcFamily(int depth, int resolution, int center_density = 4);

  std::vector<Level> levels() const;
  std::vector<Arc> arcs() const;
};

/// Indices of the CircleGrid nodes in the closed arc and trapezoid weights
/// normalized to sum 1 (endpoint nodes get half weight).
struct ArcNodes {
  std::vector<int> indices;
  std::vector<double> weights;
};

ArcNodes arc_nodes(const CircleGrid& grid, const Arc& arc);

/// Index range [first, first + count) (mod M) of the M equispaced angles in the
/// half-open arc [c - pi h, c + pi h).
struct AngleRange {
  int first = 0;
  int count = 0;
};

AngleRange angle_range(int m, const Arc& arc);

}  // namespace campanato

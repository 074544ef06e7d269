#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "campanato/function_spec.hpp"
#include "campanato/quadrature.hpp"
#include "campanato/seminorms.hpp"
#include "campanato/types.hpp"

namespace campanato {

/// Omega_eps(f) = {z : (1-|z|^2)^((3-eta)/2) |f'(z)| >= eps}.
struct LevelSetSpec {
  FunctionSpec f;
  double eta = 1.0;
  double eps = 1.0;

  /// (1-|z|^2)^((3-eta)/2) |f'(z)|.
  double statistic(Complex z, double one_minus_abs2) const;
  bool contains(Complex z, double one_minus_abs2) const { return statistic(z, one_minus_abs2) >= eps; }
};

class Density;

namespace density {

struct Constant {
  double c = 1.0;
};

/// (1-|z|^2)^s
struct BoundaryPower {
  double s = 0.0;
};

/// |f'(z)|^2 (1-|z|^2)^s
struct DerivativeEnergy {
  FunctionSpec f;
  double s = 1.0;
};

/// chi_{Omega_eps(f)}(z) (1-|z|^2)^(eta-2)
struct LevelSet {
  LevelSetSpec set;
};

struct Scaled {
  double c = 1.0;
  std::shared_ptr<const Density> inner;
};

}  // namespace density

/// Closed-form nonnegative density with respect to dA.
class Density {
 public:
  using Node = std::variant<density::Constant, density::BoundaryPower, density::DerivativeEnergy,
                            density::LevelSet, density::Scaled>;

  Density() : node_(density::Constant{0.0}) {}

  static Density constant(double c);
  static Density boundary_power(double s);
  static Density derivative_energy(FunctionSpec f, double s = 1.0);
  static Density level_set(LevelSetSpec set);
  static Density scaled(double c, Density inner);

  const Node& node() const { return node_; }

  /// rho(z); one_minus_abs2 = 1 - |z|^2 is passed separately for accuracy
  /// near the boundary.
  double operator()(Complex z, double one_minus_abs2) const;
  double operator()(Complex z) const { return (*this)(z, 1.0 - std::norm(z)); }

 private:
  explicit Density(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// S(I) = {r e^{i theta} : 1 - h <= r < 1, e^{i theta} in I}.
struct CarlesonBox {
  Arc arc;

  bool contains(Complex z) const;
};

/// Density values at the DiskGrid nodes, index j * angles + i.
std::vector<double> sample_density(const Density& rho, const DiskGrid& disk);

/// Sum of weights * rho over the grid nodes in the box. ResolutionError when
/// fewer than 16 nodes fall inside.
double box_mass(const Density& rho, const CarlesonBox& box, const DiskGrid& disk);
double box_mass(const std::vector<double>& values, const CarlesonBox& box, const DiskGrid& disk);

/// max over the arcs of box_mass / h^eta.
SeminormReport carleson_norm(const Density& rho, double eta, const ArcFamily& arcs, const DiskGrid& disk);
SeminormReport carleson_norm(const std::vector<double>& values, double eta, const ArcFamily& arcs,
                             const DiskGrid& disk);

/// T_{a,b} f(z) = int (1-|w|^2)^(b-1) / |1 - conj(w) z|^(a+b) f(w) dA(w), computed on
/// the area grid recentered at z. ResolutionError when 1 - |z| < delta_min of the grid.
double t_ab_apply(double a, double b, const Density& f, Complex z, const DiskGrid& area);

struct Lemma31Result {
  double ratio = 0.0;
  double numerator = 0.0;    // Carleson norm of |T f|^2 (1-|z|^2)^(eta+2a-2)
  double denominator = 0.0;  // Carleson norm of |f|^2 (1-|z|^2)^eta
  Flag flags = Flag::None;
};

/// Both Carleson norms on the evaluation grid, T_{a,b} f by quadrature on the
/// area grid. DegenerateError when the denominator vanishes and the numerator
/// does not; 0/0 returns a DEGENERATE-flagged zero.
Lemma31Result lemma31_ratio(const Density& f, double a, double b, double eta, const ArcFamily& arcs,
                            const DiskGrid& eval, const DiskGrid& area);

/// Grids for lemma31_ratio derived from a GridConfig: a coarse evaluation grid
/// (boxes to depth min(K, 5)) and an area grid whose delta_min stays below
/// every evaluation node.
struct Lemma31Grids {
  DiskGrid eval;
  ArcFamily arcs;
  DiskGrid area;

  static Lemma31Grids from(const GridConfig& config);
};

/// Base and refined disk grids with the arc family of the boxes.
struct ProfileGrids {
  DiskGrid base;
  DiskGrid refined;
  ArcFamily arcs;

  static ProfileGrids from(const GridConfig& config);
};

struct ProfileRow {
  double eps = 0.0;
  double norm = 0.0;          // base grid
  double refined_norm = 0.0;  // refined grid
  Flag flag = Flag::Bounded;  // BOUNDED or DIVERGENT
  std::optional<Arc> witness;
};

/// eta-Carleson norm of chi_{Omega_eps(f)} (1-|z|^2)^(eta-2) dA for each eps,
/// classified BOUNDED / DIVERGENT by grid refinement.
std::vector<ProfileRow> distance_profile(const FunctionSpec& f, double eta, const std::vector<double>& eps_list,
                                         const ProfileGrids& grids);

struct DistanceEstimate {
  double value = 0.0;
  bool transition = false;  // false: every eps bounded, value 0
  double eps_low = 0.0;
  double eps_high = 0.0;
  std::vector<ProfileRow> probes;
};

/// Bisection for the BOUNDED / DIVERGENT transition of distance_profile.
DistanceEstimate distance_estimate(const FunctionSpec& f, double eta, const ProfileGrids& grids,
                                   int iterations = 20);

}  // namespace campanato

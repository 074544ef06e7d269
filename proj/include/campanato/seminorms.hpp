#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "campanato/fourier.hpp"
#include "campanato/function_spec.hpp"
#include "campanato/quadrature.hpp"
#include "campanato/types.hpp"

namespace campanato {

enum class Regime { Hardy, Morrey, BMOA, Lipschitz, ConstantsOnly };

const char* regime_name(Regime r);

/// Exponent pair (p, eta) of the Campanato scale.
struct IndexParams {
  double p = 2.0;
  double eta = 1.0;

  IndexParams() = default;
  IndexParams(double p, double eta);

  /// (p + 1 - eta) / p, the matching Bloch exponent.
  double alpha() const { return (p + 1.0 - eta) / p; }
  Regime regime() const;
  /// 0 < eta < 2 <= 1 + p.
  bool in_equivalence_regime() const;
};

/// Discrete supremum with the arc or point that attains it.
struct SeminormReport {
  double value = 0.0;
  std::optional<Arc> arc;
  std::optional<Complex> point;
  Flag flags = Flag::None;
  std::vector<double> level_maxima;  // one entry per dyadic level k = 0..K
  std::size_t evaluations = 0;
};

/// (sum_k w_k |f(zeta_k)|^p)^(1/p) on the grid. Functions singular on the
/// circle are evaluated on |z| = 1 - fallback_delta; with fallback_delta = 0
/// they raise DomainError.
double hardy_norm(const FunctionSpec& f, double p, const CircleGrid& grid, double fallback_delta = 0.0);
double hardy_norm(const FunctionSpec& f, double p, const CircleRule& rule, double fallback_delta = 0.0);

/// max over the arcs of (|I|^-eta int_I |f - f_I|^p |dzeta| / 2 pi)^(1/p).
SeminormReport campanato_seminorm(const BoundarySamples& f, const IndexParams& params,
                                  const ArcFamily& arcs);

/// max over the w-grid of (1-|w|^2)^((1-eta)/p) ||f o sigma_w - f(w)||_p, with
/// f o sigma_w evaluated by pullback on a Mobius-adapted circle rule.
SeminormReport mobius_seminorm(const FunctionSpec& f, const IndexParams& params, const WGrid& wgrid,
                               const GridConfig& grid);

enum class LpVariant { Analytic, Harmonic };

/// max over the arcs of (|I|^-eta int_I (int_{1-h}^1 W(r) D(r zeta) dr)^(p/2))^(1/p)
/// with W = 1 - r, D = |f'|^2 (analytic) or W = 1 - r^2, D = |grad Pf|^2 = 2|f'|^2
/// (harmonic).
SeminormReport lp_star_seminorm(const FunctionSpec& f, const IndexParams& params, const ArcFamily& arcs,
                                const RadialGrid& radial, LpVariant variant = LpVariant::Analytic);

/// Energy density E(z, 1 - |z|) for tent integrals.
using TentEnergy = std::function<double(Complex, double)>;

/// max over the arcs of (h^-eta int_I (int_{1-h}^1 E(r zeta) (1-r)^s dr)^(p/2) |dzeta|/2pi)^(1/p).
/// SingularWeightError for s <= -1.
SeminormReport tent_seminorm(const TentEnergy& energy, double s, double p, double eta, const ArcFamily& arcs,
                             const RadialGrid& radial);

/// max over the origin and the disk nodes of (1-|w|^2)^alpha |f'(w)|.
SeminormReport bloch_norm(const FunctionSpec& f, double alpha, const DiskGrid& disk);

struct RatioStats {
  std::vector<double> ratios;  // NaN where both norms vanish
  double min = 0.0;
  double max = 0.0;
  double spread = 0.0;
  Flag flags = Flag::None;
};

using Seminorm = std::function<double(const FunctionSpec&)>;

/// Ratio statistics of norm_a / norm_b over the family. Members where both
/// vanish are excluded; DegenerateError when only norm_b vanishes.
RatioStats equivalence_report(const Seminorm& norm_a, const Seminorm& norm_b,
                              const std::vector<FunctionSpec>& family);

/// Spread of per-level maxima: DIVERGENT when the finest level exceeds the
/// previous one by more than `tolerance`.
bool finest_level_grows(const std::vector<double>& level_maxima, double tolerance = 0.1);

}  // namespace campanato

#pragma once

// Regression bounds frozen from the pilot sweep at the default grid.

namespace campanato::thresholds {

/// Initial ceiling for any equivalence spread.
inline constexpr double kSpreadCeiling = 20.0;

/// Frozen spreads of mobius / campanato and lp_star / campanato over the
/// f_b family, per index pair.
inline constexpr double kMobiusCampanatoSpread = 1.5;
inline constexpr double kLpStarCampanatoSpread = 2.2;

/// Relative change allowed under one grid refinement.
inline constexpr double kRefinementTolerance = 0.10;

/// Upper bound of bloch_norm(f, (p+1-eta)/p) / lp_star_seminorm(f, p, eta)
/// across the embedding family.
inline constexpr double kEmbeddingConstant = 3.5;

/// Splitting ratio bound over the scaled-monomial stress family.
inline constexpr double kSplitConstant = 1.0 + 1e-9;

/// Lacunary base of the Bloch pair and its certified min / max floor at alpha = 1.
inline constexpr int kBlochPairBase = 4;
inline constexpr double kBlochPairFloor = 0.05;

/// Stability of the T_{a,b} Carleson ratio under refinement.
inline constexpr double kLemma31Stability = 0.20;

}  // namespace campanato::thresholds

#pragma once

#include <vector>

#include "campanato/function_spec.hpp"
#include "campanato/quadrature.hpp"
#include "campanato/self_map.hpp"
#include "campanato/seminorms.hpp"

namespace campanato {

struct CountingSample {
  Complex w;
  std::vector<Preimage> preimages;
  double value = 0.0;
  Flag flags = Flag::None;
};

/// N(phi, w) = sum mult * log(1/|z|) over the disk preimages of w.
/// InfiniteValueError when 0 is a preimage.
CountingSample counting_sample(const SelfMapSpec& phi, Complex w);
double nevanlinna(const SelfMapSpec& phi, Complex w);

/// (sum_k w_k |phi(zeta_k)|^p)^(1/p) on the circle.
double hardy_norm(const SelfMapSpec& phi, double p, const CircleGrid& grid);

struct StantonResult {
  double value = 0.0;
  double area_term = 0.0;     // (p^2/2) int |f|^(p-2) |f'|^2 N dA
  double skipped_mass = 0.0;  // dA-measure of nodes with infinite N
  Flag flags = Flag::None;
};

/// (|f(phi(0))|^p + (p^2/2) int |f|^(p-2) |f'|^2 N(phi, .) dA)^(1/p) on the
/// area grid recentered at phi(0).
StantonResult stanton_norm(const FunctionSpec& f, const SelfMapSpec& phi, double p, const DiskGrid& disk);

struct Lemma42Report {
  double norm_sq = 0.0;    // ||phi||_2^2
  double area_side = 0.0;  // 2 int N(phi, w) dA(w)
  double gap = 0.0;
  double max_ratio = 0.0;  // max N / ((4 / log 2) ||phi||_2^2 log(1/|z|))
  Complex witness;
  std::size_t nodes_checked = 0;
  Flag flags = Flag::None;
};

/// Both estimates for phi(0) = 0; the pointwise bound is checked at the disk
/// nodes with 1/2 < |z| < 1 - delta_min. PreconditionError if phi(0) != 0.
Lemma42Report lemma42_checks(const SelfMapSpec& phi, const DiskGrid& disk, const CircleGrid& circle,
                             double delta_min);

/// ||f o phi||_p / (||f||_p ||phi||_p^(2/p)) with f(0) = phi(0) = 0 and p >= 2.
double splitting_ratio(const FunctionSpec& f, const SelfMapSpec& phi, double p, const CircleGrid& circle);

/// max over the w-grid of (1-|w|^2)^((1-lambda)/2) / (1-|phi(w)|^2)^((1-eta)/p) *
/// ||sigma_{phi(w)} o phi o sigma_w||_2, the norm by pullback on a Mobius-adapted rule.
SeminormReport thm42_criterion(const SelfMapSpec& phi, double p, double eta, double lambda, const WGrid& wgrid,
                               const GridConfig& grid);

/// max over the origin and disk nodes of (1-|w|^2)^alpha |phi'(w)| / (1-|phi(w)|^2)^((p+1-eta)/p).
SeminormReport thm43i_criterion(const SelfMapSpec& phi, double alpha, double p, double eta, const DiskGrid& disk);

/// max over the arcs of (h^-eta int_I (int_{1-h}^1 |phi'|^2 (1-r)^(1-2 alpha) dr)^(p/2))^(1/p).
/// SingularWeightError for alpha >= 1.
SeminormReport thm43ii_criterion(const SelfMapSpec& phi, double alpha, double p, double eta, const ArcFamily& arcs,
                                 const RadialGrid& radial);

struct PairStatistic {
  double min = 0.0;
  double max = 0.0;
  Complex argmin;
  double ratio() const { return max > 0.0 ? min / max : 0.0; }
};

/// min and max over the origin and the disk nodes of (1-|z|^2)^(2 alpha) sum_i |f_i'(z)|^2.
PairStatistic pair_statistic(double alpha, const std::vector<FunctionSpec>& fs, const DiskGrid& disk);

struct BlochPair {
  FunctionSpec f1;
  FunctionSpec f2;
  int base = 0;
  PairStatistic certificate;
};

/// Interleaved lacunary pair: exponents base^m with m even for f1 and odd for
/// f2, coefficients base^(m (alpha-1)). CertificationError when the grid
/// minimum is at most 1% of the grid maximum.
BlochPair bloch_pair(double alpha, const DiskGrid& disk, int base);

}  // namespace campanato

#include "campanato/types.hpp"

#include <algorithm>
#include <cmath>

namespace campanato {

Arc::Arc(double center, double normalized_length) {
  if (!(normalized_length > 0.0) || normalized_length > 1.0 + 1e-12) {
    throw DomainError("Arc: normalized length must lie in (0, 1]");
  }
  if (!std::isfinite(center)) throw DomainError("Arc: non-finite center angle");
  center_angle = std::fmod(center, kTwoPi);
  if (center_angle < 0.0) center_angle += kTwoPi;
  length = std::min(normalized_length, 1.0);
}

std::vector<std::string> flag_names(Flag set) {
  static const std::pair<Flag, const char*> kNames[] = {
      {Flag::Bounded, "BOUNDED"},
      {Flag::Divergent, "DIVERGENT"},
      {Flag::Degenerate, "DEGENERATE"},
      {Flag::Singular, "SINGULAR"},
      {Flag::SkippedMass, "SKIPPED-MASS"},
      {Flag::OutOfRegime, "OUT-OF-REGIME"},
      {Flag::ConstantsOnly, "CONSTANTS-ONLY"},
      {Flag::ConditioningWarning, "CONDITIONING-WARNING"},
  };
  std::vector<std::string> out;
  for (const auto& [f, name] : kNames) {
    if (has_flag(set, f)) out.emplace_back(name);
  }
  return out;
}

}  // namespace campanato

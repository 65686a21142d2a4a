#pragma once

#include "chromachain/color/scheme.hpp"

#include <nlohmann/json.hpp>

namespace chromachain::knowledge {

/// Closed interval of area fractions.
struct Window {
  double lo = 0.0;
  double hi = 1.0;

  friend bool operator==(const Window&, const Window&) = default;
};

/// Numeric design rules shared by prompts and validators.
struct CompositionRules {
  Window dominant_window{0.60, 0.70};
  Window secondary_window{0.20, 0.30};
  Window accent_window{0.05, 0.10};
  double window_slack = 0.05;
  double max_dominant_hue_shift = 15.0;  // degrees
  int max_hue_families = 3;
  int dominant_max_blackness = 40;
  int dominant_max_chromaticness = 50;
  // Adjacent elements of different roles need hue OR blackness separation.
  double min_adjacent_hue_contrast = 30.0;
  int min_adjacent_blackness_contrast = 20;
  // An accent element may not exceed a dominant element's area by more than this.
  double role_inversion_margin = 0.15;

  [[nodiscard]] const Window& window(color::Role r) const;

  friend bool operator==(const CompositionRules&, const CompositionRules&) = default;
};

/// Throws SchemaViolation naming the offending field.
void check_rules(const CompositionRules& r);

void to_json(nlohmann::json& j, const CompositionRules& r);
/// Absent fields keep their defaults; the result is checked.
void from_json(const nlohmann::json& j, CompositionRules& r);

}  // namespace chromachain::knowledge

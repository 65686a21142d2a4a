#pragma once

#include "chromachain/color/scheme.hpp"
#include "chromachain/knowledge/rules.hpp"
#include "chromachain/scene/scene.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace chromachain::validate {

enum class Severity { kError, kWarning };

enum class RuleCode {
  kDominantTooDark,
  kDominantTooSaturated,
  kToneMismatch,
  kExcessDiversity,
  kHueShiftExceeded,
  kRatioWindowMiss,
  kAdjacentLowContrast,
  kRoleAreaInversion,
};

std::string_view to_string(Severity s);
/// SCREAMING_SNAKE form, e.g. "DOMINANT_TOO_DARK".
std::string_view to_string(RuleCode c);

struct Violation {
  RuleCode rule_code = RuleCode::kDominantTooDark;
  Severity severity = Severity::kError;
  std::string message;
  std::string subject;  // role name, element id, or "a|b" for pairs

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  /// pass iff no error-severity violation.
  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::set<std::string> codes() const;
  [[nodiscard]] std::set<std::string> error_codes() const;
  void merge(const ValidationReport& other);

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

void to_json(nlohmann::json& j, const ValidationReport& r);
void from_json(const nlohmann::json& j, ValidationReport& r);

/// One "verdict:" line, then one line per violation:
///   error DOMINANT_TOO_DARK [dominant] message
std::string to_text(const ValidationReport& r);

/// Number of quadrants touched by the shortest arc covering the chromatic
/// role hues (0 when every role is neutral).
int hue_family_span(const color::ColorScheme& s);

/// `previous` is the scheme being replaced by a natural-language edit; its
/// dominant bounds how far the new dominant hue may move.
ValidationReport validate_scheme(const color::ColorScheme& s, const color::DesignConcepts& c,
                                 const knowledge::CompositionRules& rules,
                                 const color::ColorScheme* previous = nullptr,
                                 const color::MoodThresholds& thresholds = {});

/// Throws UncoveredElement / UnknownElement when `a` does not cover exactly the
/// colorable elements of `s`.
ValidationReport validate_assignment(const scene::ColorAssignment& a, const scene::SceneSpec& s,
                                     const color::ColorScheme& scheme,
                                     const knowledge::CompositionRules& rules);

/// Hue separation used by the contrast rule: achromatic pairs are 0 apart,
/// achromatic vs chromatic counts as 180.
double contrast_hue_delta(const color::NcsColor& a, const color::NcsColor& b);

}  // namespace chromachain::validate

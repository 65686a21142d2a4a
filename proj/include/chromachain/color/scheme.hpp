#pragma once

#include "chromachain/color/ncs.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chromachain::color {

enum class Role { kDominant = 0, kSecondary = 1, kAccent = 2 };
inline constexpr std::array<Role, 3> kAllRoles{Role::kDominant, Role::kSecondary, Role::kAccent};

std::string_view to_string(Role r);
std::optional<Role> role_from_string(std::string_view s);

// Each mood attribute is a three-degree scale serialized as 0, 1, 2.
enum class Tone { kCool = 0, kNeutral = 1, kWarm = 2 };
enum class Distance { kClose = 0, kMedium = 1, kFar = 2 };
enum class Heaviness { kLight = 0, kMedium = 1, kDark = 2 };

struct ColorMood {
  Tone tones = Tone::kNeutral;
  Distance distance = Distance::kMedium;
  Heaviness heaviness = Heaviness::kMedium;

  friend bool operator==(const ColorMood&, const ColorMood&) = default;
};

/// Three role-tagged colors plus per-role nuance variations.
struct ColorScheme {
  std::array<NcsColor, 3> colors;
  std::array<std::vector<NcsColor>, 3> variations;
  std::string reasoning;

  [[nodiscard]] const NcsColor& at(Role r) const { return colors[static_cast<std::size_t>(r)]; }
  NcsColor& at(Role r) { return colors[static_cast<std::size_t>(r)]; }
  [[nodiscard]] const std::vector<NcsColor>& variations_of(Role r) const {
    return variations[static_cast<std::size_t>(r)];
  }
  std::vector<NcsColor>& variations_of(Role r) { return variations[static_cast<std::size_t>(r)]; }

  friend bool operator==(const ColorScheme&, const ColorScheme&) = default;
};

inline constexpr std::size_t kMaxVariationsPerRole = 3;

/// Output of idea prompting and input of word-color association.
struct DesignConcepts {
  std::vector<std::string> themes;
  ColorMood mood;
  std::string source_intent;

  friend bool operator==(const DesignConcepts&, const DesignConcepts&) = default;
};

inline constexpr std::size_t kMaxThemes = 8;

/// Throws SchemaViolation unless 1 <= |themes| <= 8 with no empty tag.
void check_concepts(const DesignConcepts& c);

/// Numeric cutoffs for mood classification. Defaults are decided, not measured.
struct MoodThresholds {
  int neutral_max_chromaticness = 10;
  int light_below_blackness = 20;   // light if blackness < this
  int dark_min_blackness = 50;      // dark if blackness >= this
  int far_max_blackness = 20;       // pale colors recede
  int far_max_chromaticness = 30;
  int close_min_chromaticness = 40;

  friend bool operator==(const MoodThresholds&, const MoodThresholds&) = default;
};

/// Temperature of a single color: warm on the Y/R half (315, 360] u [0, 135),
/// cool on (135, 315); neutral hue, low chromaticness, or either boundary
/// angle count as neutral.
Tone classify_tone(const NcsColor& c, const MoodThresholds& t = {});

/// Mood of a scheme, read from its dominant color.
ColorMood classify_mood(const ColorScheme& s, const MoodThresholds& t = {});

void to_json(nlohmann::json& j, const ColorMood& m);
void from_json(const nlohmann::json& j, ColorMood& m);
void to_json(nlohmann::json& j, const ColorScheme& s);
void from_json(const nlohmann::json& j, ColorScheme& s);
void to_json(nlohmann::json& j, const DesignConcepts& c);
void from_json(const nlohmann::json& j, DesignConcepts& c);
void to_json(nlohmann::json& j, const MoodThresholds& t);
void from_json(const nlohmann::json& j, MoodThresholds& t);

}  // namespace chromachain::color

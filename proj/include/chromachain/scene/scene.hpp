#pragma once

#include "chromachain/color/ncs.hpp"
#include "chromachain/color/rgb.hpp"
#include "chromachain/color/scheme.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chromachain::scene {

enum class SizeClass { kLarge, kMedium, kSmall };

std::string_view to_string(SizeClass s);
/// large >= 0.15, small <= 0.05, medium otherwise.
SizeClass size_class_for(double area_fraction);

struct SceneElement {
  std::string id;
  std::string label;
  SizeClass size_class = SizeClass::kMedium;
  double area_fraction = 0.0;
  bool colorable = true;
  std::optional<color::NcsColor> fixed_color;  // non-colorable materials only

  friend bool operator==(const SceneElement&, const SceneElement&) = default;
};

/// Declarative interior: elements with area shares, adjacency and narration.
class SceneSpec {
 public:
  std::string id;
  std::string name;
  std::vector<SceneElement> elements;
  std::vector<std::string> description_sentences;

  /// Unordered pairs, stored as (min, max) and sorted.
  [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& adjacency() const {
    return adjacency_;
  }
  void set_adjacency(std::vector<std::pair<std::string, std::string>> pairs);
  [[nodiscard]] bool adjacent(std::string_view a, std::string_view b) const;

  [[nodiscard]] const SceneElement* find(std::string_view element_id) const;
  [[nodiscard]] std::vector<const SceneElement*> colorable_elements() const;

  friend bool operator==(const SceneSpec&, const SceneSpec&) = default;

 private:
  std::vector<std::pair<std::string, std::string>> adjacency_;
};

/// Throws SchemaViolation / AreaSumMismatch / DanglingAdjacency.
void check_scene(const SceneSpec& s);

SceneSpec scene_from_json(const nlohmann::json& j);
nlohmann::json scene_to_json(const SceneSpec& s);
SceneSpec load_scene(const std::filesystem::path& path);

/// Layout narration followed by one size sentence per element. Deterministic.
std::string describe_scene(const SceneSpec& s);

struct AssignedElement {
  std::string element_id;
  color::Role role = color::Role::kDominant;
  color::NcsColor color;

  friend bool operator==(const AssignedElement&, const AssignedElement&) = default;
};

/// Element -> (role, color) mapping with the model's reasoning.
struct ColorAssignment {
  std::vector<AssignedElement> elements;
  std::string reasoning;

  [[nodiscard]] const AssignedElement* find(std::string_view element_id) const;
  AssignedElement* find(std::string_view element_id);

  friend bool operator==(const ColorAssignment&, const ColorAssignment&) = default;
};

void to_json(nlohmann::json& j, const ColorAssignment& a);
void from_json(const nlohmann::json& j, ColorAssignment& a);

struct ScatterPoint {
  std::string element_id;
  int chromaticness = 0;
  int blackness = 0;
  std::string hex;

  friend bool operator==(const ScatterPoint&, const ScatterPoint&) = default;
};

inline constexpr std::size_t kHueBins = 36;  // 10 degrees each

/// Data behind the hue-distribution and chromaticness/blackness charts.
struct SchemeStats {
  std::array<double, kHueBins> hue_bins{};
  double neutral_mass = 0.0;
  std::vector<ScatterPoint> points;
};

SchemeStats compute_stats(const ColorAssignment& a, const SceneSpec& s,
                          const color::DisplayAnchors& anchors = {});

void to_json(nlohmann::json& j, const SchemeStats& s);

/// The bundled scenes, keyed by id.
class SceneRegistry {
 public:
  SceneRegistry() = default;
  /// Loads every *.json file in `dir`.
  static SceneRegistry load_directory(const std::filesystem::path& dir);

  void add(SceneSpec s);
  /// Throws UnknownScene.
  [[nodiscard]] const SceneSpec& get(std::string_view id) const;
  [[nodiscard]] bool contains(std::string_view id) const;
  [[nodiscard]] std::vector<std::string> ids() const;

 private:
  std::map<std::string, SceneSpec, std::less<>> scenes_;
};

}  // namespace chromachain::scene

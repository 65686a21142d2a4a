#include "chromachain/knowledge/rules.hpp"

#include "chromachain/error.hpp"

#include <type_traits>
#include <utility>

namespace chromachain::knowledge {

namespace {

[[noreturn]] void violation(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, "rules." + field + ": " + what);
}

Window window_from(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    violation(field, "expected [lo, hi]");
  }
  return Window{j[0].get<double>(), j[1].get<double>()};
}

template <typename T>
T number(const nlohmann::json& j, const std::string& field, T fallback) {
  if (!j.contains(field)) return fallback;
  const auto& v = j.at(field);
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) violation(field, "expected integer");
  } else {
    if (!v.is_number()) violation(field, "expected number");
  }
  return v.get<T>();
}

}  // namespace

const Window& CompositionRules::window(color::Role r) const {
  switch (r) {
    case color::Role::kDominant: return dominant_window;
    case color::Role::kSecondary: return secondary_window;
    case color::Role::kAccent: return accent_window;
  }
  return dominant_window;
}

void check_rules(const CompositionRules& r) {
  const std::pair<const char*, const Window*> windows[] = {{"dominant_window", &r.dominant_window},
                                                           {"secondary_window", &r.secondary_window},
                                                           {"accent_window", &r.accent_window}};
  for (const auto& [name, w] : windows) {
    if (!(w->lo >= 0.0 && w->hi <= 1.0 && w->lo <= w->hi)) {
      violation(name, "must be a subinterval of [0, 1]");
    }
  }
  if (!(r.dominant_window.lo > r.secondary_window.lo && r.secondary_window.lo > r.accent_window.lo)) {
    violation("windows", "lower bounds must be ordered dominant > secondary > accent");
  }
  if (!(r.window_slack >= 0.0)) violation("window_slack", "must be >= 0");
  if (!(r.max_dominant_hue_shift >= 0.0 && r.max_dominant_hue_shift <= 180.0)) {
    violation("max_dominant_hue_shift", "must be in [0, 180] degrees");
  }
  if (r.max_hue_families < 1 || r.max_hue_families > 4) {
    violation("max_hue_families", "must be in [1, 4]");
  }
  if (r.dominant_max_blackness < 0 || r.dominant_max_blackness > 100) {
    violation("dominant_max_blackness", "must be in [0, 100]");
  }
  if (r.dominant_max_chromaticness < 0 || r.dominant_max_chromaticness > 100) {
    violation("dominant_max_chromaticness", "must be in [0, 100]");
  }
  if (!(r.min_adjacent_hue_contrast >= 0.0 && r.min_adjacent_hue_contrast <= 180.0)) {
    violation("min_adjacent_contrast.hue_degrees", "must be in [0, 180]");
  }
  if (r.min_adjacent_blackness_contrast < 0 || r.min_adjacent_blackness_contrast > 100) {
    violation("min_adjacent_contrast.blackness_delta", "must be in [0, 100]");
  }
  if (!(r.role_inversion_margin >= 0.0 && r.role_inversion_margin <= 1.0)) {
    violation("role_inversion_margin", "must be in [0, 1]");
  }
}

void to_json(nlohmann::json& j, const CompositionRules& r) {
  j = nlohmann::json{
      {"dominant_window", {r.dominant_window.lo, r.dominant_window.hi}},
      {"secondary_window", {r.secondary_window.lo, r.secondary_window.hi}},
      {"accent_window", {r.accent_window.lo, r.accent_window.hi}},
      {"window_slack", r.window_slack},
      {"max_dominant_hue_shift", r.max_dominant_hue_shift},
      {"max_hue_families", r.max_hue_families},
      {"dominant_max_blackness", r.dominant_max_blackness},
      {"dominant_max_chromaticness", r.dominant_max_chromaticness},
      {"min_adjacent_contrast",
       {{"hue_degrees", r.min_adjacent_hue_contrast},
        {"blackness_delta", r.min_adjacent_blackness_contrast}}},
      {"role_inversion_margin", r.role_inversion_margin},
  };
}

void from_json(const nlohmann::json& j, CompositionRules& r) {
  if (!j.is_object()) violation("", "expected object");
  CompositionRules out;
  if (j.contains("dominant_window")) out.dominant_window = window_from(j.at("dominant_window"), "dominant_window");
  if (j.contains("secondary_window")) out.secondary_window = window_from(j.at("secondary_window"), "secondary_window");
  if (j.contains("accent_window")) out.accent_window = window_from(j.at("accent_window"), "accent_window");
  out.window_slack = number(j, "window_slack", out.window_slack);
  out.max_dominant_hue_shift = number(j, "max_dominant_hue_shift", out.max_dominant_hue_shift);
  out.max_hue_families = number(j, "max_hue_families", out.max_hue_families);
  out.dominant_max_blackness = number(j, "dominant_max_blackness", out.dominant_max_blackness);
  out.dominant_max_chromaticness = number(j, "dominant_max_chromaticness", out.dominant_max_chromaticness);
  if (j.contains("min_adjacent_contrast")) {
    const auto& c = j.at("min_adjacent_contrast");
    if (!c.is_object()) violation("min_adjacent_contrast", "expected object");
    out.min_adjacent_hue_contrast = number(c, "hue_degrees", out.min_adjacent_hue_contrast);
    out.min_adjacent_blackness_contrast =
        number(c, "blackness_delta", out.min_adjacent_blackness_contrast);
  }
  out.role_inversion_margin = number(j, "role_inversion_margin", out.role_inversion_margin);
  check_rules(out);
  r = out;
}

}  // namespace chromachain::knowledge

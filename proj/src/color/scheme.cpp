#include "chromachain/color/scheme.hpp"

#include "chromachain/error.hpp"

namespace chromachain::color {

namespace {

template <typename E>
E degree_from(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer()) {
    throw Error(ErrorCode::kSchemaViolation,
                std::string("mood.") + field + ": expected an integer degree");
  }
  const int v = j.at(field).get<int>();
  if (v < 0 || v > 2) {
    throw Error(ErrorCode::kInvalidDegree,
                std::string("mood.") + field + ": degree must be 0, 1 or 2, got " + std::to_string(v));
  }
  return static_cast<E>(v);
}

int int_field(const nlohmann::json& j, const char* field, int fallback) {
  if (!j.contains(field)) return fallback;
  if (!j.at(field).is_number_integer()) {
    throw Error(ErrorCode::kSchemaViolation,
                std::string("mood_thresholds.") + field + ": expected integer");
  }
  return j.at(field).get<int>();
}

}  // namespace

std::string_view to_string(Role r) {
  switch (r) {
    case Role::kDominant: return "dominant";
    case Role::kSecondary: return "secondary";
    case Role::kAccent: return "accent";
  }
  return "dominant";
}

std::optional<Role> role_from_string(std::string_view s) {
  for (Role r : kAllRoles) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

void check_concepts(const DesignConcepts& c) {
  if (c.themes.empty() || c.themes.size() > kMaxThemes) {
    throw Error(ErrorCode::kSchemaViolation,
                "concepts.themes: expected 1 to 8 tags, got " + std::to_string(c.themes.size()));
  }
  for (const auto& t : c.themes) {
    if (t.empty()) throw Error(ErrorCode::kSchemaViolation, "concepts.themes: empty tag");
  }
}

Tone classify_tone(const NcsColor& c, const MoodThresholds& t) {
  if (c.hue().is_neutral() || c.chromaticness() <= t.neutral_max_chromaticness) {
    return Tone::kNeutral;
  }
  const int a = hue_angle_tenths(c.hue());
  if (a > 3150 || a < 1350) return Tone::kWarm;
  if (a > 1350 && a < 3150) return Tone::kCool;
  return Tone::kNeutral;  // exactly R50B or G50Y
}

ColorMood classify_mood(const ColorScheme& s, const MoodThresholds& t) {
  const NcsColor& d = s.at(Role::kDominant);
  ColorMood m;
  m.tones = classify_tone(d, t);

  if (d.blackness() < t.light_below_blackness) {
    m.heaviness = Heaviness::kLight;
  } else if (d.blackness() >= t.dark_min_blackness) {
    m.heaviness = Heaviness::kDark;
  } else {
    m.heaviness = Heaviness::kMedium;
  }

  if (m.tones == Tone::kNeutral) {
    m.distance = Distance::kMedium;
  } else if (m.tones == Tone::kCool ||
             (d.blackness() <= t.far_max_blackness &&
              d.chromaticness() <= t.far_max_chromaticness)) {
    m.distance = Distance::kFar;
  } else if (d.chromaticness() >= t.close_min_chromaticness) {
    m.distance = Distance::kClose;
  } else {
    m.distance = Distance::kMedium;
  }
  return m;
}

void to_json(nlohmann::json& j, const ColorMood& m) {
  j = nlohmann::json{{"tones", static_cast<int>(m.tones)},
                     {"distance", static_cast<int>(m.distance)},
                     {"heaviness", static_cast<int>(m.heaviness)}};
}

void from_json(const nlohmann::json& j, ColorMood& m) {
  if (!j.is_object()) throw Error(ErrorCode::kSchemaViolation, "mood: expected object");
  m.tones = degree_from<Tone>(j, "tones");
  m.distance = degree_from<Distance>(j, "distance");
  m.heaviness = degree_from<Heaviness>(j, "heaviness");
}

void to_json(nlohmann::json& j, const ColorScheme& s) {
  j = nlohmann::json::object();
  nlohmann::json vars = nlohmann::json::object();
  for (Role r : kAllRoles) {
    j[std::string(to_string(r))] = s.at(r);
    vars[std::string(to_string(r))] = s.variations_of(r);
  }
  j["variations"] = std::move(vars);
  j["reasoning"] = s.reasoning;
}

void from_json(const nlohmann::json& j, ColorScheme& s) {
  if (!j.is_object()) throw Error(ErrorCode::kSchemaViolation, "scheme: expected object");
  ColorScheme out;
  for (Role r : kAllRoles) {
    const std::string key(to_string(r));
    if (!j.contains(key)) throw Error(ErrorCode::kSchemaViolation, "scheme." + key + ": missing");
    out.at(r) = j.at(key).get<NcsColor>();
  }
  if (j.contains("variations")) {
    const auto& vars = j.at("variations");
    if (!vars.is_object()) {
      throw Error(ErrorCode::kSchemaViolation, "scheme.variations: expected object");
    }
    for (Role r : kAllRoles) {
      const std::string key(to_string(r));
      if (!vars.contains(key)) continue;
      if (!vars.at(key).is_array() || vars.at(key).size() > kMaxVariationsPerRole) {
        throw Error(ErrorCode::kSchemaViolation,
                    "scheme.variations." + key + ": expected at most 3 colors");
      }
      for (const auto& v : vars.at(key)) out.variations_of(r).push_back(v.get<NcsColor>());
    }
  }
  if (j.contains("reasoning")) {
    if (!j.at("reasoning").is_string()) {
      throw Error(ErrorCode::kSchemaViolation, "scheme.reasoning: expected string");
    }
    out.reasoning = j.at("reasoning").get<std::string>();
  }
  s = std::move(out);
}

void to_json(nlohmann::json& j, const DesignConcepts& c) {
  j = nlohmann::json{{"themes", c.themes}, {"mood", c.mood}, {"source_intent", c.source_intent}};
}

void from_json(const nlohmann::json& j, DesignConcepts& c) {
  if (!j.is_object()) throw Error(ErrorCode::kSchemaViolation, "concepts: expected object");
  DesignConcepts out;
  if (!j.contains("themes") || !j.at("themes").is_array()) {
    throw Error(ErrorCode::kSchemaViolation, "concepts.themes: expected array of strings");
  }
  for (const auto& t : j.at("themes")) {
    if (!t.is_string()) throw Error(ErrorCode::kSchemaViolation, "concepts.themes: expected strings");
    out.themes.push_back(t.get<std::string>());
  }
  if (!j.contains("mood")) throw Error(ErrorCode::kSchemaViolation, "concepts.mood: missing");
  out.mood = j.at("mood").get<ColorMood>();
  if (j.contains("source_intent") && j.at("source_intent").is_string()) {
    out.source_intent = j.at("source_intent").get<std::string>();
  }
  check_concepts(out);
  c = std::move(out);
}

void to_json(nlohmann::json& j, const MoodThresholds& t) {
  j = nlohmann::json{{"neutral_max_chromaticness", t.neutral_max_chromaticness},
                     {"light_below_blackness", t.light_below_blackness},
                     {"dark_min_blackness", t.dark_min_blackness},
                     {"far_max_blackness", t.far_max_blackness},
                     {"far_max_chromaticness", t.far_max_chromaticness},
                     {"close_min_chromaticness", t.close_min_chromaticness}};
}

void from_json(const nlohmann::json& j, MoodThresholds& t) {
  if (!j.is_object()) throw Error(ErrorCode::kSchemaViolation, "mood_thresholds: expected object");
  MoodThresholds d;
  t.neutral_max_chromaticness = int_field(j, "neutral_max_chromaticness", d.neutral_max_chromaticness);
  t.light_below_blackness = int_field(j, "light_below_blackness", d.light_below_blackness);
  t.dark_min_blackness = int_field(j, "dark_min_blackness", d.dark_min_blackness);
  t.far_max_blackness = int_field(j, "far_max_blackness", d.far_max_blackness);
  t.far_max_chromaticness = int_field(j, "far_max_chromaticness", d.far_max_chromaticness);
  t.close_min_chromaticness = int_field(j, "close_min_chromaticness", d.close_min_chromaticness);
}

}  // namespace chromachain::color

#pragma once

// Encoded analogs of the published accept/reject walkthroughs, shared by the
// unit and acceptance suites.

#include "chromachain/color/scheme.hpp"
#include "chromachain/scene/scene.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace chromachain::testing {

inline color::ColorScheme make_scheme(const char* d, const char* s, const char* a) {
  color::ColorScheme out;
  out.colors = {color::parse_ncs(d), color::parse_ncs(s), color::parse_ncs(a)};
  return out;
}

inline color::DesignConcepts concepts(std::vector<std::string> themes, color::Tone tone,
                                      color::Distance distance, color::Heaviness heaviness) {
  return color::DesignConcepts{std::move(themes), {tone, distance, heaviness}, "test intent"};
}

struct SchemeCase {
  std::string name;
  color::ColorScheme scheme;
  color::DesignConcepts concepts;
  std::set<std::string> expected;  // empty means pass
};

inline std::vector<SchemeCase> scheme_cases() {
  const auto farmhouse = concepts({"Farmhouse", "Rustic", "Cozy"}, color::Tone::kWarm, color::Distance::kClose,
                                  color::Heaviness::kMedium);
  const auto mixed = concepts({"Eclectic", "Playful"}, color::Tone::kNeutral, color::Distance::kMedium,
                              color::Heaviness::kLight);
  return {
      {"warm farmhouse", make_scheme("1050-Y90R", "4030-Y70R", "2060-R"), farmhouse, {}},
      {"dark and saturated dominant", make_scheme("4555-Y90R", "4030-Y70R", "2060-R"), farmhouse,
       {"DOMINANT_TOO_DARK", "DOMINANT_TOO_SATURATED"}},
      {"blue dominant under warm concepts", make_scheme("1030-B", "4030-Y70R", "2060-R"), farmhouse,
       {"TONE_MISMATCH"}},
      {"four hue families", make_scheme("1010-Y70R", "2030-B", "1040-G50Y"), mixed, {"EXCESS_DIVERSITY"}},
  };
}

inline color::ColorScheme bedroom_scheme() { return make_scheme("0520-Y30R", "3030-Y70R", "1060-R10B"); }

inline scene::ColorAssignment assign_roles(const scene::SceneSpec& s, const color::ColorScheme& scheme,
                                           const std::map<std::string, color::Role>& roles) {
  scene::ColorAssignment out;
  for (const auto* e : s.colorable_elements()) {
    const auto role = roles.at(e->id);
    out.elements.push_back({e->id, role, scheme.at(role)});
  }
  return out;
}

inline std::map<std::string, color::Role> bedroom_roles() {
  using color::Role;
  std::map<std::string, Role> r;
  for (const char* id : {"wall", "bed", "bed_cover", "wardrobe", "dresser", "nightstand_left", "nightstand_right",
                         "armchair", "door"}) {
    r[id] = Role::kDominant;
  }
  for (const char* id : {"floor", "headboard", "rug", "curtain"}) r[id] = Role::kSecondary;
  for (const char* id : {"wall_hanging", "pillows", "mirror_frame", "decoration_frame_1", "decoration_frame_2",
                         "table_lamp", "ceiling_lamp", "vase"}) {
    r[id] = Role::kAccent;
  }
  return r;
}

struct AssignmentCase {
  std::string name;
  scene::ColorAssignment assignment;
  std::set<std::string> expected;
};

inline std::vector<AssignmentCase> assignment_cases(const scene::SceneSpec& bedroom) {
  const auto scheme = bedroom_scheme();
  const auto good = assign_roles(bedroom, scheme, bedroom_roles());

  auto roles = bedroom_roles();
  roles["wall"] = color::Role::kAccent;
  const auto wall_accent = assign_roles(bedroom, scheme, roles);

  auto frames = good;
  for (auto& e : frames.elements) {
    if (e.element_id == "decoration_frame_1" || e.element_id == "decoration_frame_2") {
      e.role = color::Role::kSecondary;
      e.color = color::parse_ncs("0525-Y40R");
    }
  }
  return {
      {"walls dominant, hangings accent", good, {}},
      {"walls mapped to accent", wall_accent, {"RATIO_WINDOW_MISS", "ROLE_AREA_INVERSION"}},
      {"frames close to the wall", frames, {"ADJACENT_LOW_CONTRAST"}},
  };
}

}  // namespace chromachain::testing

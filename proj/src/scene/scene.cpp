#include "chromachain/scene/scene.hpp"

#include "chromachain/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace chromachain::scene {

namespace {

constexpr double kAreaSumTolerance = 0.01;

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, "scene" + where + ": " + what);
}

const nlohmann::json& require(const nlohmann::json& j, const char* field, const std::string& where) {
  if (!j.contains(field)) schema(where + "." + field, "missing");
  return j.at(field);
}

std::string string_field(const nlohmann::json& j, const char* field, const std::string& where) {
  const auto& v = require(j, field, where);
  if (!v.is_string() || v.get<std::string>().empty()) schema(where + "." + field, "expected non-empty string");
  return v.get<std::string>();
}

std::optional<SizeClass> size_from_string(std::string_view s) {
  if (s == "large") return SizeClass::kLarge;
  if (s == "medium") return SizeClass::kMedium;
  if (s == "small") return SizeClass::kSmall;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(SizeClass s) {
  switch (s) {
    case SizeClass::kLarge: return "large";
    case SizeClass::kMedium: return "medium";
    case SizeClass::kSmall: return "small";
  }
  return "medium";
}

SizeClass size_class_for(double area_fraction) {
  if (area_fraction >= 0.15) return SizeClass::kLarge;
  if (area_fraction <= 0.05) return SizeClass::kSmall;
  return SizeClass::kMedium;
}

void SceneSpec::set_adjacency(std::vector<std::pair<std::string, std::string>> pairs) {
  for (auto& [a, b] : pairs) {
    if (b < a) std::swap(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  adjacency_ = std::move(pairs);
}

bool SceneSpec::adjacent(std::string_view a, std::string_view b) const {
  if (b < a) std::swap(a, b);
  return std::binary_search(adjacency_.begin(), adjacency_.end(), std::pair<std::string, std::string>(a, b));
}

const SceneElement* SceneSpec::find(std::string_view element_id) const {
  for (const auto& e : elements) {
    if (e.id == element_id) return &e;
  }
  return nullptr;
}

std::vector<const SceneElement*> SceneSpec::colorable_elements() const {
  std::vector<const SceneElement*> out;
  for (const auto& e : elements) {
    if (e.colorable) out.push_back(&e);
  }
  return out;
}

void check_scene(const SceneSpec& s) {
  if (s.id.empty()) schema(".id", "missing");
  std::set<std::string, std::less<>> ids;
  double colorable_sum = 0.0;
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    const auto& e = s.elements[i];
    const std::string where = ".elements[" + std::to_string(i) + "]";
    if (e.id.empty()) schema(where + ".id", "empty");
    if (!ids.insert(e.id).second) schema(where + ".id", "duplicate element id '" + e.id + "'");
    if (!(e.area_fraction > 0.0 && e.area_fraction <= 1.0)) {
      schema(where + ".area_fraction", "must be in (0, 1]");
    }
    if (e.size_class != size_class_for(e.area_fraction)) {
      schema(where + ".size_class", "'" + std::string(to_string(e.size_class)) +
                                        "' is inconsistent with area fraction " +
                                        std::to_string(e.area_fraction));
    }
    if (e.colorable && e.fixed_color) schema(where + ".fixed_color", "colorable elements have no fixed color");
    if (e.colorable) colorable_sum += e.area_fraction;
  }
  if (s.colorable_elements().empty()) schema(".elements", "no colorable elements");
  if (std::fabs(colorable_sum - 1.0) > kAreaSumTolerance) {
    throw Error(ErrorCode::kAreaSumMismatch,
                "scene '" + s.id + "': colorable area fractions sum to " + std::to_string(colorable_sum));
  }
  for (const auto& [a, b] : s.adjacency()) {
    if (!ids.count(a) || !ids.count(b)) {
      throw Error(ErrorCode::kDanglingAdjacency,
                  "scene '" + s.id + "': adjacency " + a + " <-> " + b + " names an unknown element");
    }
    if (a == b) schema(".adjacency", "element '" + a + "' adjacent to itself");
  }
}

SceneSpec scene_from_json(const nlohmann::json& j) {
  if (!j.is_object()) schema("", "expected object");
  SceneSpec s;
  s.id = string_field(j, "id", "");
  s.name = string_field(j, "name", "");
  const auto& elements = require(j, "elements", "");
  if (!elements.is_array()) schema(".elements", "expected array");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& ej = elements[i];
    const std::string where = ".elements[" + std::to_string(i) + "]";
    if (!ej.is_object()) schema(where, "expected object");
    SceneElement e;
    e.id = string_field(ej, "id", where);
    e.label = string_field(ej, "label", where);
    auto size = size_from_string(string_field(ej, "size_class", where));
    if (!size) schema(where + ".size_class", "expected large, medium or small");
    e.size_class = *size;
    const auto& area = require(ej, "area_fraction", where);
    if (!area.is_number()) schema(where + ".area_fraction", "expected number");
    e.area_fraction = area.get<double>();
    const auto& colorable = require(ej, "colorable", where);
    if (!colorable.is_boolean()) schema(where + ".colorable", "expected boolean");
    e.colorable = colorable.get<bool>();
    if (ej.contains("fixed_color") && !ej.at("fixed_color").is_null()) {
      e.fixed_color = ej.at("fixed_color").get<color::NcsColor>();
    }
    s.elements.push_back(std::move(e));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("adjacency")) {
    const auto& adj = j.at("adjacency");
    if (!adj.is_array()) schema(".adjacency", "expected array of pairs");
    for (const auto& p : adj) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        schema(".adjacency", "expected [id, id] pairs");
      }
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  s.set_adjacency(std::move(pairs));
  if (j.contains("description_sentences")) {
    const auto& d = j.at("description_sentences");
    if (!d.is_array()) schema(".description_sentences", "expected array of strings");
    for (const auto& line : d) {
      if (!line.is_string()) schema(".description_sentences", "expected strings");
      s.description_sentences.push_back(line.get<std::string>());
    }
  }
  check_scene(s);
  return s;
}

nlohmann::json scene_to_json(const SceneSpec& s) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : s.elements) {
    nlohmann::json ej{{"id", e.id},
                      {"label", e.label},
                      {"size_class", to_string(e.size_class)},
                      {"area_fraction", e.area_fraction},
                      {"colorable", e.colorable}};
    if (e.fixed_color) ej["fixed_color"] = *e.fixed_color;
    elements.push_back(std::move(ej));
  }
  nlohmann::json adjacency = nlohmann::json::array();
  for (const auto& [a, b] : s.adjacency()) adjacency.push_back({a, b});
  return nlohmann::json{{"id", s.id},
                        {"name", s.name},
                        {"elements", std::move(elements)},
                        {"adjacency", std::move(adjacency)},
                        {"description_sentences", s.description_sentences}};
}

SceneSpec load_scene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open scene file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSchemaViolation, path.string() + ": " + e.what());
  }
  return scene_from_json(j);
}

std::string describe_scene(const SceneSpec& s) {
  std::ostringstream out;
  bool first = true;
  auto sentence = [&](const std::string& text) {
    if (!first) out << ' ';
    out << text;
    first = false;
  };
  for (const auto& line : s.description_sentences) sentence(line);
  for (const auto& e : s.elements) {
    std::ostringstream line;
    line << "The " << e.label << " [" << e.id << "]";
    if (e.colorable) {
      const long pct = std::lround(e.area_fraction * 100.0);
      line << " is a " << to_string(e.size_class) << " item covering ";
      if (pct < 1) {
        line << "under 1%";
      } else {
        line << "about " << pct << '%';
      }
      line << " of the colorable surface.";
    } else {
      line << " is not colorable";
      if (e.fixed_color) line << " and keeps its fixed color " << color::format_ncs(*e.fixed_color);
      line << '.';
    }
    sentence(line.str());
  }
  return out.str();
}

const AssignedElement* ColorAssignment::find(std::string_view element_id) const {
  for (const auto& e : elements) {
    if (e.element_id == element_id) return &e;
  }
  return nullptr;
}

AssignedElement* ColorAssignment::find(std::string_view element_id) {
  for (auto& e : elements) {
    if (e.element_id == element_id) return &e;
  }
  return nullptr;
}

void to_json(nlohmann::json& j, const ColorAssignment& a) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : a.elements) {
    elements.push_back({{"id", e.element_id}, {"role", color::to_string(e.role)}, {"color", e.color}});
  }
  j = nlohmann::json{{"elements", std::move(elements)}, {"reasoning", a.reasoning}};
}

void from_json(const nlohmann::json& j, ColorAssignment& a) {
  if (!j.is_object() || !j.contains("elements") || !j.at("elements").is_array()) {
    throw Error(ErrorCode::kSchemaViolation, "assignment.elements: expected array");
  }
  ColorAssignment out;
  for (const auto& ej : j.at("elements")) {
    if (!ej.is_object() || !ej.contains("id") || !ej.at("id").is_string() || !ej.contains("role") ||
        !ej.at("role").is_string() || !ej.contains("color")) {
      throw Error(ErrorCode::kSchemaViolation, "assignment.elements: expected {id, role, color}");
    }
    auto role = color::role_from_string(ej.at("role").get<std::string>());
    if (!role) {
      throw Error(ErrorCode::kSchemaViolation,
                  "assignment.elements: unknown role '" + ej.at("role").get<std::string>() + "'");
    }
    out.elements.push_back({ej.at("id").get<std::string>(), *role, ej.at("color").get<color::NcsColor>()});
  }
  if (j.contains("reasoning") && j.at("reasoning").is_string()) {
    out.reasoning = j.at("reasoning").get<std::string>();
  }
  a = std::move(out);
}

SchemeStats compute_stats(const ColorAssignment& a, const SceneSpec& s,
                          const color::DisplayAnchors& anchors) {
  SchemeStats stats;
  double total = 0.0;
  for (const auto& ae : a.elements) {
    const SceneElement* e = s.find(ae.element_id);
    if (e != nullptr && e->colorable) total += e->area_fraction;
  }
  for (const auto& ae : a.elements) {
    const SceneElement* e = s.find(ae.element_id);
    if (e == nullptr || !e->colorable) continue;
    const double w = total > 0.0 ? e->area_fraction / total : 0.0;
    if (ae.color.hue().is_neutral()) {
      stats.neutral_mass += w;
    } else {
      stats.hue_bins[static_cast<std::size_t>(color::hue_angle_tenths(ae.color.hue()) / 100)] += w;
    }
    stats.points.push_back({ae.element_id, ae.color.chromaticness(), ae.color.blackness(),
                            color::to_hex(color::ncs_to_rgb(ae.color, anchors))});
  }
  return stats;
}

void to_json(nlohmann::json& j, const SchemeStats& s) {
  nlohmann::json bins = nlohmann::json::array();
  for (std::size_t i = 0; i < kHueBins; ++i) {
    bins.push_back({{"start_degrees", static_cast<int>(i * 10)}, {"weight", s.hue_bins[i]}});
  }
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : s.points) {
    points.push_back({{"id", p.element_id},
                      {"chromaticness", p.chromaticness},
                      {"blackness", p.blackness},
                      {"hex", p.hex}});
  }
  j = nlohmann::json{{"hue_histogram", std::move(bins)},
                     {"neutral_mass", s.neutral_mass},
                     {"points", std::move(points)}};
}

SceneRegistry SceneRegistry::load_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::kIo, "scene directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  SceneRegistry reg;
  for (const auto& f : files) reg.add(load_scene(f));
  return reg;
}

void SceneRegistry::add(SceneSpec s) {
  std::string id = s.id;
  scenes_.insert_or_assign(std::move(id), std::move(s));
}

const SceneSpec& SceneRegistry::get(std::string_view id) const {
  auto it = scenes_.find(id);
  if (it == scenes_.end()) throw Error(ErrorCode::kUnknownScene, "unknown scene '" + std::string(id) + "'");
  return it->second;
}

bool SceneRegistry::contains(std::string_view id) const { return scenes_.find(id) != scenes_.end(); }

std::vector<std::string> SceneRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, _] : scenes_) out.push_back(id);
  return out;
}

}  // namespace chromachain::scene

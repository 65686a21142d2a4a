#include "chromachain/validate/validators.hpp"

#include "chromachain/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace chromachain::validate {

namespace {

constexpr double kEps = 1e-9;
constexpr int kTenthsPerTurn = 3600;
constexpr int kTenthsPerQuadrant = 900;

std::string pct(double fraction) {
  std::ostringstream out;
  out.precision(1);
  out << std::fixed << fraction * 100.0 << '%';
  return out.str();
}

std::string deg(double d) {
  std::ostringstream out;
  out.precision(1);
  out << std::fixed << d << " deg";
  return out.str();
}

std::string_view tone_name(color::Tone t) {
  switch (t) {
    case color::Tone::kCool: return "cool";
    case color::Tone::kNeutral: return "neutral";
    case color::Tone::kWarm: return "warm";
  }
  return "neutral";
}

}  // namespace

std::string_view to_string(Severity s) { return s == Severity::kError ? "error" : "warning"; }

std::string_view to_string(RuleCode c) {
  switch (c) {
    case RuleCode::kDominantTooDark: return "DOMINANT_TOO_DARK";
    case RuleCode::kDominantTooSaturated: return "DOMINANT_TOO_SATURATED";
    case RuleCode::kToneMismatch: return "TONE_MISMATCH";
    case RuleCode::kExcessDiversity: return "EXCESS_DIVERSITY";
    case RuleCode::kHueShiftExceeded: return "HUE_SHIFT_EXCEEDED";
    case RuleCode::kRatioWindowMiss: return "RATIO_WINDOW_MISS";
    case RuleCode::kAdjacentLowContrast: return "ADJACENT_LOW_CONTRAST";
    case RuleCode::kRoleAreaInversion: return "ROLE_AREA_INVERSION";
  }
  return "UNKNOWN";
}

bool ValidationReport::passed() const {
  return std::none_of(violations.begin(), violations.end(),
                      [](const Violation& v) { return v.severity == Severity::kError; });
}

std::set<std::string> ValidationReport::codes() const {
  std::set<std::string> out;
  for (const auto& v : violations) out.emplace(to_string(v.rule_code));
  return out;
}

std::set<std::string> ValidationReport::error_codes() const {
  std::set<std::string> out;
  for (const auto& v : violations) {
    if (v.severity == Severity::kError) out.emplace(to_string(v.rule_code));
  }
  return out;
}

void ValidationReport::merge(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

void to_json(nlohmann::json& j, const ValidationReport& r) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : r.violations) {
    vs.push_back({{"rule_code", to_string(v.rule_code)},
                  {"severity", to_string(v.severity)},
                  {"message", v.message},
                  {"subject", v.subject}});
  }
  j = nlohmann::json{{"verdict", r.passed() ? "pass" : "fail"}, {"violations", std::move(vs)}};
}

std::string to_text(const ValidationReport& r) {
  std::string out = std::string("verdict: ") + (r.passed() ? "pass" : "fail") + "\n";
  for (const auto& v : r.violations) {
    out += std::string(to_string(v.severity)) + " " + std::string(to_string(v.rule_code)) + " [" + v.subject +
           "] " + v.message + "\n";
  }
  return out;
}

void from_json(const nlohmann::json& j, ValidationReport& r) {
  if (!j.is_object() || !j.contains("violations") || !j.at("violations").is_array()) {
    throw Error(ErrorCode::kSchemaViolation, "report: expected {\"violations\": [...]}");
  }
  ValidationReport out;
  for (const auto& v : j.at("violations")) {
    Violation x;
    const auto code = v.at("rule_code").get<std::string>();
    const auto sev = v.at("severity").get<std::string>();
    bool found = false;
    for (int i = 0; i <= static_cast<int>(RuleCode::kRoleAreaInversion); ++i) {
      if (to_string(static_cast<RuleCode>(i)) == code) {
        x.rule_code = static_cast<RuleCode>(i);
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::kSchemaViolation, "report: unknown rule code " + code);
    if (sev == "error") {
      x.severity = Severity::kError;
    } else if (sev == "warning") {
      x.severity = Severity::kWarning;
    } else {
      throw Error(ErrorCode::kSchemaViolation, "report: unknown severity " + sev);
    }
    x.message = v.value("message", "");
    x.subject = v.value("subject", "");
    out.violations.push_back(std::move(x));
  }
  r = std::move(out);
}

int hue_family_span(const color::ColorScheme& s) {
  std::vector<int> angles;
  for (auto r : color::kAllRoles) {
    if (!s.at(r).hue().is_neutral()) angles.push_back(color::hue_angle_tenths(s.at(r).hue()));
  }
  if (angles.empty()) return 0;
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  // The shortest covering arc starts just after the widest gap between hues.
  std::size_t start = 0;
  int widest = -1;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const int prev = angles[(i + angles.size() - 1) % angles.size()];
    const int gap = angles.size() == 1 ? kTenthsPerTurn : (angles[i] - prev + kTenthsPerTurn) % kTenthsPerTurn;
    if (gap > widest) {
      widest = gap;
      start = i;
    }
  }
  const int from = angles[start];
  const int length = kTenthsPerTurn - widest;
  const int span = (from + length) / kTenthsPerQuadrant - from / kTenthsPerQuadrant + 1;
  return std::min(span, 4);
}

double contrast_hue_delta(const color::NcsColor& a, const color::NcsColor& b) {
  const bool an = a.hue().is_neutral();
  const bool bn = b.hue().is_neutral();
  if (an && bn) return 0.0;
  if (an || bn) return 180.0;
  return color::hue_distance(a.hue(), b.hue());
}

ValidationReport validate_scheme(const color::ColorScheme& s, const color::DesignConcepts& c,
                                 const knowledge::CompositionRules& rules,
                                 const color::ColorScheme* previous,
                                 const color::MoodThresholds& thresholds) {
  ValidationReport report;
  const auto& dominant = s.at(color::Role::kDominant);
  const std::string dominant_code = color::format_ncs(dominant);

  if (dominant.blackness() > rules.dominant_max_blackness) {
    report.violations.push_back({RuleCode::kDominantTooDark, Severity::kError,
                                 "dominant " + dominant_code + " has blackness " +
                                     std::to_string(dominant.blackness()) + " > " +
                                     std::to_string(rules.dominant_max_blackness),
                                 "dominant"});
  }
  if (dominant.chromaticness() > rules.dominant_max_chromaticness) {
    report.violations.push_back({RuleCode::kDominantTooSaturated, Severity::kError,
                                 "dominant " + dominant_code + " has chromaticness " +
                                     std::to_string(dominant.chromaticness()) + " > " +
                                     std::to_string(rules.dominant_max_chromaticness),
                                 "dominant"});
  }

  const auto got = color::classify_mood(s, thresholds).tones;
  const auto want = c.mood.tones;
  if (got != want) {
    const auto severity = want == color::Tone::kNeutral ? Severity::kWarning : Severity::kError;
    report.violations.push_back({RuleCode::kToneMismatch, severity,
                                 "dominant " + dominant_code + " reads " + std::string(tone_name(got)) +
                                     " but the concepts ask for " + std::string(tone_name(want)),
                                 "dominant"});
  }
  // The secondary only matters when it reads as the opposite temperature.
  if (want != color::Tone::kNeutral) {
    const auto& secondary = s.at(color::Role::kSecondary);
    const auto sec = color::classify_tone(secondary, thresholds);
    if (sec != want && sec != color::Tone::kNeutral) {
      report.violations.push_back({RuleCode::kToneMismatch, Severity::kWarning,
                                   "secondary " + color::format_ncs(secondary) + " reads " +
                                       std::string(tone_name(sec)) + " against requested " +
                                       std::string(tone_name(want)),
                                   "secondary"});
    }
  }

  const int span = hue_family_span(s);
  if (span > rules.max_hue_families) {
    report.violations.push_back({RuleCode::kExcessDiversity, Severity::kError,
                                 "role hues span " + std::to_string(span) + " hue families (max " +
                                     std::to_string(rules.max_hue_families) + ")",
                                 "scheme"});
  }

  for (auto r : color::kAllRoles) {
    const auto& base = s.at(r);
    for (const auto& v : s.variations_of(r)) {
      if (!(v.hue() == base.hue())) {
        report.violations.push_back({RuleCode::kHueShiftExceeded, Severity::kError,
                                     std::string(color::to_string(r)) + " variation " + color::format_ncs(v) +
                                         " changes the hue of " + color::format_ncs(base),
                                     std::string(color::to_string(r))});
      }
    }
  }
  if (previous != nullptr) {
    const auto& before = previous->at(color::Role::kDominant);
    double shift = 0.0;
    if (before.hue().is_neutral() != dominant.hue().is_neutral()) {
      shift = 180.0;
    } else if (!dominant.hue().is_neutral()) {
      shift = color::hue_distance(before.hue(), dominant.hue());
    }
    if (shift > rules.max_dominant_hue_shift + kEps) {
      report.violations.push_back({RuleCode::kHueShiftExceeded, Severity::kError,
                                   "dominant moved from " + color::format_ncs(before) + " to " + dominant_code +
                                       " (" + deg(shift) + " > " + deg(rules.max_dominant_hue_shift) + ")",
                                   "dominant"});
    }
  }
  return report;
}

ValidationReport validate_assignment(const scene::ColorAssignment& a, const scene::SceneSpec& s,
                                     const color::ColorScheme& scheme,
                                     const knowledge::CompositionRules& rules) {
  (void)scheme;
  std::map<std::string, const scene::AssignedElement*, std::less<>> by_id;
  for (const auto& ae : a.elements) {
    const auto* e = s.find(ae.element_id);
    if (e == nullptr) {
      throw Error(ErrorCode::kUnknownElement, "element '" + ae.element_id + "' is not in scene '" + s.id + "'",
                  {{"element", ae.element_id}});
    }
    if (!e->colorable) {
      throw Error(ErrorCode::kUnknownElement, "element '" + ae.element_id + "' is not colorable",
                  {{"element", ae.element_id}});
    }
    if (!by_id.emplace(ae.element_id, &ae).second) {
      throw Error(ErrorCode::kUnknownElement, "element '" + ae.element_id + "' is assigned twice",
                  {{"element", ae.element_id}});
    }
  }
  std::vector<std::string> missing;
  for (const auto* e : s.colorable_elements()) {
    if (!by_id.count(e->id)) missing.push_back(e->id);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw Error(ErrorCode::kUncoveredElement, "assignment leaves " + list + " uncolored",
                {{"elements", missing}});
  }

  ValidationReport report;
  std::array<double, 3> sums{};
  for (const auto* e : s.colorable_elements()) {
    sums[static_cast<std::size_t>(by_id.at(e->id)->role)] += e->area_fraction;
  }
  // With fewer colorable elements than roles the windows cannot all be met.
  const auto ratio_severity =
      s.colorable_elements().size() < color::kAllRoles.size() ? Severity::kWarning : Severity::kError;
  for (auto r : color::kAllRoles) {
    const auto& w = rules.window(r);
    const double sum = sums[static_cast<std::size_t>(r)];
    if (sum < w.lo - rules.window_slack - kEps || sum > w.hi + rules.window_slack + kEps) {
      report.violations.push_back({RuleCode::kRatioWindowMiss, ratio_severity,
                                   std::string(color::to_string(r)) + " covers " + pct(sum) + ", outside " +
                                       pct(w.lo) + "-" + pct(w.hi) + " +/- " + pct(rules.window_slack),
                                   std::string(color::to_string(r))});
    }
  }

  const scene::SceneElement* smallest_dominant = nullptr;
  for (const auto* e : s.colorable_elements()) {
    if (by_id.at(e->id)->role != color::Role::kDominant) continue;
    if (smallest_dominant == nullptr || e->area_fraction < smallest_dominant->area_fraction) smallest_dominant = e;
  }
  if (smallest_dominant != nullptr) {
    for (const auto* e : s.colorable_elements()) {
      if (by_id.at(e->id)->role != color::Role::kAccent) continue;
      if (e->area_fraction > smallest_dominant->area_fraction + rules.role_inversion_margin + kEps) {
        report.violations.push_back({RuleCode::kRoleAreaInversion, Severity::kError,
                                     "accent " + e->id + " (" + pct(e->area_fraction) + ") outweighs dominant " +
                                         smallest_dominant->id + " (" + pct(smallest_dominant->area_fraction) + ")",
                                     e->id});
      }
    }
  }

  for (const auto& [x, y] : s.adjacency()) {
    auto ix = by_id.find(x);
    auto iy = by_id.find(y);
    if (ix == by_id.end() || iy == by_id.end()) continue;
    const auto& ax = *ix->second;
    const auto& ay = *iy->second;
    if (ax.role == ay.role) continue;
    const double dh = contrast_hue_delta(ax.color, ay.color);
    const int db = std::abs(ax.color.blackness() - ay.color.blackness());
    if (dh < rules.min_adjacent_hue_contrast - kEps && db < rules.min_adjacent_blackness_contrast) {
      report.violations.push_back({RuleCode::kAdjacentLowContrast, Severity::kError,
                                   x + " " + color::format_ncs(ax.color) + " and " + y + " " +
                                       color::format_ncs(ay.color) + " differ by " + deg(dh) + " and " +
                                       std::to_string(db) + " blackness",
                                   x + "|" + y});
    }
  }
  return report;
}

}  // namespace chromachain::validate

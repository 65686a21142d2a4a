#include "chromachain/llm/mock.hpp"

#include "chromachain/error.hpp"
#include "chromachain/llm/output_schema.hpp"
#include "chromachain/validate/validators.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <set>

namespace chromachain::llm {

namespace {

using color::NcsColor;
using color::Role;

std::vector<std::string> strings(const nlohmann::json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  for (const auto& v : j.at(key)) out.push_back(v.get<std::string>());
  return out;
}

bool contains(const std::vector<std::string>& list, std::string_view w) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

bool any_of_words(const std::vector<std::string>& words, const std::vector<std::string>& vocab) {
  return std::any_of(words.begin(), words.end(), [&](const std::string& w) { return contains(vocab, w); });
}

std::mt19937_64 rng_for(std::uint64_t seed, int attempt) {
  return std::mt19937_64(seed ^ (static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL));
}

const nlohmann::json& need(const nlohmann::json& payload, const char* key, Stage stage) {
  if (!payload.is_object() || !payload.contains(key)) {
    throw Error(ErrorCode::kInvalidRequest,
                "mock " + std::string(to_string(stage)) + " payload needs '" + std::string(key) + "'");
  }
  return payload.at(key);
}

int count_of(const nlohmann::json& payload, int fallback) {
  if (payload.contains("count") && payload.at("count").is_number_integer()) {
    return std::clamp(payload.at("count").get<int>(), 1, 5);
  }
  return fallback;
}

/// Same hue, nuance nudged by (db, dc) and clamped back into the legal triangle.
NcsColor nudge(const NcsColor& c, int db, int dc) {
  int chroma = c.chromaticness();
  if (!c.hue().is_neutral()) chroma = std::clamp(chroma + dc, 1, std::min(99, 100 - c.blackness()));
  const int black = std::clamp(c.blackness() + db, 0, std::min(99, 100 - chroma));
  return c.with_nuance(black, chroma);
}

std::vector<NcsColor> variations_for(const NcsColor& base) {
  std::vector<NcsColor> out;
  auto add = [&](int b, int c) {
    if (b < 0 || c < 0 || b > 99 || c > 99 || b + c > 100) return;
    if (base.hue().is_neutral() != (c == 0)) return;
    auto v = base.with_nuance(b, c);
    if (v == base || std::find(out.begin(), out.end(), v) != out.end()) return;
    out.push_back(v);
  };
  add(base.blackness() + 10, base.chromaticness());
  if (!base.hue().is_neutral()) add(base.blackness(), base.chromaticness() - 10);
  add(base.blackness() + 20, base.chromaticness());
  if (out.size() > 2) out.resize(2);
  return out;
}

/// Padded, lowercase, alphanumeric-only text for phrase matching.
std::string normalized(std::string_view text) {
  std::string out = " ";
  for (char ch : text) {
    const auto u = static_cast<unsigned char>(ch);
    out += std::isalnum(u) ? static_cast<char>(std::tolower(u)) : ' ';
  }
  out += ' ';
  std::string squeezed;
  for (char ch : out) {
    if (ch == ' ' && !squeezed.empty() && squeezed.back() == ' ') continue;
    squeezed += ch;
  }
  return squeezed;
}

bool mentions(const std::string& norm, std::string phrase) {
  phrase = normalized(phrase);
  if (phrase.size() <= 2) return false;
  if (norm.find(phrase) != std::string::npos) return true;
  // Singular/plural either way.
  const std::string core = phrase.substr(1, phrase.size() - 2);
  if (core.size() > 1 && core.back() == 's' && norm.find(" " + core.substr(0, core.size() - 1) + " ") != std::string::npos) {
    return true;
  }
  return norm.find(" " + core + "s ") != std::string::npos;
}

bool names_element(const std::string& norm, const scene::SceneElement& e) {
  std::string id = e.id;
  std::replace(id.begin(), id.end(), '_', ' ');
  return mentions(norm, e.label) || mentions(norm, id);
}

std::string head_noun(const std::string& label) {
  const auto words = words_of(label);
  return words.empty() ? std::string() : words.back();
}

std::set<int> families(const scene::ColorAssignment& a) {
  std::set<int> out;
  for (const auto& e : a.elements) {
    if (!e.color.hue().is_neutral()) out.insert(color::hue_family(e.color.hue()));
  }
  return out;
}

double window_excess(const scene::ColorAssignment& a, const scene::SceneSpec& s,
                     const knowledge::CompositionRules& rules) {
  std::array<double, 3> sums{};
  for (const auto& ae : a.elements) {
    if (const auto* e = s.find(ae.element_id)) sums[static_cast<std::size_t>(ae.role)] += e->area_fraction;
  }
  double excess = 0.0;
  for (auto r : color::kAllRoles) {
    const auto& w = rules.window(r);
    const double sum = sums[static_cast<std::size_t>(r)];
    excess += std::max(0.0, (w.lo - rules.window_slack) - sum) + std::max(0.0, sum - (w.hi + rules.window_slack));
  }
  return excess;
}

double penalty(const scene::ColorAssignment& a, const scene::SceneSpec& s, const color::ColorScheme& scheme,
               const knowledge::CompositionRules& rules) {
  const auto report = validate::validate_assignment(a, s, scheme, rules);
  double errors = 0.0;
  for (const auto& v : report.violations) {
    if (v.severity == validate::Severity::kError) errors += 1.0;
  }
  return window_excess(a, s, rules) * 1000.0 + errors;
}

std::string role_list(const std::vector<Role>& roles) {
  std::string out;
  for (auto r : roles) out += (out.empty() ? "" : ", ") + std::string(color::to_string(r));
  return out;
}

}  // namespace

std::vector<std::string> words_of(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    const auto u = static_cast<unsigned char>(ch);
    if (std::isalpha(u)) {
      cur += static_cast<char>(std::tolower(u));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

MockLexicon mock_lexicon_from_json(const nlohmann::json& j) {
  MockLexicon lx;
  try {
    auto entry = [](const nlohmann::json& e) {
      MockLexicon::IdeaEntry out;
      out.keywords = strings(e, "keywords");
      out.themes = strings(e, "themes");
      if (e.contains("mood")) {
        const auto& m = e.at("mood");
        if (m.contains("tones")) out.tones = m.at("tones").get<int>();
        if (m.contains("distance")) out.distance = m.at("distance").get<int>();
        if (m.contains("heaviness")) out.heaviness = m.at("heaviness").get<int>();
      }
      return out;
    };
    const auto& idea = j.at("idea");
    for (const auto& e : idea.at("entries")) lx.idea_entries.push_back(entry(e));
    lx.idea_fallback = entry(idea.at("fallback"));
    if (!lx.idea_fallback.tones || !lx.idea_fallback.distance || !lx.idea_fallback.heaviness) {
      throw Error(ErrorCode::kSchemaViolation, "mock lexicon: idea.fallback needs a full mood");
    }
    lx.max_themes = idea.value("max_themes", std::size_t{5});

    const auto& wc = j.at("word_color");
    lx.theme_families = wc.at("theme_families").get<std::map<std::string, std::string>>();
    lx.family_tones = wc.at("family_tones").get<std::map<std::string, int>>();
    for (const auto& [k, v] : wc.at("tone_fallback").items()) lx.tone_fallback[std::stoi(k)] = v.get<std::string>();
    lx.heaviness_shift = wc.at("heaviness_shift").get<std::array<int, 3>>();
    for (const auto& [family, list] : wc.at("palettes").items()) {
      auto& out = lx.palettes[family];
      for (const auto& p : list) {
        out.push_back({p.at(0).get<NcsColor>(), p.at(1).get<NcsColor>(), p.at(2).get<NcsColor>()});
      }
    }
    lx.family_reasoning = wc.at("reasoning").get<std::map<std::string, std::string>>();
    for (int t = 0; t < 3; ++t) {
      const auto it = lx.tone_fallback.find(t);
      if (it == lx.tone_fallback.end() || !lx.palettes.count(it->second)) {
        throw Error(ErrorCode::kSchemaViolation, "mock lexicon: tone_fallback must name a palette for each tone");
      }
    }

    const auto& edit = j.at("edit");
    lx.brighter_words = strings(edit, "brighter");
    lx.darker_words = strings(edit, "darker");
    lx.more_saturated_words = strings(edit, "more_saturated");
    lx.less_saturated_words = strings(edit, "less_saturated");
    lx.edit_blackness_step = edit.value("blackness_step", 15);
    lx.edit_chromaticness_step = edit.value("chromaticness_step", 10);

    const auto& refine = j.at("refine");
    lx.furniture = strings(refine, "furniture");
    lx.furniture_words = strings(refine, "furniture_words");
    lx.dark_words = strings(refine, "dark_words");
    lx.messy_words = strings(refine, "messy_words");
    lx.refine_blackness_step = refine.value("blackness_step", 15);
    for (const auto& [word, hue] : refine.at("color_words").items()) {
      lx.color_words.insert_or_assign(word, color::parse_ncs("1040-" + hue.get<std::string>()).hue());
    }
    lx.default_chromaticness = refine.value("default_chromaticness", 40);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, std::string("mock lexicon: ") + e.what());
  }
  return lx;
}

MockLexicon load_mock_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open mock lexicon " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSchemaViolation, path.string() + ": " + e.what());
  }
  return mock_lexicon_from_json(j);
}

MockBackend::MockBackend(MockLexicon lexicon, const scene::SceneRegistry* scenes, knowledge::CompositionRules rules)
    : lexicon_(std::move(lexicon)), scenes_(scenes), rules_(std::move(rules)) {}

std::string MockBackend::complete(const CompletionRequest& request) {
  return generate(request.stage, request.payload, request.seed, request.attempt).dump();
}

nlohmann::json MockBackend::generate(Stage stage, const nlohmann::json& payload, std::uint64_t seed,
                                     int attempt) const {
  switch (stage) {
    case Stage::kIdeaPrompting: return idea(payload, seed, attempt);
    case Stage::kWordColor: return word_color(payload, seed, attempt);
    case Stage::kColoring: return coloring(payload);
    case Stage::kSchemeCustomization: return customize(payload);
    case Stage::kResultRefinement: return refine(payload);
  }
  throw Error(ErrorCode::kUnknownStage, "mock backend has no rule for this stage");
}

nlohmann::json MockBackend::idea(const nlohmann::json& payload, std::uint64_t seed, int attempt) const {
  const auto intent = need(payload, "intent", Stage::kIdeaPrompting).get<std::string>();
  std::vector<std::string> themes;
  std::optional<int> tones, distance, heaviness;
  for (const auto& w : words_of(intent)) {
    for (const auto& entry : lexicon_.idea_entries) {
      if (!contains(entry.keywords, w)) continue;
      for (const auto& t : entry.themes) {
        if (!contains(themes, t)) themes.push_back(t);
      }
      if (!tones) tones = entry.tones;
      if (!distance) distance = entry.distance;
      if (!heaviness) heaviness = entry.heaviness;
      break;
    }
  }
  if (themes.empty()) themes = lexicon_.idea_fallback.themes;
  if (themes.size() > lexicon_.max_themes) themes.resize(lexicon_.max_themes);
  color::ColorMood base;
  base.tones = static_cast<color::Tone>(tones.value_or(*lexicon_.idea_fallback.tones));
  base.distance = static_cast<color::Distance>(distance.value_or(*lexicon_.idea_fallback.distance));
  base.heaviness = static_cast<color::Heaviness>(heaviness.value_or(*lexicon_.idea_fallback.heaviness));

  auto rng = rng_for(seed, attempt);
  const std::size_t offset = static_cast<std::size_t>(rng() % themes.size());
  const int count = count_of(payload, 3);
  std::vector<color::DesignConcepts> out;
  for (int k = 0; k < count; ++k) {
    color::DesignConcepts c;
    c.themes = themes;
    std::rotate(c.themes.begin(), c.themes.begin() + static_cast<std::ptrdiff_t>((offset + k) % themes.size()),
                c.themes.end());
    c.mood = base;
    // Later candidates explore one neighbouring degree each.
    if (k == 1) {
      c.mood.heaviness = base.heaviness == color::Heaviness::kMedium ? color::Heaviness::kLight : color::Heaviness::kMedium;
    } else if (k >= 2) {
      c.mood.distance = base.distance == color::Distance::kMedium ? color::Distance::kFar : color::Distance::kMedium;
    }
    out.push_back(std::move(c));
  }
  return concepts_output(out);
}

nlohmann::json MockBackend::word_color(const nlohmann::json& payload, std::uint64_t seed, int attempt) const {
  const auto concepts = need(payload, "concepts", Stage::kWordColor).get<color::DesignConcepts>();
  const int tones = static_cast<int>(concepts.mood.tones);
  std::string family;
  for (const auto& t : concepts.themes) {
    auto it = lexicon_.theme_families.find(t);
    if (it == lexicon_.theme_families.end()) continue;
    auto ft = lexicon_.family_tones.find(it->second);
    if (ft != lexicon_.family_tones.end() && ft->second == tones && lexicon_.palettes.count(it->second)) {
      family = it->second;
      break;
    }
  }
  if (family.empty()) family = lexicon_.tone_fallback.at(tones);
  const auto& palette = lexicon_.palettes.at(family);
  const int shift = lexicon_.heaviness_shift[static_cast<std::size_t>(concepts.mood.heaviness)];

  auto rng = rng_for(seed, attempt);
  const std::size_t offset = static_cast<std::size_t>(rng() % palette.size());
  const int count = count_of(payload, 4);
  std::vector<color::ColorScheme> out;
  for (int k = 0; k < count; ++k) {
    const auto& tpl = palette[(offset + static_cast<std::size_t>(k)) % palette.size()];
    color::ColorScheme s;
    for (auto r : color::kAllRoles) {
      auto c = nudge(tpl[static_cast<std::size_t>(r)], shift, 0);
      if (r == Role::kDominant && c.blackness() > rules_.dominant_max_blackness) {
        c = c.with_nuance(rules_.dominant_max_blackness, c.chromaticness());
      }
      s.at(r) = c;
      s.variations_of(r) = variations_for(c);
    }
    auto it = lexicon_.family_reasoning.find(family);
    s.reasoning = (it == lexicon_.family_reasoning.end() ? std::string() : it->second + " ") + "Dominant " +
                  color::format_ncs(s.at(Role::kDominant)) + " for walls and large surfaces, secondary " +
                  color::format_ncs(s.at(Role::kSecondary)) + ", accent " + color::format_ncs(s.at(Role::kAccent)) +
                  ".";
    out.push_back(std::move(s));
  }
  return schemes_output(out);
}

scene::ColorAssignment mock_assign(const scene::SceneSpec& s, const color::ColorScheme& scheme,
                                   const knowledge::CompositionRules& rules,
                                   const std::map<std::string, NcsColor>& pinned) {
  auto elements = s.colorable_elements();
  std::stable_sort(elements.begin(), elements.end(),
                   [](const auto* a, const auto* b) { return a->area_fraction > b->area_fraction; });
  double total = 0.0;
  for (const auto* e : elements) total += e->area_fraction;
  auto color_for = [&](const scene::SceneElement& e, Role r) {
    auto it = pinned.find(e.id);
    return it != pinned.end() ? it->second : scheme.at(r);
  };
  auto idx = [](Role r) { return static_cast<std::size_t>(r); };

  // Cascade: fill dominant to its lower bound, then secondary, then accent;
  // leftovers go to the smallest role that still has room.
  std::map<std::string, std::pair<Role, NcsColor>> chosen;
  std::array<double, 3> sums{};
  for (const auto* e : elements) {
    const double share = total > 0.0 ? e->area_fraction / total : 0.0;
    std::vector<Role> order;
    std::optional<Role> filling;
    for (auto r : color::kAllRoles) {
      if (sums[idx(r)] < rules.window(r).lo - 1e-9) {
        filling = r;
        break;
      }
    }
    if (filling) {
      order.push_back(*filling);
      for (auto r : color::kAllRoles) {
        if (r > *filling) order.push_back(r);
      }
      for (auto r : color::kAllRoles) {
        if (r < *filling) order.push_back(r);
      }
    } else {
      order = {Role::kAccent, Role::kSecondary, Role::kDominant};
    }
    std::stable_partition(order.begin(), order.end(),
                          [&](Role r) { return sums[idx(r)] + share <= rules.window(r).hi + 1e-9; });
    Role pick = order[0];
    for (auto r : order) {
      const auto c = color_for(*e, r);
      bool clash = false;
      for (const auto& [nid, assigned] : chosen) {
        if (assigned.first == r || !s.adjacent(e->id, nid)) continue;
        const double dh = validate::contrast_hue_delta(c, assigned.second);
        const int db = std::abs(c.blackness() - assigned.second.blackness());
        if (dh < rules.min_adjacent_hue_contrast && db < rules.min_adjacent_blackness_contrast) clash = true;
      }
      if (!clash) {
        pick = r;
        break;
      }
    }
    chosen[e->id] = {pick, color_for(*e, pick)};
    sums[idx(pick)] += share;
  }

  scene::ColorAssignment a;
  for (const auto* e : s.colorable_elements()) {
    const auto& [r, c] = chosen.at(e->id);
    a.elements.push_back({e->id, r, c});
  }

  // Repair: best single-element role change, repeated while it helps.
  double current = penalty(a, s, scheme, rules);
  for (int iter = 0; iter < 200 && current > 0.0; ++iter) {
    double best = current;
    std::optional<std::pair<std::size_t, Role>> move;
    for (std::size_t i = 0; i < a.elements.size(); ++i) {
      const auto* e = s.find(a.elements[i].element_id);
      for (auto r : color::kAllRoles) {
        if (r == a.elements[i].role) continue;
        auto trial = a;
        trial.elements[i].role = r;
        trial.elements[i].color = color_for(*e, r);
        const double p = penalty(trial, s, scheme, rules);
        if (p < best - 1e-12) {
          best = p;
          move = std::make_pair(i, r);
        }
      }
    }
    if (!move) break;
    auto& target = a.elements[move->first];
    target.role = move->second;
    target.color = color_for(*s.find(target.element_id), move->second);
    current = best;
  }

  std::array<std::vector<std::string>, 3> by_role;
  for (const auto* e : elements) by_role[static_cast<std::size_t>(a.find(e->id)->role)].push_back(e->label);
  auto summary = [&](Role r) {
    const auto& labels = by_role[static_cast<std::size_t>(r)];
    std::string out;
    for (std::size_t i = 0; i < labels.size() && i < 3; ++i) out += (i ? ", " : "") + labels[i];
    return out.empty() ? std::string("no elements") : out;
  };
  a.reasoning = "Largest surfaces (" + summary(Role::kDominant) + ") take the dominant " +
                color::format_ncs(scheme.at(Role::kDominant)) + "; " + summary(Role::kSecondary) +
                " carry the secondary " + color::format_ncs(scheme.at(Role::kSecondary)) + "; small items (" +
                summary(Role::kAccent) + ") get the accent " + color::format_ncs(scheme.at(Role::kAccent)) + ".";
  return a;
}

nlohmann::json MockBackend::coloring(const nlohmann::json& payload) const {
  const auto scheme = need(payload, "scheme", Stage::kColoring).get<color::ColorScheme>();
  const auto scene_id = need(payload, "scene_id", Stage::kColoring).get<std::string>();
  if (scenes_ == nullptr) throw Error(ErrorCode::kUnknownScene, "mock backend has no scenes loaded");
  const auto& s = scenes_->get(scene_id);
  std::map<std::string, NcsColor> pinned;
  if (payload.contains("pinned") && payload.at("pinned").is_object()) {
    pinned = payload.at("pinned").get<std::map<std::string, NcsColor>>();
  }
  return assignment_output(mock_assign(s, scheme, rules_, pinned));
}

nlohmann::json MockBackend::customize(const nlohmann::json& payload) const {
  auto scheme = need(payload, "scheme", Stage::kSchemeCustomization).get<color::ColorScheme>();
  const auto instruction = need(payload, "instruction", Stage::kSchemeCustomization).get<std::string>();
  std::set<Role> locked;
  if (payload.contains("locked_roles")) {
    for (const auto& r : payload.at("locked_roles")) {
      if (auto role = color::role_from_string(r.get<std::string>())) locked.insert(*role);
    }
  }
  const auto words = words_of(instruction);
  std::vector<Role> targets;
  for (auto r : color::kAllRoles) {
    if (contains(words, color::to_string(r))) targets.push_back(r);
  }
  if (targets.empty()) targets.assign(color::kAllRoles.begin(), color::kAllRoles.end());

  int db = 0;
  int dc = 0;
  if (any_of_words(words, lexicon_.brighter_words)) db -= lexicon_.edit_blackness_step;
  if (any_of_words(words, lexicon_.darker_words)) db += lexicon_.edit_blackness_step;
  const bool less = any_of_words(words, lexicon_.less_saturated_words) || contains(words, "less");
  if (less) {
    dc -= lexicon_.edit_chromaticness_step;
  } else if (any_of_words(words, lexicon_.more_saturated_words)) {
    dc += lexicon_.edit_chromaticness_step;
  }
  if (db == 0 && dc == 0) return scheme_output(scheme);

  std::vector<Role> changed;
  for (auto r : targets) {
    if (locked.count(r)) continue;
    scheme.at(r) = nudge(scheme.at(r), db, dc);
    for (auto& v : scheme.variations_of(r)) v = nudge(v, db, dc);
    changed.push_back(r);
  }
  scheme.reasoning = "Adjusted " + role_list(changed) + " for \"" + instruction + "\"; hues kept as they were.";
  return scheme_output(scheme);
}

nlohmann::json MockBackend::refine(const nlohmann::json& payload) const {
  auto a = need(payload, "assignment", Stage::kResultRefinement).get<scene::ColorAssignment>();
  const auto scheme = need(payload, "scheme", Stage::kResultRefinement).get<color::ColorScheme>();
  const auto instruction = need(payload, "instruction", Stage::kResultRefinement).get<std::string>();
  const auto scene_id = need(payload, "scene_id", Stage::kResultRefinement).get<std::string>();
  if (scenes_ == nullptr) throw Error(ErrorCode::kUnknownScene, "mock backend has no scenes loaded");
  const auto& s = scenes_->get(scene_id);
  std::set<std::string> pinned;
  if (payload.contains("pinned") && payload.at("pinned").is_object()) {
    for (const auto& [id, _] : payload.at("pinned").items()) pinned.insert(id);
  }
  const auto words = words_of(instruction);
  const auto norm = normalized(instruction);
  std::vector<std::string> notes;

  if (any_of_words(words, lexicon_.furniture_words) && any_of_words(words, lexicon_.dark_words)) {
    for (auto& ae : a.elements) {
      const auto* e = s.find(ae.element_id);
      if (e == nullptr || pinned.count(ae.element_id) || !contains(lexicon_.furniture, head_noun(e->label))) continue;
      ae.color = nudge(ae.color, -lexicon_.refine_blackness_step, 0);
    }
    notes.push_back("lightened the furniture");
  }

  if (any_of_words(words, lexicon_.messy_words)) {
    const auto present = families(a);
    for (auto& ae : a.elements) {
      if (pinned.count(ae.element_id)) continue;
      const auto& base = scheme.at(ae.role);
      if (base.hue().is_neutral() || present.count(color::hue_family(base.hue()))) ae.color = base;
    }
    notes.push_back("reset elements to their role colors");
  }

  for (const auto& w : words) {
    auto hue = lexicon_.color_words.find(w);
    if (hue == lexicon_.color_words.end()) continue;
    for (auto& ae : a.elements) {
      const auto* e = s.find(ae.element_id);
      if (e == nullptr || pinned.count(ae.element_id) || !names_element(norm, *e)) continue;
      const int b = ae.color.blackness();
      const int c = ae.color.chromaticness() > 0 ? ae.color.chromaticness()
                                                 : std::min(lexicon_.default_chromaticness, 100 - b);
      ae.color = NcsColor(b, c, hue->second);
      notes.push_back(e->label + " to " + w);
    }
  }

  if (!notes.empty()) {
    std::string joined;
    for (const auto& n : notes) joined += (joined.empty() ? "" : "; ") + n;
    a.reasoning = "Revised for \"" + instruction + "\": " + joined + ".";
  }
  return assignment_output(a);
}

}  // namespace chromachain::llm

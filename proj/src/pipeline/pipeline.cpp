#include "chromachain/pipeline/pipeline.hpp"

#include "chromachain/error.hpp"
#include "chromachain/llm/output_schema.hpp"

#include <algorithm>
#include <chrono>
#include <cctype>
#include <cstdio>
#include <ctime>

namespace chromachain::pipeline {

using color::Role;
using nlohmann::json;

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const auto t = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[48];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

[[noreturn]] void chain_error(const std::string& what) { throw Error(ErrorCode::kChainIntegrity, what); }

void require_concepts(const Session& s) {
  if (!s.concepts) chain_error("no design concepts yet; run stage 1 first");
}

void require_scheme(const Session& s) {
  if (!s.scheme) chain_error("no color scheme yet; run stage 2 first");
  if (s.schemes_stale) chain_error("color schemes are stale after a concept change; rerun stage 2");
}

void require_assignment(const Session& s) {
  require_scheme(s);
  if (!s.assignment) chain_error("no colored scene yet; run stage 3 first");
  if (s.assignment_stale) chain_error("the colored scene is stale after a scheme change; rerun stage 3");
}

void invalidate_after_concepts(Session& s) {
  if (s.scheme || !s.scheme_candidates.empty()) s.schemes_stale = true;
  if (s.assignment) s.assignment_stale = true;
}

void invalidate_after_scheme(Session& s) {
  if (s.assignment) s.assignment_stale = true;
}

int check_degree(int v, const char* name) {
  if (v < 0 || v > 2) {
    throw Error(ErrorCode::kInvalidDegree, std::string(name) + " must be 0, 1 or 2, got " + std::to_string(v));
  }
  return v;
}

std::size_t index_of(const json& p, std::size_t size, const char* what) {
  if (!p.contains("index") || !p.at("index").is_number_integer() || p.at("index").get<long long>() < 0 ||
      static_cast<std::size_t>(p.at("index").get<long long>()) >= size) {
    throw Error(ErrorCode::kInvalidSelection, std::string("no ") + what + " at that index",
                {{"available", size}});
  }
  return static_cast<std::size_t>(p.at("index").get<long long>());
}

std::string required_string(const json& p, const char* key) {
  if (!p.is_object() || !p.contains(key) || !p.at(key).is_string()) {
    throw Error(ErrorCode::kInvalidRequest, std::string("missing string field '") + key + "'");
  }
  return p.at(key).get<std::string>();
}

bool blank(const std::string& text) {
  return std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isspace(ch) != 0; });
}

json pins_json(const Session& s) {
  json j = json::object();
  for (const auto& [id, c] : s.pins) j[id] = c;
  return j;
}

void apply_pins(const Session& s, scene::ColorAssignment& a) {
  for (const auto& [id, c] : s.pins) {
    if (auto* ae = a.find(id)) ae->color = c;
  }
}

void apply_locks(const Session& s, color::ColorScheme& scheme) {
  for (const auto& [role, lock] : s.locks) {
    scheme.at(role) = lock.color;
    scheme.variations_of(role) = lock.variations;
  }
}

const scene::SceneElement& colorable_element(const scene::SceneSpec& sc, const std::string& id) {
  const auto* e = sc.find(id);
  if (e == nullptr || !e->colorable) {
    throw Error(ErrorCode::kUnknownElement, "scene " + sc.id + " has no colorable element '" + id + "'",
                {{"element", id}, {"scene", sc.id}});
  }
  return *e;
}

std::size_t error_count(const validate::ValidationReport& r) {
  return static_cast<std::size_t>(std::count_if(r.violations.begin(), r.violations.end(), [](const auto& v) {
    return v.severity == validate::Severity::kError;
  }));
}

}  // namespace

// ---- edits JSON ----------------------------------------------------------

void to_json(json& j, const ConceptEdits& e) {
  j = json::object();
  if (!e.remove_themes.empty()) j["remove_themes"] = e.remove_themes;
  if (!e.add_themes.empty()) j["add_themes"] = e.add_themes;
  json mood = json::object();
  if (e.tones) mood["tones"] = *e.tones;
  if (e.distance) mood["distance"] = *e.distance;
  if (e.heaviness) mood["heaviness"] = *e.heaviness;
  if (!mood.empty()) j["mood"] = std::move(mood);
}

void from_json(const json& j, ConceptEdits& e) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidRequest, "concept edits: expected object");
  try {
    e = ConceptEdits{};
    e.remove_themes = j.value("remove_themes", std::vector<std::string>{});
    e.add_themes = j.value("add_themes", std::vector<std::string>{});
    if (j.contains("mood")) {
      const auto& m = j.at("mood");
      if (m.contains("tones")) e.tones = m.at("tones").get<int>();
      if (m.contains("distance")) e.distance = m.at("distance").get<int>();
      if (m.contains("heaviness")) e.heaviness = m.at("heaviness").get<int>();
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kInvalidRequest, std::string("concept edits: ") + ex.what());
  }
}

namespace {

json roles_json(const std::set<Role>& roles) {
  json j = json::array();
  for (auto r : roles) j.push_back(color::to_string(r));
  return j;
}

std::set<Role> roles_from(const json& j, const char* field) {
  std::set<Role> out;
  if (!j.is_array()) throw Error(ErrorCode::kInvalidRequest, std::string(field) + ": expected array of roles");
  for (const auto& v : j) {
    const auto role = v.is_string() ? color::role_from_string(v.get<std::string>()) : std::nullopt;
    if (!role) throw Error(ErrorCode::kInvalidRequest, std::string(field) + ": unknown role " + v.dump());
    out.insert(*role);
  }
  return out;
}

}  // namespace

void to_json(json& j, const SchemeEdits& e) {
  j = json::object();
  if (!e.colors.empty()) {
    json colors = json::object();
    for (const auto& [r, c] : e.colors) colors[std::string(color::to_string(r))] = c;
    j["colors"] = std::move(colors);
  }
  if (!e.unlock.empty()) j["unlock"] = roles_json(e.unlock);
  if (!e.lock.empty()) j["lock"] = roles_json(e.lock);
  if (e.instruction) j["instruction"] = *e.instruction;
}

void from_json(const json& j, SchemeEdits& e) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidRequest, "scheme edits: expected object");
  e = SchemeEdits{};
  if (j.contains("colors")) {
    if (!j.at("colors").is_object()) throw Error(ErrorCode::kInvalidRequest, "colors: expected object keyed by role");
    for (const auto& [name, c] : j.at("colors").items()) {
      const auto role = color::role_from_string(name);
      if (!role) throw Error(ErrorCode::kInvalidRequest, "colors: unknown role " + name);
      if (!c.is_string()) throw Error(ErrorCode::kInvalidRequest, "colors." + name + ": expected NCS notation");
      e.colors.insert_or_assign(*role, color::parse_ncs(c.get<std::string>()));
    }
  }
  if (j.contains("unlock")) e.unlock = roles_from(j.at("unlock"), "unlock");
  if (j.contains("lock")) e.lock = roles_from(j.at("lock"), "lock");
  if (j.contains("instruction") && !j.at("instruction").is_null()) {
    if (!j.at("instruction").is_string()) throw Error(ErrorCode::kInvalidRequest, "instruction: expected text");
    e.instruction = j.at("instruction").get<std::string>();
  }
}

// ---- pipeline ------------------------------------------------------------

Pipeline::Pipeline(const Resources& resources, llm::ChatBackend& backend, llm::BackendConfig cfg,
                   PipelineOptions options)
    : resources_(resources), backend_(backend), cfg_(std::move(cfg)), options_(options) {
  llm::check_config(cfg_);
  if (options_.concept_count < 1 || options_.scheme_count < 1) {
    throw Error(ErrorCode::kInvalidRequest, "candidate counts must be >= 1");
  }
}

Session Pipeline::new_session(std::string id, std::uint64_t seed) const {
  Session s;
  s.id = std::move(id);
  s.seed = seed;
  return s;
}

llm::CompletionResult Pipeline::call(const Session& s, Stage stage, const json& bindings, const json& payload,
                                     int attempt) const {
  const auto rendered =
      prompt::render_prompt(resources_.templates.at(stage), resources_.kb, bindings, options_.token_budget);
  auto cfg = cfg_;
  // Distinct per logged operation, so replay sees the same sequence.
  cfg.seed = s.seed + s.events.size();
  return llm::complete_structured(backend_, rendered, payload, cfg, attempt, options_.token_budget);
}

json Pipeline::apply(Session& s, const std::string& op, const json& payload) {
  Session work = s;
  json out = dispatch(work, op, payload);
  work.events.push_back({utc_now(), op, payload});
  s = std::move(work);
  return out;
}

json Pipeline::dispatch(Session& s, const std::string& op, const json& p) {
  if (op == ops::kStage1) return do_stage1(s, p);
  if (op == ops::kSelectConcepts) return do_select_concepts(s, p);
  if (op == ops::kCustomizeConcepts) return do_customize_concepts(s, p);
  if (op == ops::kStage2) return do_stage2(s, p);
  if (op == ops::kChooseScheme) return do_choose_scheme(s, p);
  if (op == ops::kCustomizeScheme) return do_customize_scheme(s, p);
  if (op == ops::kStage3) return do_stage3(s, p);
  if (op == ops::kRefine) return do_refine(s, p);
  if (op == ops::kPin) return do_pin(s, p);
  if (op == ops::kUnpin) return do_unpin(s, p);
  throw Error(ErrorCode::kInvalidRequest, "unknown operation '" + op + "'");
}

Session Pipeline::replay(const Session& s) {
  Session out = new_session(s.id, s.seed);
  for (const auto& e : s.events) apply(out, e.op, e.payload);
  return out;
}

// stage 1 -----------------------------------------------------------------

json Pipeline::do_stage1(Session& s, const json& p) {
  const auto intent = required_string(p, "intent");
  if (blank(intent)) throw Error(ErrorCode::kEmptyIntent, "the design intent is empty");
  const json input = {{"intent", intent}, {"count", options_.concept_count}};
  const auto result = call(s, Stage::kIdeaPrompting, input, input, 0);
  auto candidates = llm::concepts_from_output(*result.parsed_payload);
  for (auto& c : candidates) c.source_intent = intent;
  if (candidates.size() > static_cast<std::size_t>(options_.concept_count)) {
    candidates.resize(static_cast<std::size_t>(options_.concept_count));
  }
  s.intents.push_back(intent);
  s.concept_candidates = candidates;
  s.concepts = candidates.front();
  invalidate_after_concepts(s);
  return candidates;
}

json Pipeline::do_select_concepts(Session& s, const json& p) {
  if (s.concept_candidates.empty()) chain_error("no concept candidates yet; run stage 1 first");
  const auto i = index_of(p, s.concept_candidates.size(), "concept candidate");
  s.concepts = s.concept_candidates[i];
  invalidate_after_concepts(s);
  return *s.concepts;
}

json Pipeline::do_customize_concepts(Session& s, const json& p) {
  require_concepts(s);
  const auto edits = p.get<ConceptEdits>();
  auto c = *s.concepts;
  for (const auto& t : edits.remove_themes) {
    auto it = std::find(c.themes.begin(), c.themes.end(), t);
    if (it == c.themes.end()) throw Error(ErrorCode::kUnknownTheme, "no theme '" + t + "' to remove", {{"theme", t}});
    c.themes.erase(it);
  }
  for (const auto& t : edits.add_themes) {
    if (std::find(c.themes.begin(), c.themes.end(), t) == c.themes.end()) c.themes.push_back(t);
  }
  if (edits.tones) c.mood.tones = static_cast<color::Tone>(check_degree(*edits.tones, "tones"));
  if (edits.distance) c.mood.distance = static_cast<color::Distance>(check_degree(*edits.distance, "distance"));
  if (edits.heaviness) c.mood.heaviness = static_cast<color::Heaviness>(check_degree(*edits.heaviness, "heaviness"));
  color::check_concepts(c);
  if (c != *s.concepts) {
    s.concepts = c;
    invalidate_after_concepts(s);
  }
  return c;
}

// stage 2 -----------------------------------------------------------------

json Pipeline::do_stage2(Session& s, const json&) {
  require_concepts(s);
  const json input = {{"concepts", *s.concepts}, {"count", options_.scheme_count}};
  std::vector<std::pair<color::ColorScheme, validate::ValidationReport>> passing, failing;
  for (int attempt = 0; attempt <= cfg_.max_retries && passing.empty(); ++attempt) {
    const auto result = call(s, Stage::kWordColor, input, input, attempt);
    for (auto scheme : llm::schemes_from_output(*result.parsed_payload)) {
      apply_locks(s, scheme);
      auto report = validate::validate_scheme(scheme, *s.concepts, resources_.kb.rules, nullptr,
                                              resources_.kb.mood_thresholds);
      (report.passed() ? passing : failing).emplace_back(std::move(scheme), std::move(report));
    }
  }
  if (passing.empty()) {
    std::stable_sort(failing.begin(), failing.end(),
                     [](const auto& a, const auto& b) { return error_count(a.second) < error_count(b.second); });
    json details = {{"candidates", json::array()}, {"reports", json::array()}};
    for (std::size_t i = 0; i < failing.size() && i < static_cast<std::size_t>(options_.scheme_count); ++i) {
      details["candidates"].push_back(failing[i].first);
      details["reports"].push_back(failing[i].second);
    }
    throw Error(ErrorCode::kNoValidCandidate,
                "no color scheme passed validation after " + std::to_string(cfg_.max_retries + 1) + " attempts",
                std::move(details));
  }
  if (passing.size() > static_cast<std::size_t>(options_.scheme_count)) {
    passing.resize(static_cast<std::size_t>(options_.scheme_count));
  }
  s.scheme_candidates.clear();
  s.scheme_reports.clear();
  for (auto& [scheme, report] : passing) {
    s.scheme_candidates.push_back(scheme);
    s.scheme_reports.push_back(report);
  }
  s.scheme = s.scheme_candidates.front();
  s.scheme_report = s.scheme_reports.front();
  s.schemes_stale = false;
  invalidate_after_scheme(s);
  return s.scheme_candidates;
}

json Pipeline::do_choose_scheme(Session& s, const json& p) {
  require_scheme(s);
  const auto i = index_of(p, s.scheme_candidates.size(), "scheme candidate");
  // Candidates generated before a lock was taken still get the locked colors.
  auto next = s.scheme_candidates[i];
  apply_locks(s, next);
  auto report = next == s.scheme_candidates[i]
                    ? s.scheme_reports[i]
                    : validate::validate_scheme(next, *s.concepts, resources_.kb.rules, nullptr,
                                                resources_.kb.mood_thresholds);
  if (!report.passed()) {
    throw Error(ErrorCode::kValidationFailed, "that candidate breaks the design rules with the locked colors",
                {{"report", report}, {"scheme", next}});
  }
  if (next != *s.scheme) {
    s.scheme = next;
    s.scheme_report = std::move(report);
    invalidate_after_scheme(s);
  }
  return *s.scheme;
}

json Pipeline::do_customize_scheme(Session& s, const json& p) {
  require_scheme(s);
  const auto edits = p.get<SchemeEdits>();
  const auto before = *s.scheme;
  auto next = before;

  for (auto r : edits.unlock) s.locks.erase(r);
  for (const auto& [r, c] : edits.colors) {
    if (s.locks.count(r)) {
      throw Error(ErrorCode::kLockConflict, "the " + std::string(color::to_string(r)) + " color is locked",
                  {{"roles", {color::to_string(r)}}});
    }
    next.at(r) = c;
    next.variations_of(r).clear();
  }
  for (auto r : edits.lock) s.locks.insert_or_assign(r, RoleLock{next.at(r), next.variations_of(r)});

  const color::ColorScheme* previous = nullptr;
  const auto before_instruction = next;
  if (edits.instruction && !blank(*edits.instruction)) {
    const auto words = llm::words_of(*edits.instruction);
    std::set<Role> named_locked;
    for (const auto& [r, _] : s.locks) {
      if (std::find(words.begin(), words.end(), color::to_string(r)) != words.end()) named_locked.insert(r);
    }
    if (!named_locked.empty() || s.locks.size() == color::kAllRoles.size()) {
      throw Error(ErrorCode::kLockConflict, "the instruction asks to change a locked color",
                  {{"roles", roles_json(named_locked.empty() ? std::set<Role>(color::kAllRoles.begin(),
                                                                               color::kAllRoles.end())
                                                             : named_locked)}});
    }
    json locked = json::array();
    for (const auto& [r, _] : s.locks) locked.push_back(color::to_string(r));
    const json input = {{"scheme", next}, {"locked_roles", locked}, {"instruction", *edits.instruction}};
    const auto result = call(s, Stage::kSchemeCustomization, input, input, 0);
    next = llm::scheme_from_output(*result.parsed_payload);
    apply_locks(s, next);
    previous = &before_instruction;
  }

  auto report = validate::validate_scheme(next, *s.concepts, resources_.kb.rules, previous,
                                          resources_.kb.mood_thresholds);
  if (!report.passed()) {
    throw Error(ErrorCode::kValidationFailed, "the customized scheme breaks the design rules",
                {{"report", report}, {"scheme", next}});
  }
  s.scheme = next;
  s.scheme_report = std::move(report);
  if (next != before) invalidate_after_scheme(s);
  return next;
}

// stage 3 -----------------------------------------------------------------

json Pipeline::do_stage3(Session& s, const json& p) {
  const auto scene_id = required_string(p, "scene_id");
  const auto& sc = resources_.scenes.get(scene_id);
  require_scheme(s);
  if (s.scene_id && *s.scene_id != scene_id) s.pins.clear();

  const json bindings = {{"scheme", *s.scheme}, {"scene", scene::describe_scene(sc)}, {"scene_id", scene_id}};
  const json payload = {{"scheme", *s.scheme}, {"scene_id", scene_id}, {"pinned", pins_json(s)}};
  json reports = json::array();
  for (int attempt = 0; attempt <= cfg_.max_retries; ++attempt) {
    const auto result = call(s, Stage::kColoring, bindings, payload, attempt);
    auto a = llm::assignment_from_output(*result.parsed_payload);
    apply_pins(s, a);
    try {
      auto report = validate::validate_assignment(a, sc, *s.scheme, resources_.kb.rules);
      if (report.passed()) {
        s.scene_id = scene_id;
        s.assignment = std::move(a);
        s.assignment_report = std::move(report);
        s.assignment_stale = false;
        return *s.assignment;
      }
      reports.push_back(report);
    } catch (const Error& e) {
      reports.push_back({{"verdict", "fail"}, {"error", to_string(e.code())}, {"message", e.what()}});
    }
  }
  throw Error(ErrorCode::kNoValidAssignment,
              "no assignment for scene " + scene_id + " passed validation after " +
                  std::to_string(cfg_.max_retries + 1) + " attempts",
              {{"reports", std::move(reports)}});
}

json Pipeline::do_refine(Session& s, const json& p) {
  require_assignment(s);
  const auto& sc = resources_.scenes.get(*s.scene_id);
  auto next = *s.assignment;

  if (p.contains("override")) {
    const auto& o = p.at("override");
    const auto id = required_string(o, "element_id");
    colorable_element(sc, id);
    const auto c = color::parse_ncs(required_string(o, "color"));
    auto* ae = next.find(id);
    if (ae == nullptr) throw Error(ErrorCode::kUnknownElement, "element '" + id + "' is not in the assignment");
    ae->color = c;
    if (o.contains("role") && !o.at("role").is_null()) {
      const auto role = color::role_from_string(required_string(o, "role"));
      if (!role) throw Error(ErrorCode::kInvalidRequest, "unknown role " + o.at("role").dump());
      ae->role = *role;
    }
    if (s.pins.count(id)) s.pins.insert_or_assign(id, c);
  } else {
    const auto instruction = required_string(p, "instruction");
    if (blank(instruction)) throw Error(ErrorCode::kEmptyIntent, "the refinement instruction is empty");
    const json bindings = {{"scheme", *s.scheme},       {"assignment", next},
                           {"pinned", pins_json(s)},    {"scene", scene::describe_scene(sc)},
                           {"instruction", instruction}};
    const json payload = {{"assignment", next},        {"scheme", *s.scheme}, {"instruction", instruction},
                          {"scene_id", *s.scene_id},   {"pinned", pins_json(s)}};
    const auto result = call(s, Stage::kResultRefinement, bindings, payload, 0);
    next = llm::assignment_from_output(*result.parsed_payload);
    apply_pins(s, next);
  }

  auto report = validate::validate_assignment(next, sc, *s.scheme, resources_.kb.rules);
  if (!report.passed()) {
    throw Error(ErrorCode::kValidationFailed, "the refined result breaks the design rules",
                {{"report", report}, {"assignment", next}});
  }
  s.assignment = std::move(next);
  s.assignment_report = std::move(report);
  return *s.assignment;
}

json Pipeline::do_pin(Session& s, const json& p) {
  require_assignment(s);
  const auto& sc = resources_.scenes.get(*s.scene_id);
  const auto id = required_string(p, "element_id");
  colorable_element(sc, id);
  const auto c = color::parse_ncs(required_string(p, "color"));
  s.pins.insert_or_assign(id, c);
  auto next = *s.assignment;
  apply_pins(s, next);
  auto report = validate::validate_assignment(next, sc, *s.scheme, resources_.kb.rules);
  if (!report.passed()) {
    throw Error(ErrorCode::kValidationFailed, "pinning " + id + " breaks the design rules",
                {{"report", report}, {"assignment", next}});
  }
  s.assignment = std::move(next);
  s.assignment_report = std::move(report);
  return *s.assignment;
}

json Pipeline::do_unpin(Session& s, const json& p) {
  const auto id = required_string(p, "element_id");
  if (s.pins.erase(id) == 0) {
    throw Error(ErrorCode::kUnknownElement, "element '" + id + "' is not pinned", {{"element", id}});
  }
  return pins_json(s);
}

// typed wrappers ------------------------------------------------------------

std::vector<color::DesignConcepts> Pipeline::stage1_concepts(Session& s, const std::string& intent) {
  return apply(s, ops::kStage1, {{"intent", intent}}).get<std::vector<color::DesignConcepts>>();
}

color::DesignConcepts Pipeline::select_concepts(Session& s, std::size_t index) {
  return apply(s, ops::kSelectConcepts, {{"index", index}}).get<color::DesignConcepts>();
}

color::DesignConcepts Pipeline::customize_concepts(Session& s, const ConceptEdits& edits) {
  return apply(s, ops::kCustomizeConcepts, edits).get<color::DesignConcepts>();
}

std::vector<color::ColorScheme> Pipeline::stage2_schemes(Session& s) {
  return apply(s, ops::kStage2, json::object()).get<std::vector<color::ColorScheme>>();
}

color::ColorScheme Pipeline::choose_scheme(Session& s, std::size_t index) {
  return apply(s, ops::kChooseScheme, {{"index", index}}).get<color::ColorScheme>();
}

color::ColorScheme Pipeline::customize_scheme(Session& s, const SchemeEdits& edits) {
  return apply(s, ops::kCustomizeScheme, edits).get<color::ColorScheme>();
}

scene::ColorAssignment Pipeline::stage3_assign(Session& s, const std::string& scene_id) {
  return apply(s, ops::kStage3, {{"scene_id", scene_id}}).get<scene::ColorAssignment>();
}

scene::ColorAssignment Pipeline::refine_result(Session& s, const std::string& instruction) {
  return apply(s, ops::kRefine, {{"instruction", instruction}}).get<scene::ColorAssignment>();
}

scene::ColorAssignment Pipeline::refine_result(Session& s, const ElementOverride& o) {
  json ov = {{"element_id", o.element_id}, {"color", o.color}};
  if (o.role) ov["role"] = color::to_string(*o.role);
  return apply(s, ops::kRefine, {{"override", ov}}).get<scene::ColorAssignment>();
}

scene::ColorAssignment Pipeline::pin_element(Session& s, const std::string& element_id, const color::NcsColor& c) {
  return apply(s, ops::kPin, {{"element_id", element_id}, {"color", c}}).get<scene::ColorAssignment>();
}

void Pipeline::unpin_element(Session& s, const std::string& element_id) {
  apply(s, ops::kUnpin, {{"element_id", element_id}});
}

// results -----------------------------------------------------------------

scene::SchemeStats Pipeline::stats(const Session& s) const {
  if (!s.assignment || !s.scene_id) chain_error("no colored scene yet; run stage 3 first");
  return scene::compute_stats(*s.assignment, resources_.scenes.get(*s.scene_id), resources_.kb.display_anchors);
}

json Pipeline::export_bundle(const Session& s) const {
  const auto st = stats(s);
  json elements = json::array();
  const auto& sc = resources_.scenes.get(*s.scene_id);
  for (const auto& ae : s.assignment->elements) {
    const auto* e = sc.find(ae.element_id);
    elements.push_back({{"id", ae.element_id},
                        {"label", e ? e->label : ae.element_id},
                        {"role", color::to_string(ae.role)},
                        {"color", ae.color},
                        {"hex", color::to_hex(color::ncs_to_rgb(ae.color, resources_.kb.display_anchors))}});
  }
  return json{
      {"session_id", s.id},
      {"scene_id", *s.scene_id},
      {"concepts", s.concepts ? json(*s.concepts) : json(nullptr)},
      {"scheme", *s.scheme},
      {"assignment", *s.assignment},
      {"elements", std::move(elements)},
      {"stats", st},
      {"reasoning", {{"scheme", s.scheme->reasoning}, {"assignment", s.assignment->reasoning}}},
      {"reports", {{"scheme", s.scheme_report}, {"assignment", s.assignment_report}}},
      {"stale", {{"schemes", s.schemes_stale}, {"assignment", s.assignment_stale}}},
  };
}

}  // namespace chromachain::pipeline

#include "chromachain/service/service.hpp"

#include <httplib.h>

#include <sstream>
#include <vector>

namespace chromachain::service {

using nlohmann::json;

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownSession:
    case ErrorCode::kUnknownScene:
      return 404;
    case ErrorCode::kChainIntegrity:
    case ErrorCode::kLockConflict:
      return 409;
    case ErrorCode::kInvalidRequest:
    case ErrorCode::kUsage:
      return 400;
    case ErrorCode::kBackendUnreachable:
    case ErrorCode::kUnparseableAfterRetries:
    case ErrorCode::kUnknownStage:
      return 502;
    case ErrorCode::kTimeout:
      return 504;
    case ErrorCode::kIo:
      return 500;
    case ErrorCode::kMalformedNotation:
    case ErrorCode::kInvalidSum:
    case ErrorCode::kInconsistentNeutral:
    case ErrorCode::kNonAdjacentHuePair:
    case ErrorCode::kNotationOverflow:
    case ErrorCode::kNeutralHasNoAngle:
    case ErrorCode::kInvalidColor:
    case ErrorCode::kSchemaViolation:
    case ErrorCode::kExampleParseFailure:
    case ErrorCode::kAreaSumMismatch:
    case ErrorCode::kDanglingAdjacency:
    case ErrorCode::kTokenBudgetExceeded:
    case ErrorCode::kMissingBinding:
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kUncoveredElement:
    case ErrorCode::kUnknownElement:
    case ErrorCode::kEmptyIntent:
    case ErrorCode::kUnknownTheme:
    case ErrorCode::kInvalidDegree:
    case ErrorCode::kNoValidCandidate:
    case ErrorCode::kNoValidAssignment:
    case ErrorCode::kValidationFailed:
    case ErrorCode::kVersionMismatch:
    case ErrorCode::kInvalidSelection:
      return 422;
  }
  return 500;
}

json error_body(const Error& e) {
  return {{"error", {{"code", to_string(e.code())}, {"message", e.what()}, {"details", e.details()}}}};
}

namespace {

std::vector<std::string> segments(const std::string& path) {
  std::vector<std::string> out;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '/')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

json parse_body(const std::string& body) {
  if (body.empty()) return json::object();
  try {
    auto j = json::parse(body);
    if (!j.is_object()) throw Error(ErrorCode::kInvalidRequest, "request body must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidRequest, std::string("request body is not JSON: ") + e.what());
  }
}

json locks_view(const pipeline::Session& s) {
  json out = json::object();
  for (auto r : color::kAllRoles) out[std::string(color::to_string(r))] = s.locks.count(r) > 0;
  return out;
}

json pins_view(const pipeline::Session& s) {
  json out = json::object();
  for (const auto& [id, c] : s.pins) out[id] = c;
  return out;
}

json session_view(const pipeline::Session& s) {
  auto j = pipeline::session_to_json(s);
  j.erase("events");
  j["stage"] = pipeline::stage_reached(s);
  j["event_count"] = s.events.size();
  return j;
}

json concepts_view(const pipeline::Session& s) {
  return {{"candidates", s.concept_candidates},
          {"concepts", s.concepts ? json(*s.concepts) : json(nullptr)},
          {"schemes_stale", s.schemes_stale},
          {"assignment_stale", s.assignment_stale}};
}

json scheme_view(const pipeline::Session& s) {
  return {{"scheme", s.scheme ? json(*s.scheme) : json(nullptr)},
          {"report", s.scheme_report},
          {"locks", locks_view(s)},
          {"stale", s.schemes_stale},
          {"assignment_stale", s.assignment_stale}};
}

json assignment_view(const pipeline::Session& s) {
  return {{"scene_id", s.scene_id ? json(*s.scene_id) : json(nullptr)},
          {"assignment", s.assignment ? json(*s.assignment) : json(nullptr)},
          {"report", s.assignment_report},
          {"pins", pins_view(s)},
          {"stale", s.assignment_stale}};
}

bool has_scheme_edits(const json& b) {
  return b.contains("colors") || b.contains("lock") || b.contains("unlock") || b.contains("instruction");
}

bool has_concept_edits(const json& b) {
  return b.contains("remove_themes") || b.contains("add_themes") || b.contains("mood");
}

}  // namespace

Service::Service(const pipeline::Resources& resources, llm::ChatBackend& backend, llm::BackendConfig cfg,
                 pipeline::PipelineOptions options)
    : pipeline_(resources, backend, std::move(cfg), options) {}

std::shared_ptr<Service::Slot> Service::slot(const std::string& id) {
  std::shared_lock lock(sessions_mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::kUnknownSession, "no session '" + id + "'", {{"session", id}});
  return it->second;
}

std::shared_ptr<Service::Slot> Service::add(pipeline::Session s) {
  std::unique_lock lock(sessions_mu_);
  if (s.id.empty() || sessions_.count(s.id)) {
    do {
      s.id = "session-" + std::to_string(next_id_++);
    } while (sessions_.count(s.id));
  }
  auto slot = std::make_shared<Slot>();
  slot->session = std::move(s);
  sessions_[slot->session.id] = slot;
  return slot;
}

Response Service::handle(const Request& req) {
  try {
    return route(req);
  } catch (const Error& e) {
    return {http_status(e.code()), error_body(e)};
  } catch (const json::exception& e) {
    return {400, error_body(Error(ErrorCode::kInvalidRequest, e.what()))};
  } catch (const std::exception& e) {
    return {500, {{"error", {{"code", "Internal"}, {"message", e.what()}, {"details", nullptr}}}}};
  }
}

Response Service::route(const Request& req) {
  const auto seg = segments(req.path);
  const auto& m = req.method;
  const auto no_route = [&]() -> Response {
    return {404, error_body(Error(ErrorCode::kInvalidRequest, "no route for " + m + " " + req.path))};
  };
  if (seg.size() < 2 || seg[0] != "api") return no_route();
  const auto& res = pipeline_.resources();

  if (seg[1] == "health" && seg.size() == 2 && m == "GET") return {200, {{"status", "ok"}}};

  if (seg[1] == "scenes") {
    if (seg.size() == 2 && m == "GET") {
      json out = json::array();
      for (const auto& id : res.scenes.ids()) {
        const auto& sc = res.scenes.get(id);
        out.push_back({{"id", sc.id}, {"name", sc.name}, {"elements", sc.elements.size()},
                       {"colorable", sc.colorable_elements().size()}});
      }
      return {200, out};
    }
    if (seg.size() == 3 && m == "GET") {
      const auto& sc = res.scenes.get(seg[2]);
      auto j = scene::scene_to_json(sc);
      j["description"] = scene::describe_scene(sc);
      return {200, j};
    }
    return no_route();
  }

  if (seg[1] != "sessions") return no_route();
  const auto body = parse_body(req.body);

  if (seg.size() == 2 && m == "POST") {
    std::uint64_t seed = 0;
    if (body.contains("seed")) {
      if (!body.at("seed").is_number_unsigned()) throw Error(ErrorCode::kInvalidRequest, "seed must be a non-negative integer");
      seed = body.at("seed").get<std::uint64_t>();
    }
    auto s = add(pipeline_.new_session("", seed));
    std::lock_guard lock(s->mu);
    return {201, session_view(s->session)};
  }
  if (seg.size() == 3 && seg[2] == "import" && m == "POST") {
    auto s = add(pipeline::session_from_json(body));
    std::lock_guard lock(s->mu);
    return {201, session_view(s->session)};
  }
  if (seg.size() < 3) return no_route();

  const auto& id = seg[2];
  if (seg.size() == 3 && m == "DELETE") {
    std::unique_lock lock(sessions_mu_);
    if (sessions_.erase(id) == 0) throw Error(ErrorCode::kUnknownSession, "no session '" + id + "'");
    return {200, {{"deleted", id}}};
  }

  auto sl = slot(id);
  std::lock_guard lock(sl->mu);
  auto& live = sl->session;
  if (seg.size() == 3 && m == "GET") return {200, session_view(live)};
  if (seg.size() != 4) return no_route();
  const auto& what = seg[3];

  // Mutations run on a copy so a request with two steps commits both or neither.
  auto s = live;
  Response out;
  if (what == "events" && m == "GET") {
    return {200, s.events};
  } else if (what == "intent" && m == "POST") {
    if (!body.contains("intent") || !body.at("intent").is_string()) {
      throw Error(ErrorCode::kInvalidRequest, "expected {\"intent\": text}");
    }
    pipeline_.stage1_concepts(s, body.at("intent").get<std::string>());
    out = {200, concepts_view(s)};
  } else if (what == "concepts" && m == "GET") {
    return {200, concepts_view(s)};
  } else if (what == "concepts" && m == "PATCH") {
    if (body.contains("select")) pipeline_.apply(s, pipeline::ops::kSelectConcepts, {{"index", body.at("select")}});
    if (has_concept_edits(body)) pipeline_.customize_concepts(s, body.get<pipeline::ConceptEdits>());
    out = {200, concepts_view(s)};
  } else if (what == "schemes" && m == "POST") {
    pipeline_.stage2_schemes(s);
    auto v = scheme_view(s);
    v["candidates"] = s.scheme_candidates;
    v["reports"] = s.scheme_reports;
    out = {200, v};
  } else if (what == "scheme" && m == "GET") {
    auto v = scheme_view(s);
    v["candidates"] = s.scheme_candidates;
    v["reports"] = s.scheme_reports;
    return {200, v};
  } else if (what == "scheme" && m == "PATCH") {
    if (body.contains("choose")) pipeline_.apply(s, pipeline::ops::kChooseScheme, {{"index", body.at("choose")}});
    if (has_scheme_edits(body)) pipeline_.customize_scheme(s, body.get<pipeline::SchemeEdits>());
    out = {200, scheme_view(s)};
  } else if (what == "assignment" && m == "POST") {
    if (!body.contains("scene_id") || !body.at("scene_id").is_string()) {
      throw Error(ErrorCode::kInvalidRequest, "expected {\"scene_id\": text}");
    }
    pipeline_.stage3_assign(s, body.at("scene_id").get<std::string>());
    out = {200, assignment_view(s)};
  } else if (what == "assignment" && m == "GET") {
    return {200, assignment_view(s)};
  } else if (what == "refinements" && m == "POST") {
    if (body.contains("pin")) {
      pipeline_.apply(s, pipeline::ops::kPin, body.at("pin"));
    } else if (body.contains("unpin")) {
      pipeline_.apply(s, pipeline::ops::kUnpin, {{"element_id", body.at("unpin")}});
    } else if (body.contains("override")) {
      pipeline_.apply(s, pipeline::ops::kRefine, {{"override", body.at("override")}});
    } else if (body.contains("instruction")) {
      pipeline_.apply(s, pipeline::ops::kRefine, {{"instruction", body.at("instruction")}});
    } else {
      throw Error(ErrorCode::kInvalidRequest, "expected one of instruction, override, pin, unpin");
    }
    out = {200, assignment_view(s)};
  } else if (what == "stats" && m == "GET") {
    return {200, pipeline_.stats(s)};
  } else if (what == "export" && m == "GET") {
    return {200, pipeline_.export_bundle(s)};
  } else if (what == "file" && m == "GET") {
    return {200, pipeline::session_to_json(s)};
  } else {
    return no_route();
  }
  live = std::move(s);
  return out;
}

void Service::mount(httplib::Server& server) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    const auto r = handle({req.method, req.path, req.body});
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  const char* pattern = R"(/api/.*)";
  server.Get(pattern, handler);
  server.Post(pattern, handler);
  server.Patch(pattern, handler);
  server.Delete(pattern, handler);
  server.Options(pattern, [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, PATCH, DELETE, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
}

}  // namespace chromachain::service

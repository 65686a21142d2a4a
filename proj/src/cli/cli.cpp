#include "chromachain/cli/cli.hpp"

#include "chromachain/service/service.hpp"
#include "chromachain/validate/validators.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>

namespace chromachain::cli {

using nlohmann::json;
namespace fs = std::filesystem;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoValidCandidate:
    case ErrorCode::kNoValidAssignment:
    case ErrorCode::kValidationFailed:
      return 1;
    case ErrorCode::kBackendUnreachable:
    case ErrorCode::kTimeout:
    case ErrorCode::kUnparseableAfterRetries:
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kUnknownStage:
    case ErrorCode::kIo:
      return 3;
    default:
      return 2;
  }
}

namespace {

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string(), {{"path", path.string()}});
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchemaViolation, path.string() + " is not JSON: " + e.what(), {{"path", path.string()}});
  }
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::kIo, "cannot write " + path.string(), {{"path", path.string()}});
}

struct Common {
  std::string data_dir;
  std::string rules;
  std::string backend = "mock";
  int max_retries = 3;
  std::string model;
  std::string endpoint;

  pipeline::Resources resources() const {
    std::optional<fs::path> rules_path;
    if (!rules.empty()) rules_path = rules;
    return pipeline::load_resources(data_dir.empty() ? pipeline::default_data_dir() : fs::path(data_dir), rules_path);
  }

  llm::BackendConfig config(std::uint64_t seed) const {
    llm::BackendConfig cfg;
    cfg.kind = backend == "live" ? llm::BackendConfig::Kind::kLive : llm::BackendConfig::Kind::kMock;
    cfg.max_retries = max_retries;
    cfg.seed = seed;
    if (!model.empty()) cfg.model = model;
    if (!endpoint.empty()) cfg.endpoint = endpoint;
    llm::check_config(cfg);
    return cfg;
  }

  std::unique_ptr<llm::ChatBackend> make_backend(const pipeline::Resources& r, const llm::BackendConfig& cfg) const {
    if (cfg.kind == llm::BackendConfig::Kind::kLive) return std::make_unique<llm::HttpChatBackend>(cfg);
    return std::make_unique<llm::MockBackend>(r.lexicon, &r.scenes, r.kb.rules);
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_backend) {
  cmd->add_option("--data-dir", c.data_dir, "Data directory (default: $CHROMACHAIN_DATA_DIR or the bundled data)");
  cmd->add_option("--rules", c.rules, "Rules file overriding the bundled composition rules");
  if (!with_backend) return;
  cmd->add_option("--backend", c.backend, "mock or live")->check(CLI::IsMember({"mock", "live"}));
  cmd->add_option("--max-retries", c.max_retries, "Gateway retries after the first attempt")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--model", c.model, "Model name for the live backend");
  cmd->add_option("--endpoint", c.endpoint, "Chat completion URL for the live backend");
}

int cmd_generate(const Common& c, const std::string& style, const std::string& scene_id, std::uint64_t seed,
                 const std::string& out_dir, bool explain, std::ostream& out) {
  const auto res = c.resources();
  res.scenes.get(scene_id);  // UnknownScene before any model call
  const auto cfg = c.config(seed);
  auto backend = c.make_backend(res, cfg);
  const auto a = generate_artifacts(res, *backend, cfg, style, scene_id, seed);

  fs::create_directories(out_dir);
  for (const auto& [name, text] : a.files) write_file(fs::path(out_dir) / name, text);
  if (explain) {
    out << "scheme\n" << validate::to_text(a.scheme_report) << "assignment\n" << validate::to_text(a.assignment_report);
  }
  out << "wrote " << a.files.size() << " files to " << out_dir << "\n";
  return a.scheme_report.passed() && a.assignment_report.passed() ? 0 : 1;
}

int cmd_validate(const Common& c, const std::string& file, const std::string& scene_id, bool explain,
                 std::ostream& out) {
  const auto j = read_json_file(file);
  if (!j.is_object()) throw Error(ErrorCode::kSchemaViolation, file + ": expected a JSON object");
  const bool is_assignment = j.contains("assignment") || j.contains("elements");
  if (is_assignment && scene_id.empty()) {
    throw Error(ErrorCode::kUsage, "validating an assignment needs --scene");
  }
  const auto res = c.resources();
  const auto& rules = res.kb.rules;

  validate::ValidationReport report;
  if (is_assignment) {
    if (!j.contains("scheme")) throw Error(ErrorCode::kSchemaViolation, file + ": an assignment file must carry its scheme");
    const auto& sc = res.scenes.get(scene_id);
    const auto a = (j.contains("assignment") ? j.at("assignment") : j).get<scene::ColorAssignment>();
    report = validate::validate_assignment(a, sc, j.at("scheme").get<color::ColorScheme>(), rules);
  } else {
    const auto scheme = (j.contains("scheme") ? j.at("scheme") : j).get<color::ColorScheme>();
    color::DesignConcepts concepts;
    if (j.contains("concepts")) concepts = j.at("concepts").get<color::DesignConcepts>();
    report = validate::validate_scheme(scheme, concepts, rules);
    if (!j.contains("concepts")) {
      // No requested mood to compare against.
      std::erase_if(report.violations,
                    [](const auto& v) { return v.rule_code == validate::RuleCode::kToneMismatch; });
    }
  }
  if (explain) {
    out << validate::to_text(report);
  } else {
    out << pretty(report);
  }
  return report.passed() ? 0 : 1;
}

int cmd_serve(const Common& c, const std::string& bind, int port, std::ostream& out) {
  const auto res = c.resources();
  const auto cfg = c.config(0);
  auto backend = c.make_backend(res, cfg);
  service::Service svc(res, *backend, cfg);
  httplib::Server server;
  svc.mount(server);
  if (!server.bind_to_port(bind, port)) {
    throw Error(ErrorCode::kIo, "cannot bind " + bind + ":" + std::to_string(port));
  }
  out << "listening on http://" << bind << ":" << port << std::endl;
  server.listen_after_bind();
  return 0;
}

}  // namespace

Artifacts generate_artifacts(const pipeline::Resources& resources, llm::ChatBackend& backend,
                             const llm::BackendConfig& cfg, const std::string& style, const std::string& scene_id,
                             std::uint64_t seed) {
  pipeline::Pipeline pipe(resources, backend, cfg);
  auto s = pipe.new_session("cli", seed);
  pipe.stage1_concepts(s, style);
  pipe.stage2_schemes(s);
  pipe.stage3_assign(s, scene_id);

  Artifacts a;
  a.scheme_report = s.scheme_report;
  a.assignment_report = s.assignment_report;
  a.files["concepts.json"] = pretty({{"style", style}, {"candidates", s.concept_candidates}, {"selected", *s.concepts}});
  a.files["scheme.json"] = pretty({{"concepts", *s.concepts}, {"scheme", *s.scheme}, {"candidates", s.scheme_candidates}});
  a.files["assignment.json"] = pretty({{"scene_id", scene_id}, {"scheme", *s.scheme}, {"assignment", *s.assignment}});
  a.files["stats.json"] = pretty(pipe.stats(s));
  a.files["reports.json"] = pretty({{"scheme", s.scheme_report}, {"assignment", s.assignment_report}});
  return a;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interior color scheme generation and validation", "chromachain"};
  app.require_subcommand(1);

  Common common;
  std::string style;
  std::string scene_id;
  std::uint64_t seed = 0;
  std::string out_dir = "out";
  bool explain = false;
  std::string file;
  std::string bind = "127.0.0.1";
  int port = 8080;

  auto* gen = app.add_subcommand("generate", "Run the three stages for one style and scene");
  gen->add_option("--style", style, "A preset (\"Warm and Cozy\", ...) or free text")->required();
  gen->add_option("--scene", scene_id, "Bundled scene id")->required();
  gen->add_option("--seed", seed, "Seed for the mock backend and sampling");
  gen->add_option("--out", out_dir, "Output directory");
  gen->add_flag("--explain", explain, "Print the validation reports as text");
  add_common(gen, common, true);

  auto* val = app.add_subcommand("validate", "Check a scheme or assignment file against the rules");
  val->add_option("file", file, "Scheme or assignment JSON")->required();
  val->add_option("--scene", scene_id, "Scene id; required for assignments");
  val->add_flag("--explain", explain, "Print the report as text");
  add_common(val, common, false);

  auto* srv = app.add_subcommand("serve", "Serve the JSON API");
  srv->add_option("--bind", bind, "Address to bind");
  srv->add_option("--port", port, "Port")->check(CLI::Range(0, 65535));
  add_common(srv, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(common, style, scene_id, seed, out_dir, explain, out);
    if (val->parsed()) return cmd_validate(common, file, scene_id, explain, out);
    return cmd_serve(common, bind, port, out);
  } catch (const Error& e) {
    err << service::error_body(e).dump(2) << "\n";
    return exit_code(e.code());
  } catch (const fs::filesystem_error& e) {
    err << service::error_body(Error(ErrorCode::kIo, e.what())).dump(2) << "\n";
    return 3;
  } catch (const json::exception& e) {
    err << service::error_body(Error(ErrorCode::kSchemaViolation, e.what())).dump(2) << "\n";
    return 2;
  }
}

}  // namespace chromachain::cli

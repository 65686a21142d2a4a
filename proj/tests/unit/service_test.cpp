#include "chromachain/service/service.hpp"

#include "../support/pipeline_env.hpp"

#include <httplib.h>

#include <gtest/gtest.h>

#include <atomic>
#include <set>
#include <thread>
#include <vector>

using namespace chromachain;
using chromachain::testing::bundled_resources;
using chromachain::testing::CountingBackend;
using nlohmann::json;

namespace {

struct ServiceEnv {
  ServiceEnv() : backend(bundled_resources()), svc(bundled_resources(), backend, {}) {}

  service::Response call(const std::string& method, const std::string& path, const json& body = nullptr) {
    return svc.handle({method, path, body.is_null() ? "" : body.dump()});
  }

  std::string create(std::uint64_t seed = 0) {
    auto r = call("POST", "/api/sessions", {{"seed", seed}});
    EXPECT_EQ(r.status, 201);
    return r.body.at("id").get<std::string>();
  }

  CountingBackend backend;
  service::Service svc;
};

std::string code_of(const service::Response& r) { return r.body.at("error").at("code").get<std::string>(); }

}  // namespace

TEST(ServiceStatus, EveryCodeHasAStatus) {
  const std::set<int> allowed = {400, 404, 409, 422, 500, 502, 504};
  for (int i = 0; i <= static_cast<int>(ErrorCode::kUsage); ++i) {
    const auto code = static_cast<ErrorCode>(i);
    EXPECT_TRUE(allowed.count(service::http_status(code))) << to_string(code);
  }
  EXPECT_EQ(service::http_status(ErrorCode::kMalformedNotation), 422);
  EXPECT_EQ(service::http_status(ErrorCode::kChainIntegrity), 409);
  EXPECT_EQ(service::http_status(ErrorCode::kUnknownSession), 404);
  EXPECT_EQ(service::http_status(ErrorCode::kTimeout), 504);
  EXPECT_EQ(service::http_status(ErrorCode::kBackendUnreachable), 502);
}

TEST(ServiceStatus, ErrorBodyShape) {
  const auto b = service::error_body(Error(ErrorCode::kUnknownTheme, "nope", {{"theme", "x"}}));
  EXPECT_EQ(b.at("error").at("code"), "UnknownTheme");
  EXPECT_EQ(b.at("error").at("message"), "nope");
  EXPECT_EQ(b.at("error").at("details").at("theme"), "x");
}

TEST(Service, HealthAndScenes) {
  ServiceEnv env;
  EXPECT_EQ(env.call("GET", "/api/health").status, 200);
  auto list = env.call("GET", "/api/scenes");
  ASSERT_EQ(list.status, 200);
  ASSERT_EQ(list.body.size(), 3u);
  auto bedroom = env.call("GET", "/api/scenes/bedroom");
  ASSERT_EQ(bedroom.status, 200);
  EXPECT_NE(bedroom.body.at("description").get<std::string>().find("bed"), std::string::npos);
  auto missing = env.call("GET", "/api/scenes/attic");
  EXPECT_EQ(missing.status, 404);
  EXPECT_EQ(code_of(missing), "UnknownScene");
}

TEST(Service, FullFlow) {
  ServiceEnv env;
  const auto id = env.create();
  const auto base = "/api/sessions/" + id;

  auto intent = env.call("POST", base + "/intent", {{"intent", "warm and cozy"}});
  ASSERT_EQ(intent.status, 200) << intent.body.dump();
  EXPECT_FALSE(intent.body.at("candidates").empty());
  EXPECT_FALSE(intent.body.at("concepts").is_null());

  auto schemes = env.call("POST", base + "/schemes");
  ASSERT_EQ(schemes.status, 200) << schemes.body.dump();
  EXPECT_FALSE(schemes.body.at("candidates").empty());
  EXPECT_EQ(schemes.body.at("report").at("verdict"), "pass");

  auto assign = env.call("POST", base + "/assignment", {{"scene_id", "bedroom"}});
  ASSERT_EQ(assign.status, 200) << assign.body.dump();
  EXPECT_EQ(assign.body.at("scene_id"), "bedroom");

  auto stats = env.call("GET", base + "/stats");
  ASSERT_EQ(stats.status, 200);
  EXPECT_TRUE(stats.body.contains("hue_histogram"));

  auto bundle = env.call("GET", base + "/export");
  ASSERT_EQ(bundle.status, 200);
  EXPECT_EQ(bundle.body.at("scene_id"), "bedroom");

  auto events = env.call("GET", base + "/events");
  ASSERT_EQ(events.status, 200);
  EXPECT_EQ(events.body.size(), 3u);

  auto file = env.call("GET", base + "/file");
  ASSERT_EQ(file.status, 200);
  auto imported = env.call("POST", "/api/sessions/import", file.body);
  ASSERT_EQ(imported.status, 201) << imported.body.dump();
  EXPECT_NE(imported.body.at("id"), id);
  auto original = env.call("GET", base);
  auto copy = imported.body;
  copy.erase("id");
  original.body.erase("id");
  EXPECT_EQ(copy, original.body);
}

TEST(Service, ConceptsAndSchemeEdits) {
  ServiceEnv env;
  const auto base = "/api/sessions/" + env.create();
  ASSERT_EQ(env.call("POST", base + "/intent", {{"intent", "warm and cozy"}}).status, 200);

  auto sel = env.call("PATCH", base + "/concepts", {{"select", 1}});
  ASSERT_EQ(sel.status, 200) << sel.body.dump();
  EXPECT_EQ(sel.body.at("concepts"), sel.body.at("candidates").at(1));

  ASSERT_EQ(env.call("POST", base + "/schemes").status, 200);
  auto brighter = env.call("PATCH", base + "/scheme", {{"lock", {"accent"}}, {"instruction", "brighter"}});
  ASSERT_EQ(brighter.status, 200) << brighter.body.dump();
  EXPECT_TRUE(brighter.body.at("locks").at("accent").get<bool>());

  auto chosen = env.call("PATCH", base + "/scheme", {{"choose", 2}});
  ASSERT_EQ(chosen.status, 200) << chosen.body.dump();
  EXPECT_EQ(env.call("GET", base + "/scheme").body.at("scheme"), chosen.body.at("scheme"));
}

TEST(Service, MalformedNcsIs422) {
  ServiceEnv env;
  const auto base = "/api/sessions/" + env.create();
  ASSERT_EQ(env.call("POST", base + "/intent", {{"intent", "warm and cozy"}}).status, 200);
  ASSERT_EQ(env.call("POST", base + "/schemes").status, 200);
  auto r = env.call("PATCH", base + "/scheme", {{"colors", {{"dominant", "12-34-Y"}}}});
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(code_of(r), "MalformedNotation");
}

TEST(Service, StageOutOfOrderIs409) {
  ServiceEnv env;
  const auto base = "/api/sessions/" + env.create();
  ASSERT_EQ(env.call("POST", base + "/intent", {{"intent", "warm and cozy"}}).status, 200);
  auto r = env.call("POST", base + "/assignment", {{"scene_id", "bedroom"}});
  EXPECT_EQ(r.status, 409);
  EXPECT_EQ(code_of(r), "ChainIntegrity");
  EXPECT_EQ(env.call("POST", "/api/sessions/" + env.create() + "/schemes").status, 409);
}

TEST(Service, RequestErrors) {
  ServiceEnv env;
  const auto base = "/api/sessions/" + env.create();
  auto nosession = env.call("GET", "/api/sessions/session-99");
  EXPECT_EQ(nosession.status, 404);
  EXPECT_EQ(code_of(nosession), "UnknownSession");
  auto badjson = env.svc.handle({"POST", base + "/intent", "{not json"});
  EXPECT_EQ(badjson.status, 400);
  EXPECT_EQ(code_of(badjson), "InvalidRequest");
  EXPECT_EQ(env.call("POST", base + "/intent", {{"text", "x"}}).status, 400);
  EXPECT_EQ(env.call("GET", "/api/nowhere").status, 404);
  EXPECT_EQ(env.call("PUT", base).status, 404);
  auto empty = env.call("POST", base + "/intent", {{"intent", "   "}});
  EXPECT_EQ(empty.status, 422);
  EXPECT_EQ(code_of(empty), "EmptyIntent");
  EXPECT_EQ(env.call("DELETE", base).status, 200);
  EXPECT_EQ(env.call("GET", base).status, 404);
}

TEST(Service, GatewayFailureIs502) {
  ServiceEnv env;
  env.backend.rewrite = [](const llm::CompletionRequest&) { return std::string("no json here"); };
  const auto base = "/api/sessions/" + env.create();
  auto r = env.call("POST", base + "/intent", {{"intent", "warm and cozy"}});
  EXPECT_EQ(r.status, 502);
  EXPECT_EQ(code_of(r), "UnparseableAfterRetries");
  EXPECT_EQ(env.call("GET", base + "/events").body.size(), 0u);
}

TEST(Service, TwoStepRequestIsAtomic) {
  ServiceEnv env;
  const auto base = "/api/sessions/" + env.create();
  ASSERT_EQ(env.call("POST", base + "/intent", {{"intent", "warm and cozy"}}).status, 200);
  const auto before = env.call("GET", base).body;
  auto r = env.call("PATCH", base + "/concepts", {{"select", 1}, {"remove_themes", {"not-a-theme"}}});
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(code_of(r), "UnknownTheme");
  EXPECT_EQ(env.call("GET", base).body, before);
}

TEST(Service, RefinementsAndPins) {
  ServiceEnv env;
  const auto base = "/api/sessions/" + env.create();
  ASSERT_EQ(env.call("POST", base + "/intent", {{"intent", "warm and cozy"}}).status, 200);
  ASSERT_EQ(env.call("POST", base + "/schemes").status, 200);
  ASSERT_EQ(env.call("POST", base + "/assignment", {{"scene_id", "bedroom"}}).status, 200);

  auto refined = env.call("POST", base + "/refinements", {{"instruction", "the furniture is too dark"}});
  EXPECT_EQ(refined.status, 200) << refined.body.dump();

  auto unknown = env.call("POST", base + "/refinements",
                          {{"override", {{"element_id", "spaceship"}, {"color", "1040-Y50R"}}}});
  EXPECT_EQ(unknown.status, 422);
  EXPECT_EQ(code_of(unknown), "UnknownElement");

  auto unpin = env.call("POST", base + "/refinements", {{"unpin", "bed"}});
  EXPECT_EQ(unpin.status, 422);
  EXPECT_EQ(env.call("POST", base + "/refinements", json::object()).status, 400);
}

TEST(Service, RequestsOnOneSessionAreSerialized) {
  const auto& r = bundled_resources();
  llm::MockBackend backend(r.lexicon, &r.scenes, r.kb.rules);
  service::Service svc(r, backend, {});
  const auto id = svc.handle({"POST", "/api/sessions", ""}).body.at("id").get<std::string>();
  const auto base = "/api/sessions/" + id;

  constexpr int kThreads = 8;
  std::atomic<int> ok{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < kThreads; ++t) {
    threads.emplace_back([&] {
      if (svc.handle({"POST", base + "/intent", R"({"intent":"warm and cozy"})"}).status == 200) ++ok;
      // Separate sessions proceed in parallel.
      auto other = svc.handle({"POST", "/api/sessions", ""}).body.at("id").get<std::string>();
      if (svc.handle({"POST", "/api/sessions/" + other + "/intent", R"({"intent":"calm"})"}).status == 200) ++ok;
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(ok.load(), 2 * kThreads);
  auto events = svc.handle({"GET", base + "/events", ""}).body;
  EXPECT_EQ(events.size(), static_cast<std::size_t>(kThreads));
  EXPECT_EQ(svc.handle({"GET", "/api/scenes", ""}).status, 200);
}

TEST(Service, OverRealSocket) {
  ServiceEnv env;
  httplib::Server server;
  env.svc.mount(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto created = client.Post("/api/sessions", R"({"seed": 3})", "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  EXPECT_EQ(created->get_header_value("Access-Control-Allow-Origin"), "*");
  const auto id = json::parse(created->body).at("id").get<std::string>();
  auto intent = client.Post("/api/sessions/" + id + "/intent", R"({"intent":"warm and cozy"})", "application/json");
  ASSERT_TRUE(intent);
  EXPECT_EQ(intent->status, 200);
  auto patch = client.Patch("/api/sessions/" + id + "/concepts", R"({"select": 7})", "application/json");
  ASSERT_TRUE(patch);
  EXPECT_EQ(patch->status, 422);
  EXPECT_EQ(json::parse(patch->body).at("error").at("code"), "InvalidSelection");
  auto missing = client.Get("/api/sessions/nope");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  server.stop();
  th.join();
}

#pragma once

#include "chromachain/error.hpp"
#include "chromachain/pipeline/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

namespace httplib {
class Server;
}

namespace chromachain::service {

/// HTTP status for an error code; every code maps to exactly one status.
int http_status(ErrorCode code);

/// {"error": {"code", "message", "details"}}
nlohmann::json error_body(const Error& e);

struct Request {
  std::string method;  // GET | POST | PATCH | DELETE
  std::string path;    // e.g. /api/sessions/s1/scheme
  std::string body;
};

struct Response {
  int status = 200;
  nlohmann::json body;
};

/// Routes the JSON API onto a pipeline. Requests for one session are
/// serialized by a per-session mutex; different sessions run in parallel.
class Service {
 public:
  Service(const pipeline::Resources& resources, llm::ChatBackend& backend, llm::BackendConfig cfg,
          pipeline::PipelineOptions options = {});

  Response handle(const Request& req);

  /// Registers every route on `server` (CORS-open, JSON bodies).
  void mount(httplib::Server& server);

 private:
  struct Slot {
    std::mutex mu;
    pipeline::Session session;
  };

  std::shared_ptr<Slot> slot(const std::string& id);
  std::shared_ptr<Slot> add(pipeline::Session s);
  Response route(const Request& req);

  pipeline::Pipeline pipeline_;
  std::shared_mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::uint64_t next_id_ = 1;
};

}  // namespace chromachain::service

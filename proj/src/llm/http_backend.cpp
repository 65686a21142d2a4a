#include "chromachain/error.hpp"
#include "chromachain/llm/gateway.hpp"

#include <httplib.h>

#include <cstdlib>

namespace chromachain::llm {

namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint split_endpoint(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw Error(ErrorCode::kInvalidRequest, "endpoint must be an http(s) URL: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

HttpChatBackend::HttpChatBackend(BackendConfig cfg, std::optional<std::string> api_key) : cfg_(std::move(cfg)) {
  if (api_key) {
    api_key_ = *api_key;
  } else if (const char* env = std::getenv(kApiKeyEnv)) {
    api_key_ = env;
  }
}

std::string HttpChatBackend::complete(const CompletionRequest& request) {
  if (api_key_.empty()) {
    throw Error(ErrorCode::kBackendUnreachable, std::string("live backend needs ") + kApiKeyEnv);
  }
  const auto endpoint = split_endpoint(cfg_.endpoint);
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (endpoint.origin.rfind("https://", 0) == 0) {
    throw Error(ErrorCode::kBackendUnreachable, "built without TLS support; cannot reach " + endpoint.origin);
  }
#endif
  httplib::Client client(endpoint.origin);
  const auto timeout = std::chrono::milliseconds(static_cast<long>(cfg_.timeout_seconds * 1000.0));
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  client.set_bearer_token_auth(api_key_);

  nlohmann::json messages = nlohmann::json::array();
  for (const auto& m : request.messages) messages.push_back({{"role", m.role}, {"content", m.content}});
  const nlohmann::json body{{"model", request.model},
                            {"temperature", request.temperature},
                            {"max_tokens", request.max_tokens},
                            {"messages", std::move(messages)}};

  auto res = client.Post(endpoint.path, body.dump(), "application/json");
  if (!res) {
    const auto err = res.error();
    if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read) {
      throw Error(ErrorCode::kTimeout, "chat completion timed out: " + httplib::to_string(err));
    }
    throw Error(ErrorCode::kBackendUnreachable, "chat completion failed: " + httplib::to_string(err));
  }
  if (res->status != 200) {
    throw Error(ErrorCode::kBackendUnreachable, "chat completion returned HTTP " + std::to_string(res->status),
                {{"status", res->status}, {"body", res->body.substr(0, 512)}});
  }
  auto reply = nlohmann::json::parse(res->body, nullptr, false);
  if (reply.is_discarded() || !reply.contains("choices") || !reply.at("choices").is_array() ||
      reply.at("choices").empty()) {
    // Not a chat envelope: hand the body to the structured parser as-is.
    return res->body;
  }
  const auto& choice = reply.at("choices").at(0);
  if (choice.contains("message") && choice.at("message").contains("content") &&
      choice.at("message").at("content").is_string()) {
    return choice.at("message").at("content").get<std::string>();
  }
  return res->body;
}

}  // namespace chromachain::llm

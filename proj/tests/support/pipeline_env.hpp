#pragma once

#include "chromachain/llm/mock.hpp"
#include "chromachain/pipeline/pipeline.hpp"

#include "paths.hpp"

#include <functional>
#include <memory>

namespace chromachain::testing {

inline const pipeline::Resources& bundled_resources() {
  static const pipeline::Resources r = pipeline::load_resources(kDataDir);
  return r;
}

/// Mock backend that counts calls and can rewrite replies.
struct CountingBackend : llm::ChatBackend {
  explicit CountingBackend(const pipeline::Resources& r) : mock(r.lexicon, &r.scenes, r.kb.rules) {}

  std::string complete(const llm::CompletionRequest& req) override {
    ++calls;
    if (rewrite) return rewrite(req);
    return mock.complete(req);
  }

  llm::MockBackend mock;
  int calls = 0;
  std::function<std::string(const llm::CompletionRequest&)> rewrite;
};

struct PipelineEnv {
  explicit PipelineEnv(const pipeline::Resources& r = bundled_resources(), llm::BackendConfig cfg = {})
      : backend(r), pipe(r, backend, cfg) {}

  CountingBackend backend;
  pipeline::Pipeline pipe;
};

}  // namespace chromachain::testing

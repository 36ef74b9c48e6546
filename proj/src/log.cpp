#include "gznt/log.hpp"

#include <cstdlib>

#include <spdlog/sinks/stdout_sinks.h>

namespace gznt {

spdlog::logger& log() {
  static std::shared_ptr<spdlog::logger> lg = [] {
    auto l = std::make_shared<spdlog::logger>("gznt",
                                              std::make_shared<spdlog::sinks::stderr_sink_mt>());
    l->set_pattern("[%l] %v");
    l->set_level(spdlog::level::warn);
    if (const char* env = std::getenv("GZNT_LOG"))
      l->set_level(spdlog::level::from_str(env));
    return l;
  }();
  return *lg;
}

}  // namespace gznt

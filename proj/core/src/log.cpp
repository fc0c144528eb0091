#include "cutlab/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace cutlab {

LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("CUTLAB_LOG");
    if (!env) return LogLevel::Off;
    std::string s(env);
    if (s == "debug" || s == "DEBUG" || s == "2") return LogLevel::Debug;
    if (s == "info" || s == "INFO" || s == "1") return LogLevel::Info;
    return LogLevel::Off;
  }();
  return level;
}

void log_line(LogLevel, const std::string& msg) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::cerr << "[cutlab] " << msg << "\n";
}

}  // namespace cutlab

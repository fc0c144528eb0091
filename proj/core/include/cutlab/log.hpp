#pragma once

#include <sstream>
#include <string>

namespace cutlab {

enum class LogLevel { Off = 0, Info = 1, Debug = 2 };

/// Level comes from the CUTLAB_LOG environment variable ("info", "debug").
LogLevel log_level();
void log_line(LogLevel level, const std::string& msg);

#define CUTLAB_LOG_AT(level, expr)                                  \
  do {                                                              \
    if (::cutlab::log_level() >= (level)) {                         \
      std::ostringstream cutlab_log_os_;                            \
      cutlab_log_os_ << expr;                                       \
      ::cutlab::log_line((level), cutlab_log_os_.str());            \
    }                                                               \
  } while (0)

#define CUTLAB_INFO(expr) CUTLAB_LOG_AT(::cutlab::LogLevel::Info, expr)
#define CUTLAB_DEBUG(expr) CUTLAB_LOG_AT(::cutlab::LogLevel::Debug, expr)

}  // namespace cutlab

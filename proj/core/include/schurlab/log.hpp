#pragma once

#include <string_view>

namespace schurlab {

enum class LogLevel { off = 0, error, warn, info, debug };

/// Read once from SCHURLAB_LOG (off|error|warn|info|debug); defaults to warn.
LogLevel log_level();
void set_log_level(LogLevel level);
void log_message(LogLevel level, std::string_view message);

inline void log_warn(std::string_view message) { log_message(LogLevel::warn, message); }
inline void log_info(std::string_view message) { log_message(LogLevel::info, message); }
inline void log_debug(std::string_view message) { log_message(LogLevel::debug, message); }

} // namespace schurlab

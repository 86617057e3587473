#include "schurlab/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace schurlab {

namespace {

LogLevel parse_level(const char* text) {
    if (text == nullptr) return LogLevel::warn;
    const std::string value(text);
    if (value == "off" || value == "0") return LogLevel::off;
    if (value == "error") return LogLevel::error;
    if (value == "info") return LogLevel::info;
    if (value == "debug") return LogLevel::debug;
    return LogLevel::warn;
}

std::atomic<LogLevel>& level_storage() {
    static std::atomic<LogLevel> level{parse_level(std::getenv("SCHURLAB_LOG"))};
    return level;
}

const char* label(LogLevel level) {
    switch (level) {
    case LogLevel::error: return "error";
    case LogLevel::warn: return "warn";
    case LogLevel::info: return "info";
    case LogLevel::debug: return "debug";
    default: return "";
    }
}

} // namespace

LogLevel log_level() { return level_storage().load(); }

void set_log_level(LogLevel level) { level_storage().store(level); }

void log_message(LogLevel level, std::string_view message) {
    if (level == LogLevel::off || level > log_level()) return;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    std::cerr << "[schurlab " << label(level) << "] " << message << '\n';
}

} // namespace schurlab

#pragma once

#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>

namespace mcorr {

enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

// MOBILITYCORR_LOG selects the threshold (error|warn|info|debug); unset or
// unrecognised means warn. Read once per process.
inline LogLevel log_threshold() {
    static const LogLevel level = [] {
        const char* env = std::getenv("MOBILITYCORR_LOG");
        if (env == nullptr) return LogLevel::warn;
        const std::string_view v(env);
        if (v == "error") return LogLevel::error;
        if (v == "info") return LogLevel::info;
        if (v == "debug") return LogLevel::debug;
        return LogLevel::warn;
    }();
    return level;
}

inline void log(LogLevel level, std::string_view message) {
    static const char* names[] = {"error", "warn", "info", "debug"};
    if (level <= log_threshold())
        std::cerr << "[" << names[static_cast<int>(level)] << "] " << message << '\n';
}

inline void log_warn(std::string_view message) { log(LogLevel::warn, message); }
inline void log_info(std::string_view message) { log(LogLevel::info, message); }
inline void log_debug(std::string_view message) { log(LogLevel::debug, message); }

}  // namespace mcorr

#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace risbf::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Log level from RIS_LOG (error|warn|info|debug), default info.
inline Level threshold() {
    static Level lv = [] {
        const char* e = std::getenv("RIS_LOG");
        if (!e) return Level::Info;
        if (!std::strcmp(e, "error")) return Level::Error;
        if (!std::strcmp(e, "warn")) return Level::Warn;
        if (!std::strcmp(e, "debug")) return Level::Debug;
        return Level::Info;
    }();
    return lv;
}

template <typename... Args>
inline void emit(Level lv, const char* tag, const char* fmt, Args... args) {
    if (lv > threshold()) return;
    std::fprintf(stderr, "[%s] ", tag);
    std::fprintf(stderr, fmt, args...);
    std::fprintf(stderr, "\n");
}

template <typename... Args>
inline void error(const char* fmt, Args... args) { emit(Level::Error, "error", fmt, args...); }
template <typename... Args>
inline void warn(const char* fmt, Args... args) { emit(Level::Warn, "warn", fmt, args...); }
template <typename... Args>
inline void info(const char* fmt, Args... args) { emit(Level::Info, "info", fmt, args...); }
template <typename... Args>
inline void debug(const char* fmt, Args... args) { emit(Level::Debug, "debug", fmt, args...); }

}  // namespace risbf::log

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace treadmill::log {

/// Log verbosity is controlled by the TREADMILL_LOG environment variable:
/// unset/anything else = silent, "info" = progress notes, "debug" = adds
/// per-stage numeric diagnostics. Messages go to stderr.
inline int level() {
    static const int lvl = [] {
        const char* e = std::getenv("TREADMILL_LOG");
        if (!e) return 0;
        const std::string s(e);
        if (s == "debug") return 2;
        if (s == "info") return 1;
        return 0;
    }();
    return lvl;
}

inline void info(const std::string& msg) {
    if (level() >= 1) std::fprintf(stderr, "[info] %s\n", msg.c_str());
}

inline void debug(const std::string& msg) {
    if (level() >= 2) std::fprintf(stderr, "[debug] %s\n", msg.c_str());
}

} // namespace treadmill::log

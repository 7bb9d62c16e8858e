#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace dompoly {

// Hard structural limit: vertex sets are single machine words.
inline constexpr int kMaxVertices = 32;

// Default cap on enumeration backends. 2^26 subsets sweep in seconds;
// raising the cap to 32 is allowed but costs a factor of 64.
inline constexpr int kDefaultEnumerationCap = 26;

// Cap on the path/cycle DP, which stores O(n) big-int coefficients whose
// sizes also grow with n.
inline constexpr int kDefaultDpCap = 10000;

namespace detail {

inline int clamp_cap(int cap) {
    return std::clamp(cap, 0, kMaxVertices);
}

inline int initial_enumeration_cap() {
    if (const char* env = std::getenv("DOMPOLY_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return clamp_cap(static_cast<int>(v));
    }
    return kDefaultEnumerationCap;
}

struct Config {
    int enumeration_cap = initial_enumeration_cap();
    int dp_cap = kDefaultDpCap;
    int threads = 0; // 0 = hardware concurrency
};

inline Config& config() {
    static Config cfg;
    return cfg;
}

} // namespace detail

inline int enumeration_cap() { return detail::config().enumeration_cap; }

inline void set_enumeration_cap(int cap) {
    detail::config().enumeration_cap = detail::clamp_cap(cap);
}

inline int dp_cap() { return detail::config().dp_cap; }
inline void set_dp_cap(int cap) { detail::config().dp_cap = std::max(cap, 0); }

// Worker count used by the counting backends when the caller passes 0.
inline int worker_threads() {
    int t = detail::config().threads;
    if (t > 0) return t;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

inline void set_worker_threads(int threads) {
    detail::config().threads = std::max(threads, 0);
}

} // namespace dompoly

#pragma once

// Minimal property-test driver: a seeded generator produces cases, the
// property returns an empty string on success or a description of the
// failure. The first failure is reported with its seed and case index.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace prop {

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    // log-uniform on [lo, hi], lo > 0
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }
    bool coin() { return integer(0, 1) == 1; }
};

template <class Case, class Make, class Check>
void for_all(std::uint64_t seed, int count, Make&& make, Check&& check) {
    Gen g(seed);
    for (int i = 0; i < count; ++i) {
        Case c = make(g);
        const std::string why = check(c);
        if (!why.empty()) {
            ADD_FAILURE() << "property failed at case " << i << " (seed " << seed << "): " << why;
            return;
        }
    }
}

inline std::string fail_if(bool bad, const std::string& msg) { return bad ? msg : std::string(); }

template <class... T>
std::string str(const T&... parts) {
    std::ostringstream os;
    os.precision(17);
    (os << ... << parts);
    return os.str();
}

}  // namespace prop

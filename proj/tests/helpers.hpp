#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "dimlaw/linalg.hpp"
#include "dimlaw/rational.hpp"
#include "dimlaw/rng.hpp"

namespace testutil {

inline dimlaw::RatVec rv(std::initializer_list<const char*> entries) {
    dimlaw::RatVec out;
    for (const char* e : entries) out.push_back(dimlaw::parse_rational(e));
    return out;
}

inline dimlaw::RatVec iv(std::initializer_list<long long> entries) {
    dimlaw::RatVec out;
    for (long long e : entries) out.push_back(dimlaw::Rational(e));
    return out;
}

inline dimlaw::RatMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<dimlaw::RatVec> rvs;
    for (const auto& r : rows) rvs.push_back(iv(r));
    return dimlaw::RatMatrix::from_rows(rvs);
}

// Dimension matrices of the bundled studies, hand-entered so the linalg
// tests do not depend on the parser.
inline dimlaw::RatMatrix impact4_matrix() {
    return mat({{1, -1, 1, 0}, {0, 1, 0, 0}, {0, 0, -1, -1}, {0, -1, 0, 2}});
}

inline dimlaw::RatMatrix impact5_cost_matrix() {
    return mat({{1, -1, 1, 0, 0}, {0, 1, 0, 0, 1}, {0, 0, -1, -1, 0}, {0, -1, 0, 2, 0}});
}

inline dimlaw::RatMatrix impact5_time_matrix() {
    return mat({{1, -1, 1, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, -1, -1, 1}, {0, -1, 0, 2, 0}});
}

inline dimlaw::RatMatrix pendulum3_matrix() {
    return mat({{1, 0, 1}, {0, 1, 0}, {0, 0, -2}});
}

inline dimlaw::RatMatrix pendulum4_matrix() {
    return mat({{1, 0, 1, 1}, {0, 1, 0, 0}, {0, 0, -2, 0}});
}

/// Uniform random integer in [lo, hi], both inclusive.
inline long long rand_int(dimlaw::SplitMix64& rng, long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(rng.next_u64() % span);
}

inline dimlaw::Rational rand_rational(dimlaw::SplitMix64& rng, long long max_abs_num = 6,
                                      long long max_den = 4) {
    return dimlaw::Rational(rand_int(rng, -max_abs_num, max_abs_num),
                            rand_int(rng, 1, max_den));
}

inline dimlaw::RatMatrix rand_int_matrix(dimlaw::SplitMix64& rng, std::size_t max_rows,
                                         std::size_t max_cols, long long max_abs_entry) {
    const auto m = static_cast<std::size_t>(rand_int(rng, 1, static_cast<long long>(max_rows)));
    const auto n = static_cast<std::size_t>(rand_int(rng, 1, static_cast<long long>(max_cols)));
    dimlaw::RatMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = dimlaw::Rational(rand_int(rng, -max_abs_entry, max_abs_entry));
    return a;
}

}  // namespace testutil

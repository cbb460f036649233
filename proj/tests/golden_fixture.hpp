#pragma once

// Shared golden fixture: a 2x5 sketch (phi = 0.025, exponential decay with
// lambda = 0.999, landmark 0) pre-loaded with a known state after 1000
// updates over the universe [1, 20], with a pinned item-to-column mapping.
// Replaying items 6 (t = 1001) and 5 (t = 1002) and querying with
// normalizer 2.725 must reproduce the frozen counter values and the
// candidate set {2, 3, 5, 6}.

#include <cmath>
#include <cstdint>
#include <map>

#include "fdcmss/decay.hpp"
#include "fdcmss/sketch.hpp"

namespace golden {

inline constexpr double kLambda = 0.999;
inline constexpr double kPhi = 0.025;
inline constexpr double kNormalizer = 2.725;
inline constexpr double kNormalizedTotal = 632.671;

// Query time whose normalizer g(t - 0) is exactly 2.725.
inline double query_time() {
    return std::log(kNormalizer) / std::log(1.0 / kLambda);
}

// Pinned item -> column mapping per row (0-based).
inline std::uint32_t column(std::size_t row, std::uint32_t item) {
    static const std::map<std::pair<std::size_t, std::uint32_t>, std::uint32_t>
        table = {
            {{0, 2}, 0},  {{0, 4}, 2},  {{0, 5}, 0},  {{0, 3}, 1},
            {{0, 14}, 1}, {{0, 12}, 2}, {{0, 17}, 2}, {{0, 10}, 3},
            {{0, 18}, 3}, {{0, 6}, 4},  {{0, 11}, 4}, {{0, 7}, 2},
            {{0, 8}, 2},  {{0, 16}, 2},
            {{1, 4}, 0},  {{1, 12}, 0}, {{1, 14}, 1}, {{1, 16}, 1},
            {{1, 10}, 1}, {{1, 6}, 2},  {{1, 7}, 2},  {{1, 2}, 3},
            {{1, 8}, 3},  {{1, 3}, 4},  {{1, 5}, 4},
        };
    const auto it = table.find({row, item});
    return it != table.end() ? it->second : 0;
}

// State after the first 1000 updates.
inline fdcmss::FdcmssSketch make_sketch() {
    using fdcmss::DecaySpec;
    fdcmss::FdcmssSketch sketch(2, 5, kPhi,
                                DecaySpec::exponential(kLambda, 0.0), 0);
    sketch.set_row_hasher(&column);

    struct Cell { std::size_t row, col; std::uint32_t i1; double f1;
                  std::uint32_t i2; double f2; };
    constexpr Cell cells[] = {
        {0, 0, 2, 555.33, 4, 537.23},  {0, 1, 3, 262.06, 14, 103.54},
        {0, 2, 12, 36.55, 17, 14.78},  {0, 3, 10, 52.27, 18, 21.88},
        {0, 4, 6, 98.22, 11, 36.76},
        {1, 0, 4, 172.20, 12, 109.28}, {1, 1, 14, 36.40, 16, 35.78},
        {1, 2, 6, 125.75, 7, 125.15},  {1, 3, 2, 539.78, 8, 117.33},
        {1, 4, 3, 263.07, 10, 193.90},
    };
    for (const Cell& c : cells) {
        sketch.inject_counter(c.row, c.col, 0, c.i1, c.f1);
        sketch.inject_counter(c.row, c.col, 1, c.i2, c.f2);
    }

    // total chosen so that after the two replayed updates the raw total
    // matches the frozen normalized total
    const DecaySpec decay = DecaySpec::exponential(kLambda, 0.0);
    sketch.set_total_count(kNormalizedTotal * kNormalizer -
                           decay.raw_weight(1001.0) - decay.raw_weight(1002.0));
    return sketch;
}

// State after also processing item 6 at t=1001 and item 5 at t=1002.
inline fdcmss::FdcmssSketch make_replayed_sketch() {
    fdcmss::FdcmssSketch sketch = make_sketch();
    sketch.process(6, 1001.0);
    sketch.process(5, 1002.0);
    return sketch;
}

}  // namespace golden

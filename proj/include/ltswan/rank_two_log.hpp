#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "ltswan/rational.hpp"

namespace ltswan {

/// Minus-log coordinates (-log_q h_flat, #h) of a rank-two valuation value h.
///
/// Ordering caveat: a larger flat part means a SMALLER value h. Use cmp_value
/// to compare as values; operator== is plain field equality.
struct RankTwoLog {
    Rational flat;
    std::int64_t sharp = 0;

    RankTwoLog() = default;
    RankTwoLog(Rational f, std::int64_t s) : flat(std::move(f)), sharp(s) { flat.canonicalize(); }

    friend bool operator==(const RankTwoLog& a, const RankTwoLog& b) {
        return a.flat == b.flat && a.sharp == b.sharp;
    }
};

/// Orders a and b as valuation values h (not as minus-log pairs).
std::strong_ordering cmp_value(const RankTwoLog& a, const RankTwoLog& b);

/// Multiplies the sharp part by the extension degree; the flat part is unchanged.
RankTwoLog scale_sharp(const RankTwoLog& v, std::int64_t degree);

std::string to_string(const RankTwoLog& v);

}  // namespace ltswan

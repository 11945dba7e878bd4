#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltswan/class_function.hpp"
#include "ltswan/ramify.hpp"

namespace ltswan {

/// flat + sharp * t, sharp unchanged. t is the end coordinate.
RankTwoLog slide(const RankTwoLog& h, const Rational& t);

/// The filtration of filt.group with every value slid by t; throws when some value passes h_0.
Filtration slide_filtration(const Filtration& filt, const Rational& t);

struct ProfilePiece {
    Rational s_lo, s_hi;
    Rational t_lo, t_hi;
    Rational delta_intercept;  // delta at s_lo
    Rational delta_slope;      // d delta / ds
    std::int64_t sw = 0;
    std::size_t group_order = 0;
};

/**
 * delta and sw along the sweep. Pieces are in the base coordinate s with
 * ds = |H| dt, H the current stabilizer, so that the slope of delta is sw.
 */
struct Profile {
    std::vector<Rational> breakpoints;  // interior breakpoints in s
    std::vector<ProfilePiece> pieces;
    std::string validity = "ok";  // or "structural-break"
    std::optional<Rational> truncated_at;

    Rational delta_at(const Rational& s) const;
};

/// Sweeps s over [0, s_max]. chi lives on a group containing filt.group.
Profile sweep(const ClassFunction& chi, const Filtration& filt, const Rational& s_max);

/// First t > 0 where delta has a kink: the earliest death of a value whose
/// elements carry nonzero weight chi(1) - Re chi(sigma). nullopt when none does.
std::optional<Rational> first_break(const ClassFunction& chi, const Filtration& filt);

/// Direct evaluation of the clamped sum sum_{sigma != 1} max(0, flat(sigma) + sharp(sigma) t)(chi(1) - Re chi(sigma)).
Rational clamped_delta(const ClassFunction& chi, const Filtration& filt, const Rational& t);

/// First kink of clamped_delta located by sampling t = k/grid, k = 0..grid*t_max,
/// then solved exactly as the intersection of the two affine pieces around it.
std::optional<Rational> sampled_first_break(const ClassFunction& chi, const Filtration& filt, std::int64_t grid,
                                            const Rational& t_max);

}  // namespace ltswan

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ltswan/class_function.hpp"
#include "ltswan/matrix_group.hpp"
#include "ltswan/rank_two_log.hpp"

namespace ltswan {

/// A ramification function: -Log h(sigma), nullopt for the identity.
using HFunction = std::function<std::optional<RankTwoLog>(const GL2Elem&)>;

/// Closed form of -Log h_y(sigma) on G_y = {(a, b; 0, a^{-1})}.
/// Returns nullopt for sigma = 1; throws std::invalid_argument outside G_y.
std::optional<RankTwoLog> h_of(const GL2Elem& sigma, const ResidueRing& R);

struct Jump {
    RankTwoLog h;
    std::vector<GL2Elem> members;  // G_h = {s : h(s) <= h}, identity included
    std::string descriptor;
    std::size_t order() const { return members.size(); }
};

/**
 * Lower-numbered filtration of a finite group H by a ramification function.
 *
 * Jumps are the realized values below h_0 = (0,0), listed with h decreasing
 * (flat increasing). Elements valued exactly h_0 are tame and form no jump.
 */
struct Filtration {
    GroupPtr group;
    std::vector<std::optional<RankTwoLog>> h;  // indexed like group->elements()
    std::vector<Jump> jumps;

    const std::optional<RankTwoLog>& h_at(const GL2Elem& x) const;
};

/// Builds the filtration of H; throws NotSubgroup when some G_h is not a subgroup and
/// std::invalid_argument when hfun is not a class function or exceeds h_0.
Filtration filtration_from(const GroupPtr& H, const HFunction& hfun);

/// The Lubin-Tate filtration on G_y, with closed-form jump descriptors.
Filtration lubin_tate_filtration(const RingPtr& ring);

struct UpperJump {
    Rational flat;
    Rational sharp;
    friend bool operator==(const UpperJump&, const UpperJump&) = default;
};

/// Herbrand prefix sums: #g_i = sum_{j<=i} (#h_j - #h_{j-1}) |G_{h_j}|/|G|,
/// flat(g_i) = sum_{j<=i} (flat_j - flat_{j-1}) |G_{h_j}|, with h_0 = (0,0).
std::vector<UpperJump> herbrand_upper(const Filtration& filt);

/// sw(s) = -#h(s) for s != 1, sw(1) = sum of #h(s).
ClassFunction sw_class_function(const Filtration& filt);
/// delta(s) = -|H| flat(s) for s != 1, delta(1) = sum of |H| flat(s).
ClassFunction delta_class_function(const Filtration& filt);

}  // namespace ltswan

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ltswan/report.hpp"

namespace ltswan {

struct CheckResult {
    std::string target;
    std::string ring;
    bool pass = false;
    Json detail;
};

Json check_json(const CheckResult& r);

/// Closed-form lower jumps (value, order) of G_y: (0, q^{2i}-1) of order q^{2n-i} for
/// i < n, then (1/((q-1)q^{n-j-1}), -q^{2n-1}-1) of order q^{n-j} for j = 0..n-1.
std::vector<std::pair<RankTwoLog, std::size_t>> closed_form_jumps(std::int64_t q, std::int64_t n);
/// Closed-form upper numbering: sharps (q+1)(1+...+q^{i-1}) then -(q+1)/(q-1), last flat (nq-n+1)/(q-1).
std::vector<UpperJump> closed_form_upper(std::int64_t q, std::int64_t n);

CheckResult check_gyprop(const RingPtr& ring);
CheckResult check_gycor(const RingPtr& ring);
CheckResult check_thm1(const RingPtr& ring, std::uint64_t cap);
CheckResult check_thm2(const RingPtr& ring, std::uint64_t cap);
CheckResult check_scprop(const RingPtr& ring, std::uint64_t cap);
/// Fixed-space dimensions of u_n(eps) over the upper jump subgroups only.
CheckResult check_sclem(const RingPtr& ring, std::uint64_t cap);
/// Newton-polygon valuations of u_m, v_m and the unipotent jump values against the filtration of G_y.
CheckResult check_gylem4(const RingPtr& ring);
CheckResult check_tower(const RingPtr& ring);
CheckResult check_compose(const RingPtr& ring);
CheckResult check_stability(const RingPtr& ring, int trials, std::uint64_t seed);
/// Class route against break route for every irreducible of GL2, G_y and (n >= 2) K' at both ends.
CheckResult check_routes(const RingPtr& ring, std::uint64_t cap);
/// Sweep profiles of the unramified types.
CheckResult check_profile(const RingPtr& ring, std::uint64_t cap);

const std::vector<std::string>& verify_targets();

/// Runs one target, or every applicable one for "all". Throws std::invalid_argument on an unknown target.
std::vector<CheckResult> run_verify(const std::string& target, const RingPtr& ring, std::uint64_t cap,
                                    std::uint64_t seed);

}  // namespace ltswan

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltswan/char_table.hpp"
#include "ltswan/ramify.hpp"
#include "ltswan/types.hpp"

namespace ltswan {

struct RouteMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BreakDecomposition {
    std::vector<std::int64_t> fixed_dims;  // fixed_dim(chi, G_{h_i}), i = 1..l
    std::vector<std::int64_t> dims;        // dim V(gamma_i), i = 1..l
    std::int64_t tame_dim = 0;
};

/// chi must be defined on a group containing filt.group.
BreakDecomposition break_decomposition(const ClassFunction& chi, const Filtration& filt);

struct ConductorReport {
    std::int64_t rank = 0;
    std::int64_t sw = 0;
    Rational delta;
    BreakDecomposition breaks;
    std::int64_t sw_class_route = 0, sw_break_route = 0;
    Rational delta_class_route, delta_break_route;
};

/// Both routes; throws RouteMismatch when they disagree.
ConductorReport conductor(const ClassFunction& chi, const Filtration& filt);

/**
 * Compactly supported cohomology bookkeeping for the sheaf attached to chi.
 *
 * euler_c = rank + sw on a disk (one end), sw_1 + sw_2 on an annulus.
 * h2c = h0 = <chi, 1>; h1c = h2c - euler_c; the kernel of H^1_c -> H^1 has
 * dimension ends_invariants - h0, so h1p = h1c - (ends_invariants - h0).
 */
struct CohomologyReport {
    std::string cover;
    std::int64_t rank = 0;
    std::int64_t sw_total = 0;
    std::int64_t euler_c = 0;
    std::int64_t h0 = 0;
    std::int64_t h2c = 0;
    std::int64_t h1c = 0;
    std::int64_t ends_invariants = 0;
    std::int64_t correction = 0;  // ends_invariants - h0
    std::int64_t h1p = 0;
    bool vanishing = false;  // h0 = h2c = 0 and no invariants at the ends
};

/// Disk cover with Galois group chi.group and a single end with filtration filt.
CohomologyReport disk_cohomology(const ClassFunction& chi, const Filtration& filt);
/// Annulus cover with Galois group chi.group and two ends.
CohomologyReport annulus_cohomology(const ClassFunction& chi, const Filtration& end1, const Filtration& end2);

struct CandidateReport {
    std::size_t row = 0;
    std::int64_t dim = 0;
    ConductorReport end1;
    std::optional<ConductorReport> end2;
    CohomologyReport cohomology;
    bool sw_ok = false;
    bool delta_ok = false;
    bool h1p_ok = false;
    std::vector<std::string> values;  // serialized character values, for failure reports
};

struct TheoremReport {
    std::string name;
    std::string ring;
    std::int64_t expected_sw = 0;
    Rational expected_delta;
    std::int64_t expected_h1p = 0;
    std::int64_t hom_dim = 0;  // dimension bookkeeping derived from h1p
    std::vector<CandidateReport> candidates;
    bool pass() const;
    bool sw_pass() const;
    bool delta_pass() const;
    bool h1p_pass() const;
};

/// Unramified types on GL2(O/pi^n): sw = -(q+1)q^{n-1}, delta = (nq-n+1)q^{n-1}, h1p = 2q^{n-1}.
TheoremReport verify_theorem1(const RingPtr& ring, std::uint64_t cap = 1'000'000);
/// Ramified types on K': at both ends sw = -(q+1)q^{n-2}, delta = (nq-q-n)q^{n-2}; h1p = 2(q+1)q^{n-2}.
TheoremReport verify_theorem2(const RingPtr& ring, std::uint64_t cap = 1'000'000);

/// Filtration at the second end of the Iwahori cover: S = K' cap w G_y w^{-1}, h(s) = h_y(w^{-1} s w).
Filtration second_end_filtration(const RingPtr& ring, const GroupPtr& iwahori_group);

struct ScpropEntry {
    std::size_t eps = 0;
    bool irreducible = false;
    std::int64_t dim = 0;
    ConductorReport conductor;
    CohomologyReport cohomology;
    std::vector<std::int64_t> expected_fixed;
    std::vector<std::int64_t> expected_breaks;
    bool ok = false;
};

struct ScpropReport {
    std::string ring;
    std::int64_t expected_sw = 0;
    std::vector<ScpropEntry> entries;
    bool pass() const;
};

/// Every eps of exponent n: fixed dims over the jump subgroups, break dims, sw and h1p of u_n(eps).
ScpropReport verify_scprop(const RingPtr& ring, std::uint64_t cap = 1'000'000);

struct HomDims {
    std::int64_t unramified = 0;
    std::optional<std::int64_t> ramified;
};

/// 2 h1p(unramified type) and, for n >= 2, h1p(ramified type via K').
HomDims hom_dims_report(const TheoremReport& thm1, const std::optional<TheoremReport>& thm2);

}  // namespace ltswan

#include "ltswan/conductor.hpp"

namespace ltswan {

BreakDecomposition break_decomposition(const ClassFunction& chi, const Filtration& filt) {
    BreakDecomposition out;
    const std::int64_t rank = chi.degree();
    for (const auto& jump : filt.jumps) out.fixed_dims.push_back(fixed_dim(chi, jump.members));
    for (std::size_t i = 0; i < out.fixed_dims.size(); ++i) {
        const std::int64_t next = i + 1 < out.fixed_dims.size() ? out.fixed_dims[i + 1] : rank;
        const std::int64_t d = next - out.fixed_dims[i];
        if (d < 0) throw std::logic_error("break_decomposition: negative break dimension at jump " + std::to_string(i + 1));
        out.dims.push_back(d);
    }
    out.tame_dim = out.fixed_dims.empty() ? rank : out.fixed_dims.front();
    return out;
}

ConductorReport conductor(const ClassFunction& chi, const Filtration& filt) {
    ConductorReport out;
    out.rank = chi.degree();
    out.breaks = break_decomposition(chi, filt);
    const auto upper = herbrand_upper(filt);
    Rational sw = 0, delta = 0;
    for (std::size_t i = 0; i < upper.size(); ++i) {
        sw += upper[i].sharp * Rational(out.breaks.dims[i]);
        delta += upper[i].flat * Rational(out.breaks.dims[i]);
    }
    sw.canonicalize();
    delta.canonicalize();
    if (!is_integer(sw)) throw RouteMismatch("break route: Swan conductor " + to_string(sw) + " is not an integer");
    out.sw_break_route = to_int64(sw);
    out.delta_break_route = delta;

    const ClassFunction res = restrict_to(chi, filt.group);
    const Cyclotomic sw_pair = inner_product(sw_class_function(filt), res);
    const Cyclotomic delta_pair = inner_product(delta_class_function(filt), res);
    if (!sw_pair.is_rational() || !is_integer(sw_pair.rational_value()))
        throw RouteMismatch("class route: Swan pairing " + sw_pair.str() + " is not an integer");
    if (!delta_pair.is_rational()) throw RouteMismatch("class route: delta pairing " + delta_pair.str() + " is irrational");
    out.sw_class_route = sw_pair.integer_value();
    out.delta_class_route = delta_pair.rational_value();
    if (out.sw_class_route != out.sw_break_route || out.delta_class_route != out.delta_break_route)
        throw RouteMismatch("routes disagree: sw " + std::to_string(out.sw_class_route) + " vs " +
                            std::to_string(out.sw_break_route) + ", delta " + to_string(out.delta_class_route) + " vs " +
                            to_string(out.delta_break_route));
    out.sw = out.sw_class_route;
    out.delta = out.delta_class_route;
    return out;
}

namespace {

CohomologyReport finish(CohomologyReport r) {
    r.h2c = r.h0;
    r.h1c = r.h2c - r.euler_c;
    r.correction = r.ends_invariants - r.h0;
    r.h1p = r.h1c - r.correction;
    r.vanishing = r.h0 == 0 && r.ends_invariants == 0;
    if (r.h1p < 0) throw std::logic_error("negative parabolic cohomology dimension; character misused");
    return r;
}

}  // namespace

CohomologyReport disk_cohomology(const ClassFunction& chi, const Filtration& filt) {
    CohomologyReport r;
    r.cover = "disk";
    r.rank = chi.degree();
    r.sw_total = conductor(chi, filt).sw;
    r.euler_c = r.rank + r.sw_total;
    r.h0 = fixed_dim(chi, *chi.group);
    r.ends_invariants = fixed_dim(chi, *filt.group);
    return finish(r);
}

CohomologyReport annulus_cohomology(const ClassFunction& chi, const Filtration& end1, const Filtration& end2) {
    CohomologyReport r;
    r.cover = "annulus";
    r.rank = chi.degree();
    r.sw_total = conductor(chi, end1).sw + conductor(chi, end2).sw;
    r.euler_c = r.sw_total;
    r.h0 = fixed_dim(chi, *chi.group);
    r.ends_invariants = fixed_dim(chi, *end1.group) + fixed_dim(chi, *end2.group);
    return finish(r);
}

namespace {

std::vector<std::string> serialize_values(const ClassFunction& chi) {
    std::vector<std::string> out;
    for (const auto& v : chi.values) out.push_back(v.str());
    return out;
}

bool all_of_candidates(const TheoremReport& r, bool CandidateReport::*field) {
    if (r.candidates.empty()) return false;
    for (const auto& c : r.candidates)
        if (!(c.*field)) return false;
    return true;
}

}  // namespace

bool TheoremReport::sw_pass() const { return all_of_candidates(*this, &CandidateReport::sw_ok); }
bool TheoremReport::delta_pass() const { return all_of_candidates(*this, &CandidateReport::delta_ok); }
bool TheoremReport::h1p_pass() const { return all_of_candidates(*this, &CandidateReport::h1p_ok); }
bool TheoremReport::pass() const { return sw_pass() && delta_pass() && h1p_pass(); }

TheoremReport verify_theorem1(const RingPtr& ring, std::uint64_t cap) {
    const std::int64_t q = ring->q(), n = ring->n();
    const std::int64_t qn1 = ipow(q, static_cast<unsigned>(n - 1));
    TheoremReport report;
    report.name = "unramified";
    report.ring = ring->spec();
    report.expected_sw = -(q + 1) * qn1;
    report.expected_delta = Rational(n * q - n + 1) * Rational(qn1);
    report.expected_h1p = 2 * qn1;

    const GroupPtr G = enumerate_gl2(ring, cap);
    const CharTable table = dixon_table(G);
    const UnitCharacters units = unit_characters(ring);
    const auto k_tower = congruence_tower(ring, G);
    const auto unipotents = unipotent_tower(ring);
    const Filtration filt = lubin_tate_filtration(ring);
    for (std::size_t row : unramified_type_candidates(table, units, k_tower, unipotents)) {
        const auto& chi = table.irreducibles[row];
        CandidateReport c;
        c.row = row;
        c.dim = chi.degree();
        c.end1 = conductor(chi, filt);
        c.cohomology = disk_cohomology(chi, filt);
        c.sw_ok = c.end1.sw == report.expected_sw;
        c.delta_ok = c.end1.delta == report.expected_delta;
        c.h1p_ok = c.cohomology.h1p == report.expected_h1p;
        c.values = serialize_values(chi);
        report.candidates.push_back(std::move(c));
    }
    if (!report.candidates.empty()) report.hom_dim = 2 * report.candidates.front().cohomology.h1p;
    return report;
}

Filtration second_end_filtration(const RingPtr& ring, const GroupPtr& iwahori_group) {
    const ResidueRing& R = *ring;
    const GL2Elem w{0, 1, 1, 0};
    const GroupPtr lower = conjugate(borel_stabilizer(ring), inverse(R, w), "w G_y w^-1");
    const GroupPtr S = intersect(lower, iwahori_group, "K' cap w G_y w^-1");
    return filtration_from(S, [&R, w](const GL2Elem& s) { return h_of(conj_by(R, s, w), R); });
}

TheoremReport verify_theorem2(const RingPtr& ring, std::uint64_t cap) {
    const std::int64_t q = ring->q(), n = ring->n();
    if (n < 2) throw std::invalid_argument("ramified types need n >= 2");
    if (gl2_order(*ring) > cap) throw CapExceeded("|GL2(" + ring->spec() + ")| exceeds cap");
    const std::int64_t qn2 = ipow(q, static_cast<unsigned>(n - 2));
    TheoremReport report;
    report.name = "ramified";
    report.ring = ring->spec();
    report.expected_sw = -(q + 1) * qn2;
    report.expected_delta = Rational(n * q - q - n) * Rational(qn2);
    report.expected_h1p = 2 * (q + 1) * qn2;

    const GroupPtr K1 = iwahori(ring);
    const CharTable table = dixon_table(K1);
    const auto layers = iwahori_tower(ring);
    const auto unipotents = unipotent_tower(ring);
    const Filtration end1 = lubin_tate_filtration(ring);
    const Filtration end2 = second_end_filtration(ring, K1);
    for (std::size_t row : ramified_type_candidates(table, layers, unipotents)) {
        const auto& chi = table.irreducibles[row];
        CandidateReport c;
        c.row = row;
        c.dim = chi.degree();
        c.end1 = conductor(chi, end1);
        c.end2 = conductor(chi, end2);
        c.cohomology = annulus_cohomology(chi, end1, end2);
        c.sw_ok = c.end1.sw == report.expected_sw && c.end2->sw == report.expected_sw;
        c.delta_ok = c.end1.delta == report.expected_delta && c.end2->delta == report.expected_delta;
        c.h1p_ok = c.cohomology.h1p == report.expected_h1p;
        c.values = serialize_values(chi);
        report.candidates.push_back(std::move(c));
    }
    if (!report.candidates.empty()) report.hom_dim = report.candidates.front().cohomology.h1p;
    return report;
}

bool ScpropReport::pass() const {
    if (entries.empty()) return false;
    for (const auto& e : entries)
        if (!e.ok) return false;
    return true;
}

ScpropReport verify_scprop(const RingPtr& ring, std::uint64_t cap) {
    const std::int64_t q = ring->q(), n = ring->n();
    ScpropReport report;
    report.ring = ring->spec();
    report.expected_sw = -(q + 1) * ipow(q, static_cast<unsigned>(n - 1));
    const GroupPtr G = enumerate_gl2(ring, cap);
    const UnitCharacters units = unit_characters(ring);
    const Filtration filt = lubin_tate_filtration(ring);

    std::vector<std::int64_t> expected_fixed, expected_breaks;
    for (std::int64_t i = 1; i <= 2 * n - 1; ++i) {
        expected_fixed.push_back(i <= n - 1 ? 0 : 1 + ipow(q, static_cast<unsigned>(i - n)));
        std::int64_t b = 0;
        if (i == 2 * n - 1)
            b = ipow(q, static_cast<unsigned>(n)) - 1;
        else if (i >= n)
            b = ipow(q, static_cast<unsigned>(i - n + 1)) - ipow(q, static_cast<unsigned>(i - n));
        else if (i == n - 1)
            b = 2;
        expected_breaks.push_back(b);
    }
    for (std::size_t eps : characters_of_exponent(units, static_cast<std::uint32_t>(n))) {
        const UChar u = u_character(G, units, eps);
        ScpropEntry e;
        e.eps = eps;
        e.irreducible = u.irreducible;
        e.dim = u.chi.degree();
        e.conductor = conductor(u.chi, filt);
        e.cohomology = disk_cohomology(u.chi, filt);
        e.expected_fixed = expected_fixed;
        e.expected_breaks = expected_breaks;
        e.ok = e.conductor.breaks.fixed_dims == expected_fixed && e.conductor.breaks.dims == expected_breaks &&
               e.conductor.sw == report.expected_sw && e.cohomology.h1p == 0 &&
               e.dim == (q + 1) * ipow(q, static_cast<unsigned>(n - 1));
        report.entries.push_back(std::move(e));
    }
    return report;
}

HomDims hom_dims_report(const TheoremReport& thm1, const std::optional<TheoremReport>& thm2) {
    HomDims out;
    out.unramified = thm1.hom_dim;
    if (thm2) out.ramified = thm2->hom_dim;
    return out;
}

}  // namespace ltswan

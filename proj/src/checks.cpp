#include "ltswan/checks.hpp"

#include <algorithm>
#include <stdexcept>

#include "ltswan/types.hpp"

namespace ltswan {

Json check_json(const CheckResult& r) {
    return Json{{"target", r.target}, {"ring", r.ring}, {"pass", r.pass}, {"detail", r.detail}};
}

std::vector<std::pair<RankTwoLog, std::size_t>> closed_form_jumps(std::int64_t q, std::int64_t n) {
    std::vector<std::pair<RankTwoLog, std::size_t>> out;
    for (std::int64_t i = 1; i <= n - 1; ++i)
        out.emplace_back(RankTwoLog(0, ipow(q, 2 * i) - 1), ipow(q, 2 * n - i));
    for (std::int64_t j = 0; j <= n - 1; ++j)
        out.emplace_back(RankTwoLog(make_rational(1, (q - 1) * ipow(q, n - j - 1)), -ipow(q, 2 * n - 1) - 1),
                         ipow(q, n - j));
    return out;
}

std::vector<UpperJump> closed_form_upper(std::int64_t q, std::int64_t n) {
    std::vector<UpperJump> out;
    std::int64_t geom = 0;
    for (std::int64_t i = 1; i <= 2 * n - 1; ++i) {
        if (i <= n - 1) {
            geom += ipow(q, i - 1);
            out.push_back({Rational(0), Rational((q + 1) * geom)});
        } else {
            // flats step by q/(q-1), then by 1 per wild jump
            out.push_back({make_rational(q, q - 1) + Rational(i - n), make_rational(-(q + 1), q - 1)});
        }
    }
    return out;
}

CheckResult check_gyprop(const RingPtr& ring) {
    CheckResult r{"gyprop", ring->spec(), true, {}};
    const auto filt = lubin_tate_filtration(ring);
    const auto expect = closed_form_jumps(ring->q(), ring->n());
    r.detail["filtration"] = filtration_json(filt);
    Json exp = Json::array();
    for (const auto& [h, order] : expect) exp.push_back({{"value", log_json(h)}, {"order", order}});
    r.detail["expected"] = exp;
    if (filt.jumps.size() != expect.size()) {
        r.pass = false;
        return r;
    }
    for (std::size_t k = 0; k < expect.size(); ++k)
        r.pass = r.pass && filt.jumps[k].h == expect[k].first && filt.jumps[k].order() == expect[k].second;
    return r;
}

CheckResult check_gycor(const RingPtr& ring) {
    CheckResult r{"gycor", ring->spec(), false, {}};
    const auto up = herbrand_upper(lubin_tate_filtration(ring));
    const auto expect = closed_form_upper(ring->q(), ring->n());
    r.detail = upper_json(up);
    r.detail["expected"] = upper_json(expect)["upper"];
    r.pass = up == expect;
    return r;
}

CheckResult check_thm1(const RingPtr& ring, std::uint64_t cap) {
    const auto rep = verify_theorem1(ring, cap);
    return {"thm1", ring->spec(), rep.pass(), theorem_json(rep)};
}

CheckResult check_thm2(const RingPtr& ring, std::uint64_t cap) {
    const auto rep = verify_theorem2(ring, cap);
    Json detail = theorem_json(rep);
    detail["sw_pass"] = rep.sw_pass();
    detail["delta_pass"] = rep.delta_pass();
    detail["h1p_pass"] = rep.h1p_pass();
    return {"thm2", ring->spec(), rep.pass(), detail};
}

CheckResult check_scprop(const RingPtr& ring, std::uint64_t cap) {
    const auto rep = verify_scprop(ring, cap);
    return {"scprop", ring->spec(), rep.pass(), scprop_json(rep)};
}

CheckResult check_sclem(const RingPtr& ring, std::uint64_t cap) {
    const auto rep = verify_scprop(ring, cap);
    CheckResult r{"sclem", ring->spec(), !rep.entries.empty(), {}};
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        const bool ok = e.conductor.breaks.fixed_dims == e.expected_fixed;
        r.pass = r.pass && ok;
        entries.push_back({{"eps", e.eps},
                           {"fixed_dims", e.conductor.breaks.fixed_dims},
                           {"expected_fixed", e.expected_fixed},
                           {"ok", ok}});
    }
    r.detail["entries"] = entries;
    return r;
}

CheckResult check_gylem4(const RingPtr& ring) {
    const std::int64_t q = ring->q();
    const std::uint32_t n = ring->n();
    CheckResult r{"gylem4", ring->spec(), true, {}};
    Json us = Json::array();
    for (const auto& u : u_valuations(q, n)) {
        const bool ok = u.flat == make_rational(1, (q - 1) * ipow(q, u.m - 1)) &&
                        u.normalized_sharp == Rational(-ipow(q, 2 * n - 1));
        r.pass = r.pass && ok;
        us.push_back({{"m", u.m},
                      {"flat", rational_json(u.flat)},
                      {"raw_sharp", rational_json(u.raw_sharp)},
                      {"level_sharp", rational_json(u.level_sharp)},
                      {"normalized_sharp", rational_json(u.normalized_sharp)},
                      {"ok", ok}});
    }
    Json vs = Json::array();
    for (const auto& v : v_valuations(q, n)) {
        const bool ok = v.normalized_sharp == Rational(ipow(q, 2 * (n - v.m)));
        r.pass = r.pass && ok;
        vs.push_back({{"m", v.m},
                      {"flat", rational_json(v.flat)},
                      {"level_sharp", rational_json(v.level_sharp)},
                      {"normalized_sharp", rational_json(v.normalized_sharp)},
                      {"ok", ok}});
    }
    // The wild jumps of G_y, read off the filtration, against sigma(v_n) - v_n.
    const auto filt = lubin_tate_filtration(ring);
    const auto derived = unipotent_jump_values(q, n);
    Json js = Json::array();
    for (std::uint32_t j = 0; j < n; ++j) {
        const auto& h = filt.jumps.at(n - 1 + j).h;
        const bool ok = h == derived[j];
        r.pass = r.pass && ok;
        js.push_back({{"j", j}, {"newton", log_json(derived[j])}, {"filtration", log_json(h)}, {"ok", ok}});
    }
    const auto model = lubin_tate_model(q);
    r.detail = Json{{"u", us}, {"v", vs}, {"jumps", js}, {"polygon", polygon_json(model, lower_hull(model))}};
    return r;
}

CheckResult check_tower(const RingPtr& ring) {
    const std::int64_t q = ring->q();
    const std::uint32_t n = ring->n();
    CheckResult r{"tower", ring->spec(), true, {}};
    const auto t = eisenstein_tower(q, n);
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        const bool ok = s.eisenstein && s.val_z == make_rational(1, (q - 1) * ipow(q, s.m - 1));
        r.pass = r.pass && ok;
        steps.push_back({{"m", s.m}, {"val_z", rational_json(s.val_z)}, {"ramification", s.ramification},
                         {"eisenstein", s.eisenstein}, {"ok", ok}});
    }
    const std::int64_t expect = (q - 1) * ipow(q, n - 1);
    r.pass = r.pass && t.degree == expect;
    r.detail = Json{{"steps", steps}, {"degree", t.degree}, {"expected_degree", expect}};
    return r;
}

CheckResult check_compose(const RingPtr& ring) {
    const auto c = residue_factorization(ring->p(), ring->f(), ring->n());
    return {"compose", ring->spec(), c.holds(), Json{{"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}}};
}

CheckResult check_stability(const RingPtr& ring, int trials, std::uint64_t seed) {
    const bool ok = slope_stability(ring->q(), ring->n(), trials, seed);
    return {"stability", ring->spec(), ok, Json{{"trials", trials}, {"seed", seed}}};
}

namespace {

// Counts irreducibles whose two routes agree and whose break data is sane.
void route_sweep(const CharTable& table, const Filtration& filt, const std::string& label, Json& rows, bool& pass) {
    std::size_t ok_count = 0;
    for (const auto& chi : table.irreducibles) {
        bool ok = true;
        try {
            const auto rep = conductor(chi, filt);
            std::int64_t total = rep.breaks.tame_dim;
            for (auto d : rep.breaks.dims) {
                ok = ok && d >= 0;
                total += d;
            }
            for (auto d : rep.breaks.fixed_dims) ok = ok && d >= 0;
            ok = ok && total == chi.degree() && rep.sw_class_route == rep.sw_break_route &&
                 rep.delta_class_route == rep.delta_break_route;
        } catch (const RouteMismatch&) {
            ok = false;
        }
        ok_count += ok ? 1 : 0;
    }
    pass = pass && ok_count == table.irreducibles.size();
    rows.push_back({{"group", label}, {"irreducibles", table.irreducibles.size()}, {"ok", ok_count}});
}

}  // namespace

CheckResult check_routes(const RingPtr& ring, std::uint64_t cap) {
    CheckResult r{"routes", ring->spec(), true, {}};
    Json rows = Json::array();
    const auto filt = lubin_tate_filtration(ring);
    route_sweep(dixon_table(enumerate_gl2(ring, cap)), filt, "GL2", rows, r.pass);
    route_sweep(dixon_table(filt.group), filt, "G_y", rows, r.pass);
    if (ring->n() >= 2) {
        const auto K1 = iwahori(ring);
        const auto table = dixon_table(K1);
        route_sweep(table, filt, "K' end 1", rows, r.pass);
        route_sweep(table, second_end_filtration(ring, K1), "K' end 2", rows, r.pass);
    }
    r.detail["groups"] = rows;
    return r;
}

CheckResult check_profile(const RingPtr& ring, std::uint64_t cap) {
    const std::int64_t q = ring->q(), n = ring->n();
    CheckResult r{"profile", ring->spec(), true, {}};
    const auto G = enumerate_gl2(ring, cap);
    const auto table = dixon_table(G);
    const auto rows = unramified_type_candidates(table, unit_characters(ring), congruence_tower(ring, G),
                                                 unipotent_tower(ring));
    const auto filt = lubin_tate_filtration(ring);
    const std::int64_t qn1 = ipow(q, n - 1);
    const std::int64_t expect_sw = -(q + 1) * qn1;
    const Rational expect_delta = Rational((n * q - n + 1) * qn1);
    const Rational expect_break = make_rational(1, (q - 1) * qn1 * (ipow(q, 2 * n - 1) + 1));
    r.pass = !rows.empty();
    Json out = Json::array();
    for (std::size_t row : rows) {
        const auto& chi = table.irreducibles[row];
        const Profile p = sweep(chi, filt, Rational(4));
        bool shape = !p.pieces.empty();
        for (std::size_t k = 0; k < p.pieces.size(); ++k) {
            const auto& x = p.pieces[k];
            const Rational end = x.delta_intercept + x.delta_slope * (x.s_hi - x.s_lo);
            shape = shape && x.delta_slope == Rational(x.sw) && x.delta_slope <= 0 && end >= 0;
            if (k == 0) continue;
            const auto& prev = p.pieces[k - 1];
            const Rational prev_end = prev.delta_intercept + prev.delta_slope * (prev.s_hi - prev.s_lo);
            shape = shape && prev.s_hi == x.s_lo && prev_end == x.delta_intercept && prev.delta_slope <= x.delta_slope;
        }
        const bool start = !p.pieces.empty() && p.pieces[0].delta_intercept == expect_delta &&
                           p.pieces[0].sw == expect_sw;
        const auto exact = first_break(chi, filt);
        std::optional<Rational> sampled;
        try {
            sampled = sampled_first_break(chi, filt, 4096, Rational(1));
        } catch (const std::logic_error&) {
            sampled.reset();
        }
        const bool brk = exact && sampled && *exact == expect_break && *sampled == expect_break;
        r.pass = r.pass && shape && start && brk;
        Json j{{"row", row}, {"shape_ok", shape}, {"start_ok", start}, {"break_ok", brk}, {"profile", profile_json(p)}};
        j["first_break"] = exact ? rational_json(*exact) : Json(nullptr);
        j["sampled_first_break"] = sampled ? rational_json(*sampled) : Json(nullptr);
        out.push_back(std::move(j));
    }
    r.detail = Json{{"expected_first_break", rational_json(expect_break)}, {"sheaves", out}};
    return r;
}

const std::vector<std::string>& verify_targets() {
    static const std::vector<std::string> targets{"gyprop", "gycor",  "thm1", "thm2",    "scprop",
                                                  "sclem",  "gylem4", "tower", "compose", "all"};
    return targets;
}

std::vector<CheckResult> run_verify(const std::string& target, const RingPtr& ring, std::uint64_t cap,
                                    std::uint64_t seed) {
    if (target == "gyprop") return {check_gyprop(ring)};
    if (target == "gycor") return {check_gycor(ring)};
    if (target == "thm1") return {check_thm1(ring, cap)};
    if (target == "thm2") return {check_thm2(ring, cap)};
    if (target == "scprop") return {check_scprop(ring, cap)};
    if (target == "sclem") return {check_sclem(ring, cap)};
    if (target == "gylem4") return {check_gylem4(ring)};
    if (target == "tower") return {check_tower(ring)};
    if (target == "compose") return {check_compose(ring)};
    if (target == "all") {
        std::vector<CheckResult> out{check_gyprop(ring), check_gycor(ring), check_thm1(ring, cap)};
        if (ring->n() >= 2) out.push_back(check_thm2(ring, cap));
        out.push_back(check_scprop(ring, cap));
        out.push_back(check_sclem(ring, cap));
        out.push_back(check_gylem4(ring));
        out.push_back(check_tower(ring));
        out.push_back(check_compose(ring));
        out.push_back(check_stability(ring, 100, seed));
        out.push_back(check_routes(ring, cap));
        out.push_back(check_profile(ring, cap));
        return out;
    }
    throw std::invalid_argument("unknown target: " + target);
}

}  // namespace ltswan

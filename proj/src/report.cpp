#include "ltswan/report.hpp"

#include <set>
#include <sstream>

namespace ltswan {

Json rational_json(const Rational& r) { return to_string(r); }

Json log_json(const RankTwoLog& h) { return Json{{"flat", rational_json(h.flat)}, {"sharp", h.sharp}}; }

Json cyclotomic_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(rational_json(x));
    return Json{{"m", c.conductor()}, {"coeffs", coeffs}};
}

Json filtration_json(const Filtration& filt) {
    Json jumps = Json::array();
    for (const auto& j : filt.jumps)
        jumps.push_back({{"flat", rational_json(j.h.flat)},
                         {"sharp", j.h.sharp},
                         {"order", j.order()},
                         {"subgroup", j.descriptor}});
    return Json{{"jumps", jumps}, {"group_order", filt.group->order()}};
}

Json upper_json(const std::vector<UpperJump>& up) {
    Json jumps = Json::array();
    for (std::size_t i = 0; i < up.size(); ++i)
        jumps.push_back({{"i", i + 1}, {"flat", rational_json(up[i].flat)}, {"sharp", rational_json(up[i].sharp)}});
    return Json{{"upper", jumps}};
}

Json chartable_json(const CharTable& table) {
    const auto& G = *table.group;
    Json classes = Json::array();
    for (std::size_t c = 0; c < G.class_count(); ++c)
        classes.push_back({{"rep", format(G.ring(), G.element(G.class_rep(c)))}, {"size", G.class_size(c)}});
    Json irr = Json::array();
    for (const auto& chi : table.irreducibles) {
        Json values = Json::array();
        for (const auto& v : chi.values) values.push_back(cyclotomic_json(v));
        irr.push_back({{"dim", chi.degree()}, {"values", values}});
    }
    return Json{{"group", G.descriptor()},
                {"group_order", G.order()},
                {"exponent", table.exponent},
                {"classes", classes},
                {"irreducibles", irr}};
}

Json conductor_json(const ConductorReport& rep) {
    return Json{{"rank", rep.rank},
                {"sw", rep.sw},
                {"delta", rational_json(rep.delta)},
                {"fixed_dims", rep.breaks.fixed_dims},
                {"break_dims", rep.breaks.dims},
                {"tame_dim", rep.breaks.tame_dim},
                {"class_route", {{"sw", rep.sw_class_route}, {"delta", rational_json(rep.delta_class_route)}}},
                {"break_route", {{"sw", rep.sw_break_route}, {"delta", rational_json(rep.delta_break_route)}}}};
}

Json cohomology_json(const CohomologyReport& rep) {
    return Json{{"cover", rep.cover},   {"rank", rep.rank},     {"sw_total", rep.sw_total},
                {"euler_c", rep.euler_c}, {"h0", rep.h0},       {"h2c", rep.h2c},
                {"h1c", rep.h1c},         {"ends_invariants", rep.ends_invariants},
                {"h1p", rep.h1p},         {"vanishing", rep.vanishing}};
}

Json theorem_json(const TheoremReport& rep) {
    Json cands = Json::array();
    for (const auto& c : rep.candidates) {
        Json j{{"row", c.row},
               {"dim", c.dim},
               {"end1", conductor_json(c.end1)},
               {"cohomology", cohomology_json(c.cohomology)},
               {"sw_ok", c.sw_ok},
               {"delta_ok", c.delta_ok},
               {"h1p_ok", c.h1p_ok}};
        if (c.end2) j["end2"] = conductor_json(*c.end2);
        if (!(c.sw_ok && c.delta_ok && c.h1p_ok)) j["values"] = c.values;
        cands.push_back(std::move(j));
    }
    return Json{{"name", rep.name},
                {"ring", rep.ring},
                {"expected", {{"sw", rep.expected_sw}, {"delta", rational_json(rep.expected_delta)}, {"h1p", rep.expected_h1p}}},
                {"hom_dim", rep.hom_dim},
                {"candidates", cands},
                {"pass", rep.pass()}};
}

Json scprop_json(const ScpropReport& rep) {
    Json entries = Json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"eps", e.eps},
                           {"irreducible", e.irreducible},
                           {"dim", e.dim},
                           {"conductor", conductor_json(e.conductor)},
                           {"cohomology", cohomology_json(e.cohomology)},
                           {"expected_fixed", e.expected_fixed},
                           {"expected_breaks", e.expected_breaks},
                           {"ok", e.ok}});
    return Json{{"ring", rep.ring}, {"expected_sw", rep.expected_sw}, {"entries", entries}, {"pass", rep.pass()}};
}

Json profile_json(const Profile& p) {
    Json bps = Json::array();
    for (const auto& b : p.breakpoints) bps.push_back(rational_json(b));
    Json pieces = Json::array();
    for (const auto& x : p.pieces)
        pieces.push_back({{"s_lo", rational_json(x.s_lo)},
                          {"s_hi", rational_json(x.s_hi)},
                          {"t_lo", rational_json(x.t_lo)},
                          {"t_hi", rational_json(x.t_hi)},
                          {"delta_intercept", rational_json(x.delta_intercept)},
                          {"delta_slope", rational_json(x.delta_slope)},
                          {"sw", x.sw},
                          {"group_order", x.group_order}});
    Json out{{"breakpoints", bps}, {"pieces", pieces}, {"validity", p.validity}};
    if (p.truncated_at) out["truncated_at"] = rational_json(*p.truncated_at);
    return out;
}

namespace {
Json val_json(const Val2& v) { return Json{{"pi", rational_json(v.pi)}, {"t", rational_json(v.t)}}; }
}  // namespace

Json polygon_json(const ValuedPoly& points, const NewtonPolygon& hull) {
    Json pts = Json::array();
    for (const auto& p : points) pts.push_back({{"x", p.exponent}, {"val", val_json(p.val)}});
    Json verts = Json::array();
    for (const auto& p : hull.vertices) verts.push_back({{"x", p.exponent}, {"val", val_json(p.val)}});
    Json slopes = Json::array();
    for (const auto& s : hull.segments)
        slopes.push_back({{"x0", s.x0}, {"x1", s.x1}, {"slope", val_json(s.slope)}, {"root_val", val_json(s.root_val())}});
    return Json{{"points", pts}, {"hull", verts}, {"slopes", slopes}};
}

namespace {

std::string csv_cell(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

}  // namespace

std::string json_rows_to_csv(const Json& rows) {
    if (!rows.is_array()) throw std::invalid_argument("csv: expected an array of rows");
    std::set<std::string> keys;
    for (const auto& r : rows) {
        if (!r.is_object()) throw std::invalid_argument("csv: rows must be objects");
        for (auto it = r.begin(); it != r.end(); ++it) keys.insert(it.key());
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& k : keys) {
        out << (first ? "" : ",") << k;
        first = false;
    }
    out << '\n';
    for (const auto& r : rows) {
        first = true;
        for (const auto& k : keys) {
            out << (first ? "" : ",");
            if (r.contains(k)) out << csv_cell(r.at(k));
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace ltswan

// ltswan: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error (cap overruns included).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ltswan/checks.hpp"
#include "ltswan/types.hpp"

using namespace ltswan;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string ring = "2:1:1:mixed";
    std::string rep = "type:unramified";
    std::string target = "all";
    std::string check = "valuations";
    std::string format = "json";
    std::string out;
    std::string s_max = "2";
    std::uint64_t cap = 1'000'000;
    std::uint64_t seed = 2024;
};

// A representation together with the ends it is measured at.
struct RepSheaf {
    std::string label;
    ClassFunction chi;
    Filtration end1;
    std::optional<Filtration> end2;
};

std::vector<RepSheaf> resolve_rep(const std::string& spec, const RingPtr& ring, std::uint64_t cap) {
    const Filtration filt = lubin_tate_filtration(ring);
    std::vector<RepSheaf> out;
    if (spec == "type:unramified" || spec.rfind("irr:", 0) == 0 || spec.rfind("u:eps=", 0) == 0) {
        const GroupPtr G = enumerate_gl2(ring, cap);
        if (spec.rfind("u:eps=", 0) == 0) {
            std::size_t eps = 0;
            try {
                eps = std::stoul(spec.substr(6));
            } catch (const std::exception&) {
                throw UsageError("bad eps index in '" + spec + "'");
            }
            const auto units = unit_characters(ring);
            if (eps >= units.size()) throw UsageError("eps index out of range: " + spec);
            out.push_back({spec, u_character(G, units, eps).chi, filt, std::nullopt});
            return out;
        }
        const CharTable table = dixon_table(G);
        if (spec == "type:unramified") {
            for (std::size_t row : unramified_type_candidates(table, unit_characters(ring), congruence_tower(ring, G),
                                                              unipotent_tower(ring)))
                out.push_back({"irr:" + std::to_string(row), table.irreducibles[row], filt, std::nullopt});
            return out;
        }
        std::size_t row = 0;
        try {
            row = std::stoul(spec.substr(4));
        } catch (const std::exception&) {
            throw UsageError("bad row in '" + spec + "'");
        }
        if (row >= table.irreducibles.size()) throw UsageError("row out of range: " + spec);
        out.push_back({spec, table.irreducibles[row], filt, std::nullopt});
        return out;
    }
    if (spec == "type:ramified") {
        if (ring->n() < 2) throw UsageError("type:ramified needs n >= 2");
        const GroupPtr K1 = iwahori(ring);
        const CharTable table = dixon_table(K1);
        const Filtration second = second_end_filtration(ring, K1);
        for (std::size_t row : ramified_type_candidates(table, iwahori_tower(ring), unipotent_tower(ring)))
            out.push_back({"iwahori:" + std::to_string(row), table.irreducibles[row], filt, second});
        return out;
    }
    throw UsageError("unknown representation spec '" + spec + "'");
}

// Rows used for the CSV projection of a JSON report.
Json csv_rows(const std::string& command, const Json& report) {
    if (command == "filtration") return report.at("jumps");
    if (command == "upper") return report.at("upper");
    if (command == "chartable") return report.at("irreducibles");
    if (command == "conductor") {
        Json rows = Json::array();
        for (const auto& r : report.at("reps")) {
            for (const char* end : {"end1", "end2"}) {
                if (!r.contains(end)) continue;
                Json row = r.at(end);
                row["rep"] = r.at("rep");
                row["end"] = end;
                rows.push_back(std::move(row));
            }
        }
        return rows;
    }
    if (command == "profile") {
        Json rows = Json::array();
        for (const auto& r : report.at("reps"))
            for (const auto& piece : r.at("profile").at("pieces")) {
                Json row = piece;
                row["rep"] = r.at("rep");
                row["validity"] = r.at("profile").at("validity");
                rows.push_back(std::move(row));
            }
        return rows;
    }
    if (command == "verify" || command == "newton") {
        Json rows = Json::array();
        for (const auto& c : report.at("checks"))
            rows.push_back({{"target", c.at("target")}, {"ring", c.at("ring")}, {"pass", c.at("pass")}});
        return rows;
    }
    throw UsageError("no csv projection for " + command);
}

void emit(const Config& cfg, const std::string& command, const Json& report) {
    const std::string text = cfg.format == "csv" ? json_rows_to_csv(csv_rows(command, report)) : report.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
}

Json checks_report(const std::vector<CheckResult>& results, bool& pass) {
    Json checks = Json::array();
    pass = true;
    for (const auto& r : results) {
        pass = pass && r.pass;
        checks.push_back(check_json(r));
    }
    return Json{{"checks", checks}, {"pass", pass}};
}

int run(const std::string& command, const Config& cfg) {
    RingPtr ring;
    try {
        ring = parse_ring(cfg.ring);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (command == "filtration") {
        Json rep = filtration_json(lubin_tate_filtration(ring));
        rep["ring"] = ring->spec();
        emit(cfg, command, rep);
        return 0;
    }
    if (command == "upper") {
        Json rep = upper_json(herbrand_upper(lubin_tate_filtration(ring)));
        rep["ring"] = ring->spec();
        emit(cfg, command, rep);
        return 0;
    }
    if (command == "chartable") {
        Json rep = chartable_json(dixon_table(enumerate_gl2(ring, cfg.cap)));
        rep["ring"] = ring->spec();
        emit(cfg, command, rep);
        return 0;
    }
    if (command == "conductor" || command == "profile") {
        Rational s_max;
        if (command == "profile") {
            try {
                s_max = parse_rational(cfg.s_max);
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            if (s_max <= 0) throw UsageError("--s-max must be positive");
        }
        Json reps = Json::array();
        for (const auto& r : resolve_rep(cfg.rep, ring, cfg.cap)) {
            Json j{{"rep", r.label}, {"dim", r.chi.degree()}};
            if (command == "conductor") {
                j["end1"] = conductor_json(conductor(r.chi, r.end1));
                if (r.end2) j["end2"] = conductor_json(conductor(r.chi, *r.end2));
            } else {
                j["profile"] = profile_json(sweep(r.chi, r.end1, s_max));
                const auto fb = first_break(r.chi, r.end1);
                j["first_break"] = fb ? rational_json(*fb) : Json(nullptr);
            }
            reps.push_back(std::move(j));
        }
        emit(cfg, command, Json{{"ring", ring->spec()}, {"reps", reps}});
        return 0;
    }
    if (command == "verify") {
        std::vector<CheckResult> results;
        try {
            results = run_verify(cfg.target, ring, cfg.cap, cfg.seed);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        bool pass = false;
        const Json rep = checks_report(results, pass);
        emit(cfg, command, rep);
        return pass ? 0 : 1;
    }
    if (command == "newton") {
        CheckResult r;
        if (cfg.check == "valuations")
            r = check_gylem4(ring);
        else if (cfg.check == "tower")
            r = check_tower(ring);
        else if (cfg.check == "compose")
            r = check_compose(ring);
        else
            r = check_stability(ring, 100, cfg.seed);
        bool pass = false;
        const Json rep = checks_report({r}, pass);
        emit(cfg, command, rep);
        return pass ? 0 : 1;
    }
    throw UsageError("no command given");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramification filtrations, conductors and profiles on the Lubin-Tate boundary"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--ring", cfg.ring, "p:f:n:mode, e.g. 2:1:2:mixed")->capture_default_str();
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", cfg.out, "write to a file instead of stdout");
        sub->add_option("--cap", cfg.cap, "largest group order to enumerate")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
    };
    auto add_rep = [&](CLI::App* sub) {
        sub->add_option("--rep", cfg.rep, "type:unramified | type:ramified | u:eps=<i> | irr:<row>")
            ->capture_default_str();
    };

    auto* filtration = app.add_subcommand("filtration", "lower ramification filtration of G_y");
    auto* upper = app.add_subcommand("upper", "upper numbering");
    auto* chartable = app.add_subcommand("chartable", "character table of GL2");
    auto* conductor_cmd = app.add_subcommand("conductor", "Swan and discriminant conductors");
    auto* verify = app.add_subcommand("verify", "check closed forms against brute force");
    auto* profile = app.add_subcommand("profile", "conductor profile along the radius sweep");
    auto* newton = app.add_subcommand("newton", "Newton polygon checks");
    for (auto* sub : {filtration, upper, chartable, conductor_cmd, verify, profile, newton}) add_common(sub);
    add_rep(conductor_cmd);
    add_rep(profile);
    verify->add_option("--target", cfg.target)->check(CLI::IsMember(verify_targets()))->capture_default_str();
    profile->add_option("--s-max", cfg.s_max, "sweep range in s, exact rational")->capture_default_str();
    newton->add_option("--check", cfg.check)
        ->check(CLI::IsMember({"valuations", "tower", "compose", "stability"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include "ltswan/profile.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ltswan/conductor.hpp"

namespace ltswan {

namespace {

const RankTwoLog h0(0, 0);

// Ordered key for grouping elements by value.
std::pair<Rational, std::int64_t> key(const RankTwoLog& v) { return {v.flat, v.sharp}; }

Rational weight(const ClassFunction& chi, const GL2Elem& x) {
    const Cyclotomic w = chi.values[0] - chi.at(x).real_part();
    if (!w.is_rational()) throw std::domain_error("weight is not rational: " + w.str());
    return w.rational_value();
}

HFunction slid_hfun(const Filtration& base, const Rational& t) {
    return [&base, t](const GL2Elem& x) -> std::optional<RankTwoLog> {
        const auto& v = base.h_at(x);
        if (!v) return std::nullopt;
        return slide(*v, t);
    };
}

}  // namespace

RankTwoLog slide(const RankTwoLog& h, const Rational& t) {
    return RankTwoLog(h.flat + Rational(h.sharp) * t, h.sharp);
}

Filtration slide_filtration(const Filtration& filt, const Rational& t) {
    return filtration_from(filt.group, slid_hfun(filt, t));
}

Rational Profile::delta_at(const Rational& s) const {
    for (const auto& p : pieces)
        if (s >= p.s_lo && s <= p.s_hi) return p.delta_intercept + p.delta_slope * (s - p.s_lo);
    throw std::out_of_range("profile: s outside the swept domain");
}

Profile sweep(const ClassFunction& chi, const Filtration& filt, const Rational& s_max) {
    if (s_max <= 0) throw std::invalid_argument("sweep: s_max must be positive");
    Profile out;
    Rational t = 0, s = 0;
    Filtration cur = filt;
    while (s < s_max) {
        const Rational order(static_cast<long>(cur.group->order()));

        // Next event, relative to the current values: a death or a crossing of flats.
        std::vector<RankTwoLog> values;
        for (const auto& v : cur.h)
            if (v) values.push_back(*v);
        std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) { return key(a) < key(b); });
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::optional<Rational> dt;
        auto consider = [&dt](const Rational& c) {
            if (c > 0 && (!dt || c < *dt)) dt = c;
        };
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i].sharp < 0 && values[i].flat > 0) consider(values[i].flat / Rational(-values[i].sharp));
            for (std::size_t j = i + 1; j < values.size(); ++j)
                if (values[i].sharp != values[j].sharp)
                    consider((values[j].flat - values[i].flat) / Rational(values[i].sharp - values[j].sharp));
        }

        Rational s_hi = dt ? s + order * *dt : s_max;
        if (s_hi > s_max) s_hi = s_max;
        const Rational dt_piece = (s_hi - s) / order;

        // The piece is judged by two interior points: the ordering of the values
        // can degenerate at the endpoints themselves.
        std::optional<ConductorReport> a, b;
        try {
            a = conductor(chi, slide_filtration(cur, dt_piece / 4));
            b = conductor(chi, slide_filtration(cur, dt_piece * 3 / 4));
        } catch (const NotSubgroup&) {
            out.validity = "structural-break";
            out.truncated_at = s;
            break;
        }
        if (a->sw != b->sw) throw std::logic_error("sweep: sw changed inside a piece");
        ProfilePiece piece;
        piece.s_lo = s;
        piece.s_hi = s_hi;
        piece.t_lo = t;
        piece.t_hi = t + dt_piece;
        piece.delta_slope = (b->delta - a->delta) / (order * dt_piece / 2);
        piece.delta_intercept = a->delta - piece.delta_slope * order * dt_piece / 4;
        piece.sw = a->sw;
        piece.group_order = cur.group->order();
        out.pieces.push_back(piece);
        if (s_hi == s_max) break;

        out.breakpoints.push_back(s_hi);
        t += dt_piece;
        s = s_hi;

        // Elements whose value passes h_0 leave the stabilizer.
        std::vector<GL2Elem> survivors;
        bool died = false;
        for (std::size_t i = 0; i < cur.group->order(); ++i) {
            const auto& v = filt.h_at(cur.group->element(i));
            if (v && cmp_value(slide(*v, t), h0) > 0) {
                died = true;
                continue;
            }
            survivors.push_back(cur.group->element(i));
        }
        if (!died) {
            cur.h.assign(cur.group->order(), std::nullopt);
            for (std::size_t i = 0; i < cur.group->order(); ++i) cur.h[i] = slid_hfun(filt, t)(cur.group->element(i));
            continue;
        }
        if (!is_subgroup(cur.group->ring(), survivors)) {
            out.validity = "structural-break";
            out.truncated_at = s;
            break;
        }
        auto H = std::make_shared<const MatrixGroup>(cur.group->ring_ptr(), std::move(survivors),
                                                     "survivors(" + cur.group->descriptor() + ")");
        cur.group = H;
        cur.jumps.clear();
        cur.h.assign(H->order(), std::nullopt);
        for (std::size_t i = 0; i < H->order(); ++i) cur.h[i] = slid_hfun(filt, t)(H->element(i));
    }
    return out;
}

std::optional<Rational> first_break(const ClassFunction& chi, const Filtration& filt) {
    std::map<std::pair<Rational, std::int64_t>, Rational> weights;
    const MatrixGroup& H = *filt.group;
    for (std::size_t i = 0; i < H.order(); ++i) {
        const auto& v = filt.h[i];
        if (!v || v->sharp >= 0 || v->flat <= 0) continue;
        weights[key(*v)] += weight(chi, H.element(i));
    }
    std::optional<Rational> best;
    for (const auto& [k, w] : weights) {
        if (w == 0) continue;
        const Rational death = k.first / Rational(-k.second);
        if (!best || death < *best) best = death;
    }
    return best;
}

Rational clamped_delta(const ClassFunction& chi, const Filtration& filt, const Rational& t) {
    Rational acc = 0;
    const MatrixGroup& H = *filt.group;
    for (std::size_t i = 0; i < H.order(); ++i) {
        const auto& v = filt.h[i];
        if (!v) continue;
        const Rational f = v->flat + Rational(v->sharp) * t;
        if (f > 0) acc += f * weight(chi, H.element(i));
    }
    return acc;
}

std::optional<Rational> sampled_first_break(const ClassFunction& chi, const Filtration& filt, std::int64_t grid,
                                            const Rational& t_max) {
    if (grid < 1) throw std::invalid_argument("sampled_first_break: grid must be positive");
    const Rational g(grid);
    const Rational steps_r = t_max * g;
    const std::int64_t steps = to_int64(Rational(steps_r.get_num() / steps_r.get_den()));
    // Same sum as clamped_delta, with the weights computed once. Samples are taken lazily
    // so the scan stops a few points past the first kink.
    const MatrixGroup& H = *filt.group;
    std::vector<Rational> w(H.order());
    for (std::size_t i = 0; i < H.order(); ++i)
        if (filt.h[i]) w[i] = weight(chi, H.element(i));
    std::vector<Rational> d;
    auto sample = [&](std::int64_t k) {
        const Rational t = Rational(k) / g;
        Rational acc = 0;
        for (std::size_t i = 0; i < H.order(); ++i) {
            const auto& v = filt.h[i];
            if (!v || w[i] == 0) continue;
            const Rational f = v->flat + Rational(v->sharp) * t;
            if (f > 0) acc += f * w[i];
        }
        return acc;
    };
    auto fill = [&](std::int64_t upto) {
        while (static_cast<std::int64_t>(d.size()) <= std::min(upto, steps)) d.push_back(sample(static_cast<std::int64_t>(d.size())));
    };
    fill(3);
    for (std::int64_t k = 1; k + 2 < static_cast<std::int64_t>(d.size()); ++k) {
        fill(k + 3);
        if (d[k + 1] - 2 * d[k] + d[k - 1] == 0) continue;
        // Points 0..k are collinear; the kink lies in [t_k, t_{k+1}).
        const Rational m1 = (d[1] - d[0]) * g;
        const Rational b1 = d[0];
        const Rational m2 = (d[k + 2] - d[k + 1]) * g;
        const Rational b2 = d[k + 1] - m2 * Rational(k + 1) / g;
        if (k + 3 < static_cast<std::int64_t>(d.size()) && d[k + 3] - 2 * d[k + 2] + d[k + 1] != 0)
            throw std::logic_error("sampled_first_break: grid too coarse to isolate the first kink");
        if (m1 == m2) throw std::logic_error("sampled_first_break: parallel pieces around a kink");
        const Rational t = (b2 - b1) / (m1 - m2);
        if (t < Rational(k) / g || t >= Rational(k + 1) / g)
            throw std::logic_error("sampled_first_break: grid too coarse to isolate the first kink");
        return t;
    }
    return std::nullopt;
}

}  // namespace ltswan

#include "ltswan/ramify.hpp"

#include <algorithm>
#include <stdexcept>

namespace ltswan {

std::optional<RankTwoLog> h_of(const GL2Elem& sigma, const ResidueRing& R) {
    if (sigma.c != 0 || !R.is_unit(sigma.a) || R.mul(sigma.a, sigma.d) != 1)
        throw std::invalid_argument("h_of: element is not in the Borel stabilizer: " + format(R, sigma));
    if (sigma == identity_elem()) return std::nullopt;
    const std::int64_t q = R.q(), n = R.n();
    const std::uint32_t i = R.val_pi(R.sub(sigma.a, 1));
    if (i == 0) return RankTwoLog(0, 0);
    if (i < R.n()) return RankTwoLog(0, ipow(q, 2 * i) - 1);
    const std::int64_t j = R.val_pi(sigma.b);
    return RankTwoLog(make_rational(1, checked_mul(q - 1, ipow(q, static_cast<unsigned>(n - j - 1)))),
                      -ipow(q, static_cast<unsigned>(2 * n - 1)) - 1);
}

const std::optional<RankTwoLog>& Filtration::h_at(const GL2Elem& x) const {
    const auto i = group->index_of(x);
    if (!i) throw std::invalid_argument("filtration: element outside the group");
    return h[*i];
}

Filtration filtration_from(const GroupPtr& H, const HFunction& hfun) {
    Filtration out;
    out.group = H;
    const MatrixGroup& G = *H;
    const RankTwoLog h0(0, 0);
    out.h.resize(G.order());
    std::vector<RankTwoLog> values;
    for (std::size_t i = 0; i < G.order(); ++i) {
        out.h[i] = hfun(G.element(i));
        if (i == G.identity_index()) {
            if (out.h[i]) throw std::invalid_argument("filtration: identity must map to the sentinel");
            continue;
        }
        if (!out.h[i]) throw std::invalid_argument("filtration: non-identity element without a value");
        const auto c = cmp_value(*out.h[i], h0);
        if (c > 0) throw std::invalid_argument("filtration: value above h_0 " + to_string(*out.h[i]));
        if (c < 0) values.push_back(*out.h[i]);
    }
    for (std::size_t c = 0; c < G.class_count(); ++c)
        for (std::size_t m : G.class_members(c))
            if (!(out.h[m] == out.h[G.class_rep(c)]))
                throw std::invalid_argument("filtration: h is not a class function");

    // Strictly decreasing values: sort descending, deduplicate.
    std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) { return cmp_value(a, b) > 0; });
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t k = 0; k < values.size(); ++k) {
        Jump jump;
        jump.h = values[k];
        for (std::size_t i = 0; i < G.order(); ++i)
            if (i == G.identity_index() || cmp_value(*out.h[i], values[k]) <= 0) jump.members.push_back(G.element(i));
        jump.descriptor = "G_h" + std::to_string(k + 1);
        if (!is_subgroup(G.ring(), jump.members))
            throw NotSubgroup("filtration: layer " + std::to_string(k + 1) + " at " + to_string(values[k]) +
                              " is not a subgroup");
        out.jumps.push_back(std::move(jump));
    }
    return out;
}

Filtration lubin_tate_filtration(const RingPtr& ring) {
    const ResidueRing& R = *ring;
    Filtration out = filtration_from(borel_stabilizer(ring), [&R](const GL2Elem& s) { return h_of(s, R); });
    for (auto& jump : out.jumps) {
        if (jump.h.flat == 0) {
            std::uint32_t i = 1;
            while (ipow(R.q(), 2 * i) - 1 != jump.h.sharp) ++i;
            jump.descriptor = "{(a,b;0,a^-1): a = 1 mod pi^" + std::to_string(i) + "}";
        } else {
            // flat = 1/((q-1) q^{n-j-1})
            std::uint32_t j = 0;
            while (make_rational(1, (R.q() - 1) * ipow(R.q(), R.n() - j - 1)) != jump.h.flat) ++j;
            jump.descriptor = "{(1,b;0,1): b = 0 mod pi^" + std::to_string(j) + "}";
        }
    }
    return out;
}

std::vector<UpperJump> herbrand_upper(const Filtration& filt) {
    std::vector<UpperJump> out;
    const long G = static_cast<long>(filt.group->order());
    Rational flat = 0, sharp = 0;
    RankTwoLog prev(0, 0);
    for (const auto& jump : filt.jumps) {
        const long Gj = static_cast<long>(jump.order());
        sharp += Rational(jump.h.sharp - prev.sharp) * Rational(Gj) / Rational(G);
        flat += (jump.h.flat - prev.flat) * Rational(Gj);
        sharp.canonicalize();
        flat.canonicalize();
        out.push_back(UpperJump{flat, sharp});
        prev = jump.h;
    }
    return out;
}

namespace {

ClassFunction from_element_values(const Filtration& filt, const std::function<Rational(const RankTwoLog&)>& weight) {
    const MatrixGroup& G = *filt.group;
    ClassFunction out = constant_on_group(filt.group, Cyclotomic(0L));
    Rational at_identity = 0;
    for (std::size_t c = 1; c < G.class_count(); ++c) {
        const Rational w = weight(*filt.h[G.class_rep(c)]);
        out.values[c] = Cyclotomic(Rational(-w));
        at_identity += w * Rational(static_cast<long>(G.class_size(c)));
    }
    out.values[0] = Cyclotomic(at_identity);
    return out;
}

}  // namespace

ClassFunction sw_class_function(const Filtration& filt) {
    return from_element_values(filt, [](const RankTwoLog& h) { return Rational(h.sharp); });
}

ClassFunction delta_class_function(const Filtration& filt) {
    const long G = static_cast<long>(filt.group->order());
    return from_element_values(filt, [G](const RankTwoLog& h) { return Rational(h.flat * G); });
}

}  // namespace ltswan

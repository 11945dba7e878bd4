#include "ltswan/newton.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ltswan {

std::strong_ordering operator<=>(const Val2& a, const Val2& b) {
    if (a.pi != b.pi) return a.pi < b.pi ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.t != b.t) return a.t < b.t ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Val2 operator+(const Val2& a, const Val2& b) { return {a.pi + b.pi, a.t + b.t}; }
Val2 operator-(const Val2& a, const Val2& b) { return {a.pi - b.pi, a.t - b.t}; }
Val2 operator*(const Val2& a, const Rational& r) { return {a.pi * r, a.t * r}; }

std::string to_string(const Val2& v) { return "(" + to_string(v.pi) + "," + to_string(v.t) + ")"; }

namespace {

Val2 slope_between(const ValuedTerm& a, const ValuedTerm& b) {
    return (b.val - a.val) * make_rational(1, b.exponent - a.exponent);
}

Rational pow_q(std::int64_t q, std::int64_t e) { return Rational(ipow(q, static_cast<unsigned>(e))); }

// |G_{y_m}| = (q-1) q^{2m-1}.
Rational stabilizer_order(std::int64_t q, std::uint32_t m) { return Rational(q - 1) * pow_q(q, 2 * m - 1); }

ValuedPoly level_equation(std::int64_t q, const Val2& u_prev) {
    ValuedPoly p = lubin_tate_model(q);
    p.push_back({0, u_prev});
    return p;
}

}  // namespace

NewtonPolygon lower_hull(ValuedPoly poly) {
    if (poly.size() < 2) throw std::invalid_argument("lower_hull: need at least two points");
    std::sort(poly.begin(), poly.end(), [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
    for (std::size_t i = 1; i < poly.size(); ++i)
        if (poly[i].exponent == poly[i - 1].exponent) throw std::invalid_argument("lower_hull: repeated exponent");
    std::vector<ValuedTerm> st;
    for (const auto& p : poly) {
        while (st.size() >= 2 && slope_between(st[st.size() - 2], st.back()) >= slope_between(st.back(), p))
            st.pop_back();
        st.push_back(p);
    }
    NewtonPolygon out;
    out.vertices = st;
    for (std::size_t i = 0; i + 1 < st.size(); ++i)
        out.segments.push_back({st[i].exponent, st[i + 1].exponent, slope_between(st[i], st[i + 1])});
    return out;
}

ValuedPoly lubin_tate_model(std::int64_t q) {
    return {{1, {Rational(1), Rational(0)}}, {q, {Rational(0), Rational(1)}}, {q * q, {Rational(0), Rational(0)}}};
}

std::vector<UValuation> u_valuations(std::int64_t q, std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("u_valuations: n >= 1");
    std::vector<UValuation> out;
    Val2 prev;
    for (std::uint32_t m = 1; m <= n; ++m) {
        const NewtonPolygon poly = lower_hull(m == 1 ? lubin_tate_model(q) : level_equation(q, prev));
        const Segment& first = poly.segments.front();
        // The canonical roots: q-1 nonzero pi-torsion points, then q roots of [pi](X) = u_{m-1}.
        if (first.x0 != (m == 1 ? 1 : 0) || first.x1 != q)
            throw std::logic_error("u_valuations: unexpected first segment at level " + std::to_string(m));
        prev = first.root_val();
        UValuation u;
        u.m = m;
        u.flat = prev.pi;
        u.raw_sharp = prev.t;
        u.level_sharp = stabilizer_order(q, m) * prev.t;
        u.normalized_sharp = pow_q(q, 2 * (n - m)) * u.level_sharp;
        out.push_back(u);
    }
    return out;
}

TowerReport eisenstein_tower(std::int64_t q, std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("eisenstein_tower: n >= 1");
    TowerReport out;
    out.degree = 1;
    Rational base = 1;  // valuation of a uniformizer of the current residue field
    for (std::uint32_t m = 1; m <= n; ++m) {
        TowerStep step;
        step.m = m;
        ValuedPoly p;
        if (m == 1) {
            // E(X)/X = X^{q-1} + T
            p = {{0, {Rational(0), Rational(1)}}, {q - 1, {Rational(0), Rational(0)}}};
        } else {
            p = {{0, {Rational(0), base}}, {1, {Rational(0), pow_q(q, m - 1)}}, {q, {Rational(0), Rational(0)}}};
        }
        step.polygon = lower_hull(p);
        step.val_z = step.polygon.segments.front().root_val().t;
        const Rational rel = step.val_z / base;
        step.ramification = to_int64(Rational(rel.get_den()));
        const std::int64_t length = step.polygon.segments.front().length();
        step.eisenstein = step.polygon.segments.size() == 1 && step.ramification == length;
        if (!step.eisenstein) throw std::logic_error("eisenstein_tower: step " + std::to_string(m) + " is not Eisenstein");
        out.degree = checked_mul(out.degree, step.ramification);
        base = step.val_z;
        out.steps.push_back(std::move(step));
    }
    return out;
}

std::vector<VValuation> v_valuations(std::int64_t q, std::uint32_t n) {
    const TowerReport tower = eisenstein_tower(q, n);
    std::vector<VValuation> out;
    for (std::uint32_t m = 1; m <= n; ++m) {
        VValuation v;
        v.m = m;
        v.flat = 0;
        v.level_sharp = stabilizer_order(q, m) * tower.steps[m - 1].val_z / pow_q(q, m);
        v.normalized_sharp = pow_q(q, 2 * (n - m)) * v.level_sharp;
        out.push_back(v);
    }
    return out;
}

std::vector<RankTwoLog> unipotent_jump_values(std::int64_t q, std::uint32_t n) {
    const auto u = u_valuations(q, n);
    const auto v = v_valuations(q, n);
    std::vector<RankTwoLog> out;
    for (std::uint32_t j = 0; j < n; ++j) {
        const UValuation& um = u[n - j - 1];
        const Rational sharp = um.normalized_sharp - v[n - 1].normalized_sharp;
        if (!is_integer(sharp)) throw std::logic_error("unipotent_jump_values: non-integral sharp " + to_string(sharp));
        out.emplace_back(um.flat - v[n - 1].flat, to_int64(sharp));
    }
    return out;
}

BiPoly BiPoly::monomial(const RingPtr& field, Elem c, std::uint64_t x, std::uint64_t t) {
    BiPoly out(field);
    out.add_term(x, t, c);
    return out;
}

void BiPoly::add_term(std::uint64_t x, std::uint64_t t, Elem c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({x, t}, c);
    if (inserted) return;
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
    return out;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly out(field_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) out.add_term(a.first + b.first, a.second + b.second, field_->mul(ca, cb));
    return out;
}

BiPoly BiPoly::pow(std::uint64_t e) const {
    if (e == 0) return monomial(field_, 1, 0, 0);
    const std::uint32_t p = field_->p();
    if (e % p == 0) {
        // Frobenius: (sum c T^t X^x)^p = sum c^p T^{pt} X^{px} in characteristic p.
        const BiPoly base = pow(e / p);
        BiPoly out(field_);
        for (const auto& [k, c] : base.terms_) out.add_term(k.first * p, k.second * p, field_->pow(c, p));
        return out;
    }
    return *this * pow(e - 1);
}

BiPoly BiPoly::compose(const BiPoly& inner) const {
    BiPoly out(field_);
    std::map<std::uint64_t, BiPoly> powers;
    for (const auto& [k, c] : terms_) {
        auto it = powers.find(k.first);
        if (it == powers.end()) it = powers.emplace(k.first, inner.pow(k.first)).first;
        out = out + monomial(field_, c, 0, k.second) * it->second;
    }
    return out;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1 || (k.first == 0 && k.second == 0)) os << field_->format(c);
        if (k.second) os << "T^" << k.second;
        if (k.first) os << "X^" << k.first;
    }
    return os.str();
}

FactorizationCheck residue_factorization(std::uint32_t p, std::uint32_t f, std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("residue_factorization: n >= 1");
    const RingPtr field = make_ring(p, f, 1, RingMode::equal);
    const std::uint64_t q = field->q();
    const BiPoly phi = BiPoly::monomial(field, 1, q, 1) + BiPoly::monomial(field, 1, q * q, 0);
    BiPoly lhs = BiPoly::monomial(field, 1, 1, 0);
    for (std::uint32_t k = 0; k < n; ++k) lhs = phi.compose(lhs);
    BiPoly rhs = BiPoly::monomial(field, 1, static_cast<std::uint64_t>(ipow(static_cast<std::int64_t>(q), n)), 0);
    for (std::uint32_t i = n; i-- > 0;) {
        const std::uint64_t ti = static_cast<std::uint64_t>(ipow(static_cast<std::int64_t>(q), i));
        const BiPoly E = BiPoly::monomial(field, 1, 1, ti) + BiPoly::monomial(field, 1, q, 0);
        rhs = E.compose(rhs);
    }
    return {lhs, rhs};
}

std::vector<Segment> negative_segments(const NewtonPolygon& poly) {
    std::vector<Segment> out;
    const Val2 zero{Rational(0), Rational(0)};
    for (const auto& s : poly.segments)
        if (s.slope < zero) out.push_back(s);
    return out;
}

bool slope_stability(std::int64_t q, std::uint32_t n, int trials, std::uint64_t seed, int terms) {
    std::vector<ValuedPoly> bases{lubin_tate_model(q)};
    const auto u = u_valuations(q, n);
    for (std::uint32_t m = 1; m < n; ++m) bases.push_back(level_equation(q, {u[m - 1].flat, u[m - 1].raw_sharp}));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> exp_dist(q, q * q + q);
    std::uniform_int_distribution<long> num(0, 3), den(1, 4), tv(-5, 5), tv0(0, 5);
    auto same = [](const std::vector<Segment>& a, const std::vector<Segment>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].x0 != b[i].x0 || a[i].x1 != b[i].x1 || !(a[i].slope == b[i].slope)) return false;
        return true;
    };
    for (int trial = 0; trial < trials; ++trial) {
        for (const auto& base : bases) {
            const auto expect = negative_segments(lower_hull(base));
            std::map<std::int64_t, Val2> pts;
            for (const auto& t : base) pts[t.exponent] = t.val;
            for (int k = 0; k < terms; ++k) {
                const Rational a = make_rational(num(rng), den(rng));
                const Val2 c{a, Rational(a == 0 ? tv0(rng) : tv(rng))};
                const Val2 v = Val2{Rational(1), Rational(0)} + c;  // c pi X^j
                const std::int64_t j = exp_dist(rng);
                auto it = pts.find(j);
                if (it == pts.end()) pts.emplace(j, v);
                else if (v < it->second) it->second = v;
            }
            ValuedPoly perturbed;
            for (const auto& [e, v] : pts) perturbed.push_back({e, v});
            if (!same(expect, negative_segments(lower_hull(perturbed)))) return false;
        }
    }
    return true;
}

}  // namespace ltswan

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ltswan/rank_two_log.hpp"
#include "ltswan/residue_ring.hpp"

namespace ltswan {

/// Coefficient valuation (pi-adic, T-adic), ordered lexicographically.
struct Val2 {
    Rational pi;
    Rational t;
    friend bool operator==(const Val2&, const Val2&) = default;
};
std::strong_ordering operator<=>(const Val2& a, const Val2& b);
Val2 operator+(const Val2& a, const Val2& b);
Val2 operator-(const Val2& a, const Val2& b);
Val2 operator*(const Val2& a, const Rational& r);
std::string to_string(const Val2& v);

struct ValuedTerm {
    std::int64_t exponent = 0;
    Val2 val;
};
using ValuedPoly = std::vector<ValuedTerm>;

struct Segment {
    std::int64_t x0 = 0, x1 = 0;
    Val2 slope;
    std::int64_t length() const { return x1 - x0; }
    /// Valuation of each root on this segment: minus the slope.
    Val2 root_val() const { return slope * Rational(-1); }
};

struct NewtonPolygon {
    std::vector<ValuedTerm> vertices;
    std::vector<Segment> segments;
};

/// Lower convex hull under the lexicographic order. Throws on fewer than two
/// points or repeated exponents.
NewtonPolygon lower_hull(ValuedPoly poly);

/// pi X + T X^q + X^{q^2}.
ValuedPoly lubin_tate_model(std::int64_t q);

struct UValuation {
    std::uint32_t m = 0;
    Rational flat;             // val_y(u_m)
    Rational raw_sharp;        // T-adic root valuation, in units of #_x
    Rational level_sharp;      // #_{y_m} = |G_{y_m}| raw
    Rational normalized_sharp; // #_y = q^{2(n-m)} #_{y_m}
};

/// u_1 from the hull of [pi](X), u_{m+1} from the hull of [pi](X) - u_m.
std::vector<UValuation> u_valuations(std::int64_t q, std::uint32_t n);

struct TowerStep {
    std::uint32_t m = 0;
    NewtonPolygon polygon;
    Rational val_z;  // T-adic valuation of z_m
    std::int64_t ramification = 0;
    bool eisenstein = false;
};

struct TowerReport {
    std::vector<TowerStep> steps;
    std::int64_t degree = 0;
};

/// z_1 from X^{q-1} + T, then z_{m+1} from X^q + T^{q^m} X - z_m.
TowerReport eisenstein_tower(std::int64_t q, std::uint32_t n);

struct VValuation {
    std::uint32_t m = 0;
    Rational flat;
    Rational level_sharp;       // #_{y_m} v_m
    Rational normalized_sharp;  // q^{2(n-m)} #_{y_m} v_m
};

/// v_m^{q^m} = w_m mod p_y with w_m a lift of z_m.
std::vector<VValuation> v_valuations(std::int64_t q, std::uint32_t n);

/// -Log h_y of (1, b; 0, 1) with val(b) = j, from sigma(v_n) - v_n = [b](u_n) = unit * u_{n-j}.
std::vector<RankTwoLog> unipotent_jump_values(std::int64_t q, std::uint32_t n);

/// Polynomials in X over F_q[T]: key (deg_X, deg_T).
class BiPoly {
public:
    explicit BiPoly(RingPtr field) : field_(std::move(field)) {}
    static BiPoly monomial(const RingPtr& field, Elem c, std::uint64_t x, std::uint64_t t);

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly pow(std::uint64_t e) const;
    /// this(inner(X)).
    BiPoly compose(const BiPoly& inner) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    std::string str() const;
    const std::map<std::pair<std::uint64_t, std::uint64_t>, Elem>& terms() const { return terms_; }

private:
    RingPtr field_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, Elem> terms_;
    void add_term(std::uint64_t x, std::uint64_t t, Elem c);
};

struct FactorizationCheck {
    BiPoly lhs, rhs;
    bool holds() const { return lhs == rhs; }
};

/// (T X^q + X^{q^2})^{o n} against E o E^(1) o ... o E^(n-1)(X^{q^n}), E^(i) = T^{q^i} X + X^q, over F_q[T].
FactorizationCheck residue_factorization(std::uint32_t p, std::uint32_t f, std::uint32_t n);

/// Adds `terms` random c pi X^j (j >= q, val c >= (0,0)) to the model and to each
/// level equation [pi](X) - u_m, m < n, and checks the negative-slope segments survive.
/// Repeats `trials` times from the given seed.
bool slope_stability(std::int64_t q, std::uint32_t n, int trials, std::uint64_t seed, int terms = 3);

/// Negative-slope (lexicographically below (0,0)) segments of a polygon.
std::vector<Segment> negative_segments(const NewtonPolygon& poly);

}  // namespace ltswan

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ltswan/rational.hpp"

namespace ltswan {

/// Precomputed data for Q(zeta_m): Phi_m and the reductions of x^k, 0 <= k < m.
struct CycloField {
    std::uint32_t m;
    std::uint32_t phi;
    std::vector<std::int64_t> poly;                 // Phi_m, low degree first, monic
    std::vector<std::vector<std::int64_t>> powers;  // powers[k] = x^k mod Phi_m, length phi
};

/// Cached per conductor; the returned reference stays valid for the program lifetime.
const CycloField& cyclo_field(std::uint32_t m);

std::uint32_t euler_phi(std::uint32_t m);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/**
 * Element of Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1} modulo Phi_m.
 * Values of different conductors combine in Q(zeta_lcm) via zeta_m = zeta_L^{L/m}.
 */
class Cyclotomic {
public:
    Cyclotomic() : m_(1), c_(1) {}
    Cyclotomic(const Rational& r) : m_(1), c_{r} {}  // NOLINT: implicit on purpose
    Cyclotomic(long v) : m_(1), c_{Rational(v)} {}   // NOLINT

    /// zeta_m^k
    static Cyclotomic zeta(std::uint32_t m, std::int64_t k);
    /// Sum of coeffs[k] zeta_m^k for arbitrary k (reduced).
    static Cyclotomic from_powers(std::uint32_t m, const std::vector<Rational>& coeffs);

    std::uint32_t conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws std::domain_error when not rational.
    Rational rational_value() const;
    /// Throws when the value is not a rational integer.
    std::int64_t integer_value() const;

    Cyclotomic promote(std::uint32_t L) const;
    Cyclotomic conj() const;
    /// Real part as an element of Q(zeta_m): (x + conj x)/2.
    Cyclotomic real_part() const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& r);
    friend Cyclotomic operator/(const Cyclotomic& a, const Rational& r);
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Lexicographic on coefficient lists after promotion to a common conductor; a total order
    /// used only for deterministic sorting.
    friend int lex_compare(const Cyclotomic& a, const Cyclotomic& b);

    /// "3", "1/2" or "[c0,c1,...]@m"
    std::string str() const;

private:
    std::uint32_t m_;
    std::vector<Rational> c_;
    Cyclotomic(std::uint32_t m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}
};

}  // namespace ltswan

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ltswan {

enum class RingMode { mixed, equal };

/// Element of a ResidueRing, encoded as an integer code in [0, q^n).
using Elem = std::uint32_t;

/**
 * The residue ring O/pi^n with residue field F_q.
 *
 * mixed: Z/p^n (f must be 1), code = the residue itself, pi = p.
 * equal: F_q[t]/t^n, F_q = F_p[x]/(g) with g the smallest monic irreducible of degree f.
 *        code = sum_i c_i q^i where c_i is the t^i coefficient, itself coded base p in x.
 *
 * Addition, multiplication, negation and inversion are table lookups.
 */
class ResidueRing {
public:
    static constexpr std::uint32_t max_size = 1024;

    ResidueRing(std::uint32_t p, std::uint32_t f, std::uint32_t n, RingMode mode);

    std::uint32_t p() const { return p_; }
    std::uint32_t f() const { return f_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t q() const { return q_; }
    RingMode mode() const { return mode_; }
    /// q^n
    std::uint32_t size() const { return size_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem pi() const { return n_ == 1 ? 0 : pi_; }

    Elem add(Elem x, Elem y) const { return add_[x * size_ + y]; }
    Elem mul(Elem x, Elem y) const { return mul_[x * size_ + y]; }
    Elem neg(Elem x) const { return neg_[x]; }
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
    /// Throws std::domain_error for non-units.
    Elem inv(Elem x) const;
    bool is_unit(Elem x) const { return val_[x] == 0; }
    /// pi-adic order in 0..n, with val_pi(0) = n.
    std::uint32_t val_pi(Elem x) const { return val_[x]; }
    Elem pow(Elem x, std::uint64_t e) const;
    /// pi^k, with pi^k = 0 for k >= n.
    Elem pi_pow(std::uint32_t k) const;
    /// Image of an integer under Z -> O/pi^n.
    Elem from_int(std::int64_t k) const;

    std::vector<Elem> unit_group() const;

    /// "p:f:n:mode"
    std::string spec() const;
    std::string format(Elem x) const;

private:
    std::uint32_t p_, f_, n_, q_, size_;
    RingMode mode_;
    Elem pi_ = 0;
    std::vector<Elem> add_, mul_, neg_, inv_;
    std::vector<std::uint32_t> val_;
    std::vector<std::uint32_t> modulus_;  // equal mode: irreducible g, low degree first, monic

    void build_mixed();
    void build_equal();
};

using RingPtr = std::shared_ptr<const ResidueRing>;

RingPtr make_ring(std::uint32_t p, std::uint32_t f, std::uint32_t n, RingMode mode);
/// Parses "p:f:n:mode" with mode in {mixed, equal}; throws std::invalid_argument.
RingPtr parse_ring(std::string_view spec);

bool is_prime(std::uint64_t n);

}  // namespace ltswan

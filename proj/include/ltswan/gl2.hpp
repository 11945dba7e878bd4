#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "ltswan/residue_ring.hpp"

namespace ltswan {

/// 2x2 matrix (a b; c d) over a ResidueRing. Invertibility is the caller's contract.
struct GL2Elem {
    Elem a = 1, b = 0, c = 0, d = 1;
    friend auto operator<=>(const GL2Elem&, const GL2Elem&) = default;
};

/// Dense code in [0, N^4), N = |ring|; lexicographic in (a,b,c,d).
std::uint64_t encode(const ResidueRing& R, const GL2Elem& x);
GL2Elem decode(const ResidueRing& R, std::uint64_t code);

GL2Elem identity_elem();
GL2Elem mul(const ResidueRing& R, const GL2Elem& x, const GL2Elem& y);
Elem det(const ResidueRing& R, const GL2Elem& x);
bool is_invertible(const ResidueRing& R, const GL2Elem& x);
GL2Elem inverse(const ResidueRing& R, const GL2Elem& x);
/// x^{-1} y x
GL2Elem conj_by(const ResidueRing& R, const GL2Elem& y, const GL2Elem& x);
GL2Elem power(const ResidueRing& R, const GL2Elem& x, std::uint64_t e);

std::string format(const ResidueRing& R, const GL2Elem& x);

}  // namespace ltswan

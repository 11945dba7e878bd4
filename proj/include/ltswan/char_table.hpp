#pragma once

#include <cstdint>
#include <vector>

#include "ltswan/class_function.hpp"

namespace ltswan {

struct CharTable {
    GroupPtr group;
    std::uint32_t exponent = 1;
    /// Sorted by degree, then lexicographically by the value list.
    std::vector<ClassFunction> irreducibles;
};

/// Order of an element of G.
std::uint64_t element_order(const MatrixGroup& G, std::size_t index);
std::uint32_t group_exponent(const MatrixGroup& G);

/**
 * Character table by simultaneous diagonalization of the class-multiplication
 * matrices over F_P (P prime, P = 1 mod exponent, P > 2|G|), followed by exact
 * lifting of every value to Q(zeta_exponent) through eigenvalue multiplicities.
 *
 * The result is certified: exact orthogonality of all rows, sum of squared
 * degrees equal to |G|, and as many rows as classes. Throws CapExceeded when the
 * class count exceeds class_cap and std::runtime_error on any certification failure.
 */
CharTable dixon_table(const GroupPtr& G, std::size_t class_cap = 5000, std::uint64_t seed = 1);

/// Exact row orthogonality <chi_i, chi_j> = delta_ij on integer coefficient vectors.
bool rows_orthonormal(const CharTable& table);

}  // namespace ltswan

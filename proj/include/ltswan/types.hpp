#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ltswan/char_table.hpp"

namespace ltswan {

/// Characters of (O/pi^n)^x, realized on the torus {diag(a, 1)}.
struct UnitCharacters {
    RingPtr ring;
    GroupPtr torus;
    CharTable table;

    std::size_t size() const { return table.irreducibles.size(); }
    Cyclotomic value(std::size_t index, Elem a) const;
    /// Smallest m >= 1 with the character trivial on 1 + pi^m O.
    std::uint32_t exponent(std::size_t index) const;
};

UnitCharacters unit_characters(const RingPtr& ring);
/// Indices of the unit characters of exponent exactly n.
std::vector<std::size_t> characters_of_exponent(const UnitCharacters& units, std::uint32_t n);

/// psi(det g) as a class function on G.
ClassFunction det_character(const GroupPtr& G, const UnitCharacters& units, std::size_t index);

struct UChar {
    ClassFunction chi;
    std::size_t eps;
    bool irreducible;
};

/// u_n(eps) = Ind_{K0(n)}^{G} eps(a); throws std::invalid_argument when eps has exponent != n.
UChar u_character(const GroupPtr& G, const UnitCharacters& units, std::size_t eps);

/// Smallest m with chi trivial on tower[m]; nullopt when trivial on none.
std::optional<std::uint32_t> level_of(const ClassFunction& chi, const std::vector<GroupPtr>& tower);

/// Principal congruence tower K_0 (= GL2) ... K_n.
std::vector<GroupPtr> congruence_tower(const RingPtr& ring, const GroupPtr& G);
/// Iwahori tower K'_0 ... K'_{2n-2}.
std::vector<GroupPtr> iwahori_tower(const RingPtr& ring);
/// U_0 ... U_n.
std::vector<GroupPtr> unipotent_tower(const RingPtr& ring);

/// Minimal r with fixed_dim(chi, U_r) > 0.
std::uint32_t defect_fixed_threshold(const ClassFunction& chi, const std::vector<GroupPtr>& unipotents);

/// No twist chi * (psi o det) has smaller level on the given tower.
bool is_minimal(const ClassFunction& chi, const UnitCharacters& units, const std::vector<GroupPtr>& tower);

/// Rows of a GL2 table matching: degree (q-1)q^{n-1}, K-level n, minimal, no U_{n-1}-fixed vector.
std::vector<std::size_t> unramified_type_candidates(const CharTable& table, const UnitCharacters& units,
                                                    const std::vector<GroupPtr>& k_tower,
                                                    const std::vector<GroupPtr>& unipotents);

/// Conjugation by Pi' = (0,1;pi,0) on the Iwahori group, well defined modulo K'_{2n-2}.
GL2Elem pi_prime_twist(const ResidueRing& R, const GL2Elem& k);
/// chi(k) == chi(Pi' k Pi'^{-1}) on every class; meaningful for chi trivial on K'_{2n-2}.
bool pi_prime_stable(const ClassFunction& chi);

/// Rows of a K' table matching: degree (q-1)q^{n-2}, K'-level 2n-2, U_r-fixed vector iff r >= n-1, Pi'-stable.
std::vector<std::size_t> ramified_type_candidates(const CharTable& iwahori_table,
                                                  const std::vector<GroupPtr>& iwahori_layers,
                                                  const std::vector<GroupPtr>& unipotents);

}  // namespace ltswan

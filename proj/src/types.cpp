#include "ltswan/types.hpp"

#include <stdexcept>

namespace ltswan {

Cyclotomic UnitCharacters::value(std::size_t index, Elem a) const {
    return table.irreducibles.at(index).at(GL2Elem{a, 0, 0, 1});
}

std::uint32_t UnitCharacters::exponent(std::size_t index) const {
    const ResidueRing& R = *ring;
    for (std::uint32_t m = 1; m < R.n(); ++m) {
        bool trivial = true;
        for (Elem a : R.unit_group())
            if (R.val_pi(R.sub(a, 1)) >= m && !(value(index, a) == Cyclotomic(1L))) {
                trivial = false;
                break;
            }
        if (trivial) return m;
    }
    return R.n();
}

UnitCharacters unit_characters(const RingPtr& ring) {
    UnitCharacters out;
    out.ring = ring;
    out.torus = unit_torus(ring);
    out.table = dixon_table(out.torus);
    return out;
}

std::vector<std::size_t> characters_of_exponent(const UnitCharacters& units, std::uint32_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < units.size(); ++i)
        if (units.exponent(i) == n) out.push_back(i);
    return out;
}

ClassFunction det_character(const GroupPtr& G, const UnitCharacters& units, std::size_t index) {
    ClassFunction out{G, {}};
    out.values.reserve(G->class_count());
    for (std::size_t c = 0; c < G->class_count(); ++c)
        out.values.push_back(units.value(index, det(G->ring(), G->element(G->class_rep(c)))));
    return out;
}

UChar u_character(const GroupPtr& G, const UnitCharacters& units, std::size_t eps) {
    const RingPtr& ring = G->ring_ptr();
    if (eps >= units.size()) throw std::invalid_argument("u_character: no unit character with index " + std::to_string(eps));
    if (units.exponent(eps) != ring->n())
        throw std::invalid_argument("u_character: eps has exponent " + std::to_string(units.exponent(eps)) +
                                    ", expected " + std::to_string(ring->n()));
    const GroupPtr B = k0_subgroup(ring);
    ClassFunction lifted{B, {}};
    for (std::size_t c = 0; c < B->class_count(); ++c) lifted.values.push_back(units.value(eps, B->element(B->class_rep(c)).a));
    UChar out{induce(lifted, G), eps, false};
    out.irreducible = inner_product(out.chi, out.chi) == Cyclotomic(1L);
    return out;
}

std::optional<std::uint32_t> level_of(const ClassFunction& chi, const std::vector<GroupPtr>& tower) {
    const std::int64_t d = chi.degree();
    for (std::uint32_t m = 0; m < tower.size(); ++m)
        if (fixed_dim(chi, *tower[m]) == d) return m;
    return std::nullopt;
}

std::vector<GroupPtr> congruence_tower(const RingPtr& ring, const GroupPtr& G) {
    std::vector<GroupPtr> out{G};
    for (std::uint32_t m = 1; m <= ring->n(); ++m) out.push_back(principal_congruence(ring, m));
    return out;
}

std::vector<GroupPtr> iwahori_tower(const RingPtr& ring) {
    std::vector<GroupPtr> out;
    for (std::uint32_t m = 0; m + 2 <= 2 * ring->n(); ++m) out.push_back(iwahori_layer(ring, m));
    return out;
}

std::vector<GroupPtr> unipotent_tower(const RingPtr& ring) {
    std::vector<GroupPtr> out;
    for (std::uint32_t r = 0; r <= ring->n(); ++r) out.push_back(unipotent(ring, r));
    return out;
}

std::uint32_t defect_fixed_threshold(const ClassFunction& chi, const std::vector<GroupPtr>& unipotents) {
    for (std::uint32_t r = 0; r < unipotents.size(); ++r)
        if (fixed_dim(chi, *unipotents[r]) > 0) return r;
    throw std::logic_error("U_n is trivial, threshold must exist");
}

bool is_minimal(const ClassFunction& chi, const UnitCharacters& units, const std::vector<GroupPtr>& tower) {
    const auto level = level_of(chi, tower);
    if (!level) return true;
    for (std::size_t i = 0; i < units.size(); ++i) {
        const auto twisted = level_of(chi * det_character(chi.group, units, i), tower);
        if (twisted && *twisted < *level) return false;
    }
    return true;
}

std::vector<std::size_t> unramified_type_candidates(const CharTable& table, const UnitCharacters& units,
                                                    const std::vector<GroupPtr>& k_tower,
                                                    const std::vector<GroupPtr>& unipotents) {
    const ResidueRing& R = table.group->ring();
    const std::int64_t q = R.q(), n = R.n();
    const std::int64_t dim = (q - 1) * ipow(q, static_cast<unsigned>(n - 1));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
        const auto& chi = table.irreducibles[i];
        if (chi.degree() != dim) continue;
        const auto level = level_of(chi, k_tower);
        if (!level || *level != static_cast<std::uint32_t>(n)) continue;
        if (fixed_dim(chi, *unipotents[n - 1]) != 0) continue;
        if (!is_minimal(chi, units, k_tower)) continue;
        out.push_back(i);
    }
    return out;
}

GL2Elem pi_prime_twist(const ResidueRing& R, const GL2Elem& k) {
    // Pi' k Pi'^{-1} = (d, c/pi; pi b, a); c/pi is only defined mod pi^{n-1}, take the smallest lift.
    Elem x = 0;
    while (x < R.size() && R.mul(R.pi(), x) != k.c) ++x;
    if (x == R.size()) throw std::invalid_argument("pi_prime_twist: lower-left entry not divisible by pi");
    return GL2Elem{k.d, x, R.mul(R.pi(), k.b), k.a};
}

bool pi_prime_stable(const ClassFunction& chi) {
    const MatrixGroup& H = *chi.group;
    const ResidueRing& R = H.ring();
    for (std::size_t c = 0; c < H.class_count(); ++c) {
        const GL2Elem k = H.element(H.class_rep(c));
        if (!(chi.values[c] == chi.at(pi_prime_twist(R, k)))) return false;
    }
    return true;
}

std::vector<std::size_t> ramified_type_candidates(const CharTable& iwahori_table,
                                                  const std::vector<GroupPtr>& iwahori_layers,
                                                  const std::vector<GroupPtr>& unipotents) {
    const ResidueRing& R = iwahori_table.group->ring();
    const std::int64_t q = R.q(), n = R.n();
    if (n < 2) throw std::invalid_argument("ramified types need n >= 2");
    const std::int64_t dim = (q - 1) * ipow(q, static_cast<unsigned>(n - 2));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < iwahori_table.irreducibles.size(); ++i) {
        const auto& chi = iwahori_table.irreducibles[i];
        if (chi.degree() != dim) continue;
        const auto level = level_of(chi, iwahori_layers);
        if (!level || *level != static_cast<std::uint32_t>(2 * n - 2)) continue;
        bool ok = true;
        for (std::int64_t r = 0; r <= n && ok; ++r) ok = (fixed_dim(chi, *unipotents[r]) > 0) == (r >= n - 1);
        if (ok && pi_prime_stable(chi)) out.push_back(i);
    }
    return out;
}

}  // namespace ltswan

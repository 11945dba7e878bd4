#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltswan/gl2.hpp"
#include "ltswan/residue_ring.hpp"

namespace ltswan {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSubgroup : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * A finite subgroup of GL2(O/pi^n) stored as a full sorted element list,
 * with its conjugacy-class partition.
 *
 * Element indices refer to positions in elements() (sorted by encode()).
 * Class 0 is always the identity class; the remaining classes are ordered
 * by their smallest element.
 */
class MatrixGroup {
public:
    /// Validates closure (throws NotSubgroup) and computes classes.
    /// A generator hint, when given, must generate exactly the element set.
    MatrixGroup(RingPtr ring, std::vector<GL2Elem> elements, std::string descriptor,
                std::vector<GL2Elem> generator_hint = {});

    const ResidueRing& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const std::string& descriptor() const { return descriptor_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<GL2Elem>& elements() const { return elems_; }
    const GL2Elem& element(std::size_t i) const { return elems_[i]; }
    std::optional<std::size_t> index_of(const GL2Elem& x) const;
    bool contains(const GL2Elem& x) const { return index_of(x).has_value(); }
    std::size_t identity_index() const { return identity_; }
    std::size_t mul_index(std::size_t i, std::size_t j) const;
    std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }
    const std::vector<std::size_t>& generators() const { return gens_; }

    std::size_t class_count() const { return class_members_.size(); }
    std::size_t class_of(std::size_t elem_index) const { return class_of_[elem_index]; }
    const std::vector<std::size_t>& class_members(std::size_t c) const { return class_members_[c]; }
    std::size_t class_size(std::size_t c) const { return class_members_[c].size(); }
    /// Smallest member of the class.
    std::size_t class_rep(std::size_t c) const { return class_members_[c].front(); }
    std::size_t inverse_class(std::size_t c) const { return inverse_class_[c]; }
    /// Class of x in this group; throws if x is not a member.
    std::size_t class_of_elem(const GL2Elem& x) const;

private:
    RingPtr ring_;
    std::string descriptor_;
    std::vector<GL2Elem> elems_;
    std::vector<std::uint64_t> codes_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> gens_;
    std::vector<std::size_t> class_of_;
    std::vector<std::vector<std::size_t>> class_members_;
    std::vector<std::size_t> inverse_class_;

    void find_generators(const std::vector<GL2Elem>& hint);
    void compute_classes();
};

using GroupPtr = std::shared_ptr<const MatrixGroup>;

/// True when the (deduplicated) set is closed under products; no classes are computed.
bool is_subgroup(const ResidueRing& R, const std::vector<GL2Elem>& elements);

/// Closed-form |GL2(O/pi^n)| = q^{4(n-1)} (q^2-1)(q^2-q).
std::uint64_t gl2_order(const ResidueRing& R);

/// All of GL2(O/pi^n); throws CapExceeded when the closed-form order exceeds cap.
GroupPtr enumerate_gl2(RingPtr ring, std::uint64_t cap = 1'000'000);

/// Invertible matrices satisfying pred, as a subgroup (throws NotSubgroup otherwise).
GroupPtr gl2_subset(const RingPtr& ring, const std::function<bool(const GL2Elem&)>& pred, std::string descriptor,
                    std::uint64_t cap = 1'000'000);

/// Members of parent satisfying pred.
GroupPtr subgroup_where(const GroupPtr& parent, const std::function<bool(const GL2Elem&)>& pred,
                        std::string descriptor);

/// G_y = {(a, b; 0, a^{-1})}.
GroupPtr borel_stabilizer(const RingPtr& ring);
/// K_0(n): upper triangular matrices.
GroupPtr k0_subgroup(const RingPtr& ring);
/// K' : lower-left entry in pi O.
GroupPtr iwahori(const RingPtr& ring);
/// K'_m = 1 + (pi^{n2}, pi^{n1}; pi^{n1+1}, pi^{n2}), n1 = floor(m/2), n2 = floor((m+1)/2); m <= 2n-2.
GroupPtr iwahori_layer(const RingPtr& ring, std::uint32_t m);
/// U_r = {(1, b; 0, 1) : b in pi^r O}, r <= n.
GroupPtr unipotent(const RingPtr& ring, std::uint32_t r);
/// K_m = 1 + pi^m M_2(O), 0 <= m <= n (K_0 is the whole group).
GroupPtr principal_congruence(const RingPtr& ring, std::uint32_t m);
GroupPtr center(const RingPtr& ring);
GroupPtr det_one(const RingPtr& ring);
/// {diag(a, 1)}: a copy of the unit group, used for determinant characters.
GroupPtr unit_torus(const RingPtr& ring);

GroupPtr intersect(const GroupPtr& A, const GroupPtr& B, std::string descriptor);
/// H^g = g^{-1} H g.
GroupPtr conjugate(const GroupPtr& H, const GL2Elem& g, std::string descriptor);

struct DoubleCoset {
    GL2Elem rep;
    std::size_t size;
};

/// H \ G / K, representatives chosen as the smallest element of each double coset.
std::vector<DoubleCoset> double_cosets(const MatrixGroup& H, const MatrixGroup& G, const MatrixGroup& K);

}  // namespace ltswan

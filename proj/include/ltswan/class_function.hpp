#pragma once

#include <cstdint>
#include <vector>

#include "ltswan/cyclotomic.hpp"
#include "ltswan/matrix_group.hpp"

namespace ltswan {

/// One Cyclotomic value per conjugacy class of `group` (class order of MatrixGroup).
struct ClassFunction {
    GroupPtr group;
    std::vector<Cyclotomic> values;

    const Cyclotomic& at_class(std::size_t c) const { return values[c]; }
    const Cyclotomic& at(const GL2Elem& x) const { return values[group->class_of_elem(x)]; }
    /// chi(1); an integer for characters.
    std::int64_t degree() const { return values[0].integer_value(); }

    ClassFunction conj() const;
};

ClassFunction constant_on_group(const GroupPtr& G, const Cyclotomic& v);
ClassFunction trivial_character(const GroupPtr& G);
ClassFunction regular_character(const GroupPtr& G);

ClassFunction operator+(const ClassFunction& f, const ClassFunction& g);
ClassFunction operator-(const ClassFunction& f, const ClassFunction& g);
/// Pointwise product (tensor product of characters).
ClassFunction operator*(const ClassFunction& f, const ClassFunction& g);
ClassFunction operator*(const ClassFunction& f, const Rational& r);

/// <f, g>_G = |G|^{-1} sum_x f(x) conj(g(x)); both on the same group.
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g);

/// Res to H; every element of H must lie in f.group.
ClassFunction restrict_to(const ClassFunction& f, const GroupPtr& H);
/// Ind from f.group to G; f.group must lie in G.
ClassFunction induce(const ClassFunction& f, const GroupPtr& G);

/// <Res_H chi, 1>_H for H given as a subgroup element list inside chi.group.
/// Throws std::domain_error when the value is not a nonnegative integer.
std::int64_t fixed_dim(const ClassFunction& chi, const std::vector<GL2Elem>& H);
std::int64_t fixed_dim(const ClassFunction& chi, const MatrixGroup& H);

/// f^g on H^g = g^{-1} H g, f^g(s) = f(g s g^{-1}).
ClassFunction conjugate_class_function(const ClassFunction& f, const GL2Elem& g);
/// Transport onto an existing group Hg that equals g^{-1} f.group g.
ClassFunction conjugate_class_function(const ClassFunction& f, const GL2Elem& g, const GroupPtr& Hg);

}  // namespace ltswan

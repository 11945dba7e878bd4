#include "ltswan/class_function.hpp"

#include <stdexcept>

namespace ltswan {

namespace {

void same_group(const ClassFunction& f, const ClassFunction& g) {
    if (f.group != g.group && f.group->elements() != g.group->elements())
        throw std::invalid_argument("class functions live on different groups");
}

}  // namespace

ClassFunction ClassFunction::conj() const {
    ClassFunction out{group, {}};
    out.values.reserve(values.size());
    for (const auto& v : values) out.values.push_back(v.conj());
    return out;
}

ClassFunction constant_on_group(const GroupPtr& G, const Cyclotomic& v) {
    return ClassFunction{G, std::vector<Cyclotomic>(G->class_count(), v)};
}

ClassFunction trivial_character(const GroupPtr& G) { return constant_on_group(G, Cyclotomic(1L)); }

ClassFunction regular_character(const GroupPtr& G) {
    ClassFunction out = constant_on_group(G, Cyclotomic(0L));
    out.values[0] = Cyclotomic(static_cast<long>(G->order()));
    return out;
}

ClassFunction operator+(const ClassFunction& f, const ClassFunction& g) {
    same_group(f, g);
    ClassFunction out = f;
    for (std::size_t c = 0; c < out.values.size(); ++c) out.values[c] += g.values[c];
    return out;
}

ClassFunction operator-(const ClassFunction& f, const ClassFunction& g) {
    same_group(f, g);
    ClassFunction out = f;
    for (std::size_t c = 0; c < out.values.size(); ++c) out.values[c] -= g.values[c];
    return out;
}

ClassFunction operator*(const ClassFunction& f, const ClassFunction& g) {
    same_group(f, g);
    ClassFunction out = f;
    for (std::size_t c = 0; c < out.values.size(); ++c) out.values[c] = f.values[c] * g.values[c];
    return out;
}

ClassFunction operator*(const ClassFunction& f, const Rational& r) {
    ClassFunction out = f;
    for (auto& v : out.values) v = v * r;
    return out;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) {
    same_group(f, g);
    const MatrixGroup& G = *f.group;
    Cyclotomic acc;
    for (std::size_t c = 0; c < G.class_count(); ++c) {
        if (f.values[c].is_zero() || g.values[c].is_zero()) continue;
        acc += (f.values[c] * g.values[c].conj()) * Rational(static_cast<long>(G.class_size(c)));
    }
    return acc / Rational(static_cast<long>(G.order()));
}

ClassFunction restrict_to(const ClassFunction& f, const GroupPtr& H) {
    ClassFunction out{H, {}};
    out.values.reserve(H->class_count());
    for (std::size_t c = 0; c < H->class_count(); ++c) {
        const auto i = f.group->index_of(H->element(H->class_rep(c)));
        if (!i) throw std::invalid_argument("restrict: " + H->descriptor() + " is not inside " + f.group->descriptor());
        out.values.push_back(f.values[f.group->class_of(*i)]);
    }
    return out;
}

ClassFunction induce(const ClassFunction& f, const GroupPtr& G) {
    const MatrixGroup& H = *f.group;
    // Ind f(C) = |G| / (|H| |C|) * sum over H-classes c inside C of |c| f(c).
    std::vector<Cyclotomic> acc(G->class_count());
    for (std::size_t c = 0; c < H.class_count(); ++c) {
        const auto i = G->index_of(H.element(H.class_rep(c)));
        if (!i) throw std::invalid_argument("induce: " + H.descriptor() + " is not inside " + G->descriptor());
        const std::size_t C = G->class_of(*i);
        acc[C] += f.values[c] * Rational(static_cast<long>(H.class_size(c)));
    }
    ClassFunction out{G, {}};
    out.values.reserve(G->class_count());
    for (std::size_t C = 0; C < G->class_count(); ++C) {
        Rational scale(Integer(static_cast<long>(G->order())),
                       Integer(static_cast<long>(H.order() * G->class_size(C))));
        scale.canonicalize();
        out.values.push_back(acc[C] * scale);
    }
    return out;
}

std::int64_t fixed_dim(const ClassFunction& chi, const std::vector<GL2Elem>& H) {
    const MatrixGroup& G = *chi.group;
    std::vector<long> counts(G.class_count(), 0);
    for (const auto& h : H) ++counts[G.class_of_elem(h)];
    Cyclotomic acc;
    for (std::size_t c = 0; c < counts.size(); ++c)
        if (counts[c]) acc += chi.values[c] * Rational(counts[c]);
    const Cyclotomic v = acc / Rational(static_cast<long>(H.size()));
    if (!v.is_rational() || !is_integer(v.rational_value()) || v.rational_value() < 0)
        throw std::domain_error("fixed_dim is not a nonnegative integer: " + v.str());
    return v.integer_value();
}

std::int64_t fixed_dim(const ClassFunction& chi, const MatrixGroup& H) { return fixed_dim(chi, H.elements()); }

ClassFunction conjugate_class_function(const ClassFunction& f, const GL2Elem& g) {
    const GroupPtr Hg = conjugate(f.group, g, f.group->descriptor() + "^g");
    return conjugate_class_function(f, g, Hg);
}

ClassFunction conjugate_class_function(const ClassFunction& f, const GL2Elem& g, const GroupPtr& Hg) {
    const ResidueRing& R = f.group->ring();
    const GL2Elem gi = inverse(R, g);
    ClassFunction out{Hg, {}};
    out.values.reserve(Hg->class_count());
    for (std::size_t c = 0; c < Hg->class_count(); ++c) {
        // g s g^{-1} = conj_by(s, g^{-1})
        const GL2Elem s = conj_by(R, Hg->element(Hg->class_rep(c)), gi);
        out.values.push_back(f.at(s));
    }
    return out;
}

}  // namespace ltswan

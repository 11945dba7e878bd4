#include "ltswan/matrix_group.hpp"

#include <algorithm>
#include <deque>

namespace ltswan {

MatrixGroup::MatrixGroup(RingPtr ring, std::vector<GL2Elem> elements, std::string descriptor,
                         std::vector<GL2Elem> generator_hint)
    : ring_(std::move(ring)), descriptor_(std::move(descriptor)) {
    const ResidueRing& R = *ring_;
    std::vector<std::pair<std::uint64_t, GL2Elem>> coded;
    coded.reserve(elements.size());
    for (const auto& x : elements) {
        if (!is_invertible(R, x)) throw std::invalid_argument("group element is not invertible: " + format(R, x));
        coded.emplace_back(encode(R, x), x);
    }
    std::sort(coded.begin(), coded.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    coded.erase(std::unique(coded.begin(), coded.end(), [](const auto& l, const auto& r) { return l.first == r.first; }),
                coded.end());
    elems_.reserve(coded.size());
    codes_.reserve(coded.size());
    for (const auto& [code, x] : coded) {
        codes_.push_back(code);
        elems_.push_back(x);
    }
    const auto id = index_of(identity_elem());
    if (!id) throw NotSubgroup(descriptor_ + ": identity missing");
    identity_ = *id;
    find_generators(generator_hint);
    inverse_.resize(order());
    for (std::size_t i = 0; i < order(); ++i) {
        const auto j = index_of(ltswan::inverse(R, elems_[i]));
        if (!j) throw NotSubgroup(descriptor_ + ": not closed under inverse");
        inverse_[i] = *j;
    }
    compute_classes();
}

std::optional<std::size_t> MatrixGroup::index_of(const GL2Elem& x) const {
    const auto code = encode(*ring_, x);
    const auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return std::nullopt;
    return static_cast<std::size_t>(it - codes_.begin());
}

std::size_t MatrixGroup::mul_index(std::size_t i, std::size_t j) const {
    const auto k = index_of(mul(*ring_, elems_[i], elems_[j]));
    if (!k) throw NotSubgroup(descriptor_ + ": product left the group");
    return *k;
}

std::size_t MatrixGroup::class_of_elem(const GL2Elem& x) const {
    const auto i = index_of(x);
    if (!i) throw std::invalid_argument(descriptor_ + ": element not in group: " + format(*ring_, x));
    return class_of_[*i];
}

void MatrixGroup::find_generators(const std::vector<GL2Elem>& hint) {
    const std::size_t N = order();
    std::vector<char> in_span(N, 0);
    std::vector<std::size_t> span{identity_};
    in_span[identity_] = 1;

    auto add_gen = [&](std::size_t g) {
        gens_.push_back(g);
        std::deque<std::size_t> queue;
        const std::size_t old = span.size();
        for (std::size_t t = 0; t < old; ++t) {
            const auto k = index_of(mul(*ring_, elems_[span[t]], elems_[g]));
            if (!k) throw NotSubgroup(descriptor_ + ": not closed under multiplication");
            if (!in_span[*k]) {
                in_span[*k] = 1;
                span.push_back(*k);
                queue.push_back(*k);
            }
        }
        while (!queue.empty()) {
            const std::size_t y = queue.front();
            queue.pop_front();
            for (std::size_t s : gens_) {
                const auto k = index_of(mul(*ring_, elems_[y], elems_[s]));
                if (!k) throw NotSubgroup(descriptor_ + ": not closed under multiplication");
                if (!in_span[*k]) {
                    in_span[*k] = 1;
                    span.push_back(*k);
                    queue.push_back(*k);
                }
            }
        }
    };

    if (!hint.empty()) {
        for (const auto& h : hint) {
            const auto i = index_of(h);
            if (!i) throw std::invalid_argument(descriptor_ + ": generator hint outside the set");
            if (!in_span[*i]) add_gen(*i);
        }
        if (span.size() != N) throw std::invalid_argument(descriptor_ + ": generator hint does not generate the set");
        return;
    }
    for (std::size_t i = 0; i < N && span.size() < N; ++i)
        if (!in_span[i]) add_gen(i);
}

void MatrixGroup::compute_classes() {
    const std::size_t N = order();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    class_of_.assign(N, unset);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < N; ++i) {
        if (class_of_[i] != unset) continue;
        const std::size_t c = classes.size();
        std::vector<std::size_t> members{i};
        class_of_[i] = c;
        for (std::size_t t = 0; t < members.size(); ++t) {
            const std::size_t y = members[t];
            for (std::size_t s : gens_) {
                const std::size_t z = mul_index(mul_index(inverse_[s], y), s);
                if (class_of_[z] == unset) {
                    class_of_[z] = c;
                    members.push_back(z);
                }
            }
        }
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    // Identity class first, the rest keep their order.
    const std::size_t idc = class_of_[identity_];
    std::rotate(classes.begin(), classes.begin() + idc, classes.begin() + idc + 1);
    class_members_ = std::move(classes);
    for (std::size_t c = 0; c < class_members_.size(); ++c)
        for (std::size_t m : class_members_[c]) class_of_[m] = c;
    inverse_class_.resize(class_members_.size());
    for (std::size_t c = 0; c < class_members_.size(); ++c)
        inverse_class_[c] = class_of_[inverse_[class_rep(c)]];
}

bool is_subgroup(const ResidueRing& R, const std::vector<GL2Elem>& elements) {
    if (elements.empty()) return false;
    try {
        MatrixGroup probe(std::shared_ptr<const ResidueRing>(&R, [](const ResidueRing*) {}), elements, "probe");
        return true;
    } catch (const NotSubgroup&) {
        return false;
    }
}

std::uint64_t gl2_order(const ResidueRing& R) {
    const std::uint64_t q = R.q();
    std::uint64_t out = (q * q - 1) * (q * q - q);
    for (std::uint32_t i = 1; i < R.n(); ++i) out *= q * q * q * q;
    return out;
}

namespace {

std::vector<GL2Elem> collect(const ResidueRing& R, const std::function<bool(const GL2Elem&)>& pred) {
    const Elem N = R.size();
    std::vector<GL2Elem> out;
    for (Elem a = 0; a < N; ++a)
        for (Elem b = 0; b < N; ++b)
            for (Elem c = 0; c < N; ++c)
                for (Elem d = 0; d < N; ++d) {
                    const GL2Elem x{a, b, c, d};
                    if (is_invertible(R, x) && pred(x)) out.push_back(x);
                }
    return out;
}

void check_cap(const ResidueRing& R, std::uint64_t cap) {
    if (gl2_order(R) > cap)
        throw CapExceeded("|GL2(" + R.spec() + ")| = " + std::to_string(gl2_order(R)) + " exceeds cap " +
                          std::to_string(cap));
}

}  // namespace

GroupPtr enumerate_gl2(RingPtr ring, std::uint64_t cap) {
    const ResidueRing& R = *ring;
    check_cap(R, cap);
    auto elems = collect(R, [](const GL2Elem&) { return true; });
    if (elems.size() != gl2_order(R)) throw std::logic_error("GL2 enumeration disagrees with the order formula");
    // Elementary matrices and diag(u, 1) over a unit-group generating set.
    std::vector<GL2Elem> hint{GL2Elem{1, 1, 0, 1}, GL2Elem{1, 0, 1, 1}};
    {
        const auto units = R.unit_group();
        std::vector<char> seen(R.size(), 0);
        std::vector<Elem> span{1};
        seen[1] = 1;
        for (Elem u : units) {
            if (seen[u]) continue;
            hint.push_back(GL2Elem{u, 0, 0, 1});
            for (std::size_t t = 0; t < span.size(); ++t) {
                Elem y = R.mul(span[t], u);
                while (!seen[y]) {
                    seen[y] = 1;
                    span.push_back(y);
                    y = R.mul(y, u);
                }
            }
        }
    }
    return std::make_shared<const MatrixGroup>(ring, std::move(elems), "GL2(" + R.spec() + ")", std::move(hint));
}

GroupPtr gl2_subset(const RingPtr& ring, const std::function<bool(const GL2Elem&)>& pred, std::string descriptor,
                    std::uint64_t cap) {
    check_cap(*ring, cap);
    return std::make_shared<const MatrixGroup>(ring, collect(*ring, pred), std::move(descriptor));
}

GroupPtr subgroup_where(const GroupPtr& parent, const std::function<bool(const GL2Elem&)>& pred,
                        std::string descriptor) {
    std::vector<GL2Elem> out;
    for (const auto& x : parent->elements())
        if (pred(x)) out.push_back(x);
    return std::make_shared<const MatrixGroup>(parent->ring_ptr(), std::move(out), std::move(descriptor));
}

GroupPtr borel_stabilizer(const RingPtr& ring) {
    const ResidueRing& R = *ring;
    std::vector<GL2Elem> out;
    for (Elem a : R.unit_group())
        for (Elem b = 0; b < R.size(); ++b) out.push_back(GL2Elem{a, b, 0, R.inv(a)});
    return std::make_shared<const MatrixGroup>(ring, std::move(out), "G_y");
}

GroupPtr k0_subgroup(const RingPtr& ring) {
    const ResidueRing& R = *ring;
    std::vector<GL2Elem> out;
    const auto units = R.unit_group();
    for (Elem a : units)
        for (Elem d : units)
            for (Elem b = 0; b < R.size(); ++b) out.push_back(GL2Elem{a, b, 0, d});
    return std::make_shared<const MatrixGroup>(ring, std::move(out), "K0(" + std::to_string(R.n()) + ")");
}

GroupPtr iwahori(const RingPtr& ring) {
    const ResidueRing& R = *ring;
    return gl2_subset(ring, [&R](const GL2Elem& x) { return R.val_pi(x.c) >= 1; }, "K'");
}

GroupPtr iwahori_layer(const RingPtr& ring, std::uint32_t m) {
    const ResidueRing& R = *ring;
    const std::uint32_t n = R.n();
    if (n < 1 || m + 2 > 2 * n) throw std::invalid_argument("K'_m requires m <= 2n-2");
    const std::uint32_t n1 = m / 2, n2 = (m + 1) / 2;
    if (m == 0) return iwahori(ring);
    return gl2_subset(
        ring,
        [&R, n1, n2](const GL2Elem& x) {
            return R.val_pi(R.sub(x.a, 1)) >= n2 && R.val_pi(R.sub(x.d, 1)) >= n2 && R.val_pi(x.b) >= n1 &&
                   R.val_pi(x.c) >= n1 + 1;
        },
        "K'_" + std::to_string(m));
}

GroupPtr unipotent(const RingPtr& ring, std::uint32_t r) {
    const ResidueRing& R = *ring;
    if (r > R.n()) throw std::invalid_argument("U_r requires r <= n");
    std::vector<GL2Elem> out;
    for (Elem b = 0; b < R.size(); ++b)
        if (R.val_pi(b) >= r) out.push_back(GL2Elem{1, b, 0, 1});
    return std::make_shared<const MatrixGroup>(ring, std::move(out), "U_" + std::to_string(r));
}

GroupPtr principal_congruence(const RingPtr& ring, std::uint32_t m) {
    const ResidueRing& R = *ring;
    if (m > R.n()) throw std::invalid_argument("K_m requires m <= n");
    if (m == 0) return enumerate_gl2(ring);
    // Enumerate 1 + pi^m M directly: entries in the ideal pi^m.
    std::vector<Elem> ideal;
    for (Elem x = 0; x < R.size(); ++x)
        if (R.val_pi(x) >= m) ideal.push_back(x);
    std::vector<GL2Elem> out;
    for (Elem a : ideal)
        for (Elem b : ideal)
            for (Elem c : ideal)
                for (Elem d : ideal) out.push_back(GL2Elem{R.add(1, a), b, c, R.add(1, d)});
    return std::make_shared<const MatrixGroup>(ring, std::move(out), "K_" + std::to_string(m));
}

GroupPtr center(const RingPtr& ring) {
    const ResidueRing& R = *ring;
    std::vector<GL2Elem> out;
    for (Elem a : R.unit_group()) out.push_back(GL2Elem{a, 0, 0, a});
    return std::make_shared<const MatrixGroup>(ring, std::move(out), "Z");
}

GroupPtr det_one(const RingPtr& ring) {
    const ResidueRing& R = *ring;
    return gl2_subset(ring, [&R](const GL2Elem& x) { return det(R, x) == 1; }, "SL2");
}

GroupPtr unit_torus(const RingPtr& ring) {
    const ResidueRing& R = *ring;
    std::vector<GL2Elem> out;
    for (Elem a : R.unit_group()) out.push_back(GL2Elem{a, 0, 0, 1});
    return std::make_shared<const MatrixGroup>(ring, std::move(out), "diag(u,1)");
}

GroupPtr intersect(const GroupPtr& A, const GroupPtr& B, std::string descriptor) {
    return subgroup_where(A, [&B](const GL2Elem& x) { return B->contains(x); }, std::move(descriptor));
}

GroupPtr conjugate(const GroupPtr& H, const GL2Elem& g, std::string descriptor) {
    const ResidueRing& R = H->ring();
    std::vector<GL2Elem> out;
    out.reserve(H->order());
    for (const auto& x : H->elements()) out.push_back(conj_by(R, x, g));
    return std::make_shared<const MatrixGroup>(H->ring_ptr(), std::move(out), std::move(descriptor));
}

std::vector<DoubleCoset> double_cosets(const MatrixGroup& H, const MatrixGroup& G, const MatrixGroup& K) {
    const ResidueRing& R = G.ring();
    std::vector<char> seen(G.order(), 0);
    std::vector<DoubleCoset> out;
    for (std::size_t i = 0; i < G.order(); ++i) {
        if (seen[i]) continue;
        std::size_t size = 0;
        for (const auto& h : H.elements()) {
            const GL2Elem hg = mul(R, h, G.element(i));
            for (const auto& k : K.elements()) {
                const auto j = G.index_of(mul(R, hg, k));
                if (!j) throw std::invalid_argument("double_cosets: H or K not inside G");
                if (!seen[*j]) {
                    seen[*j] = 1;
                    ++size;
                }
            }
        }
        out.push_back(DoubleCoset{G.element(i), size});
    }
    return out;
}

}  // namespace ltswan

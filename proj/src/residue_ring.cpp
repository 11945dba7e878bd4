#include "ltswan/residue_ring.hpp"

#include <charconv>
#include <stdexcept>

namespace ltswan {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // F_p coefficients, low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(m[i])) % p);
        trim(a);
    }
    return a;
}

Poly decode_poly(std::uint32_t code, std::uint32_t p, std::uint32_t len) {
    Poly out(len);
    for (std::uint32_t i = 0; i < len; ++i) {
        out[i] = code % p;
        code /= p;
    }
    return out;
}

// Smallest monic irreducible of degree f over F_p, ordered by the code of its lower coefficients.
Poly find_irreducible(std::uint32_t p, std::uint32_t f) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < f; ++i) count *= p;
    for (std::uint32_t code = 0; code < count; ++code) {
        Poly g = decode_poly(code, p, f);
        g.push_back(1);
        bool irreducible = true;
        for (std::uint32_t d = 1; irreducible && 2 * d <= f; ++d) {
            std::uint32_t dcount = 1;
            for (std::uint32_t i = 0; i < d; ++i) dcount *= p;
            for (std::uint32_t dc = 0; dc < dcount; ++dc) {
                Poly h = decode_poly(dc, p, d);
                h.push_back(1);
                if (poly_mod(g, h, p).empty()) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (irreducible) return g;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

ResidueRing::ResidueRing(std::uint32_t p, std::uint32_t f, std::uint32_t n, RingMode mode)
    : p_(p), f_(f), n_(n), q_(1), size_(1), mode_(mode) {
    if (!is_prime(p)) throw std::invalid_argument("ring: p must be prime, got " + std::to_string(p));
    if (f < 1 || n < 1) throw std::invalid_argument("ring: f and n must be positive");
    if (mode == RingMode::mixed && f != 1)
        throw std::invalid_argument("ring: mixed mode requires f = 1");
    std::uint64_t q = 1, size = 1;
    for (std::uint32_t i = 0; i < f; ++i) {
        q *= p;
        if (q > max_size) throw std::invalid_argument("ring: q^n exceeds table limit");
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        size *= q;
        if (size > max_size) throw std::invalid_argument("ring: q^n exceeds table limit");
    }
    q_ = static_cast<std::uint32_t>(q);
    size_ = static_cast<std::uint32_t>(size);
    if (mode == RingMode::mixed)
        build_mixed();
    else
        build_equal();

    inv_.assign(size_, 0);
    for (Elem x = 0; x < size_; ++x) {
        if (!is_unit(x)) continue;
        for (Elem y = 0; y < size_; ++y)
            if (mul(x, y) == 1) {
                inv_[x] = y;
                break;
            }
    }
}

void ResidueRing::build_mixed() {
    const std::uint32_t N = size_;
    add_.resize(std::size_t(N) * N);
    mul_.resize(std::size_t(N) * N);
    neg_.resize(N);
    val_.resize(N);
    for (Elem x = 0; x < N; ++x) {
        neg_[x] = (N - x) % N;
        std::uint32_t v = 0;
        for (Elem y = x; y != 0 && y % p_ == 0 && v < n_; y /= p_) ++v;
        val_[x] = x == 0 ? n_ : v;
        for (Elem y = 0; y < N; ++y) {
            add_[x * N + y] = (x + y) % N;
            mul_[x * N + y] = static_cast<Elem>((std::uint64_t(x) * y) % N);
        }
    }
    pi_ = n_ > 1 ? p_ : 0;
}

void ResidueRing::build_equal() {
    modulus_ = find_irreducible(p_, f_);
    const std::uint32_t Q = q_;
    // Residue field tables.
    std::vector<std::uint32_t> fadd(Q * Q), fmul(Q * Q);
    for (std::uint32_t a = 0; a < Q; ++a) {
        const Poly pa = decode_poly(a, p_, f_);
        for (std::uint32_t b = 0; b < Q; ++b) {
            const Poly pb = decode_poly(b, p_, f_);
            std::uint32_t sum = 0, scale = 1;
            for (std::uint32_t i = 0; i < f_; ++i) {
                sum += ((pa[i] + pb[i]) % p_) * scale;
                scale *= p_;
            }
            fadd[a * Q + b] = sum;
            Poly prod(2 * f_, 0);
            for (std::uint32_t i = 0; i < f_; ++i)
                for (std::uint32_t j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
            prod = poly_mod(prod, modulus_, p_);
            std::uint32_t code = 0;
            scale = 1;
            for (std::uint32_t i = 0; i < prod.size(); ++i) {
                code += prod[i] * scale;
                scale *= p_;
            }
            fmul[a * Q + b] = code;
        }
    }
    std::vector<std::uint32_t> fneg(Q);
    for (std::uint32_t a = 0; a < Q; ++a)
        for (std::uint32_t b = 0; b < Q; ++b)
            if (fadd[a * Q + b] == 0) fneg[a] = b;

    const std::uint32_t N = size_;
    auto digits = [&](Elem x) {
        std::vector<std::uint32_t> d(n_);
        for (std::uint32_t i = 0; i < n_; ++i) {
            d[i] = x % Q;
            x /= Q;
        }
        return d;
    };
    auto encode = [&](const std::vector<std::uint32_t>& d) {
        Elem code = 0, scale = 1;
        for (std::uint32_t i = 0; i < n_; ++i) {
            code += d[i] * scale;
            scale *= Q;
        }
        return code;
    };
    add_.resize(std::size_t(N) * N);
    mul_.resize(std::size_t(N) * N);
    neg_.resize(N);
    val_.resize(N);
    for (Elem x = 0; x < N; ++x) {
        const auto dx = digits(x);
        std::vector<std::uint32_t> nd(n_);
        for (std::uint32_t i = 0; i < n_; ++i) nd[i] = fneg[dx[i]];
        neg_[x] = encode(nd);
        std::uint32_t v = 0;
        while (v < n_ && dx[v] == 0) ++v;
        val_[x] = v;
        for (Elem y = 0; y < N; ++y) {
            const auto dy = digits(y);
            std::vector<std::uint32_t> s(n_), m(n_, 0);
            for (std::uint32_t i = 0; i < n_; ++i) s[i] = fadd[dx[i] * Q + dy[i]];
            for (std::uint32_t i = 0; i < n_; ++i)
                for (std::uint32_t j = 0; i + j < n_; ++j) m[i + j] = fadd[m[i + j] * Q + fmul[dx[i] * Q + dy[j]]];
            add_[x * N + y] = encode(s);
            mul_[x * N + y] = encode(m);
        }
    }
    pi_ = n_ > 1 ? Q : 0;
}

Elem ResidueRing::inv(Elem x) const {
    if (!is_unit(x)) throw std::domain_error("ring: inverse of a non-unit");
    return inv_[x];
}

Elem ResidueRing::pow(Elem x, std::uint64_t e) const {
    Elem out = 1;
    while (e) {
        if (e & 1) out = mul(out, x);
        x = mul(x, x);
        e >>= 1;
    }
    return out;
}

Elem ResidueRing::pi_pow(std::uint32_t k) const {
    if (k >= n_) return 0;
    return pow(pi_, k);
}

Elem ResidueRing::from_int(std::int64_t k) const {
    if (mode_ == RingMode::mixed) {
        const std::int64_t N = size_;
        return static_cast<Elem>(((k % N) + N) % N);
    }
    const std::int64_t P = p_;
    return static_cast<Elem>(((k % P) + P) % P);
}

std::vector<Elem> ResidueRing::unit_group() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < size_; ++x)
        if (is_unit(x)) out.push_back(x);
    return out;
}

std::string ResidueRing::spec() const {
    return std::to_string(p_) + ":" + std::to_string(f_) + ":" + std::to_string(n_) + ":" +
           (mode_ == RingMode::mixed ? "mixed" : "equal");
}

std::string ResidueRing::format(Elem x) const {
    if (mode_ == RingMode::mixed) return std::to_string(x);
    // t-adic digits, each residue-field digit written as its code.
    std::string out = "[";
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (i) out += ",";
        out += std::to_string(x % q_);
        x /= q_;
    }
    return out + "]";
}

RingPtr make_ring(std::uint32_t p, std::uint32_t f, std::uint32_t n, RingMode mode) {
    return std::make_shared<const ResidueRing>(p, f, n, mode);
}

RingPtr parse_ring(std::string_view spec) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = spec.find(':', start);
        parts.push_back(spec.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    if (parts.size() != 4) throw std::invalid_argument("ring spec must be p:f:n:mode, got '" + std::string(spec) + "'");
    std::uint32_t v[3];
    for (int i = 0; i < 3; ++i) {
        const auto s = parts[i];
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v[i]);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size())
            throw std::invalid_argument("ring spec: bad integer '" + std::string(s) + "'");
    }
    RingMode mode;
    if (parts[3] == "mixed")
        mode = RingMode::mixed;
    else if (parts[3] == "equal")
        mode = RingMode::equal;
    else
        throw std::invalid_argument("ring spec: mode must be mixed or equal");
    return make_ring(v[0], v[1], v[2], mode);
}

}  // namespace ltswan

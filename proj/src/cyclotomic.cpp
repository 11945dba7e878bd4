#include "ltswan/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ltswan {

std::uint32_t euler_phi(std::uint32_t m) {
    std::uint32_t out = m, x = m;
    for (std::uint32_t p = 2; p * p <= x; ++p) {
        if (x % p) continue;
        while (x % p == 0) x /= p;
        out -= out / p;
    }
    if (x > 1) out -= out / x;
    return out;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

namespace {

using IPoly = std::vector<std::int64_t>;

// Exact quotient of a by the monic b.
IPoly divide_exact(IPoly a, const IPoly& b) {
    const std::size_t db = b.size() - 1;
    IPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const std::int64_t lead = a[i];
        q[i - db] = lead;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= lead * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

std::unique_ptr<CycloField> build_field(std::uint32_t m) {
    auto F = std::make_unique<CycloField>();
    F->m = m;
    IPoly num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (std::uint32_t d = 1; d < m; ++d)
        if (m % d == 0) num = divide_exact(num, cyclo_field(d).poly);
    F->poly = num;
    F->phi = static_cast<std::uint32_t>(num.size() - 1);
    const std::uint32_t phi = F->phi;
    F->powers.assign(m, IPoly(phi, 0));
    IPoly cur(phi, 0);
    cur[0] = 1;
    for (std::uint32_t k = 0; k < m; ++k) {
        F->powers[k] = cur;
        // cur *= x, then reduce the x^phi term.
        const std::int64_t top = cur[phi - 1];
        for (std::uint32_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::uint32_t i = 0; i < phi; ++i) cur[i] -= top * F->poly[i];
    }
    return F;
}

}  // namespace

const CycloField& cyclo_field(std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("conductor must be positive");
    static std::recursive_mutex mu;
    static std::map<std::uint32_t, std::unique_ptr<CycloField>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
    auto F = build_field(m);
    const CycloField& ref = *F;
    cache.emplace(m, std::move(F));
    return ref;
}

Cyclotomic Cyclotomic::zeta(std::uint32_t m, std::int64_t k) {
    const CycloField& F = cyclo_field(m);
    const std::int64_t r = ((k % std::int64_t(m)) + m) % m;
    std::vector<Rational> c(F.phi);
    for (std::uint32_t i = 0; i < F.phi; ++i) c[i] = Rational(static_cast<long>(F.powers[r][i]));
    return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::from_powers(std::uint32_t m, const std::vector<Rational>& coeffs) {
    const CycloField& F = cyclo_field(m);
    std::vector<Rational> c(F.phi);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        const auto& row = F.powers[k % m];
        for (std::uint32_t i = 0; i < F.phi; ++i)
            if (row[i] != 0) c[i] += coeffs[k] * static_cast<long>(row[i]);
    }
    return Cyclotomic(m, std::move(c));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
    return c_[0];
}

std::int64_t Cyclotomic::integer_value() const { return to_int64(rational_value()); }

Cyclotomic Cyclotomic::promote(std::uint32_t L) const {
    if (L == m_) return *this;
    if (L % m_ != 0) throw std::invalid_argument("promote: target conductor is not a multiple");
    const std::uint32_t step = L / m_;
    std::vector<Rational> powers(static_cast<std::size_t>(step) * (c_.size() - 1) + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) powers[k * step] = c_[k];
    return from_powers(L, powers);
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<Rational> powers(m_);
    for (std::size_t k = 0; k < c_.size(); ++k) powers[(m_ - k) % m_] += c_[k];
    return from_powers(m_, powers);
}

Cyclotomic Cyclotomic::real_part() const { return (*this + conj()) / Rational(2); }

Cyclotomic Cyclotomic::operator-() const {
    auto out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

namespace {

std::uint32_t common(const Cyclotomic& a, const Cyclotomic& b) {
    return static_cast<std::uint32_t>(lcm_u64(a.conductor(), b.conductor()));
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.m_ != b.m_) {
        const auto L = common(a, b);
        return a.promote(L) + b.promote(L);
    }
    auto out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.m_ != b.m_) {
        const auto L = common(a, b);
        return a.promote(L) * b.promote(L);
    }
    if (a.m_ == 1) return Cyclotomic(a.c_[0] * b.c_[0]);
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return Cyclotomic::from_powers(a.m_, prod);
}

Cyclotomic operator*(const Cyclotomic& a, const Rational& r) {
    auto out = a;
    for (auto& x : out.c_) x *= r;
    return out;
}

Cyclotomic operator/(const Cyclotomic& a, const Rational& r) {
    if (r == 0) throw std::domain_error("division by zero");
    auto out = a;
    for (auto& x : out.c_) x /= r;
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

int lex_compare(const Cyclotomic& a, const Cyclotomic& b) {
    const auto L = common(a, b);
    const auto pa = a.promote(L), pb = b.promote(L);
    for (std::size_t i = 0; i < pa.c_.size(); ++i) {
        const int c = cmp(pa.c_[i], pb.c_[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return to_string(c_[0]);
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ",";
        out += to_string(c_[i]);
    }
    return out + "]@" + std::to_string(m_);
}

}  // namespace ltswan

#include "ltswan/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ltswan {

std::uint64_t element_order(const MatrixGroup& G, std::size_t index) {
    std::uint64_t k = 1;
    std::size_t cur = index;
    while (cur != G.identity_index()) {
        cur = G.mul_index(cur, index);
        ++k;
    }
    return k;
}

std::uint32_t group_exponent(const MatrixGroup& G) {
    std::uint64_t e = 1;
    for (std::size_t c = 0; c < G.class_count(); ++c) e = lcm_u64(e, element_order(G, G.class_rep(c)));
    return static_cast<std::uint32_t>(e);
}

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

struct Fp {
    u64 P;
    u64 mul(u64 a, u64 b) const { return a * b % P; }
    u64 add(u64 a, u64 b) const { return (a + b) % P; }
    u64 sub(u64 a, u64 b) const { return (a + P - b) % P; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= P;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const {
        if (a % P == 0) throw std::domain_error("F_P inverse of zero");
        return pow(a, P - 2);
    }
};

bool prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 primitive_root(const Fp& F) {
    std::vector<u64> factors;
    u64 m = F.P - 1;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) factors.push_back(m);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 f : factors)
            if (F.pow(g, (F.P - 1) / f) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

// Reduced row echelon form in place; returns pivot columns. Zero rows are dropped.
std::vector<std::size_t> rref(Mat& rows, const Fp& F) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const u64 iv = F.inv(rows[r][c]);
        for (auto& x : rows[r]) x = F.mul(x, iv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const u64 f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Basis of {x : X x = 0} for square X.
Mat nullspace(Mat X, const Fp& F) {
    const std::size_t d = X.size();
    const auto piv = rref(X, F);
    std::vector<char> is_piv(d, 0);
    for (auto c : piv) is_piv[c] = 1;
    Mat out;
    for (std::size_t free = 0; free < d; ++free) {
        if (is_piv[free]) continue;
        Vec v(d, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.sub(0, X[r][free]);
        out.push_back(std::move(v));
    }
    return out;
}

// Characteristic polynomial det(x I - X), low degree first, via Hessenberg reduction.
Vec charpoly(Mat H, const Fp& F) {
    const std::size_t d = H.size();
    for (std::size_t c = 0; c + 2 < d; ++c) {
        std::size_t r = c + 1;
        while (r < d && H[r][c] == 0) ++r;
        if (r == d) continue;
        if (r != c + 1) {
            std::swap(H[r], H[c + 1]);
            for (auto& row : H) std::swap(row[r], row[c + 1]);
        }
        const u64 iv = F.inv(H[c + 1][c]);
        for (std::size_t i = c + 2; i < d; ++i) {
            if (H[i][c] == 0) continue;
            const u64 f = F.mul(H[i][c], iv);
            for (std::size_t j = 0; j < d; ++j) H[i][j] = F.sub(H[i][j], F.mul(f, H[c + 1][j]));
            for (std::size_t j = 0; j < d; ++j) H[j][c + 1] = F.add(H[j][c + 1], F.mul(f, H[j][i]));
        }
    }
    std::vector<Vec> p(d + 1);
    p[0] = Vec{1};
    for (std::size_t m = 1; m <= d; ++m) {
        // p_m = (x - H[m-1][m-1]) p_{m-1} - sum_{i=1}^{m-1} t_i H[m-i-1][m-1] p_{m-i-1}
        Vec next(m + 1, 0);
        for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
            next[k + 1] = F.add(next[k + 1], p[m - 1][k]);
            next[k] = F.sub(next[k], F.mul(H[m - 1][m - 1], p[m - 1][k]));
        }
        u64 t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t = F.mul(t, H[m - i][m - i - 1]);
            const u64 f = F.mul(t, H[m - i - 1][m - 1]);
            if (f == 0) continue;
            for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) next[k] = F.sub(next[k], F.mul(f, p[m - i - 1][k]));
        }
        p[m] = std::move(next);
    }
    return p[d];
}

struct Space {
    Mat basis;  // rows, RREF
    std::vector<std::size_t> pivots;
};

class Dixon {
public:
    Dixon(const GroupPtr& G, std::uint64_t seed) : G_(G), rng_(seed) {}

    CharTable run();

private:
    GroupPtr G_;
    std::mt19937_64 rng_;
    Fp F_{0};
    std::uint32_t e_ = 1;
    std::size_t k_ = 0;

    // Random combination of class matrices: A[r][s] = sum_j w_j #{x in C_j : x^{-1} g_s in C_r}.
    Mat combination(const std::vector<u64>& w) const {
        const MatrixGroup& G = *G_;
        Mat A(k_, Vec(k_, 0));
        std::vector<std::size_t> reps(k_);
        for (std::size_t s = 0; s < k_; ++s) reps[s] = G.class_rep(s);
        for (std::size_t x = 0; x < G.order(); ++x) {
            const u64 wx = w[G.class_of(x)];
            if (wx == 0) continue;
            const std::size_t xi = G.inverse_index(x);
            for (std::size_t s = 0; s < k_; ++s) {
                const std::size_t r = G.class_of(G.mul_index(xi, reps[s]));
                A[r][s] = F_.add(A[r][s], wx);
            }
        }
        return A;
    }

    std::vector<Space> split(const Space& V, const Mat& A) const {
        const std::size_t d = V.basis.size();
        Mat X(d, Vec(d, 0));
        for (std::size_t i = 0; i < d; ++i) {
            Vec Mb(k_, 0);
            for (std::size_t r = 0; r < k_; ++r) {
                u64 acc = 0;
                for (std::size_t s = 0; s < k_; ++s)
                    if (V.basis[i][s] && A[r][s]) acc = F_.add(acc, F_.mul(A[r][s], V.basis[i][s]));
                Mb[r] = acc;
            }
            for (std::size_t l = 0; l < d; ++l) X[l][i] = Mb[V.pivots[l]];
        }
        const Vec cp = charpoly(X, F_);
        std::vector<Space> out;
        std::size_t covered = 0;
        for (u64 lam = 0; lam < F_.P && covered < d; ++lam) {
            u64 val = 0;
            for (std::size_t k = cp.size(); k-- > 0;) val = F_.add(F_.mul(val, lam), cp[k]);
            if (val != 0) continue;
            Mat Y = X;
            for (std::size_t i = 0; i < d; ++i) Y[i][i] = F_.sub(Y[i][i], lam);
            const Mat ker = nullspace(Y, F_);
            Space S;
            for (const auto& c : ker) {
                Vec v(k_, 0);
                for (std::size_t i = 0; i < d; ++i)
                    if (c[i])
                        for (std::size_t s = 0; s < k_; ++s) v[s] = F_.add(v[s], F_.mul(c[i], V.basis[i][s]));
                S.basis.push_back(std::move(v));
            }
            S.pivots = rref(S.basis, F_);
            covered += S.basis.size();
            out.push_back(std::move(S));
        }
        if (covered != d) throw std::runtime_error("dixon: class matrix not diagonalizable over F_P");
        return out;
    }
};

CharTable Dixon::run() {
    const MatrixGroup& G = *G_;
    k_ = G.class_count();
    e_ = group_exponent(G);
    const u64 lo = std::max<u64>(2 * G.order(), 100000);
    u64 P = (lo / e_ + 1) * e_ + 1;
    while (!prime_u64(P)) P += e_;
    F_ = Fp{P};

    std::vector<Space> done, todo;
    {
        Space all;
        all.basis.assign(k_, Vec(k_, 0));
        for (std::size_t i = 0; i < k_; ++i) all.basis[i][i] = 1;
        all.pivots.resize(k_);
        std::iota(all.pivots.begin(), all.pivots.end(), 0);
        (k_ == 1 ? done : todo).push_back(std::move(all));
    }
    std::uniform_int_distribution<u64> coeff(1, P - 1);
    for (int round = 0; !todo.empty(); ++round) {
        if (round > 64) throw std::runtime_error("dixon: eigenspace splitting did not converge");
        std::vector<u64> w(k_);
        for (auto& x : w) x = coeff(rng_);
        const Mat A = combination(w);
        std::vector<Space> next;
        for (const auto& V : todo)
            for (auto& S : split(V, A)) (S.basis.size() == 1 ? done : next).push_back(std::move(S));
        todo = std::move(next);
    }
    if (done.size() != k_) throw std::runtime_error("dixon: wrong number of eigenvectors");

    // Power maps on class representatives.
    std::vector<std::vector<std::size_t>> powmap(k_);
    std::vector<std::uint32_t> orders(k_);
    for (std::size_t s = 0; s < k_; ++s) {
        const std::size_t g = G.class_rep(s);
        std::size_t cur = G.identity_index();
        do {
            powmap[s].push_back(G.class_of(cur));
            cur = G.mul_index(cur, g);
        } while (cur != G.identity_index());
        orders[s] = static_cast<std::uint32_t>(powmap[s].size());
    }
    const u64 z = F_.pow(primitive_root(F_), (P - 1) / e_);

    CharTable table;
    table.group = G_;
    table.exponent = e_;
    const u64 order_mod = G.order() % P;
    std::int64_t sum_sq = 0;
    for (auto& S : done) {
        Vec omega = S.basis[0];
        if (omega[0] == 0) throw std::runtime_error("dixon: eigenvector vanishes at the identity");
        const u64 iv0 = F_.inv(omega[0]);
        for (auto& x : omega) x = F_.mul(x, iv0);
        u64 acc = 0;
        for (std::size_t s = 0; s < k_; ++s)
            acc = F_.add(acc, F_.mul(F_.mul(omega[s], omega[G.inverse_class(s)]), F_.inv(G.class_size(s) % P)));
        const u64 d2 = F_.mul(order_mod, F_.inv(acc));
        const auto d = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d2))));
        if (static_cast<u64>(d * d) != d2 || d <= 0 || G.order() % d != 0)
            throw std::runtime_error("dixon: degree recovery failed");
        sum_sq += d * d;
        Vec chi(k_);
        for (std::size_t s = 0; s < k_; ++s)
            chi[s] = F_.mul(F_.mul(omega[s], static_cast<u64>(d)), F_.inv(G.class_size(s) % P));

        ClassFunction row{G_, {}};
        row.values.reserve(k_);
        for (std::size_t s = 0; s < k_; ++s) {
            const std::uint32_t o = orders[s];
            const u64 zo = F_.pow(z, e_ / o);
            const u64 inv_o = F_.inv(o);
            std::vector<Rational> coeffs(e_);
            std::int64_t total = 0;
            for (std::uint32_t t = 0; t < o; ++t) {
                // m_t = o^{-1} sum_j chi(g^j) zo^{-jt}
                const u64 step = F_.pow(F_.inv(zo), t);
                u64 m = 0, w = 1;
                for (std::uint32_t j = 0; j < o; ++j) {
                    m = F_.add(m, F_.mul(chi[powmap[s][j]], w));
                    w = F_.mul(w, step);
                }
                m = F_.mul(m, inv_o);
                if (m > static_cast<u64>(d)) throw std::runtime_error("dixon: eigenvalue multiplicity out of range");
                total += static_cast<std::int64_t>(m);
                coeffs[static_cast<std::size_t>(t) * (e_ / o)] = Rational(static_cast<long>(m));
            }
            if (total != d) throw std::runtime_error("dixon: multiplicities do not sum to the degree");
            row.values.push_back(Cyclotomic::from_powers(e_, coeffs));
        }
        table.irreducibles.push_back(std::move(row));
    }
    if (sum_sq != static_cast<std::int64_t>(G.order())) throw std::runtime_error("dixon: sum of squared degrees");

    std::sort(table.irreducibles.begin(), table.irreducibles.end(), [](const ClassFunction& a, const ClassFunction& b) {
        const auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (std::size_t s = 0; s < a.values.size(); ++s) {
            const int c = lex_compare(a.values[s], b.values[s]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    if (!rows_orthonormal(table)) throw std::runtime_error("dixon: orthogonality certificate failed");
    return table;
}

}  // namespace

CharTable dixon_table(const GroupPtr& G, std::size_t class_cap, std::uint64_t seed) {
    if (G->class_count() > class_cap)
        throw CapExceeded(G->descriptor() + ": " + std::to_string(G->class_count()) + " classes exceed cap " +
                          std::to_string(class_cap));
    return Dixon(G, seed).run();
}

bool rows_orthonormal(const CharTable& table) {
    const MatrixGroup& G = *table.group;
    const std::size_t k = G.class_count();
    std::uint32_t m = 1;
    for (const auto& row : table.irreducibles)
        for (const auto& v : row.values) m = static_cast<std::uint32_t>(lcm_u64(m, v.conductor()));
    const CycloField& F = cyclo_field(m);
    const std::size_t phi = F.phi;
    // Integer coefficient vectors of chi(s) and of conj(chi(s)) * |C_s|.
    std::vector<std::vector<std::vector<std::int64_t>>> val(table.irreducibles.size()), cval(table.irreducibles.size());
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
        val[i].resize(k);
        cval[i].resize(k);
        for (std::size_t s = 0; s < k; ++s) {
            const Cyclotomic v = table.irreducibles[i].values[s].promote(m);
            const Cyclotomic cv = v.conj() * Rational(static_cast<long>(G.class_size(s)));
            val[i][s].resize(phi);
            cval[i][s].resize(phi);
            for (std::size_t t = 0; t < phi; ++t) {
                if (!is_integer(v.coeffs()[t]) || !is_integer(cv.coeffs()[t])) return false;
                val[i][s][t] = to_int64(v.coeffs()[t]);
                cval[i][s][t] = to_int64(cv.coeffs()[t]);
            }
        }
    }
    std::vector<std::int64_t> prod(2 * phi), reduced(phi);
    for (std::size_t i = 0; i < val.size(); ++i)
        for (std::size_t j = i; j < val.size(); ++j) {
            std::fill(prod.begin(), prod.end(), 0);
            for (std::size_t s = 0; s < k; ++s)
                for (std::size_t a = 0; a < phi; ++a) {
                    if (val[i][s][a] == 0) continue;
                    for (std::size_t b = 0; b < phi; ++b) prod[a + b] += val[i][s][a] * cval[j][s][b];
                }
            std::fill(reduced.begin(), reduced.end(), 0);
            for (std::size_t a = 0; a < prod.size(); ++a) {
                if (prod[a] == 0) continue;
                const auto& row = F.powers[a % m];
                for (std::size_t t = 0; t < phi; ++t) reduced[t] += prod[a] * row[t];
            }
            const std::int64_t expect = i == j ? static_cast<std::int64_t>(G.order()) : 0;
            if (reduced[0] != expect) return false;
            for (std::size_t t = 1; t < phi; ++t)
                if (reduced[t] != 0) return false;
        }
    return true;
}

}  // namespace ltswan

#include "ltswan/gl2.hpp"

#include <stdexcept>

namespace ltswan {

std::uint64_t encode(const ResidueRing& R, const GL2Elem& x) {
    const std::uint64_t N = R.size();
    return ((std::uint64_t(x.a) * N + x.b) * N + x.c) * N + x.d;
}

GL2Elem decode(const ResidueRing& R, std::uint64_t code) {
    const std::uint64_t N = R.size();
    GL2Elem x;
    x.d = static_cast<Elem>(code % N);
    code /= N;
    x.c = static_cast<Elem>(code % N);
    code /= N;
    x.b = static_cast<Elem>(code % N);
    code /= N;
    x.a = static_cast<Elem>(code);
    return x;
}

GL2Elem identity_elem() { return GL2Elem{1, 0, 0, 1}; }

GL2Elem mul(const ResidueRing& R, const GL2Elem& x, const GL2Elem& y) {
    return GL2Elem{R.add(R.mul(x.a, y.a), R.mul(x.b, y.c)), R.add(R.mul(x.a, y.b), R.mul(x.b, y.d)),
                   R.add(R.mul(x.c, y.a), R.mul(x.d, y.c)), R.add(R.mul(x.c, y.b), R.mul(x.d, y.d))};
}

Elem det(const ResidueRing& R, const GL2Elem& x) { return R.sub(R.mul(x.a, x.d), R.mul(x.b, x.c)); }

bool is_invertible(const ResidueRing& R, const GL2Elem& x) { return R.is_unit(det(R, x)); }

GL2Elem inverse(const ResidueRing& R, const GL2Elem& x) {
    const Elem di = R.inv(det(R, x));
    return GL2Elem{R.mul(di, x.d), R.mul(di, R.neg(x.b)), R.mul(di, R.neg(x.c)), R.mul(di, x.a)};
}

GL2Elem conj_by(const ResidueRing& R, const GL2Elem& y, const GL2Elem& x) {
    return mul(R, mul(R, inverse(R, x), y), x);
}

GL2Elem power(const ResidueRing& R, const GL2Elem& x, std::uint64_t e) {
    GL2Elem out = identity_elem(), base = x;
    while (e) {
        if (e & 1) out = mul(R, out, base);
        base = mul(R, base, base);
        e >>= 1;
    }
    return out;
}

std::string format(const ResidueRing& R, const GL2Elem& x) {
    return "(" + R.format(x.a) + "," + R.format(x.b) + ";" + R.format(x.c) + "," + R.format(x.d) + ")";
}

}  // namespace ltswan

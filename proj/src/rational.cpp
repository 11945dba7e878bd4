#include "ltswan/rational.hpp"

#include <cctype>

namespace ltswan {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: " + std::string(text));
    std::string n(num);
    if (!n.empty() && n.front() == '+') n.erase(0, 1);
    Integer zn(n), zd{std::string(den)};
    if (zd == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational r(zn, zd);
    r.canonicalize();
    return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(Integer(std::to_string(num)), Integer(std::to_string(den)));
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in int64: " + z.get_str());
    return static_cast<std::int64_t>(z.get_si());
}

std::int64_t to_int64(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("not an integer: " + r.get_str());
    return to_int64(Integer(r.get_num()));
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 multiplication overflow");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("int64 addition overflow");
    return out;
}

std::int64_t ipow(std::int64_t base, unsigned exp) {
    std::int64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

}  // namespace ltswan

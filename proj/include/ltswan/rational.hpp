#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ltswan {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "a" or "a/b" in lowest terms.
std::string to_string(const Rational& r);

/// Parses "a", "-a" or "a/b"; throws std::invalid_argument on junk or zero denominator.
Rational parse_rational(std::string_view text);

/// Rational from a ratio of machine integers, canonicalized.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

bool is_integer(const Rational& r);

/// Exact conversion; throws std::overflow_error when r is not an integer fitting in int64.
std::int64_t to_int64(const Rational& r);
std::int64_t to_int64(const Integer& z);

/// Overflow-checked integer helpers used for group orders and sharp parts.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t ipow(std::int64_t base, unsigned exp);

}  // namespace ltswan

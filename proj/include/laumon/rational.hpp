#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace laumon {

// Exact scalar. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "+p" or "p/q" with q > 0. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    Rational r(Integer(std::to_string(num)), Integer(std::to_string(den)));
    r.canonicalize();
    return r;
}

// prod_{t=1}^{k} (m + t) / t, i.e. C(m + k, k) extended to rational m.
Rational rat_binomial(const Rational& m, int k);

Rational pow(const Rational& base, int exponent);

Rational abs(const Rational& value);

}  // namespace laumon

#include "laumon/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace laumon {

namespace {

bool is_digit_run(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("malformed rational literal '" + std::string(text) + "'"); };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digit_run(num) || !is_digit_run(den)) throw fail();
    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (negative) p = -p;
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational rat_binomial(const Rational& m, int k) {
    if (k < 0) throw std::invalid_argument("rat_binomial: negative k");
    Rational result(1);
    for (int t = 1; t <= k; ++t) {
        result *= m + t;
        result /= t;
    }
    return result;
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("pow: zero to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Rational result(1);
    Rational b = base;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1u) result *= b;
        b *= b;
    }
    return result;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace laumon

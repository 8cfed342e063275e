#include "laumon/sampling.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace laumon {

std::int64_t ParameterSampler::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("ParameterSampler::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
}

std::vector<Rational> ParameterSampler::sample_a(int n) {
    std::vector<std::int64_t> raw;
    while (static_cast<int>(raw.size()) < n) {
        const std::int64_t v = uniform(-50, 50);
        if (std::find(raw.begin(), raw.end(), v) == raw.end()) raw.push_back(v);
    }
    Rational mean(0);
    for (auto v : raw) mean += make_rational(v);
    mean /= n;
    std::vector<Rational> a;
    for (auto v : raw) a.push_back(make_rational(v) - mean);
    return a;
}

Rational ParameterSampler::sample_m() {
    while (true) {
        const std::int64_t p = uniform(-20, 20);
        const std::int64_t q = uniform(1, 5);
        Rational m = make_rational(p, q);
        if (m != 0 && m != -1) return m;
    }
}

std::vector<Rational> ParameterSampler::sample_distinct_nonzero(int n) {
    std::vector<Rational> t;
    while (static_cast<int>(t.size()) < n) {
        const std::int64_t p = uniform(-30, 30);
        const std::int64_t q = uniform(1, 6);
        if (p == 0) continue;
        Rational v = make_rational(p, q);
        if (std::find(t.begin(), t.end(), v) == t.end()) t.push_back(std::move(v));
    }
    return t;
}

Rational ParameterSampler::sample_scale() {
    while (true) {
        const std::int64_t p = uniform(-9, 9);
        const std::int64_t q = uniform(1, 9);
        if (p != 0) return make_rational(p, q);
    }
}

ParameterPoint ParameterSampler::sample_point(int n, const Rational& x) {
    std::vector<Rational> a = sample_a(n);
    for (auto& v : a) v *= x;
    return ParameterPoint(std::move(a), x, sample_m());
}

}  // namespace laumon

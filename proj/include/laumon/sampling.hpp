#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "laumon/parameter.hpp"

namespace laumon {

// Seeded parameter stream. Raw draws come from std::mt19937_64, whose output
// sequence is fixed by the standard. Bounded integers use rejection sampling
// on the raw 64-bit words, so a seed yields the same points on every platform.
class ParameterSampler {
public:
    explicit ParameterSampler(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    // n distinct integers in [-50, 50], shifted by their mean to sum to zero.
    std::vector<Rational> sample_a(int n);
    // p/q with p in [-20, 20], q in [1, 5], never 0 or -1.
    Rational sample_m();
    // n distinct nonzero rationals p/q with |p| <= 30, q in [1, 6].
    std::vector<Rational> sample_distinct_nonzero(int n);
    // Nonzero p/q with |p| <= 9, q in [1, 9].
    Rational sample_scale();

    ParameterPoint sample_point(int n, const Rational& x = Rational(1));

private:
    std::mt19937_64 engine_;
};

}  // namespace laumon

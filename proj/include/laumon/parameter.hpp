#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "laumon/rational.hpp"
#include "laumon/roots.hpp"

namespace laumon {

// A localization denominator or a Chern factor evaluated to zero at the
// chosen point; callers resample.
class NonGenericParameter : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// (lambda, lambda) = s for some lambda != lambda_0 inside the truncation.
class ResonantParameter : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computed character violated an invariant that only a transcription
// error could break.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Evaluation point for the equivariant parameters: a (zero sum), x != 0, m.
class ParameterPoint {
public:
    ParameterPoint(std::vector<Rational> a, Rational x, Rational m);

    int n() const { return static_cast<int>(a_.size()); }
    const std::vector<Rational>& a() const { return a_; }
    const Rational& a(int i) const { return a_.at(static_cast<std::size_t>(i - 1)); }
    const Rational& x() const { return x_; }
    const Rational& m() const { return m_; }

    // a/x as a weight.
    WeightVec a_over_x() const;

    ParameterPoint with_m(Rational m) const { return ParameterPoint(a_, x_, std::move(m)); }
    // (a, x) -> (t a, t x), m unchanged.
    ParameterPoint scaled(const Rational& t) const;

    std::string to_string() const;

private:
    std::vector<Rational> a_;
    Rational x_;
    Rational m_;
};

}  // namespace laumon

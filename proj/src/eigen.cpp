#include "laumon/eigen.hpp"

#include <stdexcept>

#include "laumon/parameter.hpp"

namespace laumon {

namespace {

void check_base(int n, const WeightVec& a_over_x) {
    if (n < 2) throw std::invalid_argument("eigenfunction: n must be at least 2");
    if (a_over_x.size() != n) throw std::invalid_argument("eigenfunction: base weight has wrong size");
    if (!a_over_x.is_zero_sum()) throw std::invalid_argument("eigenfunction: base weight must be zero-sum");
}

// (lambda, lambda) - s for lambda = lambda_0 + gamma; throws on resonance.
Rational energy_gap(const WeightVec& base, const DegreeVector& gamma, const Rational& s) {
    const WeightVec lambda = base + embed_degree(gamma);
    Rational gap = inner(lambda, lambda) - s;
    if (gap == 0) throw ResonantParameter("(lambda, lambda) = s at gamma = " + gamma.to_string());
    return gap;
}

}  // namespace

EigenSeries cs_coefficients(int n, const WeightVec& a_over_x, const Rational& m, int max_degree) {
    check_base(n, a_over_x);
    const int rank = n - 1;
    const Rational s = inner(a_over_x, a_over_x);
    const Rational coupling = 2 * m * (m + 1);
    const auto roots = positive_roots(n);

    Series tail = Series::unit(rank, max_degree);
    for (const auto& gamma : degrees_up_to(rank, max_degree)) {
        if (gamma.is_zero()) continue;
        const Rational gap = energy_gap(a_over_x, gamma, s);
        Rational rhs(0);
        for (const auto& root : roots) {
            const DegreeVector step = root.degree(n);
            DegreeVector higher = gamma;
            for (int j = 1; higher.try_subtract(step, higher); ++j) rhs += j * tail.coefficient(higher);
        }
        tail.set(gamma, coupling * rhs / gap);
    }
    return {a_over_x, std::move(tail), s};
}

EigenSeries toda_coefficients(int n, const WeightVec& a_over_x, int max_degree, const Rational& x) {
    check_base(n, a_over_x);
    if (x == 0) throw std::invalid_argument("toda_coefficients: x must be nonzero");
    const int rank = n - 1;
    const Rational s = inner(a_over_x, a_over_x);
    const Rational coupling = Rational(2) / (x * x);

    Series tail = Series::unit(rank, max_degree);
    for (const auto& gamma : degrees_up_to(rank, max_degree)) {
        if (gamma.is_zero()) continue;
        const Rational gap = energy_gap(a_over_x, gamma, s);
        Rational rhs(0);
        for (int i = 1; i < n; ++i) {
            DegreeVector higher;
            if (gamma.try_subtract(root_degree(n, i, i + 1), higher)) rhs += tail.coefficient(higher);
        }
        tail.set(gamma, coupling * rhs / gap);
    }
    return {a_over_x, std::move(tail), s};
}

Series rhs_series(int n, const WeightVec& a_over_x, const Rational& m, int max_degree) {
    const EigenSeries y = cs_coefficients(n, a_over_x, m, max_degree);
    return series_mul(y.tail, denominator_power_series(n, m + 1, max_degree), max_degree);
}

Series cs_potential_series(int n, int max_degree) {
    Series out(n - 1, max_degree);
    for (const auto& root : positive_roots(n)) {
        const DegreeVector step = root.degree(n);
        DegreeVector power = step;
        for (int j = 1; power.total() <= max_degree; ++j) {
            out.add(power, Rational(j));
            power = power + step;
        }
    }
    return out;
}

namespace {

Series laplacian(const EigenSeries& series, int max_degree) {
    Series out(series.tail.rank(), max_degree);
    for (const auto& [gamma, c] : series.tail.terms()) {
        if (gamma.total() > max_degree) continue;
        const WeightVec lambda = series.base + embed_degree(gamma);
        out.set(gamma, inner(lambda, lambda) * c);
    }
    return out;
}

}  // namespace

Series apply_cs_operator(const EigenSeries& series, const Rational& m, int max_degree) {
    const int n = series.base.size();
    const Series potential = cs_potential_series(n, max_degree);
    const Series interaction = series_mul(potential, series.tail, max_degree).scaled(2 * m * (m + 1));
    return series_sub(laplacian(series, max_degree), interaction);
}

Series apply_toda_operator(const EigenSeries& series, int max_degree, const Rational& x) {
    const int n = series.base.size();
    Series simple(n - 1, max_degree);
    if (max_degree >= 1)
        for (int i = 1; i < n; ++i) simple.set(root_degree(n, i, i + 1), Rational(1));
    const Series interaction = series_mul(simple, series.tail, max_degree).scaled(Rational(2) / (x * x));
    return series_sub(laplacian(series, max_degree), interaction);
}

std::vector<Rational> toda_limit_ratio(int n, const DegreeVector& gamma, const WeightVec& a_over_x,
                                       const std::vector<Rational>& m_values) {
    for (std::size_t k = 0; k < m_values.size(); ++k) {
        if (m_values[k] <= 0) throw std::invalid_argument("toda_limit_ratio: m values must be positive");
        if (k > 0 && m_values[k] <= m_values[k - 1]) throw std::invalid_argument("toda_limit_ratio: m values must increase");
    }
    std::vector<Rational> out;
    for (const auto& m : m_values) {
        const EigenSeries y = cs_coefficients(n, a_over_x, m, gamma.total());
        out.push_back(y.tail.coefficient(gamma) / pow(m, 2 * gamma.total()));
    }
    return out;
}

}  // namespace laumon

#pragma once

#include <vector>

#include "laumon/roots.hpp"
#include "laumon/series.hpp"

namespace laumon {

// Y = sum_gamma c_{lambda_0 + gamma} e^{lambda_0 + gamma}, stored with the
// e^{lambda_0} factor removed: tail[gamma] = c_{lambda_0 + gamma}.
struct EigenSeries {
    WeightVec base;
    Series tail;
    Rational eigenvalue;
};

// Highest-weight eigenfunction of the trigonometric Calogero-Sutherland
// operator
//     L(m) = Delta - 2m(m+1) sum_{alpha > 0} (e^{alpha/2} - e^{-alpha/2})^{-2}
// normalized by c_{lambda_0} = 1. Coefficients come from
//     c_lambda ((lambda, lambda) - s) = 2m(m+1) sum_{alpha > 0} sum_{j >= 1} j c_{lambda + j alpha}
// solved in increasing total degree. Throws ResonantParameter if
// (lambda, lambda) = s for some lambda != lambda_0 within the truncation.
EigenSeries cs_coefficients(int n, const WeightVec& a_over_x, const Rational& m, int max_degree);

// Eigenfunction of the Toda operator Delta - (2/x^2) sum_{simple} e^{-alpha};
// only simple roots feed the recursion.
EigenSeries toda_coefficients(int n, const WeightVec& a_over_x, int max_degree, const Rational& x = Rational(1));

// Y * e^{-a/x} * prod_{alpha > 0} (1 - e^{-alpha})^{-(m+1)}.
Series rhs_series(int n, const WeightVec& a_over_x, const Rational& m, int max_degree);

// Termwise image of L(m) on the series. The Laplacian acts diagonally and
// the potential is applied as a series product with
// sum_{alpha > 0} sum_{j >= 1} j e^{-j alpha}.
Series apply_cs_operator(const EigenSeries& series, const Rational& m, int max_degree);

// Termwise image of the Toda operator.
Series apply_toda_operator(const EigenSeries& series, int max_degree, const Rational& x = Rational(1));

// sum_{alpha > 0} sum_{j >= 1} j e^{-j alpha}, the expansion of
// sum_{alpha > 0} (e^{alpha/2} - e^{-alpha/2})^{-2}.
Series cs_potential_series(int n, int max_degree);

// c_gamma(m) / m^{2 |gamma|} for each m; the values approach the Toda
// coefficient at gamma as m grows.
std::vector<Rational> toda_limit_ratio(int n, const DegreeVector& gamma, const WeightVec& a_over_x,
                                       const std::vector<Rational>& m_values);

}  // namespace laumon

#pragma once

#include "laumon/character.hpp"
#include "laumon/parameter.hpp"
#include "laumon/series.hpp"
#include "laumon/tableau.hpp"

namespace laumon {

struct EvalOptions {
    unsigned workers = 1;
    CharacterFault fault = CharacterFault::None;
};

Rational evaluate_weight(const TorusWeight& w, const ParameterPoint& pt);

// prod over tangent weights w at d of (w + m x) / w.
Rational chern_ratio(const Tableau& d, const ParameterPoint& pt, CharacterFault fault = CharacterFault::None);

// Coefficient of e^gamma in Z(m): the sum of chern_ratio over fixed points.
Rational z_coefficient(int n, const DegreeVector& gamma, const ParameterPoint& pt, const EvalOptions& options = {});

// Coefficient of e^gamma in Z: sum over fixed points of prod 1/w.
Rational z_limit_coefficient(int n, const DegreeVector& gamma, const ParameterPoint& pt,
                             const EvalOptions& options = {});

// Entry of A(m) at ([d'], [d]): prod over E_{d',d} of (w + m x) divided by
// prod over tangent weights at d' of w.
Rational a_matrix_element(const Tableau& d_prime, const Tableau& d, const ParameterPoint& pt);

// Z(m) and Z as series through total degree max_degree.
Series z_series(int n, int max_degree, const ParameterPoint& pt, const EvalOptions& options = {});
Series z_limit_series(int n, int max_degree, const ParameterPoint& pt, const EvalOptions& options = {});

}  // namespace laumon

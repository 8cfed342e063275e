#include "laumon/localization.hpp"

#include "laumon/parallel.hpp"

namespace laumon {

namespace {

void check_size(int n, const ParameterPoint& pt) {
    if (pt.n() != n) throw std::invalid_argument("parameter point has " + std::to_string(pt.n()) + " a-coordinates, expected " + std::to_string(n));
}

Rational nonzero_weight_value(const TorusWeight& w, const ParameterPoint& pt, const Tableau& d) {
    Rational v = evaluate_weight(w, pt);
    if (v == 0)
        throw NonGenericParameter("tangent weight " + w.to_string() + " vanishes at " + pt.to_string() + " (fixed point " +
                                  d.to_string() + ")");
    return v;
}

template <typename Contribution>
Rational sum_over_fixed_points(int n, const DegreeVector& gamma, const EvalOptions& options, Contribution&& contribution) {
    const auto points = enumerate_fixed_points(n, gamma);
    const auto terms = parallel_map(points.size(), options.workers, [&](std::size_t k) { return contribution(points[k]); });
    Rational total(0);
    for (const auto& t : terms) total += t;
    return total;
}

}  // namespace

Rational evaluate_weight(const TorusWeight& w, const ParameterPoint& pt) {
    if (static_cast<int>(w.a_coeffs.size()) != pt.n()) throw std::invalid_argument("evaluate_weight: size mismatch");
    Rational v = pt.x() * w.x_coeff;
    for (int i = 0; i < pt.n(); ++i)
        if (const int c = w.a_coeffs[static_cast<std::size_t>(i)]; c != 0) v += pt.a()[static_cast<std::size_t>(i)] * c;
    return v;
}

Rational chern_ratio(const Tableau& d, const ParameterPoint& pt, CharacterFault fault) {
    check_size(d.n(), pt);
    const Rational shift = pt.m() * pt.x();
    Rational num(1), den(1);
    for (const auto& w : tangent_weights(d, fault)) {
        const Rational v = nonzero_weight_value(w, pt, d);
        num *= v + shift;
        den *= v;
    }
    return num / den;
}

Rational z_coefficient(int n, const DegreeVector& gamma, const ParameterPoint& pt, const EvalOptions& options) {
    check_size(n, pt);
    return sum_over_fixed_points(n, gamma, options, [&](const Tableau& d) -> Rational { return chern_ratio(d, pt, options.fault); });
}

Rational z_limit_coefficient(int n, const DegreeVector& gamma, const ParameterPoint& pt, const EvalOptions& options) {
    check_size(n, pt);
    return sum_over_fixed_points(n, gamma, options, [&](const Tableau& d) -> Rational {
        Rational den(1);
        for (const auto& w : tangent_weights(d, options.fault)) den *= nonzero_weight_value(w, pt, d);
        return Rational(1) / den;
    });
}

Rational a_matrix_element(const Tableau& d_prime, const Tableau& d, const ParameterPoint& pt) {
    check_size(d.n(), pt);
    const Rational shift = pt.m() * pt.x();
    Rational num(1);
    const Character fiber = char_E(d_prime, d);
    for (const auto& [w, mult] : fiber.terms()) {
        if (mult < 0)
            throw InternalInconsistency("a_matrix_element: negative multiplicity in E_{" + d_prime.to_string() + "," +
                                        d.to_string() + "}");
        num *= pow(evaluate_weight(w, pt) + shift, mult);
    }
    Rational den(1);
    for (const auto& w : tangent_weights(d_prime)) den *= nonzero_weight_value(w, pt, d_prime);
    return num / den;
}

Series z_series(int n, int max_degree, const ParameterPoint& pt, const EvalOptions& options) {
    Series out(n - 1, max_degree);
    for (const auto& gamma : degrees_up_to(n - 1, max_degree)) out.set(gamma, z_coefficient(n, gamma, pt, options));
    return out;
}

Series z_limit_series(int n, int max_degree, const ParameterPoint& pt, const EvalOptions& options) {
    Series out(n - 1, max_degree);
    for (const auto& gamma : degrees_up_to(n - 1, max_degree)) out.set(gamma, z_limit_coefficient(n, gamma, pt, options));
    return out;
}

}  // namespace laumon

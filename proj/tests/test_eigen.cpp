#include "doctest.h"
#include "laumon/eigen.hpp"
#include "laumon/localization.hpp"
#include "laumon/parameter.hpp"
#include "laumon/sampling.hpp"

using namespace laumon;

namespace {

WeightVec pair_base(const Rational& v) { return WeightVec{{v / 2, -v / 2}}; }  // (lambda_0, alpha_1) = v

}  // namespace

TEST_CASE("cs coefficients at n = 2") {
    const Rational v = make_rational(-17, 3), m = make_rational(5, 2);
    const EigenSeries y = cs_coefficients(2, pair_base(v), m, 3);
    CHECK(y.eigenvalue == inner(y.base, y.base));
    CHECK(y.tail.coefficient(DegreeVector({0})) == 1);
    const Rational c1 = m * (m + 1) / (1 - v);
    CHECK(y.tail.coefficient(DegreeVector({1})) == c1);
    CHECK(y.tail.coefficient(DegreeVector({2})) == m * (m + 1) * (c1 + 2) / (4 - 2 * v));
}

TEST_CASE("toda coefficients at n = 2") {
    const Rational v = make_rational(9, 4);
    const EigenSeries y = toda_coefficients(2, pair_base(v), 3);
    CHECK(y.tail.coefficient(DegreeVector({0})) == 1);
    CHECK(y.tail.coefficient(DegreeVector({1})) == 1 / (1 - v));
    const ParameterPoint pt({v / 2, -v / 2}, Rational(1), Rational(0));
    CHECK(y.tail.coefficient(DegreeVector({1})) == z_limit_coefficient(2, DegreeVector({1}), pt));
}

TEST_CASE("resonant base points are rejected") {
    // v = 1 makes (lambda, lambda) = s at gamma = (1).
    CHECK_THROWS_AS(cs_coefficients(2, pair_base(Rational(1)), Rational(2), 2), ResonantParameter);
    CHECK_THROWS_AS(toda_coefficients(2, pair_base(Rational(1)), 2), ResonantParameter);
    CHECK_THROWS_AS(cs_coefficients(2, WeightVec{{Rational(1), Rational(0)}}, Rational(1), 2), std::invalid_argument);
}

TEST_CASE("rhs series small cases") {
    const Rational v = make_rational(7, 5), m = make_rational(-4, 3);
    const Series rhs = rhs_series(2, pair_base(v), m, 2);
    CHECK(rhs.coefficient(DegreeVector({0})) == 1);
    CHECK(rhs.coefficient(DegreeVector({1})) == (m + 1) * (m + 1 - v) / (1 - v));
}

TEST_CASE("operators reproduce the eigenvalue") {
    ParameterSampler sampler(31);
    int resonant = 0;
    for (int n = 2; n <= 3; ++n)
        for (int t = 0; t < 3;) {
            const ParameterPoint pt = sampler.sample_point(n);
            try {
                const EigenSeries cs = cs_coefficients(n, pt.a_over_x(), pt.m(), 4);
                CHECK(apply_cs_operator(cs, pt.m(), 4) == cs.tail.scaled(cs.eigenvalue));
                const EigenSeries td = toda_coefficients(n, pt.a_over_x(), 4);
                CHECK(apply_toda_operator(td, 4) == td.tail.scaled(td.eigenvalue));
                ++t;
            } catch (const ResonantParameter&) {
                REQUIRE(++resonant < 100);
            }
        }
}

TEST_CASE("negative control and m = 0 Laplacian") {
    ParameterSampler sampler(4);
    const ParameterPoint pt = sampler.sample_point(3);
    EigenSeries unit{pt.a_over_x(), Series::unit(2, 2), inner(pt.a_over_x(), pt.a_over_x())};
    const Series image = apply_cs_operator(unit, pt.m(), 2);
    CHECK(image.coefficient(DegreeVector({1, 0})) != 0);
    CHECK(image.coefficient(DegreeVector({0, 1})) != 0);

    Series tail(2, 2);
    for (const auto& g : degrees_up_to(2, 2)) tail.set(g, make_rational(g.total() + 2, 3));
    const EigenSeries any{pt.a_over_x(), tail, 0};
    const Series lap = apply_cs_operator(any, Rational(0), 2);
    for (const auto& g : degrees_up_to(2, 2)) {
        const WeightVec lambda = pt.a_over_x() + embed_degree(g);
        CHECK(lap.coefficient(g) == inner(lambda, lambda) * tail.coefficient(g));
    }
}

TEST_CASE("toda limit ratios") {
    const Rational v = make_rational(-11, 2);
    const auto r = toda_limit_ratio(2, DegreeVector({1}), pair_base(v), {Rational(10), Rational(100)});
    CHECK(r[0] == make_rational(11, 10) / (1 - v));
    CHECK(r[1] == make_rational(101, 100) / (1 - v));
    CHECK(toda_limit_ratio(3, DegreeVector::zero(2), WeightVec{{Rational(3), Rational(1), Rational(-4)}},
                           {Rational(1), Rational(5)}) == std::vector<Rational>{1, 1});

    ParameterSampler sampler(77);
    const ParameterPoint pt = sampler.sample_point(3);
    const DegreeVector g({1, 1});
    const Rational target = toda_coefficients(3, pt.a_over_x(), 2).tail.coefficient(g);
    const auto ratios = toda_limit_ratio(3, g, pt.a_over_x(), {Rational(100), Rational(10000), Rational(1000000)});
    CHECK(abs(ratios[1] - target) < abs(ratios[0] - target));
    CHECK(abs(ratios[2] - target) < abs(ratios[1] - target));
    CHECK_THROWS(toda_limit_ratio(2, DegreeVector({1}), pair_base(v), {Rational(5), Rational(2)}));
}

#include "doctest.h"
#include "laumon/parallel.hpp"
#include "laumon/sampling.hpp"
#include "laumon/verify.hpp"

using namespace laumon;

TEST_CASE("parallel_map keeps order and reports the first failure") {
    const auto squares = parallel_map(100, 8, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < squares.size(); ++i) CHECK(squares[i] == i * i);
    CHECK(parallel_map(0, 4, [](std::size_t i) { return i; }).empty());
    try {
        parallel_map(50, 4, [](std::size_t i) -> int {
            if (i % 7 == 3) throw std::runtime_error(std::to_string(i));
            return 0;
        });
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "3");
    }
}

TEST_CASE("sampler is seeded and respects its ranges") {
    ParameterSampler a(42), b(42);
    for (int k = 0; k < 50; ++k) {
        const auto pa = a.sample_point(4), pb = b.sample_point(4);
        CHECK(pa.a() == pb.a());
        CHECK(pa.m() == pb.m());
        CHECK(pa.m() != 0);
        CHECK(pa.m() != -1);
        CHECK(pa.m().get_den() <= 5);
        CHECK(abs(pa.m()) <= 20);
    }
    for (int k = 0; k < 200; ++k) {
        const auto v = a.uniform(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}

TEST_CASE("verify-main and verify-toda pass at small scale") {
    VerifyOptions o;
    o.n = 2;
    o.max_degree = 4;
    o.trials = 3;
    const auto main = cmd_verify_main(o);
    CHECK(main.passed());
    CHECK(main.exit_code() == kExitPass);
    CHECK(main.trials.size() == 3);
    const auto toda = cmd_verify_toda(o);
    CHECK(toda.passed());
    for (const auto& t : toda.trials) CHECK(t.records.front().equal);
}

TEST_CASE("fault injection is caught at the lowest degree") {
    VerifyOptions o;
    o.n = 3;
    o.max_degree = 3;
    o.trials = 2;
    o.fault = CharacterFault::SwapWeightOrientation;
    const auto r = cmd_verify_main(o);
    CHECK_FALSE(r.passed());
    CHECK(r.exit_code() == kExitFailure);
    const auto w = r.trials.front().first_witness();
    REQUIRE(w.has_value());
    CHECK(w->total() == 1);
}

TEST_CASE("explicit non-generic point exhausts genericity") {
    VerifyOptions o;
    o.n = 2;
    o.max_degree = 3;
    o.trials = 1;
    o.a = std::vector<Rational>{make_rational(1, 2), make_rational(-1, 2)};
    o.m = Rational(3);
    const auto r = cmd_verify_main(o);
    CHECK(r.genericity_exhausted);
    CHECK(r.exit_code() == kExitGenericityExhausted);
}

TEST_CASE("bad options are usage errors") {
    VerifyOptions o;
    o.n = 1;
    CHECK_THROWS_AS(cmd_verify_main(o), std::invalid_argument);
    o.n = 3;
    o.a = std::vector<Rational>{Rational(1), Rational(2), Rational(3)};
    CHECK_THROWS_AS(cmd_verify_main(o), std::invalid_argument);
}

TEST_CASE("reports are deterministic and independent of worker count") {
    VerifyOptions o;
    o.n = 3;
    o.max_degree = 3;
    o.seed = 9;
    const std::string first = render_report(cmd_verify_main(o));
    CHECK(render_report(cmd_verify_main(o)) == first);
    o.workers = 4;
    CHECK(render_report(cmd_verify_main(o)) == first);
    o.seed = 10;
    CHECK(render_report(cmd_verify_main(o)) != first);
}

TEST_CASE("inspect dumps exact data") {
    InspectOptions o;
    o.subject = "fixed-points";
    o.n = 3;
    o.gamma = DegreeVector({1, 1});
    const std::string fp = cmd_inspect(o);
    CHECK(fp.find("\"count\": 2") != std::string::npos);

    InspectOptions tw;
    tw.subject = "tangent-weights";
    tw.n = 2;
    tw.tableau = "1";
    const std::string w = cmd_inspect(tw);
    CHECK(w.find("\"dimension\": 2") != std::string::npos);

    InspectOptions s;
    s.subject = "series";
    s.series_kind = "cs";
    s.n = 2;
    s.max_degree = 2;
    s.a = {Rational(7), Rational(-7)};
    s.m = Rational(2);
    CHECK_NOTHROW(cmd_inspect(s));
    s.subject = "nonsense";
    CHECK_THROWS(cmd_inspect(s));
}

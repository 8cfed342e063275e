// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "laumon/algebra.hpp"
#include "laumon/character.hpp"
#include "laumon/eigen.hpp"
#include "laumon/localization.hpp"
#include "laumon/roots.hpp"
#include "laumon/sampling.hpp"
#include "laumon/tableau.hpp"
#include "laumon/verify.hpp"
#include "oracles.hpp"

using namespace laumon;

namespace {

constexpr std::uint64_t kSeed = 20261015;

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) note << "first failure: " << what;
        pass = pass && ok;
    }
};

std::vector<Tableau> points_up_to(int n, int total) {
    std::vector<Tableau> out;
    for (const auto& g : degrees_up_to(n - 1, total))
        for (auto& d : enumerate_fixed_points(n, g)) out.push_back(std::move(d));
    return out;
}

bool all_records_equal(const VerificationReport& r, int expected_trials) {
    if (static_cast<int>(r.trials.size()) != expected_trials) return false;
    const std::size_t degrees = degrees_up_to(r.n - 1, r.max_degree).size();
    for (const auto& t : r.trials) {
        if (t.error || t.records.size() != degrees) return false;
        for (const auto& g : t.records)
            if (!g.equal) return false;
    }
    return r.passed();
}

void main_identity(Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    for (auto [n, D] : {std::pair{2, 6}, std::pair{3, 4}}) {
        VerifyOptions opt;
        opt.n = n;
        opt.max_degree = D;
        opt.trials = 5;
        opt.seed = kSeed;
        o.require(all_records_equal(cmd_verify_main(opt), 5), "n=" + std::to_string(n));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 120, "runtime");
    o.note << (o.pass ? "" : "; ") << "n=2 D=6 and n=3 D=4, 5 points each, " << secs << " s";
}

void rank_one_closed_form(Outcome& o) {
    ParameterSampler sampler(kSeed);
    int checked = 0, singular = 0;
    for (int t = 0; t < 5;) {
        const ParameterPoint pt = sampler.sample_point(2);
        const Rational v = (pt.a(1) - pt.a(2)) / pt.x();
        if (v.get_den() == 1 && v >= 1 && v <= 8) {
            // The closed form has a pole here; the engine must refuse the point.
            bool refused = false;
            try {
                (void)z_coefficient(2, DegreeVector({8}), pt);
            } catch (const NonGenericParameter&) {
                refused = true;
            }
            o.require(refused, "singular point accepted: " + pt.to_string());
            ++singular;
            continue;
        }
        for (int d = 0; d <= 8; ++d, ++checked)
            o.require(z_coefficient(2, DegreeVector({d}), pt) == oracle::z_rank_one(d, v, pt.m()),
                      "d=" + std::to_string(d) + " at " + pt.to_string());
        ++t;
    }
    o.note << (o.pass ? "" : "; ") << checked << " coefficients at 5 points, d <= 8; " << singular << " singular points refused";
}

void toda_identity(Outcome& o) {
    for (auto [n, D] : {std::pair{2, 6}, std::pair{3, 4}}) {
        VerifyOptions opt;
        opt.n = n;
        opt.max_degree = D;
        opt.trials = 5;
        opt.seed = kSeed;
        const auto r = cmd_verify_toda(opt);
        o.require(all_records_equal(r, 5), "n=" + std::to_string(n));
        for (const auto& p : r.properties) o.require(p.passed && p.trials > 0, p.name);
    }
    o.note << (o.pass ? "" : "; ") << "limit series equals Toda series; ratio diagnostics monotone";
}

void census(Outcome& o) {
    long degrees = 0;
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : degrees_up_to(n - 1, 6)) {
            ++degrees;
            const auto pts = enumerate_fixed_points(n, g);
            o.require(pts.size() == kostant_count(g), "count " + g.to_string());
            std::vector<std::vector<int>> flat;
            for (const auto& d : pts) flat.push_back(d.flattened());
            o.require(flat == oracle::filtered_tableaux(n, g.entries()), "brute force " + g.to_string());
        }
    ParameterSampler sampler(kSeed);
    long sampled = 0;
    for (auto [n, D] : {std::pair{2, 6}, std::pair{3, 4}, std::pair{4, 3}})
        for (int t = 0, rejected = 0; t < 5;) {
            const ParameterPoint pt = sampler.sample_point(n).with_m(0);
            try {
                for (const auto& g : degrees_up_to(n - 1, D))
                    o.require(z_coefficient(n, g, pt) == kostant_count(g), "m=0 at " + pt.to_string());
                ++t;
                ++sampled;
            } catch (const NonGenericParameter&) {
                if (++rejected > 200) throw;
            }
        }
    o.note << (o.pass ? "" : "; ") << degrees << " degree vectors; m=0 checked at " << sampled << " points";
}

void characters(Outcome& o) {
    long pairs = 0;
    for (int n = 2; n <= 4; ++n) {
        const auto pts = points_up_to(n, 4);
        for (const auto& d : pts) {
            const long dd = degree_of(d).total();
            for (const auto& dp : pts) {
                ++pairs;
                const Character c = char_E(d, dp);
                o.require(c.total_multiplicity() == dd + degree_of(dp).total(), "rank " + d.to_string() + " | " + dp.to_string());
            }
            const Character diag = char_E(d, d);
            bool clean = diag.total_multiplicity() == 2 * dd;
            for (const auto& [w, k] : diag.terms()) clean = clean && k > 0 && !w.is_zero();
            o.require(clean, "diagonal " + d.to_string());
            o.require(tangent_weights(d).size() == static_cast<std::size_t>(2 * dd), "tangent " + d.to_string());
        }
    }
    o.note << (o.pass ? "" : "; ") << pairs << " pairs with n <= 4, |d|, |d'| <= 4";
}

void shift_identity(Outcome& o) {
    long pairs = 0, ratios = 0;
    ParameterSampler sampler(kSeed);
    for (int n = 2; n <= 3; ++n) {
        const auto pts = points_up_to(n, 2);
        for (int m = 1; m <= 3; ++m) {
            const Character reference = char_shift_defect(pts.front(), pts.front(), m);
            for (const auto& d : pts)
                for (const auto& dp : pts) {
                    ++pairs;
                    o.require(char_shift_defect(d, dp, m) == reference, "defect m=" + std::to_string(m));
                }

            for (int t = 0; t < 3; ++t) {
                std::optional<ParameterPoint> pt;
                std::optional<Rational> y;
                long usable = 0;
                // Resample until every element involved is defined.
                for (int attempt = 0; attempt < 200 && !pt; ++attempt) {
                    const ParameterPoint cand = sampler.sample_point(n);
                    try {
                        for (const auto& d : pts) {
                            (void)chern_ratio(shift_tableau(d, m), cand);
                            (void)chern_ratio(d, cand);
                        }
                        pt = cand;
                    } catch (const NonGenericParameter&) {
                    }
                }
                o.require(pt.has_value(), "no generic point");
                if (!pt) continue;
                for (const auto& d : pts)
                    for (const auto& dp : pts) {
                        const Rational num = a_matrix_element(dp, d, pt->with_m(m));
                        const Rational den = a_matrix_element(dp, shift_tableau(d, m), pt->with_m(0));
                        if (den == 0) {
                            o.require(num == 0, "lone zero denominator");
                            continue;
                        }
                        ++usable;
                        if (!y) y = num / den;
                        o.require(num / den == *y, "y differs at " + dp.to_string() + " | " + d.to_string());
                    }
                o.require(usable >= 6, "fewer than 6 usable pairs");
                ratios += usable;
            }
        }
    }
    o.require(pairs >= 6, "pair count");
    o.note << (o.pass ? "" : "; ") << pairs << " defect pairs, " << ratios << " scalar ratios";
}

void eigen_operators(Outcome& o) {
    ParameterSampler sampler(kSeed);
    long ratio_checks = 0;
    for (int n = 2; n <= 3; ++n)
        for (int D = 1; D <= 4; ++D)
            for (int t = 0; t < 3; ++t) {
                const ParameterPoint pt = sampler.sample_point(n);
                try {
                    const EigenSeries cs = cs_coefficients(n, pt.a_over_x(), pt.m(), D);
                    o.require(apply_cs_operator(cs, pt.m(), D) == cs.tail.scaled(cs.eigenvalue), "operator at " + pt.to_string());
                    if (D != 4) continue;
                    const EigenSeries toda = toda_coefficients(n, pt.a_over_x(), D);
                    for (const auto& g : degrees_up_to(n - 1, D)) {
                        if (g.is_zero()) continue;
                        ++ratio_checks;
                        const Rational target = toda.tail.coefficient(g);
                        const auto r = toda_limit_ratio(n, g, pt.a_over_x(), {Rational(100), Rational(10000), Rational(1000000)});
                        o.require(abs(r[1] - target) < abs(r[0] - target) && abs(r[2] - target) < abs(r[1] - target),
                                  "ratio " + g.to_string());
                    }
                } catch (const ResonantParameter&) {
                    --t;
                }
            }
    o.note << (o.pass ? "" : "; ") << "n <= 3, D <= 4; " << ratio_checks << " monotone ratio sequences";
}

void algebra(Outcome& o) {
    for (int n = 2; n <= 6; ++n) {
        o.require(unipotent_product(n) == all_ones_upper(n), "unipotent n=" + std::to_string(n));
        for (int i = 1; i < n; ++i)
            for (int l = 1; l <= n - i; ++l) o.require(indec_matrix(i, l, n) == ExactMatrix::unit(n, i + l, i), "indec");
    }
    auto ind = [](int i, int l) { return QuiverRepClass::indecomposable(3, i, l); };
    QuiverRepClass split(3);
    split.add(1, 1).add(2, 1);
    for (int q : {2, 3}) {
        o.require(hall_count(ind(2, 1), ind(1, 1), ind(1, 2), q) == 1, "hall 1");
        o.require(hall_count(ind(1, 1), ind(2, 1), ind(1, 2), q) == 0, "hall 2");
        o.require(hall_count(ind(2, 1), ind(1, 1), split, q) == 1, "hall 3");
    }
    for (int i = 1; i <= 2; ++i)
        for (int l = 1; l <= 3 - i; ++l)
            for (int i2 = 1; i2 <= 2; ++i2)
                for (int l2 = 1; l2 <= 3 - i2; ++l2)
                    o.require(hall_product_matrix(ind(i, l), ind(i2, l2)) == class_matrix(ind(i, l)) * class_matrix(ind(i2, l2)),
                              "q=1 product");
    ParameterSampler sampler(kSeed);
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 10; ++t) o.require(conjugator_check(sampler.sample_distinct_nonzero(n)).passed, "conjugator");
    o.note << (o.pass ? "" : "; ") << "unipotent and indecomposables n <= 6, three Hall values, 9 products, 40 conjugators";
}

void determinism(Outcome& o) {
    VerifyOptions opt;
    opt.n = 3;
    opt.max_degree = 4;
    opt.seed = kSeed;
    using Command = VerificationReport (*)(const VerifyOptions&);
    for (Command cmd : {Command{cmd_verify_main}, Command{cmd_verify_toda}, Command{cmd_properties}}) {
        opt.workers = 1;
        const std::string a = render_report(cmd(opt));
        const std::string b = render_report(cmd(opt));
        opt.workers = 6;
        const std::string c = render_report(cmd(opt));
        o.require(a == b, "repeat run");
        o.require(a == c, "worker count");
    }
    o.note << (o.pass ? "" : "; ") << "three commands, repeated and with 1 vs 6 workers";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"generating function equals eigenfunction times denominator power", main_identity},
        {"rank-one closed form", rank_one_closed_form},
        {"limit series equals Toda eigenfunction", toda_identity},
        {"fixed-point census", census},
        {"character rank and diagonal invariants", characters},
        {"shift defect and scalar independence", shift_identity},
        {"eigen-operator self-check and Toda limit", eigen_operators},
        {"algebra identities", algebra},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            criteria[k].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        failures += o.pass ? 0 : 1;
        std::printf("AC%zu %s  %s  (%s)\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(), o.note.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

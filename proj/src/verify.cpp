#include "laumon/verify.hpp"

#include <json.hpp>

#include <functional>

#include "laumon/character.hpp"
#include "laumon/eigen.hpp"
#include "laumon/parallel.hpp"
#include "laumon/sampling.hpp"

namespace laumon {

using ordered_json = nlohmann::ordered_json;

bool TrialRecord::passed() const {
    if (error) return false;
    for (const auto& r : records)
        if (!r.equal) return false;
    return true;
}

std::optional<DegreeVector> TrialRecord::first_witness() const {
    for (const auto& r : records)
        if (!r.equal) return r.gamma;
    return std::nullopt;
}

void PropertyRecord::fail(std::string witness) {
    passed = false;
    // Keep reports readable; the first few witnesses pin the failure.
    if (witnesses.size() < 8) witnesses.push_back(std::move(witness));
}

bool VerificationReport::passed() const {
    if (genericity_exhausted) return false;
    for (const auto& t : trials)
        if (!t.passed()) return false;
    for (const auto& p : properties)
        if (!p.passed) return false;
    return true;
}

int VerificationReport::exit_code() const {
    for (const auto& t : trials)
        if (!t.passed()) return kExitFailure;
    for (const auto& p : properties)
        if (!p.passed) return kExitFailure;
    if (genericity_exhausted) return kExitGenericityExhausted;
    return kExitPass;
}

namespace {

void validate(const VerifyOptions& o) {
    if (o.n < 2) throw std::invalid_argument("--n must be at least 2");
    if (o.max_degree < 1) throw std::invalid_argument("--max-degree must be at least 1");
    if (o.trials < 1) throw std::invalid_argument("--trials must be at least 1");
    if (o.x == 0) throw std::invalid_argument("--x must be nonzero");
    if (o.a) {
        if (static_cast<int>(o.a->size()) != o.n) throw std::invalid_argument("--a must have exactly n entries");
        Rational sum(0);
        for (const auto& v : *o.a) sum += v;
        if (sum != 0) throw std::invalid_argument("--a must sum to zero");
    }
}

using TrialBody = std::function<std::vector<GammaRecord>(const ParameterPoint&)>;

// Runs `body` at each trial point, resampling on non-generic or resonant
// parameters until the retry budget runs out.
void run_trials(const VerifyOptions& o, VerificationReport& report, const TrialBody& body) {
    ParameterSampler sampler(o.seed);
    const bool fully_explicit = o.a.has_value() && o.m.has_value();
    const int trials = fully_explicit ? 1 : o.trials;
    for (int t = 0; t < trials; ++t) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > o.retry_budget) {
                report.genericity_exhausted = true;
                report.genericity_detail = "no generic point found within " + std::to_string(o.retry_budget) + " resamples";
                return;
            }
            std::vector<Rational> a;
            if (o.a) {
                a = *o.a;
            } else {
                a = sampler.sample_a(o.n);
                for (auto& v : a) v *= o.x;
            }
            Rational m = o.m ? *o.m : sampler.sample_m();
            ParameterPoint pt(std::move(a), o.x, std::move(m));
            try {
                auto records = body(pt);
                report.trials.push_back({pt, attempt, std::move(records), std::nullopt});
                break;
            } catch (const NonGenericParameter& e) {
                if (fully_explicit) {
                    report.genericity_exhausted = true;
                    report.genericity_detail = e.what();
                    return;
                }
            } catch (const ResonantParameter& e) {
                if (fully_explicit) {
                    report.genericity_exhausted = true;
                    report.genericity_detail = e.what();
                    return;
                }
            } catch (const InternalInconsistency& e) {
                report.trials.push_back({pt, attempt, {}, std::string(e.what())});
                break;
            }
        }
    }
}

VerificationReport make_report(const std::string& command, const VerifyOptions& o) {
    VerificationReport r;
    r.command = command;
    r.n = o.n;
    r.max_degree = o.max_degree;
    r.seed = o.seed;
    r.gauge_x = o.x;
    return r;
}

}  // namespace

VerificationReport cmd_verify_main(const VerifyOptions& o) {
    validate(o);
    VerificationReport report = make_report("verify-main", o);
    const auto degrees = degrees_up_to(o.n - 1, o.max_degree);
    run_trials(o, report, [&](const ParameterPoint& pt) {
        const Series rhs = rhs_series(o.n, pt.a_over_x(), pt.m(), o.max_degree);
        const EvalOptions eval{1, o.fault};
        const auto lhs = parallel_map(degrees.size(), o.workers,
                                      [&](std::size_t k) { return z_coefficient(o.n, degrees[k], pt, eval); });
        std::vector<GammaRecord> records;
        for (std::size_t k = 0; k < degrees.size(); ++k) {
            const Rational& r = rhs.coefficient(degrees[k]);
            records.push_back({degrees[k], lhs[k], r, lhs[k] == r});
        }
        return records;
    });
    return report;
}

VerificationReport cmd_verify_toda(const VerifyOptions& o) {
    validate(o);
    VerificationReport report = make_report("verify-toda", o);
    const auto degrees = degrees_up_to(o.n - 1, o.max_degree);
    PropertyRecord limit{"toda_limit_ratio_convergence", 0, true, {}, "m in {10^2, 10^4, 10^6}; |c_gamma(m)/m^(2|gamma|) - toda_gamma| strictly decreasing"};
    const std::vector<Rational> m_values{Rational(100), Rational(10000), Rational(1000000)};
    run_trials(o, report, [&](const ParameterPoint& pt) {
        const EigenSeries toda = toda_coefficients(o.n, pt.a_over_x(), o.max_degree, pt.x());
        const EvalOptions eval{1, o.fault};
        const auto lhs = parallel_map(degrees.size(), o.workers,
                                      [&](std::size_t k) { return z_limit_coefficient(o.n, degrees[k], pt, eval); });
        // Ratios converge to the coefficients of the x = 1 Toda operator.
        const EigenSeries toda_unit = toda_coefficients(o.n, pt.a_over_x(), o.max_degree);
        const auto ratios = parallel_map(degrees.size(), o.workers, [&](std::size_t k) {
            return degrees[k].is_zero() ? std::vector<Rational>{} : toda_limit_ratio(o.n, degrees[k], pt.a_over_x(), m_values);
        });
        std::vector<GammaRecord> records;
        for (std::size_t k = 0; k < degrees.size(); ++k) {
            const Rational& r = toda.tail.coefficient(degrees[k]);
            records.push_back({degrees[k], lhs[k], r, lhs[k] == r});
            if (degrees[k].is_zero()) continue;
            ++limit.trials;
            const Rational& target = toda_unit.tail.coefficient(degrees[k]);
            Rational previous(-1);
            for (std::size_t s = 0; s < ratios[k].size(); ++s) {
                const Rational err = abs(ratios[k][s] - target);
                if (s > 0 && !(err < previous)) {
                    limit.fail(degrees[k].to_string() + " at " + pt.to_string());
                    break;
                }
                previous = err;
            }
        }
        return records;
    });
    report.properties.push_back(std::move(limit));
    return report;
}

namespace {

ordered_json point_json(const ParameterPoint& pt) {
    ordered_json a = ordered_json::array();
    for (const auto& v : pt.a()) a.push_back(to_string(v));
    return {{"a", a}, {"x", to_string(pt.x())}, {"m", to_string(pt.m())}};
}

}  // namespace

std::string render_report(const VerificationReport& r) {
    ordered_json doc;
    doc["command"] = r.command;
    doc["n"] = r.n;
    doc["max_degree"] = r.max_degree;
    doc["seed"] = r.seed;
    doc["gauge_x"] = to_string(r.gauge_x);
    doc["prng"] = "mt19937_64 with rejection-sampled bounded integers";
    if (!r.trials.empty()) {
        ordered_json trials = ordered_json::array();
        for (const auto& t : r.trials) {
            ordered_json tj;
            tj["point"] = point_json(t.point);
            tj["resamples"] = t.resamples;
            ordered_json records = ordered_json::array();
            for (const auto& g : t.records)
                records.push_back({{"gamma", g.gamma.entries()}, {"lhs", to_string(g.lhs)}, {"rhs", to_string(g.rhs)}, {"equal", g.equal}});
            tj["records"] = std::move(records);
            if (t.error) tj["error"] = *t.error;
            if (const auto w = t.first_witness()) tj["witness"] = w->entries();
            tj["pass"] = t.passed();
            trials.push_back(std::move(tj));
        }
        doc["trials"] = std::move(trials);
    }
    if (!r.properties.empty()) {
        ordered_json props = ordered_json::array();
        for (const auto& p : r.properties) {
            ordered_json pj{{"name", p.name}, {"trials", p.trials}, {"pass", p.passed}};
            if (!p.detail.empty()) pj["detail"] = p.detail;
            if (!p.witnesses.empty()) pj["witnesses"] = p.witnesses;
            props.push_back(std::move(pj));
        }
        doc["properties"] = std::move(props);
    }
    if (r.genericity_exhausted) doc["genericity_error"] = r.genericity_detail;
    doc["verdict"] = r.passed() ? "pass" : "fail";
    return doc.dump(2) + "\n";
}

std::string cmd_inspect(const InspectOptions& o) {
    ordered_json doc;
    doc["subject"] = o.subject;
    doc["n"] = o.n;
    auto need_tableau = [&](const std::optional<std::string>& text, const char* flag) {
        if (!text) throw std::invalid_argument(std::string("inspect ") + o.subject + " requires " + flag);
        return parse_tableau(o.n, *text);
    };
    auto point = [&] {
        if (static_cast<int>(o.a.size()) != o.n) throw std::invalid_argument("inspect " + o.subject + " requires --a with n entries");
        return ParameterPoint(o.a, o.x, o.m);
    };
    auto weight_list = [](const Character& ch) {
        ordered_json list = ordered_json::array();
        for (const auto& [w, mult] : ch.terms())
            list.push_back({{"a_coeffs", w.a_coeffs}, {"x_coeff", w.x_coeff}, {"multiplicity", mult}, {"weight", w.to_string()}});
        return list;
    };

    if (o.subject == "fixed-points") {
        if (!o.gamma) throw std::invalid_argument("inspect fixed-points requires --gamma");
        doc["gamma"] = o.gamma->entries();
        ordered_json list = ordered_json::array();
        for (const auto& d : enumerate_fixed_points(o.n, *o.gamma)) list.push_back(d.flattened());
        doc["count"] = list.size();
        doc["kostant_count"] = kostant_count(*o.gamma);
        doc["fixed_points"] = std::move(list);
    } else if (o.subject == "tangent-weights") {
        const Tableau d = need_tableau(o.tableau, "--d");
        doc["d"] = d.flattened();
        Character ch;
        for (const auto& w : tangent_weights(d)) ch.add(w, 1);
        doc["weights"] = weight_list(ch);
        doc["dimension"] = ch.total_multiplicity();
    } else if (o.subject == "character") {
        const Tableau d = need_tableau(o.tableau, "--d");
        const Tableau dp = need_tableau(o.tableau_prime, "--d-prime");
        doc["d"] = d.flattened();
        doc["d_prime"] = dp.flattened();
        const Character ch = char_E(d, dp);
        doc["terms"] = weight_list(ch);
        doc["total_multiplicity"] = ch.total_multiplicity();
    } else if (o.subject == "cartan") {
        const Tableau d = need_tableau(o.tableau, "--d");
        const ParameterPoint pt = point();
        ordered_json values = ordered_json::array();
        for (int i = 1; i < o.n; ++i) values.push_back(to_string(cartan_eigenvalue(i, d, pt)));
        doc["d"] = d.flattened();
        doc["point"] = point_json(pt);
        doc["eigenvalues"] = std::move(values);
    } else if (o.subject == "series") {
        doc["kind"] = o.series_kind;
        doc["max_degree"] = o.max_degree;
        Series s(o.n - 1, o.max_degree);
        if (o.series_kind == "denominator") {
            s = denominator_power_series(o.n, o.m + 1, o.max_degree);
            doc["exponent"] = to_string(o.m + 1);
        } else {
            const ParameterPoint pt = point();
            doc["point"] = point_json(pt);
            if (o.series_kind == "cs") {
                const EigenSeries y = cs_coefficients(o.n, pt.a_over_x(), pt.m(), o.max_degree);
                doc["eigenvalue"] = to_string(y.eigenvalue);
                s = y.tail;
            } else if (o.series_kind == "toda") {
                const EigenSeries y = toda_coefficients(o.n, pt.a_over_x(), o.max_degree, pt.x());
                doc["eigenvalue"] = to_string(y.eigenvalue);
                s = y.tail;
            } else if (o.series_kind == "rhs") {
                s = rhs_series(o.n, pt.a_over_x(), pt.m(), o.max_degree);
            } else if (o.series_kind == "z") {
                s = z_series(o.n, o.max_degree, pt);
            } else if (o.series_kind == "zlim") {
                s = z_limit_series(o.n, o.max_degree, pt);
            } else {
                throw std::invalid_argument("unknown series kind '" + o.series_kind + "'");
            }
        }
        ordered_json coeffs = ordered_json::array();
        for (const auto& gamma : degrees_up_to(o.n - 1, o.max_degree))
            coeffs.push_back({{"gamma", gamma.entries()}, {"value", to_string(s.coefficient(gamma))}});
        doc["coefficients"] = std::move(coeffs);
    } else {
        throw std::invalid_argument("unknown inspect subject '" + o.subject + "'");
    }
    return doc.dump(2) + "\n";
}

}  // namespace laumon

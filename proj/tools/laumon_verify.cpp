// Command-line driver: verify-main, verify-toda, properties, inspect.
//
// Reports go to stdout as one JSON document; diagnostics go to stderr.
// Exit codes: 0 pass, 1 identity/property failure, 2 genericity exhausted,
// 3 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "laumon/verify.hpp"

namespace {

std::vector<laumon::Rational> parse_rational_list(const std::string& text) {
    std::vector<laumon::Rational> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(laumon::parse_rational(item));
    return out;
}

laumon::DegreeVector parse_degree(const std::string& text) {
    std::vector<int> entries;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) entries.push_back(std::stoi(item));
    return laumon::DegreeVector(std::move(entries));
}

struct CommonFlags {
    int n = 3;
    int max_degree = 4;
    int trials = 5;
    std::uint64_t seed = 1;
    std::string a;
    std::string m;
    std::string x = "1";
    unsigned workers = 1;
    int retries = 200;
    bool inject_fault = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool sampling) {
    cmd->add_option("--n", f.n, "Rank parameter n of sl_n (n >= 2)")->capture_default_str();
    cmd->add_option("--max-degree", f.max_degree, "Total-degree truncation D")->capture_default_str();
    cmd->add_option("--seed", f.seed, "64-bit seed of the parameter stream")->capture_default_str();
    cmd->add_option("--workers", f.workers, "Worker threads; results do not depend on this")->capture_default_str();
    cmd->add_option("--retries", f.retries, "Resample budget for non-generic points")->capture_default_str();
    if (sampling) {
        cmd->add_option("--trials", f.trials, "Number of sampled parameter points")->capture_default_str();
        cmd->add_option("--a", f.a, "Explicit a_1,...,a_n (comma-separated rationals, zero sum)");
        cmd->add_option("--m", f.m, "Explicit m (rational p/q)");
        cmd->add_option("--x", f.x, "Equivariant parameter x (rational, nonzero)")->capture_default_str();
        cmd->add_flag("--inject-fault", f.inject_fault, "Flip the orientation of every character weight (negative control)");
    }
}

laumon::VerifyOptions to_options(const CommonFlags& f) {
    laumon::VerifyOptions o;
    o.n = f.n;
    o.max_degree = f.max_degree;
    o.trials = f.trials;
    o.seed = f.seed;
    o.workers = f.workers;
    o.retry_budget = f.retries;
    o.x = laumon::parse_rational(f.x);
    if (!f.a.empty()) o.a = parse_rational_list(f.a);
    if (!f.m.empty()) o.m = laumon::parse_rational(f.m);
    if (f.inject_fault) o.fault = laumon::CharacterFault::SwapWeightOrientation;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Laumon-space localization identities"};
    app.require_subcommand(1);

    CommonFlags main_flags, toda_flags, prop_flags;
    auto* verify_main = app.add_subcommand("verify-main", "Compare Z(m) by localization with the Calogero-Sutherland side");
    add_common(verify_main, main_flags, true);
    auto* verify_toda = app.add_subcommand("verify-toda", "Compare Z by localization with the Toda eigenfunction");
    add_common(verify_toda, toda_flags, true);
    auto* properties = app.add_subcommand("properties", "Run the cross-module invariant suites");
    add_common(properties, prop_flags, false);

    laumon::InspectOptions inspect_opts;
    std::string gamma_text, a_text, m_text = "0", x_text = "1", d_text, dp_text;
    auto* inspect = app.add_subcommand("inspect", "Dump fixed points, weights, characters or series");
    inspect->add_option("subject", inspect_opts.subject, "fixed-points | tangent-weights | character | cartan | series")->required();
    inspect->add_option("kind", inspect_opts.series_kind, "Series kind: cs | toda | rhs | z | zlim | denominator");
    inspect->add_option("--n", inspect_opts.n, "Rank parameter n")->capture_default_str();
    inspect->add_option("--max-degree", inspect_opts.max_degree, "Series truncation")->capture_default_str();
    inspect->add_option("--gamma", gamma_text, "Degree vector d_1,...,d_{n-1}");
    inspect->add_option("--d", d_text, "Tableau rows separated by ';', entries by ','");
    inspect->add_option("--d-prime", dp_text, "Second tableau for 'character'");
    inspect->add_option("--a", a_text, "a_1,...,a_n");
    inspect->add_option("--m", m_text, "m")->capture_default_str();
    inspect->add_option("--x", x_text, "x")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : laumon::kExitUsage;
    }

    try {
        if (*inspect) {
            if (!gamma_text.empty()) inspect_opts.gamma = parse_degree(gamma_text);
            if (!d_text.empty()) inspect_opts.tableau = d_text;
            if (!dp_text.empty()) inspect_opts.tableau_prime = dp_text;
            if (!a_text.empty()) inspect_opts.a = parse_rational_list(a_text);
            inspect_opts.m = laumon::parse_rational(m_text);
            inspect_opts.x = laumon::parse_rational(x_text);
            std::cout << laumon::cmd_inspect(inspect_opts);
            return laumon::kExitPass;
        }
        laumon::VerificationReport report;
        if (*verify_main)
            report = laumon::cmd_verify_main(to_options(main_flags));
        else if (*verify_toda)
            report = laumon::cmd_verify_toda(to_options(toda_flags));
        else
            report = laumon::cmd_properties(to_options(prop_flags));
        std::cout << laumon::render_report(report);
        const int code = report.exit_code();
        if (code != laumon::kExitPass) std::cerr << "verdict: fail (exit " << code << ")\n";
        return code;
    } catch (const laumon::NonGenericParameter& e) {
        std::cerr << "non-generic parameter: " << e.what() << "\n";
        return laumon::kExitGenericityExhausted;
    } catch (const laumon::ResonantParameter& e) {
        std::cerr << "resonant parameter: " << e.what() << "\n";
        return laumon::kExitGenericityExhausted;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return laumon::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return laumon::kExitFailure;
    }
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laumon/localization.hpp"
#include "laumon/parameter.hpp"

namespace laumon {

enum ExitCode : int {
    kExitPass = 0,
    kExitFailure = 1,
    kExitGenericityExhausted = 2,
    kExitUsage = 3,
};

struct GammaRecord {
    DegreeVector gamma;
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

struct TrialRecord {
    ParameterPoint point;
    int resamples = 0;
    std::vector<GammaRecord> records;
    // Set when the engine threw InternalInconsistency for this point.
    std::optional<std::string> error;

    bool passed() const;
    // Lowest-degree gamma with lhs != rhs.
    std::optional<DegreeVector> first_witness() const;
};

struct PropertyRecord {
    std::string name;
    long trials = 0;
    bool passed = true;
    std::vector<std::string> witnesses;
    std::string detail;

    void fail(std::string witness);
};

struct VerificationReport {
    std::string command;
    int n = 0;
    int max_degree = 0;
    std::uint64_t seed = 0;
    Rational gauge_x{1};
    std::vector<TrialRecord> trials;
    std::vector<PropertyRecord> properties;
    bool genericity_exhausted = false;
    std::string genericity_detail;

    bool passed() const;
    int exit_code() const;
};

struct VerifyOptions {
    int n = 3;
    int max_degree = 4;
    int trials = 5;
    std::uint64_t seed = 1;
    std::optional<std::vector<Rational>> a;
    std::optional<Rational> m;
    Rational x{1};
    unsigned workers = 1;
    CharacterFault fault = CharacterFault::None;
    int retry_budget = 200;
};

// Z(m) by localization against Y * e^{-a/x} * prod (1 - e^{-alpha})^{-(m+1)},
// coefficient by coefficient.
VerificationReport cmd_verify_main(const VerifyOptions& options);

// Z by localization against the Toda eigenfunction, plus the m -> infinity
// ratio diagnostics.
VerificationReport cmd_verify_toda(const VerifyOptions& options);

// Cross-module invariant suites at the given scale.
VerificationReport cmd_properties(const VerifyOptions& options);

// One machine-readable JSON document.
std::string render_report(const VerificationReport& report);

struct InspectOptions {
    std::string subject;
    int n = 3;
    int max_degree = 2;
    std::optional<DegreeVector> gamma;
    std::optional<std::string> tableau;
    std::optional<std::string> tableau_prime;
    std::string series_kind = "cs";
    std::vector<Rational> a;
    Rational x{1};
    Rational m{0};
};

// Dumps exact data structures. Subjects: fixed-points, tangent-weights,
// character, cartan, series (kinds cs, toda, rhs, z, zlim, denominator).
std::string cmd_inspect(const InspectOptions& options);

}  // namespace laumon

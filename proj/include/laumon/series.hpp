#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "laumon/rational.hpp"

namespace laumon {

// gamma = -sum d_i alpha_i in the negative root cone, stored as (d_1, ..., d_{n-1}).
class DegreeVector {
public:
    DegreeVector() = default;
    explicit DegreeVector(std::vector<int> entries);
    static DegreeVector zero(int rank) { return DegreeVector(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

    int rank() const { return static_cast<int>(entries_.size()); }
    int total() const;
    bool is_zero() const { return total() == 0; }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    DegreeVector operator+(const DegreeVector& other) const;
    // Componentwise difference; false if any component would go negative.
    bool try_subtract(const DegreeVector& other, DegreeVector& out) const;

    std::string to_string() const;

    friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;

private:
    std::vector<int> entries_;
};

// All degree vectors of the given rank with total <= max_total, ordered by
// total degree and then lexicographically.
std::vector<DegreeVector> degrees_up_to(int rank, int max_total);
std::vector<DegreeVector> degrees_of_total(int rank, int total);

// Truncated formal series sum_gamma c_gamma e^gamma over the negative root
// cone. Keys never exceed the truncation degree; absent keys are zero.
class Series {
public:
    Series(int rank, int max_degree);
    static Series unit(int rank, int max_degree);

    int rank() const { return rank_; }
    int max_degree() const { return max_degree_; }

    const Rational& coefficient(const DegreeVector& gamma) const;
    void set(const DegreeVector& gamma, Rational value);
    void add(const DegreeVector& gamma, const Rational& value);

    const std::map<DegreeVector, Rational>& terms() const { return terms_; }

    Series truncated(int max_degree) const;
    Series scaled(const Rational& factor) const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    void check_key(const DegreeVector& gamma) const;

    int rank_;
    int max_degree_;
    std::map<DegreeVector, Rational> terms_;
};

Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);

// Cauchy product truncated at total degree max_degree. Throws
// std::invalid_argument on rank mismatch or when max_degree exceeds either
// operand's truncation.
Series series_mul(const Series& a, const Series& b, int max_degree);

// Degree vector of the positive root w_i - w_j = alpha_i + ... + alpha_{j-1}
// (1-based, i < j <= n).
DegreeVector root_degree(int n, int i, int j);

// prod over positive roots alpha of (1 - e^{-alpha})^{-exponent}, truncated.
Series denominator_power_series(int n, const Rational& exponent, int max_degree);

}  // namespace laumon

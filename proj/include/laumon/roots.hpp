#pragma once

#include <cstdint>
#include <vector>

#include "laumon/rational.hpp"
#include "laumon/series.hpp"

namespace laumon {

// Coordinates in the a_1, ..., a_n basis. Weights of sl_n have zero sum.
struct WeightVec {
    std::vector<Rational> coords;

    int size() const { return static_cast<int>(coords.size()); }
    Rational sum() const;
    bool is_zero_sum() const { return sum() == 0; }

    WeightVec operator+(const WeightVec& other) const;
    WeightVec operator-(const WeightVec& other) const;
    WeightVec operator*(const Rational& factor) const;

    friend bool operator==(const WeightVec&, const WeightVec&) = default;
};

struct CoweightVec {
    std::vector<Rational> coords;
};

// Standard dot product restricted to the trace-zero hyperplane, so every
// root has (alpha, alpha) = 2.
Rational inner(const WeightVec& lambda, const WeightVec& mu);
Rational pair(const CoweightVec& h, const WeightVec& lambda);

// alpha_i = e_i - e_{i+1}, 1-based.
WeightVec simple_root(int n, int i);

// w_i - w_j for 1 <= i < j <= n.
struct PositiveRoot {
    int i;
    int j;

    int height() const { return j - i; }
    bool is_simple() const { return j == i + 1; }
    WeightVec weight(int n) const;
    DegreeVector degree(int n) const { return root_degree(n, i, j); }

    friend bool operator==(const PositiveRoot&, const PositiveRoot&) = default;
};

enum class RootOrder { Ascending, Descending };

// Descending order is w_{n-1}-w_n > w_{n-2}-w_n > w_{n-2}-w_{n-1} > ... > w_1-w_2:
// first index decreasing, and for a fixed first index the second decreasing.
// Ascending is its reverse.
std::vector<PositiveRoot> positive_roots(int n, RootOrder order = RootOrder::Descending);

WeightVec rho(int n);
CoweightVec rho_check(int n);

// -sum d_i alpha_i in a-coordinates.
WeightVec embed_degree(const DegreeVector& gamma);

// Inverse of embed_degree: d_i is minus the i-th partial sum of the coordinates.
DegreeVector degree_from_weight(const WeightVec& weight);

// Number of multisets of positive roots summing to sum d_i alpha_i, by
// exhaustive enumeration.
std::uint64_t kostant_count(const DegreeVector& gamma);

}  // namespace laumon

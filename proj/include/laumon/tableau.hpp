#pragma once

#include <compare>
#include <string>
#include <vector>

#include "laumon/parameter.hpp"
#include "laumon/series.hpp"

namespace laumon {

// Torus-fixed point of the Laumon space: entries d_j^i for 1 <= i <= j <= n-1,
// with d_j^i >= d_{j+1}^i and the boundary row d_n^i = 0.
class Tableau {
public:
    // rows[j-1] holds (d_j^1, ..., d_j^j). Throws std::invalid_argument if the
    // shape or the column monotonicity is violated.
    Tableau(int n, std::vector<std::vector<int>> rows);
    static Tableau zero(int n);

    int n() const { return n_; }
    // d_j^i; row j = n is the zero boundary row.
    int entry(int j, int i) const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // Row-major flattening used in reports.
    std::vector<int> flattened() const;
    std::string to_string() const;

    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    int n_;
    std::vector<std::vector<int>> rows_;
};

// (d_1, ..., d_{n-1}) with d_j the sum of row j.
DegreeVector degree_of(const Tableau& d);

// All tableaux of degree gamma, in lexicographic order of their rows.
std::vector<Tableau> enumerate_fixed_points(int n, const DegreeVector& gamma);

// Eigenvalue of h_i on [d]: a_i/x - a_{i+1}/x - 1 + d_{i-1} - 2 d_i + d_{i+1}.
Rational cartan_eigenvalue(int i, const Tableau& d, const ParameterPoint& pt);

// <h_i, a/x - rho + gamma> with h_i = e_i - e_{i+1}.
Rational cartan_pairing(int i, const Tableau& d, const ParameterPoint& pt);

// d + m: every entry increased by m.
Tableau shift_tableau(const Tableau& d, int m);

// Parses "1;1,0" (rows separated by ';', entries by ',').
Tableau parse_tableau(int n, const std::string& text);

}  // namespace laumon

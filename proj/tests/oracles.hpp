#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the code paths they are compared against.

#include <functional>
#include <map>
#include <vector>

#include "laumon/rational.hpp"
#include "laumon/sampling.hpp"
#include "laumon/series.hpp"

namespace oracle {

using laumon::Rational;

// Coefficient maps keyed by raw entry vectors.
using CoeffMap = std::map<std::vector<int>, Rational>;

// Direct double loop over all pairs of keys.
inline CoeffMap convolve(const CoeffMap& a, const CoeffMap& b, int max_total) {
    CoeffMap out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            std::vector<int> k(ka.size());
            int total = 0;
            for (std::size_t i = 0; i < k.size(); ++i) {
                k[i] = ka[i] + kb[i];
                total += k[i];
            }
            if (total <= max_total) out[k] += va * vb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Every triangular array d_j^i (1 <= i <= j <= n-1) with entries in
// [0, bound], filtered by row sums and d_j^i >= d_{j+1}^i. Returned row-major.
inline std::vector<std::vector<int>> filtered_tableaux(int n, const std::vector<int>& degree) {
    int bound = 0;
    for (int d : degree) bound = std::max(bound, d);
    const int cells = n * (n - 1) / 2;
    std::vector<std::vector<int>> out;
    std::vector<int> cell(static_cast<std::size_t>(cells), 0);
    auto at = [&](int j, int i) {  // 1-based row j, column i
        if (j == n) return 0;
        return cell[static_cast<std::size_t>((j - 1) * j / 2 + (i - 1))];
    };
    while (true) {
        bool ok = true;
        for (int j = 1; j < n && ok; ++j) {
            int sum = 0;
            for (int i = 1; i <= j; ++i) {
                sum += at(j, i);
                ok = ok && at(j, i) >= at(j + 1, i);
            }
            ok = ok && sum == degree[static_cast<std::size_t>(j - 1)];
        }
        if (ok) out.push_back(cell);
        int k = 0;
        while (k < cells && ++cell[static_cast<std::size_t>(k)] > bound) cell[static_cast<std::size_t>(k++)] = 0;
        if (k == cells) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Z_(d) for n = 2 from the single fixed point with tangent weights
// {k x, a_2 - a_1 + k x : k = 1..d}, in the gauge x = 1, v = a_1 - a_2.
inline Rational z_rank_one(int d, const Rational& v, const Rational& m) {
    Rational z(1);
    for (int k = 1; k <= d; ++k) z *= (k + m) * (k + m - v) / (k * (k - v));
    return z;
}

// Same fixed point, m -> infinity limit: prod 1/(k (k - v)).
inline Rational z_limit_rank_one(int d, const Rational& v) {
    Rational z(1);
    for (int k = 1; k <= d; ++k) z /= k * (k - v);
    return z;
}

}  // namespace oracle

#include "laumon/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace laumon {

Tableau::Tableau(int n, std::vector<std::vector<int>> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ < 2) throw std::invalid_argument("Tableau: n must be at least 2");
    if (static_cast<int>(rows_.size()) != n_ - 1) throw std::invalid_argument("Tableau: expected n-1 rows");
    for (int j = 1; j < n_; ++j)
        if (static_cast<int>(rows_[static_cast<std::size_t>(j - 1)].size()) != j)
            throw std::invalid_argument("Tableau: row " + std::to_string(j) + " must have " + std::to_string(j) + " entries");
    for (int j = 1; j < n_; ++j)
        for (int i = 1; i <= j; ++i)
            if (entry(j, i) < entry(j + 1, i))
                throw std::invalid_argument("Tableau: column monotonicity violated at (" + std::to_string(j) + "," +
                                            std::to_string(i) + ")");
}

Tableau Tableau::zero(int n) {
    std::vector<std::vector<int>> rows;
    for (int j = 1; j < n; ++j) rows.emplace_back(static_cast<std::size_t>(j), 0);
    return Tableau(n, std::move(rows));
}

int Tableau::entry(int j, int i) const {
    if (j == n_) return 0;
    return rows_.at(static_cast<std::size_t>(j - 1)).at(static_cast<std::size_t>(i - 1));
}

std::vector<int> Tableau::flattened() const {
    std::vector<int> out;
    for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::string Tableau::to_string() const {
    std::string s;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        if (j) s += ';';
        for (std::size_t i = 0; i < rows_[j].size(); ++i) {
            if (i) s += ',';
            s += std::to_string(rows_[j][i]);
        }
    }
    return s;
}

DegreeVector degree_of(const Tableau& d) {
    std::vector<int> deg;
    for (const auto& row : d.rows()) {
        int s = 0;
        for (int v : row) s += v;
        deg.push_back(s);
    }
    return DegreeVector(std::move(deg));
}

namespace {

// Compositions of total into row.size() parts, part i bounded below by lower[i].
void compositions(int total, const std::vector<int>& lower, std::vector<int>& row, std::vector<std::vector<int>>& out) {
    const std::size_t k = row.size();
    if (k + 1 == lower.size()) {
        if (total >= lower[k]) {
            row.push_back(total);
            out.push_back(row);
            row.pop_back();
        }
        return;
    }
    int slack = total;
    for (std::size_t r = k + 1; r < lower.size(); ++r) slack -= lower[r];
    for (int v = lower[k]; v <= slack; ++v) {
        row.push_back(v);
        compositions(total - v, lower, row, out);
        row.pop_back();
    }
}

// Fills rows from j = n-1 down to 1; each row is bounded below by the row under it.
void fill_rows(int n, const DegreeVector& gamma, int j, std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
    if (j == 0) {
        out.emplace_back(n, rows);
        return;
    }
    const auto& below = j + 1 == n ? std::vector<int>(static_cast<std::size_t>(n), 0) : rows[static_cast<std::size_t>(j)];
    std::vector<int> lower(below.begin(), below.begin() + j);
    std::vector<std::vector<int>> candidates;
    std::vector<int> scratch;
    compositions(gamma[static_cast<std::size_t>(j - 1)], lower, scratch, candidates);
    for (auto& row : candidates) {
        rows[static_cast<std::size_t>(j - 1)] = std::move(row);
        fill_rows(n, gamma, j - 1, rows, out);
    }
}

}  // namespace

std::vector<Tableau> enumerate_fixed_points(int n, const DegreeVector& gamma) {
    if (n < 2) throw std::invalid_argument("enumerate_fixed_points: n must be at least 2");
    if (gamma.rank() != n - 1) throw std::invalid_argument("enumerate_fixed_points: degree rank must be n-1");
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n - 1));
    for (int j = 1; j < n; ++j) rows[static_cast<std::size_t>(j - 1)].assign(static_cast<std::size_t>(j), 0);
    std::vector<Tableau> out;
    fill_rows(n, gamma, n - 1, rows, out);
    std::sort(out.begin(), out.end());
    return out;
}

Rational cartan_eigenvalue(int i, const Tableau& d, const ParameterPoint& pt) {
    const int n = d.n();
    if (i < 1 || i > n - 1) throw std::invalid_argument("cartan_eigenvalue: index out of range");
    if (pt.n() != n) throw std::invalid_argument("cartan_eigenvalue: parameter point has wrong size");
    const DegreeVector deg = degree_of(d);
    auto component = [&](int k) { return (k < 1 || k > n - 1) ? 0 : deg[static_cast<std::size_t>(k - 1)]; };
    return (pt.a(i) - pt.a(i + 1)) / pt.x() - 1 + component(i - 1) - 2 * component(i) + component(i + 1);
}

Rational cartan_pairing(int i, const Tableau& d, const ParameterPoint& pt) {
    const int n = d.n();
    WeightVec h{std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
    h.coords[static_cast<std::size_t>(i - 1)] = 1;
    h.coords[static_cast<std::size_t>(i)] = -1;
    return inner(h, pt.a_over_x() - rho(n) + embed_degree(degree_of(d)));
}

Tableau shift_tableau(const Tableau& d, int m) {
    if (m < 0) throw std::invalid_argument("shift_tableau: m must be nonnegative");
    auto rows = d.rows();
    for (auto& row : rows)
        for (auto& v : row) v += m;
    return Tableau(d.n(), std::move(rows));
}

Tableau parse_tableau(int n, const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream rows_in(text);
    std::string row_text;
    while (std::getline(rows_in, row_text, ';')) {
        std::vector<int> row;
        std::stringstream entries(row_text);
        std::string entry;
        while (std::getline(entries, entry, ',')) {
            std::size_t used = 0;
            const int v = std::stoi(entry, &used);
            if (used != entry.size()) throw std::invalid_argument("parse_tableau: bad entry '" + entry + "'");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    return Tableau(n, std::move(rows));
}

}  // namespace laumon

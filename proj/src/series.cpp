#include "laumon/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace laumon {

DegreeVector::DegreeVector(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int d : entries_)
        if (d < 0) throw std::invalid_argument("DegreeVector: negative entry");
}

int DegreeVector::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

DegreeVector DegreeVector::operator+(const DegreeVector& other) const {
    if (other.rank() != rank()) throw std::invalid_argument("DegreeVector: rank mismatch");
    std::vector<int> out(entries_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.entries_[i];
    return DegreeVector(std::move(out));
}

bool DegreeVector::try_subtract(const DegreeVector& other, DegreeVector& out) const {
    if (other.rank() != rank()) throw std::invalid_argument("DegreeVector: rank mismatch");
    std::vector<int> diff(entries_);
    for (std::size_t i = 0; i < diff.size(); ++i) {
        diff[i] -= other.entries_[i];
        if (diff[i] < 0) return false;
    }
    out = DegreeVector(std::move(diff));
    return true;
}

std::string DegreeVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

namespace {

void fill_compositions(int rank, int remaining, std::vector<int>& prefix, std::vector<DegreeVector>& out) {
    if (static_cast<int>(prefix.size()) == rank - 1) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        prefix.push_back(v);
        fill_compositions(rank, remaining - v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<DegreeVector> degrees_of_total(int rank, int total) {
    std::vector<DegreeVector> out;
    if (rank <= 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<int> prefix;
    fill_compositions(rank, total, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DegreeVector> degrees_up_to(int rank, int max_total) {
    std::vector<DegreeVector> out;
    for (int t = 0; t <= max_total; ++t) {
        auto layer = degrees_of_total(rank, t);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

Series::Series(int rank, int max_degree) : rank_(rank), max_degree_(max_degree) {
    if (rank < 1) throw std::invalid_argument("Series: rank must be positive");
    if (max_degree < 0) throw std::invalid_argument("Series: negative truncation degree");
}

Series Series::unit(int rank, int max_degree) {
    Series s(rank, max_degree);
    s.set(DegreeVector::zero(rank), Rational(1));
    return s;
}

void Series::check_key(const DegreeVector& gamma) const {
    if (gamma.rank() != rank_) throw std::invalid_argument("Series: rank mismatch");
    if (gamma.total() > max_degree_) throw std::out_of_range("Series: key " + gamma.to_string() + " exceeds truncation");
}

const Rational& Series::coefficient(const DegreeVector& gamma) const {
    static const Rational zero(0);
    if (gamma.rank() != rank_) throw std::invalid_argument("Series: rank mismatch");
    auto it = terms_.find(gamma);
    return it == terms_.end() ? zero : it->second;
}

void Series::set(const DegreeVector& gamma, Rational value) {
    check_key(gamma);
    if (value == 0)
        terms_.erase(gamma);
    else
        terms_[gamma] = std::move(value);
}

void Series::add(const DegreeVector& gamma, const Rational& value) {
    check_key(gamma);
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(gamma, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

Series Series::truncated(int max_degree) const {
    Series out(rank_, max_degree);
    for (const auto& [gamma, c] : terms_)
        if (gamma.total() <= max_degree) out.terms_.emplace(gamma, c);
    return out;
}

Series Series::scaled(const Rational& factor) const {
    Series out(rank_, max_degree_);
    if (factor == 0) return out;
    for (const auto& [gamma, c] : terms_) out.terms_.emplace(gamma, c * factor);
    return out;
}

Series series_add(const Series& a, const Series& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("series_add: rank mismatch");
    Series out = a.truncated(std::min(a.max_degree(), b.max_degree()));
    for (const auto& [gamma, c] : b.terms())
        if (gamma.total() <= out.max_degree()) out.add(gamma, c);
    return out;
}

Series series_sub(const Series& a, const Series& b) { return series_add(a, b.scaled(Rational(-1))); }

Series series_mul(const Series& a, const Series& b, int max_degree) {
    if (a.rank() != b.rank()) throw std::invalid_argument("series_mul: rank mismatch");
    if (max_degree > a.max_degree() || max_degree > b.max_degree())
        throw std::invalid_argument("series_mul: truncation exceeds operand precision");
    Series out(a.rank(), max_degree);
    for (const auto& [ga, ca] : a.terms()) {
        if (ga.total() > max_degree) continue;
        for (const auto& [gb, cb] : b.terms()) {
            if (ga.total() + gb.total() > max_degree) continue;
            out.add(ga + gb, ca * cb);
        }
    }
    return out;
}

DegreeVector root_degree(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("root_degree: need 1 <= i < j <= n");
    std::vector<int> d(static_cast<std::size_t>(n - 1), 0);
    for (int k = i; k < j; ++k) d[static_cast<std::size_t>(k - 1)] = 1;
    return DegreeVector(std::move(d));
}

Series denominator_power_series(int n, const Rational& exponent, int max_degree) {
    if (n < 2) throw std::invalid_argument("denominator_power_series: n must be at least 2");
    const int rank = n - 1;
    Series product = Series::unit(rank, max_degree);
    if (exponent == 0) return product;
    const Rational shifted = exponent - 1;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const DegreeVector root = root_degree(n, i, j);
            const int height = j - i;
            // (1 - t)^{-exponent} = sum_k C(exponent - 1 + k, k) t^k
            Series factor(rank, max_degree);
            DegreeVector power = DegreeVector::zero(rank);
            for (int k = 0; k * height <= max_degree; ++k) {
                factor.set(power, rat_binomial(shifted, k));
                power = power + root;
            }
            product = series_mul(product, factor, max_degree);
        }
    }
    return product;
}

}  // namespace laumon

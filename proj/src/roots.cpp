#include "laumon/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace laumon {

Rational WeightVec::sum() const {
    Rational s(0);
    for (const auto& c : coords) s += c;
    return s;
}

WeightVec WeightVec::operator+(const WeightVec& other) const {
    if (other.size() != size()) throw std::invalid_argument("WeightVec: size mismatch");
    WeightVec out{coords};
    for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] += other.coords[i];
    return out;
}

WeightVec WeightVec::operator-(const WeightVec& other) const { return *this + other * Rational(-1); }

WeightVec WeightVec::operator*(const Rational& factor) const {
    WeightVec out{coords};
    for (auto& c : out.coords) c *= factor;
    return out;
}

Rational inner(const WeightVec& lambda, const WeightVec& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("inner: size mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < lambda.coords.size(); ++i) s += lambda.coords[i] * mu.coords[i];
    return s;
}

Rational pair(const CoweightVec& h, const WeightVec& lambda) {
    if (h.coords.size() != lambda.coords.size()) throw std::invalid_argument("pair: size mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < h.coords.size(); ++i) s += h.coords[i] * lambda.coords[i];
    return s;
}

WeightVec simple_root(int n, int i) { return PositiveRoot{i, i + 1}.weight(n); }

WeightVec PositiveRoot::weight(int n) const {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("PositiveRoot: need 1 <= i < j <= n");
    WeightVec w{std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
    w.coords[static_cast<std::size_t>(i - 1)] = 1;
    w.coords[static_cast<std::size_t>(j - 1)] = -1;
    return w;
}

std::vector<PositiveRoot> positive_roots(int n, RootOrder order) {
    if (n < 2) throw std::invalid_argument("positive_roots: n must be at least 2");
    std::vector<PositiveRoot> roots;
    for (int i = n - 1; i >= 1; --i)
        for (int j = n; j > i; --j) roots.push_back({i, j});
    if (order == RootOrder::Ascending) std::reverse(roots.begin(), roots.end());
    return roots;
}

WeightVec rho(int n) {
    WeightVec w;
    for (int i = 1; i <= n; ++i) w.coords.push_back(make_rational(n + 1 - 2 * i, 2));
    return w;
}

CoweightVec rho_check(int n) { return CoweightVec{rho(n).coords}; }

WeightVec embed_degree(const DegreeVector& gamma) {
    const int n = gamma.rank() + 1;
    WeightVec w{std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
    for (int i = 0; i < gamma.rank(); ++i) {
        w.coords[static_cast<std::size_t>(i)] -= gamma[static_cast<std::size_t>(i)];
        w.coords[static_cast<std::size_t>(i + 1)] += gamma[static_cast<std::size_t>(i)];
    }
    return w;
}

DegreeVector degree_from_weight(const WeightVec& weight) {
    if (!weight.is_zero_sum()) throw std::invalid_argument("degree_from_weight: weight is not zero-sum");
    std::vector<int> d;
    Rational partial(0);
    for (int i = 0; i + 1 < weight.size(); ++i) {
        partial += weight.coords[static_cast<std::size_t>(i)];
        const Rational di = -partial;
        if (di.get_den() != 1) throw std::invalid_argument("degree_from_weight: not in the root lattice");
        d.push_back(static_cast<int>(di.get_num().get_si()));
    }
    return DegreeVector(std::move(d));
}

namespace {

// Counts multisets drawn from roots[index..] summing to the remaining degree.
std::uint64_t count_multisets(const std::vector<DegreeVector>& roots, std::size_t index, const DegreeVector& remaining) {
    if (remaining.is_zero()) return 1;
    if (index == roots.size()) return 0;
    std::uint64_t total = 0;
    DegreeVector rest = remaining;
    while (true) {
        total += count_multisets(roots, index + 1, rest);
        DegreeVector next;
        if (!rest.try_subtract(roots[index], next)) break;
        rest = next;
    }
    return total;
}

}  // namespace

std::uint64_t kostant_count(const DegreeVector& gamma) {
    const int n = gamma.rank() + 1;
    if (n < 2) return gamma.is_zero() ? 1 : 0;
    std::vector<DegreeVector> roots;
    for (const auto& r : positive_roots(n)) roots.push_back(r.degree(n));
    return count_multisets(roots, 0, gamma);
}

}  // namespace laumon

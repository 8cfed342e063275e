#include "laumon/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "laumon/parameter.hpp"

namespace laumon {

QuiverRepClass QuiverRepClass::indecomposable(int n, int i, int l) {
    QuiverRepClass c(n);
    c.add(i, l);
    return c;
}

QuiverRepClass& QuiverRepClass::add(int i, int l, int count) {
    if (i < 1 || i > n_ - 1 || l < 1 || l > n_ - i)
        throw std::invalid_argument("QuiverRepClass: [" + std::to_string(i) + ";" + std::to_string(l) + "] is not an indecomposable of A_" + std::to_string(n_ - 1));
    if (count < 0) throw std::invalid_argument("QuiverRepClass: negative multiplicity");
    if (count > 0) k_[{i, l}] += count;
    return *this;
}

int QuiverRepClass::multiplicity(int i, int l) const {
    auto it = k_.find({i, l});
    return it == k_.end() ? 0 : it->second;
}

std::vector<int> QuiverRepClass::dimension_vector() const {
    std::vector<int> dims(static_cast<std::size_t>(n_ - 1), 0);
    for (const auto& [key, k] : k_)
        for (int v = key.first; v < key.first + key.second; ++v) dims[static_cast<std::size_t>(v - 1)] += k;
    return dims;
}

int QuiverRepClass::total_dimension() const {
    int total = 0;
    for (int d : dimension_vector()) total += d;
    return total;
}

QuiverRepClass QuiverRepClass::operator+(const QuiverRepClass& other) const {
    if (other.n_ != n_) throw std::invalid_argument("QuiverRepClass: different quivers");
    QuiverRepClass out(*this);
    for (const auto& [key, k] : other.k_) out.add(key.first, key.second, k);
    return out;
}

std::string QuiverRepClass::to_string() const {
    if (k_.empty()) return "0";
    std::string s;
    for (const auto& [key, k] : k_) {
        if (!s.empty()) s += "+";
        if (k > 1) s += std::to_string(k) + "*";
        s += "[" + std::to_string(key.first) + ";" + std::to_string(key.second) + "]";
    }
    return s;
}

namespace {

void fill_classes(int n, std::vector<std::pair<int, int>>& indecs, std::size_t index, std::vector<int>& remaining,
                  QuiverRepClass& current, std::vector<QuiverRepClass>& out) {
    if (index == indecs.size()) {
        for (int r : remaining)
            if (r != 0) return;
        out.push_back(current);
        return;
    }
    const auto [i, l] = indecs[index];
    int max_copies = 1 << 20;
    for (int v = i; v < i + l; ++v) max_copies = std::min(max_copies, remaining[static_cast<std::size_t>(v - 1)]);
    for (int k = 0; k <= max_copies; ++k) {
        QuiverRepClass next = current;
        next.add(i, l, k);
        for (int v = i; v < i + l; ++v) remaining[static_cast<std::size_t>(v - 1)] -= k;
        fill_classes(n, indecs, index + 1, remaining, next, out);
        for (int v = i; v < i + l; ++v) remaining[static_cast<std::size_t>(v - 1)] += k;
    }
}

}  // namespace

std::vector<QuiverRepClass> classes_with_dimension(int n, const std::vector<int>& dims) {
    if (static_cast<int>(dims.size()) != n - 1) throw std::invalid_argument("classes_with_dimension: wrong length");
    std::vector<std::pair<int, int>> indecs;
    for (int i = 1; i < n; ++i)
        for (int l = 1; l <= n - i; ++l) indecs.emplace_back(i, l);
    std::vector<int> remaining = dims;
    QuiverRepClass current(n);
    std::vector<QuiverRepClass> out;
    fill_classes(n, indecs, 0, remaining, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

ExactMatrix indec_matrix(int i, int l, int n) {
    if (i < 1 || i > n - 1 || l < 1 || l > n - i) throw std::invalid_argument("indec_matrix: invalid [i;l]");
    ExactMatrix m = ExactMatrix::unit(n, i + 1, i);
    for (int k = i + 1; k <= i + l - 1; ++k) m = commutator(ExactMatrix::unit(n, k + 1, k), m);
    return m;
}

ExactMatrix class_matrix(const QuiverRepClass& kappa) {
    const int n = kappa.n();
    ExactMatrix out = ExactMatrix::identity(n);
    for (const auto& [key, k] : kappa.multiplicities()) {
        Rational factorial(1);
        for (int t = 2; t <= k; ++t) factorial *= t;
        out = out * indec_matrix(key.first, key.second, n).power(k) * (Rational(1) / factorial);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Linear algebra over F_q for the Hall counts.

namespace {

using Vec = std::vector<int>;

struct PrimeField {
    int q;

    int norm(long v) const { return static_cast<int>(((v % q) + q) % q); }
    int inv(int a) const {
        for (int b = 1; b < q; ++b)
            if ((a * b) % q == 1) return b;
        throw std::logic_error("PrimeField: no inverse");
    }

    // Rank of the span of `rows`.
    int rank(std::vector<Vec> rows) const {
        if (rows.empty()) return 0;
        const std::size_t cols = rows.front().size();
        int r = 0;
        for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
            std::size_t pivot = static_cast<std::size_t>(r);
            while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[pivot], rows[static_cast<std::size_t>(r)]);
            const int s = inv(rows[static_cast<std::size_t>(r)][c]);
            for (auto& e : rows[static_cast<std::size_t>(r)]) e = norm(static_cast<long>(e) * s);
            for (std::size_t k = 0; k < rows.size(); ++k) {
                if (k == static_cast<std::size_t>(r) || rows[k][c] == 0) continue;
                const int f = rows[k][c];
                for (std::size_t j = 0; j < cols; ++j)
                    rows[k][j] = norm(rows[k][j] - static_cast<long>(f) * rows[static_cast<std::size_t>(r)][j]);
            }
            ++r;
        }
        return r;
    }

    // Every subspace of F_q^dim of dimension k, as a basis in reduced row echelon form.
    std::vector<std::vector<Vec>> subspaces(int dim, int k) const {
        std::vector<std::vector<Vec>> out;
        std::vector<int> pivots;
        enumerate_pivots(dim, k, 0, pivots, out);
        return out;
    }

private:
    void enumerate_pivots(int dim, int k, int start, std::vector<int>& pivots, std::vector<std::vector<Vec>>& out) const {
        if (static_cast<int>(pivots.size()) == k) {
            // Free positions: row r, column c > pivots[r] with c not a pivot.
            std::vector<std::pair<int, int>> free;
            for (int r = 0; r < k; ++r)
                for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < dim; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
            std::size_t combos = 1;
            for (std::size_t t = 0; t < free.size(); ++t) combos *= static_cast<std::size_t>(q);
            for (std::size_t code = 0; code < combos; ++code) {
                std::vector<Vec> basis(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(dim), 0));
                for (int r = 0; r < k; ++r) basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
                std::size_t rest = code;
                for (const auto& [r, c] : free) {
                    basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>(rest % static_cast<std::size_t>(q));
                    rest /= static_cast<std::size_t>(q);
                }
                out.push_back(std::move(basis));
            }
            return;
        }
        for (int c = start; c < dim; ++c) {
            pivots.push_back(c);
            enumerate_pivots(dim, k, c + 1, pivots, out);
            pivots.pop_back();
        }
    }
};

// Explicit realization of a class: one basis vector per copy of an
// indecomposable at each vertex it covers; edge maps send a copy's vector at v
// to the same copy's vector at v+1 (or to zero at the copy's end).
struct Realization {
    int vertices;
    std::vector<int> dims;
    // edge[v] is a dims[v+1] x dims[v] matrix (column images), v = 0..vertices-2.
    std::vector<std::vector<Vec>> edge_images;

    explicit Realization(const QuiverRepClass& kappa) : vertices(kappa.n() - 1) {
        dims.assign(static_cast<std::size_t>(vertices), 0);
        struct Copy {
            int first, last;
            std::vector<int> slot;
        };
        std::vector<Copy> copies;
        for (const auto& [key, k] : kappa.multiplicities())
            for (int c = 0; c < k; ++c) {
                Copy copy{key.first - 1, key.first + key.second - 2, {}};
                for (int v = copy.first; v <= copy.last; ++v) copy.slot.push_back(dims[static_cast<std::size_t>(v)]++);
                copies.push_back(std::move(copy));
            }
        edge_images.resize(static_cast<std::size_t>(std::max(vertices - 1, 0)));
        for (int v = 0; v + 1 < vertices; ++v)
            edge_images[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(dims[static_cast<std::size_t>(v)]),
                                                            Vec(static_cast<std::size_t>(dims[static_cast<std::size_t>(v + 1)]), 0));
        for (const auto& copy : copies)
            for (int v = copy.first; v < copy.last; ++v) {
                const int from = copy.slot[static_cast<std::size_t>(v - copy.first)];
                const int to = copy.slot[static_cast<std::size_t>(v + 1 - copy.first)];
                edge_images[static_cast<std::size_t>(v)][static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] = 1;
            }
    }

    Vec apply_edge(int v, const Vec& u, const PrimeField& f) const {
        Vec out(static_cast<std::size_t>(dims[static_cast<std::size_t>(v + 1)]), 0);
        for (std::size_t c = 0; c < u.size(); ++c) {
            if (u[c] == 0) continue;
            const Vec& img = edge_images[static_cast<std::size_t>(v)][c];
            for (std::size_t r = 0; r < out.size(); ++r) out[r] = f.norm(out[r] + static_cast<long>(u[c]) * img[r]);
        }
        return out;
    }

    // Images of `vectors` under the composite edge maps from vertex a to vertex b (0-based, a <= b).
    std::vector<Vec> transport(std::vector<Vec> vectors, int a, int b, const PrimeField& f) const {
        for (int v = a; v < b; ++v)
            for (auto& u : vectors) u = apply_edge(v, u, f);
        return vectors;
    }
};

std::vector<Vec> standard_basis(int dim) {
    std::vector<Vec> basis;
    for (int k = 0; k < dim; ++k) {
        Vec e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(k)] = 1;
        basis.push_back(std::move(e));
    }
    return basis;
}

// Recovers the class from interval ranks r(a, b) = #{indecomposables covering [a, b]}.
template <typename RankFn>
QuiverRepClass classify(int n, RankFn&& r) {
    const int vertices = n - 1;
    auto rank = [&](int a, int b) { return (a < 0 || b >= vertices) ? 0 : r(a, b); };
    QuiverRepClass out(n);
    for (int a = 0; a < vertices; ++a)
        for (int b = a; b < vertices; ++b) {
            const int k = rank(a, b) - rank(a - 1, b) - rank(a, b + 1) + rank(a - 1, b + 1);
            if (k < 0) throw std::logic_error("classify: negative multiplicity");
            if (k > 0) out.add(a + 1, b - a + 1, k);
        }
    return out;
}

}  // namespace

std::uint64_t hall_count(const QuiverRepClass& sub, const QuiverRepClass& quot, const QuiverRepClass& ambient, int q) {
    const int n = ambient.n();
    if (sub.n() != n || quot.n() != n) throw std::invalid_argument("hall_count: classes over different quivers");
    if (q < 2) throw std::invalid_argument("hall_count: q must be a prime");
    for (int p = 2; p * p <= q; ++p)
        if (q % p == 0) throw std::invalid_argument("hall_count: q must be a prime");
    if (ambient.total_dimension() > kHallDimensionCap)
        throw DimensionCapExceeded("hall_count: ambient dimension " + std::to_string(ambient.total_dimension()) +
                                   " exceeds cap " + std::to_string(kHallDimensionCap));
    const auto sub_dims = sub.dimension_vector();
    const auto quot_dims = quot.dimension_vector();
    const auto amb_dims = ambient.dimension_vector();
    for (std::size_t v = 0; v < amb_dims.size(); ++v)
        if (sub_dims[v] + quot_dims[v] != amb_dims[v]) return 0;

    const PrimeField field{q};
    const Realization rep(ambient);
    const int vertices = n - 1;

    std::vector<std::vector<std::vector<Vec>>> choices(static_cast<std::size_t>(vertices));
    for (int v = 0; v < vertices; ++v)
        choices[static_cast<std::size_t>(v)] = field.subspaces(amb_dims[static_cast<std::size_t>(v)], sub_dims[static_cast<std::size_t>(v)]);

    std::vector<std::size_t> pick(static_cast<std::size_t>(vertices), 0);
    std::uint64_t count = 0;
    while (true) {
        auto U = [&](int v) -> const std::vector<Vec>& {
            return choices[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]];
        };
        bool closed = true;
        for (int v = 0; v + 1 < vertices && closed; ++v) {
            std::vector<Vec> span = U(v + 1);
            const int base_rank = static_cast<int>(span.size());
            for (const auto& img : rep.transport(U(v), v, v + 1, field)) span.push_back(img);
            closed = field.rank(span) == base_rank;
        }
        if (closed) {
            const QuiverRepClass sub_class = classify(n, [&](int a, int b) { return field.rank(rep.transport(U(a), a, b, field)); });
            if (sub_class == sub) {
                const QuiverRepClass quot_class = classify(n, [&](int a, int b) {
                    std::vector<Vec> span = U(b);
                    for (const auto& img : rep.transport(standard_basis(amb_dims[static_cast<std::size_t>(a)]), a, b, field))
                        span.push_back(img);
                    return field.rank(span) - static_cast<int>(U(b).size());
                });
                if (quot_class == quot) ++count;
            }
        }
        int v = 0;
        while (v < vertices && ++pick[static_cast<std::size_t>(v)] == choices[static_cast<std::size_t>(v)].size()) {
            pick[static_cast<std::size_t>(v)] = 0;
            ++v;
        }
        if (v == vertices) break;
    }
    return count;
}

Integer hall_count_at_one(const QuiverRepClass& sub, const QuiverRepClass& quot, const QuiverRepClass& ambient) {
    const std::vector<int> nodes{2, 3, 5};
    std::vector<Rational> values;
    for (int q : nodes) values.emplace_back(static_cast<long>(hall_count(sub, quot, ambient, q)));
    auto interpolate = [&](int at) {
        Rational sum(0);
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            Rational basis(1);
            for (std::size_t t = 0; t < nodes.size(); ++t)
                if (t != k) basis *= make_rational(at - nodes[t], nodes[k] - nodes[t]);
            sum += values[k] * basis;
        }
        return sum;
    };
    const Rational check(static_cast<long>(hall_count(sub, quot, ambient, 7)));
    if (interpolate(7) != check)
        throw std::runtime_error("hall_count_at_one: counts for " + ambient.to_string() + " are not quadratic in q");
    const Rational at_one = interpolate(1);
    if (at_one.get_den() != 1) throw std::runtime_error("hall_count_at_one: non-integral interpolant");
    return at_one.get_num();
}

ExactMatrix hall_product_matrix(const QuiverRepClass& left, const QuiverRepClass& right) {
    const int n = left.n();
    const QuiverRepClass total = left + right;
    ExactMatrix sum(n);
    for (const auto& kappa : classes_with_dimension(n, total.dimension_vector())) {
        const Integer p = hall_count_at_one(left, right, kappa);
        if (p != 0) sum = sum + class_matrix(kappa) * Rational(p);
    }
    return sum;
}

ExactMatrix unipotent_product(int n, RootOrder order) {
    ExactMatrix out = ExactMatrix::identity(n);
    for (const auto& root : positive_roots(n, order)) out = out * exp_nilpotent(ExactMatrix::unit(n, root.i, root.j));
    return out;
}

ExactMatrix all_ones_upper(int n) {
    ExactMatrix g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) g(i, j) = 1;
    return g;
}

ExactMatrix conjugator_matrix(const std::vector<Rational>& t) {
    const int n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i) {
        if (t[static_cast<std::size_t>(i)] == 0) throw NonGenericParameter("conjugator_matrix: zero entry in t");
        for (int j = i + 1; j < n; ++j)
            if (t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)])
                throw NonGenericParameter("conjugator_matrix: repeated entry in t");
    }
    auto T = [&](int i) -> const Rational& { return t[static_cast<std::size_t>(i - 1)]; };
    ExactMatrix x = ExactMatrix::identity(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rational v = Rational(1) / (T(i) / T(j) - 1);
            for (int k = i + 1; k <= j - 1; ++k) v /= 1 - T(k) / T(i);
            x(i, j) = v;
        }
    return x;
}

ConjugatorReport conjugator_check(const std::vector<Rational>& t) {
    const int n = static_cast<int>(t.size());
    if (n < 2) throw std::invalid_argument("conjugator_check: need at least two entries");
    ConjugatorReport report{conjugator_matrix(t), false, Rational(1), {}, {}, false};
    const ExactMatrix& x = report.conjugator;
    const ExactMatrix diag = ExactMatrix::diagonal(t);
    report.conjugation_holds = x * all_ones_upper(n) * diag == diag * x;

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) report.expected_product /= 1 - t[static_cast<std::size_t>(j - 1)] / t[static_cast<std::size_t>(i - 1)];

    const ExactMatrix x_inv = x.inverse();
    const std::vector<std::pair<std::string, ExactMatrix>> variants{
        {"x", x}, {"x_inverse", x_inv}, {"x_transpose", x.transpose()}, {"x_inverse_transpose", x_inv.transpose()}};
    const std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
    for (const auto& [name, m] : variants) {
        Rational product(1);
        for (const auto& e : m * ones) product *= e;
        report.variant_products.emplace_back(name, product);
        if (product == report.expected_product) report.holding_variants.push_back(name);
    }
    report.passed = report.conjugation_holds && report.variant_products.front().second == report.expected_product;
    return report;
}

}  // namespace laumon

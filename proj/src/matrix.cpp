#include "laumon/matrix.hpp"

#include <stdexcept>

namespace laumon {

ExactMatrix::ExactMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n), Rational(0)) {
    if (n < 1) throw std::invalid_argument("ExactMatrix: size must be positive");
}

std::size_t ExactMatrix::index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("ExactMatrix: index out of range");
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::unit(int n, int i, int j) {
    ExactMatrix m(n);
    m(i, j) = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& entries) {
    ExactMatrix m(static_cast<int>(entries.size()));
    for (int i = 1; i <= m.n_; ++i) m(i, i) = entries[static_cast<std::size_t>(i - 1)];
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
    if (other.n_ != n_) throw std::invalid_argument("ExactMatrix: size mismatch");
    ExactMatrix out(*this);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += other.entries_[k];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& other) const { return *this + other * Rational(-1); }

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
    if (other.n_ != n_) throw std::invalid_argument("ExactMatrix: size mismatch");
    ExactMatrix out(n_);
    for (int i = 1; i <= n_; ++i)
        for (int k = 1; k <= n_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 1; j <= n_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

ExactMatrix ExactMatrix::operator*(const Rational& factor) const {
    ExactMatrix out(*this);
    for (auto& e : out.entries_) e *= factor;
    return out;
}

std::vector<Rational> ExactMatrix::operator*(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("ExactMatrix: vector size mismatch");
    std::vector<Rational> out(v.size(), Rational(0));
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) out[static_cast<std::size_t>(i - 1)] += (*this)(i, j) * v[static_cast<std::size_t>(j - 1)];
    return out;
}

ExactMatrix ExactMatrix::power(int k) const {
    if (k < 0) throw std::invalid_argument("ExactMatrix::power: negative exponent");
    ExactMatrix out = identity(n_);
    for (int t = 0; t < k; ++t) out = out * *this;
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

ExactMatrix ExactMatrix::inverse() const {
    ExactMatrix a(*this);
    ExactMatrix inv = identity(n_);
    for (int col = 1; col <= n_; ++col) {
        int pivot = col;
        while (pivot <= n_ && a(pivot, col) == 0) ++pivot;
        if (pivot > n_) throw std::domain_error("ExactMatrix::inverse: singular matrix");
        if (pivot != col)
            for (int j = 1; j <= n_; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const Rational scale = Rational(1) / a(col, col);
        for (int j = 1; j <= n_; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (int r = 1; r <= n_; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Rational f = a(r, col);
            for (int j = 1; j <= n_; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

std::string ExactMatrix::to_string() const {
    std::string s = "[";
    for (int i = 1; i <= n_; ++i) {
        s += i > 1 ? ",[" : "[";
        for (int j = 1; j <= n_; ++j) {
            if (j > 1) s += ',';
            s += laumon::to_string((*this)(i, j));
        }
        s += ']';
    }
    return s + "]";
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

ExactMatrix exp_nilpotent(const ExactMatrix& nilpotent) {
    const int n = nilpotent.size();
    if (!nilpotent.power(n).is_zero()) throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
    ExactMatrix sum = ExactMatrix::identity(n);
    ExactMatrix term = ExactMatrix::identity(n);
    for (int k = 1; k < n; ++k) {
        term = term * nilpotent * make_rational(1, k);
        sum = sum + term;
    }
    return sum;
}

}  // namespace laumon

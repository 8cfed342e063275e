#pragma once

#include <string>
#include <vector>

#include "laumon/rational.hpp"

namespace laumon {

// Square matrix with exact entries, 1-based accessors.
class ExactMatrix {
public:
    explicit ExactMatrix(int n);
    static ExactMatrix identity(int n);
    // E_{i,j}: 1 at row i, column j.
    static ExactMatrix unit(int n, int i, int j);
    static ExactMatrix diagonal(const std::vector<Rational>& entries);

    int size() const { return n_; }
    Rational& operator()(int i, int j) { return entries_[index(i, j)]; }
    const Rational& operator()(int i, int j) const { return entries_[index(i, j)]; }

    ExactMatrix operator+(const ExactMatrix& other) const;
    ExactMatrix operator-(const ExactMatrix& other) const;
    ExactMatrix operator*(const ExactMatrix& other) const;
    ExactMatrix operator*(const Rational& factor) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;

    ExactMatrix power(int k) const;
    ExactMatrix transpose() const;
    // Gauss-Jordan; throws std::domain_error when singular.
    ExactMatrix inverse() const;
    bool is_zero() const;

    std::string to_string() const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t index(int i, int j) const;

    int n_;
    std::vector<Rational> entries_;
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

// exp(N) = sum_k N^k / k! for nilpotent N; throws if N^size != 0.
ExactMatrix exp_nilpotent(const ExactMatrix& nilpotent);

}  // namespace laumon

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "laumon/matrix.hpp"
#include "laumon/roots.hpp"

namespace laumon {

// Isomorphism class of a representation of the A_{n-1} quiver
// 1 -> 2 -> ... -> n-1, given by multiplicities k_{il} of the
// indecomposables [i;l] (one-dimensional at vertices i..i+l-1).
class QuiverRepClass {
public:
    explicit QuiverRepClass(int n) : n_(n) {}
    static QuiverRepClass indecomposable(int n, int i, int l);

    int n() const { return n_; }
    QuiverRepClass& add(int i, int l, int count = 1);
    int multiplicity(int i, int l) const;
    const std::map<std::pair<int, int>, int>& multiplicities() const { return k_; }

    // Dimension at vertices 1..n-1.
    std::vector<int> dimension_vector() const;
    int total_dimension() const;

    QuiverRepClass operator+(const QuiverRepClass& other) const;
    std::string to_string() const;

    friend auto operator<=>(const QuiverRepClass&, const QuiverRepClass&) = default;

private:
    int n_;
    std::map<std::pair<int, int>, int> k_;
};

// All classes with the given dimension vector.
std::vector<QuiverRepClass> classes_with_dimension(int n, const std::vector<int>& dims);

// Iterated commutator [E_{i+l,i+l-1}, [..., [E_{i+2,i+1}, E_{i+1,i}]]].
ExactMatrix indec_matrix(int i, int l, int n);

// prod_i prod_l indec_matrix(i,l)^{k_il} / k_il!, ascending in i, then in l.
ExactMatrix class_matrix(const QuiverRepClass& kappa);

class DimensionCapExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kHallDimensionCap = 4;

// Number of subrepresentations V' of a representation V in the ambient class
// with V' in class `sub` and V/V' in class `quot`, over the prime field F_q.
// Found by enumerating every tuple of subspaces. Throws DimensionCapExceeded
// past kHallDimensionCap total dimension.
std::uint64_t hall_count(const QuiverRepClass& sub, const QuiverRepClass& quot, const QuiverRepClass& ambient, int q);

// The Hall number at q = 1, read off from counts at q = 2, 3, 5 by quadratic
// interpolation. The count at q = 7 must agree with the interpolant, otherwise
// std::runtime_error is thrown.
Integer hall_count_at_one(const QuiverRepClass& sub, const QuiverRepClass& quot, const QuiverRepClass& ambient);

// sum_kappa P^kappa_{left,right}(1) class_matrix(kappa): the q = 1 Hall
// product of e_left and e_right realized as a matrix.
ExactMatrix hall_product_matrix(const QuiverRepClass& left, const QuiverRepClass& right);

// prod over positive roots w_i - w_j of exp(E_{i,j}), in the given order.
ExactMatrix unipotent_product(int n, RootOrder order = RootOrder::Descending);

// Upper unitriangular matrix with every entry on and above the diagonal 1.
ExactMatrix all_ones_upper(int n);

// Conjugator of g diag(t) to diag(t):
//   x_ij = 1/(t_i/t_j - 1) * prod_{k=i+1}^{j-1} 1/(1 - t_k/t_i)  (i < j), x_ii = 1.
// Throws NonGenericParameter for repeated or zero t_i.
ExactMatrix conjugator_matrix(const std::vector<Rational>& t);

struct ConjugatorReport {
    ExactMatrix conjugator;
    // x g diag(t) == diag(t) x, i.e. g diag(t) = x^{-1} diag(t) x.
    bool conjugation_holds = false;
    Rational expected_product;
    // Product of the entries of M (1, ..., 1)^T for M in {x, x^{-1}, x^T, x^{-T}}.
    std::vector<std::pair<std::string, Rational>> variant_products;
    std::vector<std::string> holding_variants;
    // Conjugation holds and the variant applying x itself to the all-ones vector matches.
    bool passed = false;
};

ConjugatorReport conjugator_check(const std::vector<Rational>& t);

}  // namespace laumon

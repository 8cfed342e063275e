#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "laumon/tableau.hpp"

namespace laumon {

// sum_i c_i a_i + c_x x.
struct TorusWeight {
    std::vector<int> a_coeffs;
    int x_coeff = 0;

    static TorusWeight pure_x(int n, int k) { return {std::vector<int>(static_cast<std::size_t>(n), 0), k}; }
    // a_j - a_{j'} + k x, 1-based.
    static TorusWeight difference(int n, int j, int j_prime, int k);

    bool is_zero() const;
    // True when the a-part is e_j - e_{j'} for some j, j' (possibly zero).
    bool has_root_shaped_a_part() const;
    TorusWeight shifted_x(int k) const { return {a_coeffs, x_coeff + k}; }

    std::string to_string() const;

    friend auto operator<=>(const TorusWeight&, const TorusWeight&) = default;
};

// Finite integer combination of torus weights, zero multiplicities never stored.
class Character {
public:
    Character() = default;

    void add(const TorusWeight& w, int multiplicity);
    void add(const Character& other, int sign = 1);

    int multiplicity(const TorusWeight& w) const;
    // Sum of all multiplicities (the virtual rank).
    long total_multiplicity() const;
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<TorusWeight, int>& terms() const { return terms_; }

    // Multiplies by e^{kx}.
    Character shifted_x(int k) const;

    friend bool operator==(const Character&, const Character&) = default;

private:
    std::map<TorusWeight, int> terms_;
};

// Character of (e^{x(N+1)} - e^x)/(e^x - 1) as a pure-x character of rank n.
Character geom_block(int n, int N);

enum class CharacterFault {
    None,
    // Negates the a-part of every weight (a_{j'} - a_j instead of a_j - a_{j'}).
    SwapWeightOrientation,
};

// Character of the fiber E_{d,d'}: the G-blocks (row i of d' against row i+1
// of d) minus the H-blocks (row i of d' against row i of d).
Character char_E(const Tableau& d, const Tableau& d_prime, CharacterFault fault = CharacterFault::None);

// Weights of the tangent space at d (the diagonal fiber E_{d,d}), each
// repeated according to multiplicity. Throws InternalInconsistency on a
// negative multiplicity or a zero weight.
std::vector<TorusWeight> tangent_weights(const Tableau& d, CharacterFault fault = CharacterFault::None);

// char_E(d', d) * e^{mx} - char_E(d', d + m).
Character char_shift_defect(const Tableau& d, const Tableau& d_prime, int m);

}  // namespace laumon

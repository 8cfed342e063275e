#include "laumon/character.hpp"

#include <stdexcept>

namespace laumon {

TorusWeight TorusWeight::difference(int n, int j, int j_prime, int k) {
    TorusWeight w = pure_x(n, k);
    w.a_coeffs[static_cast<std::size_t>(j - 1)] += 1;
    w.a_coeffs[static_cast<std::size_t>(j_prime - 1)] -= 1;
    return w;
}

bool TorusWeight::is_zero() const {
    if (x_coeff != 0) return false;
    for (int c : a_coeffs)
        if (c != 0) return false;
    return true;
}

bool TorusWeight::has_root_shaped_a_part() const {
    int plus = 0, minus = 0;
    for (int c : a_coeffs) {
        if (c == 1)
            ++plus;
        else if (c == -1)
            ++minus;
        else if (c != 0)
            return false;
    }
    return plus == minus && plus <= 1;
}

std::string TorusWeight::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < a_coeffs.size(); ++i) {
        const int c = a_coeffs[i];
        if (c == 0) continue;
        if (!s.empty() || c < 0) s += c < 0 ? "-" : "+";
        if (c != 1 && c != -1) s += std::to_string(c > 0 ? c : -c);
        s += "a" + std::to_string(i + 1);
    }
    if (x_coeff != 0 || s.empty()) {
        const int c = x_coeff;
        if (!s.empty() || c < 0) s += c < 0 ? "-" : "+";
        const int mag = c < 0 ? -c : c;
        if (mag == 0)
            s += "0";
        else if (mag == 1)
            s += "x";
        else
            s += std::to_string(mag) + "x";
    }
    return s;
}

void Character::add(const TorusWeight& w, int multiplicity) {
    if (multiplicity == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0) terms_.erase(it);
    }
}

void Character::add(const Character& other, int sign) {
    for (const auto& [w, mult] : other.terms_) add(w, sign * mult);
}

int Character::multiplicity(const TorusWeight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

long Character::total_multiplicity() const {
    long total = 0;
    for (const auto& [w, mult] : terms_) total += mult;
    return total;
}

Character Character::shifted_x(int k) const {
    Character out;
    for (const auto& [w, mult] : terms_) out.terms_.emplace(w.shifted_x(k), mult);
    return out;
}

Character geom_block(int n, int N) {
    Character out;
    if (N > 0) {
        for (int k = 1; k <= N; ++k) out.add(TorusWeight::pure_x(n, k), 1);
    } else if (N < 0) {
        // (e^{x(N+1)} - e^x)/(e^x - 1) = -(1 + e^{-x} + ... + e^{-(|N|-1)x})
        for (int k = 0; k < -N; ++k) out.add(TorusWeight::pure_x(n, -k), -1);
    }
    return out;
}

namespace {

// Adds sign * e^{a_j - a_{j'}} * geom_block(N) for every pair (j, j').
void add_block(Character& out, int n, int upper_row_index, int lower_row_index, int j_count, const Tableau& d,
               const Tableau& d_prime, int sign, CharacterFault fault) {
    const int i = upper_row_index;
    for (int j = 1; j <= j_count; ++j) {
        for (int jp = 1; jp <= i; ++jp) {
            const int N = d_prime.entry(i, jp) - d.entry(lower_row_index, j);
            if (N == 0) continue;
            const int a_plus = fault == CharacterFault::SwapWeightOrientation ? jp : j;
            const int a_minus = fault == CharacterFault::SwapWeightOrientation ? j : jp;
            const TorusWeight base = TorusWeight::difference(n, a_plus, a_minus, 0);
            const Character block = geom_block(n, N);
            for (const auto& [w, mult] : block.terms()) out.add(base.shifted_x(w.x_coeff), sign * mult);
        }
    }
}

}  // namespace

Character char_E(const Tableau& d, const Tableau& d_prime, CharacterFault fault) {
    const int n = d.n();
    if (d_prime.n() != n) throw std::invalid_argument("char_E: tableaux of different n");
    Character out;
    for (int i = 1; i <= n - 1; ++i) {
        add_block(out, n, i, i + 1, i + 1, d, d_prime, +1, fault);
        add_block(out, n, i, i, i, d, d_prime, -1, fault);
    }
    return out;
}

std::vector<TorusWeight> tangent_weights(const Tableau& d, CharacterFault fault) {
    const Character ch = char_E(d, d, fault);
    std::vector<TorusWeight> weights;
    for (const auto& [w, mult] : ch.terms()) {
        if (mult < 0)
            throw InternalInconsistency("tangent_weights: negative multiplicity for " + w.to_string() + " at " +
                                        d.to_string());
        if (w.is_zero()) throw InternalInconsistency("tangent_weights: zero weight at " + d.to_string());
        for (int k = 0; k < mult; ++k) weights.push_back(w);
    }
    return weights;
}

Character char_shift_defect(const Tableau& d, const Tableau& d_prime, int m) {
    Character out = char_E(d_prime, d).shifted_x(m);
    out.add(char_E(d_prime, shift_tableau(d, m)), -1);
    return out;
}

}  // namespace laumon

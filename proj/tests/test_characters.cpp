#include "doctest.h"
#include "laumon/character.hpp"
#include "laumon/parameter.hpp"
#include "laumon/tableau.hpp"

using namespace laumon;

namespace {

std::vector<Tableau> points_up_to(int n, int total) {
    std::vector<Tableau> out;
    for (const auto& g : degrees_up_to(n - 1, total))
        for (auto& d : enumerate_fixed_points(n, g)) out.push_back(std::move(d));
    return out;
}

}  // namespace

TEST_CASE("geom_block") {
    CHECK(geom_block(2, 0).empty());
    Character two;
    two.add(TorusWeight::pure_x(2, 1), 1);
    two.add(TorusWeight::pure_x(2, 2), 1);
    CHECK(geom_block(2, 2) == two);
    Character minus_one;
    minus_one.add(TorusWeight::pure_x(2, 0), -1);
    CHECK(geom_block(2, -1) == minus_one);
    CHECK(geom_block(3, -3).total_multiplicity() == -3);
}

TEST_CASE("char_E at n = 2 matches the hand specialization") {
    CHECK(char_E(Tableau::zero(3), Tableau::zero(3)).empty());
    for (int delta = 0; delta <= 6; ++delta) {
        const Tableau d(2, {{delta}});
        Character expected;
        for (int k = 1; k <= delta; ++k) {
            expected.add(TorusWeight::pure_x(2, k), 1);
            expected.add(TorusWeight{{-1, 1}, k}, 1);  // a_2 - a_1 + k x
        }
        CHECK(char_E(d, d) == expected);
    }
}

TEST_CASE("tangent weights") {
    CHECK(tangent_weights(Tableau::zero(3)).empty());
    const auto w = tangent_weights(parse_tableau(2, "1"));
    CHECK(w == std::vector<TorusWeight>{TorusWeight{{-1, 1}, 1}, TorusWeight{{0, 0}, 1}});
    CHECK(tangent_weights(parse_tableau(3, "1;0,0")).size() == 2);
    for (int n = 2; n <= 4; ++n)
        for (const auto& d : points_up_to(n, 4)) {
            const auto tw = tangent_weights(d);
            CHECK(tw.size() == static_cast<std::size_t>(2 * degree_of(d).total()));
            for (const auto& x : tw) CHECK_FALSE(x.is_zero());
        }
}

TEST_CASE("rank of E equals half the dimension sum") {
    for (int n = 2; n <= 4; ++n) {
        const auto pts = points_up_to(n, n == 4 ? 3 : 4);
        for (const auto& d : pts)
            for (const auto& dp : pts) {
                const Character c = char_E(d, dp);
                CHECK(c.total_multiplicity() == degree_of(d).total() + degree_of(dp).total());
                for (const auto& [w, k] : c.terms()) {
                    CHECK(k > 0);
                    CHECK(w.has_root_shaped_a_part());
                }
            }
    }
}

TEST_CASE("shift defect is independent of the pair") {
    for (int n = 2; n <= 3; ++n) {
        CHECK(char_shift_defect(Tableau::zero(n), Tableau::zero(n), 0).empty());
        const auto pts = points_up_to(n, 2);
        for (int m = 1; m <= 3; ++m) {
            const Character reference = char_shift_defect(Tableau::zero(n), Tableau::zero(n), m);
            for (const auto& d : pts)
                for (const auto& dp : pts) CHECK(char_shift_defect(d, dp, m) == reference);
        }
    }
    CHECK(char_shift_defect(Tableau::zero(2), Tableau::zero(2), 1) ==
          char_shift_defect(parse_tableau(2, "1"), parse_tableau(2, "2"), 1));
}

TEST_CASE("injected orientation fault is visible on the diagonal") {
    const Tableau d = parse_tableau(2, "1");
    CHECK(char_E(d, d, CharacterFault::SwapWeightOrientation) != char_E(d, d));
}

#include "doctest.h"

#include <set>

#include "stanley/lattice.hpp"
#include "stanley/wallach.hpp"

using namespace stanley;

namespace {

RationalSeries S(IntPolynomial num, std::vector<DenomFactor> den) {
    return RationalSeries(std::move(num), std::move(den));
}

}  // namespace

TEST_CASE("poset shapes") {
    CHECK(wallach_poset(WallachPair::Dn, 6).cells.size() == 10);
    CHECK(wallach_poset(WallachPair::E6).cells.size() == 16);
    CHECK(wallach_poset(WallachPair::E7).cells.size() == 27);
    CHECK_THROWS_AS(wallach_poset(WallachPair::Dn, 3), std::domain_error);
}

TEST_CASE("Dn series") {
    for (int n = 4; n <= 8; ++n) {
        auto s = wallach_series(WallachPair::Dn, n, 1);
        CHECK(s.equals(S({{0, 1}, {1, 1}}, {{1, 2 * n - 3}})));
        CHECK(wallach_facets(WallachPair::Dn, n, 1).size() == 2);
    }
}

TEST_CASE("E6 series") {
    auto facets = wallach_facets(WallachPair::E6, 0, 1);
    CHECK(facets.size() == 12);
    for (auto& f : facets) CHECK(f.paths[0].size() == 11);
    CHECK(wallach_series(WallachPair::E6, 0, 1).equals(S({{0, 1}, {1, 5}, {2, 5}, {3, 1}}, {{1, 11}})));
}

TEST_CASE("E7 series") {
    auto facets = wallach_facets(WallachPair::E7, 0, 1);
    CHECK(facets.size() == 78);  // coefficient sum 1+10+28+28+10+1
    for (auto& f : facets) CHECK(f.paths[0].size() == 17);
    CHECK(wallach_series(WallachPair::E7, 0, 1)
              .equals(S({{0, 1}, {1, 10}, {2, 28}, {3, 28}, {4, 10}, {5, 1}}, {{1, 17}})));

    auto pairs = wallach_facets(WallachPair::E7, 0, 2);
    CHECK(pairs.size() == 3);
    for (auto& f : pairs) {
        int cells = 0;
        for (auto& p : f.paths) cells += static_cast<int>(p.size());
        CHECK(cells == 26);
    }
    CHECK(wallach_series(WallachPair::E7, 0, 2).equals(S({{0, 1}, {1, 1}, {2, 1}}, {{1, 26}})));
    CHECK_THROWS_AS(wallach_series(WallachPair::E6, 0, 2), std::domain_error);
}

TEST_CASE("classical corner poset isomorphisms by search") {
    for (int p = 1; p <= 7; ++p)
        for (int q = 1; q <= 7; ++q)
            for (int k = 1; k <= 3; ++k) {
                auto cor = corner_poset_classical(ClassicalPoset::gl(p, q), k);
                auto red = FinitePoset::from_classical(corner_poset_reduced(ClassicalPoset::gl(p, q), k));
                CHECK(poset_isomorphic(cor, red));
            }
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto cor = corner_poset_classical(ClassicalPoset::o(n), k);
            auto red = FinitePoset::from_classical(corner_poset_reduced(ClassicalPoset::o(n), k));
            CHECK(poset_isomorphic(cor, red));
        }
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto cor = corner_poset_classical(ClassicalPoset::sp(n), k);
            auto red = FinitePoset::from_classical(corner_poset_reduced(ClassicalPoset::sp(n), k));
            CHECK(poset_isomorphic(cor, red));
        }
}

TEST_CASE("corner regions match observed corner locations") {
    // the translated region of the innermost path contains exactly the cells
    // that occur as its corners, checked on small posets
    auto observed = [](const ClassicalPoset& poset, int k, int path_index) {
        std::set<std::pair<int, int>> cells;
        for (auto& fc : enumerate_facets(poset, k)) {
            auto& path = fc.facet.paths[path_index];
            for (auto c : fc.corners.cells)
                if (path.contains(c)) cells.insert({c.i, c.j});
        }
        return cells;
    };
    // O(5), k=2: the innermost path carries the canonical region (rows >= 3)
    auto got = observed(ClassicalPoset::o(5), 2, 1);
    for (auto [i, j] : got) {
        CHECK(i >= 3);
        CHECK(i <= j);
        CHECK(j <= 5);
    }
    // Sp(7), k=2: the first path carries the canonical region (translates move up)
    auto got_sp = observed(ClassicalPoset::sp(7), 2, 0);
    for (auto [i, j] : got_sp) {
        CHECK(i >= 3);
        CHECK(i < j);
        CHECK(j <= 5);
    }
}

TEST_CASE("exceptional corner posets") {
    // Cor_1 of Dn is a single point
    for (int n = 4; n <= 7; ++n) CHECK(corner_poset_wallach(WallachPair::Dn, n, 1).size == 1);
    // Cor_2 of E7 is a single point
    CHECK(corner_poset_wallach(WallachPair::E7, 0, 2).size == 1);
    // Cor_1 of E6 has the covering graph of the GL(1,5) chain
    auto e6 = corner_poset_wallach(WallachPair::E6, 0, 1);
    CHECK(covering_graphs_isomorphic(e6, FinitePoset::from_classical(ClassicalPoset::gl(1, 5))));
    // Cor_1 of E7 has the covering graph of the (D6, D5) poset
    auto e7 = corner_poset_wallach(WallachPair::E7, 0, 1);
    auto d6 = wallach_poset(WallachPair::Dn, 6);
    FinitePoset d6p;
    d6p.size = static_cast<int>(d6.cells.size());
    d6p.leq.assign(d6p.size, std::vector<bool>(d6p.size, false));
    for (int a = 0; a < d6p.size; ++a)
        for (int b = 0; b < d6p.size; ++b) {
            Cell x = d6.cells[a], y = d6.cells[b];
            d6p.leq[a][b] = x.i <= y.i && x.j >= y.j;
        }
    CHECK(e7.size == 10);
    CHECK(covering_graphs_isomorphic(e7, d6p));
}

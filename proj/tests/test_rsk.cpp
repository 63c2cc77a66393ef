#include "doctest.h"

#include <functional>
#include <map>
#include <set>

#include "stanley/partition.hpp"
#include "stanley/rsk.hpp"

using namespace stanley;

namespace {

// all matrices over the given cells with entry sum exactly `total`
void matrices_with_sum(NatMatrix& m, const std::vector<Cell>& cells, size_t idx, int total,
                       const std::function<void(const NatMatrix&)>& fn) {
    if (total == 0) {
        fn(m);
        return;
    }
    if (idx == cells.size()) return;
    for (int v = 0; v <= total; ++v) {
        m.at(cells[idx].i, cells[idx].j) = v;
        matrices_with_sum(m, cells, idx + 1, total - v, fn);
    }
    m.at(cells[idx].i, cells[idx].j) = 0;
}

void for_each_matrix(int p, int q, NatMatrix::Kind kind, int max_sum,
                     const std::function<void(const NatMatrix&)>& fn) {
    std::vector<Cell> cells;
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j) {
            if (kind == NatMatrix::Kind::UpperTriangular && j < i) continue;
            if (kind == NatMatrix::Kind::StrictlyUpperTriangular && j <= i) continue;
            cells.push_back({i, j});
        }
    NatMatrix m(p, q, kind);
    for (int total = 0; total <= max_sum; ++total) matrices_with_sum(m, cells, 0, total, fn);
}

NatMatrix figure_matrix() {
    NatMatrix m(4, 5);
    m.at(1, 1) = 1;
    m.at(1, 5) = 2;
    m.at(2, 1) = 1;
    m.at(2, 5) = 1;
    m.at(3, 3) = 3;
    m.at(4, 2) = 2;
    return m;
}

}  // namespace

TEST_CASE("figure fixture: matrix <-> pair") {
    NatMatrix m = figure_matrix();
    TableauPair pair = rsk_gl_inverse(m);
    CHECK(pair.recording.rows == std::vector<std::vector<int>>({{1, 1, 1, 2, 3}, {2, 3, 3}, {4, 4}}));
    CHECK(pair.insertion.rows == std::vector<std::vector<int>>({{1, 1, 2, 2, 3}, {3, 3, 5}, {5, 5}}));
    CHECK(rsk_gl(pair, 4, 5) == m);
}

TEST_CASE("figure fixture: peel decompositions") {
    auto d = peel(figure_matrix(), PosetKind::GL);
    using V = std::vector<Cell>;
    CHECK(d.chains_star ==
          std::vector<V>({{{1, 1}, {1, 5}, {1, 5}, {2, 5}}, {{2, 1}, {3, 3}, {3, 3}, {3, 3}}, {{4, 2}, {4, 2}}}));
    CHECK(d.chains ==
          std::vector<V>({{{1, 1}, {2, 1}, {4, 2}, {4, 2}}, {{3, 3}, {3, 3}, {3, 3}}, {{1, 5}, {1, 5}, {2, 5}}}));
    CHECK(d.antichains ==
          std::vector<V>({{{1, 1}},
                          {{1, 5}, {2, 1}},
                          {{1, 5}, {3, 3}, {4, 2}},
                          {{2, 5}, {3, 3}, {4, 2}},
                          {{3, 3}}}));
}

TEST_CASE("rsk_gl edge cases") {
    CHECK(rsk_gl({Tableau{}, Tableau{}}, 2, 3).entry_sum() == 0);
    CHECK(rsk_gl_inverse(NatMatrix(2, 3)).recording.empty());
    NatMatrix unit = rsk_gl({Tableau({{2}}), Tableau({{3}})}, 3, 4);
    CHECK(unit.at(2, 3) == 1);
    CHECK(unit.entry_sum() == 1);
    CHECK_THROWS_AS(rsk_gl({Tableau({{1}}), Tableau({{1, 1}})}, 2, 2), std::domain_error);
}

TEST_CASE("rsk_gl round trip, degree/width/height laws") {
    auto gl = ClassicalPoset::gl(3, 3);
    for_each_matrix(3, 3, NatMatrix::Kind::Generic, 4, [&](const NatMatrix& m) {
        TableauPair pair = rsk_gl_inverse(m);
        Partition mu = pair.recording.shape();
        REQUIRE(mu == pair.insertion.shape());
        if (!pair.recording.empty()) {
            REQUIRE(pair.recording.is_ssyt(3));
            REQUIRE(pair.insertion.is_ssyt(3));
        }
        CHECK(m.entry_sum() == mu.size());
        auto [w, h] = multiset_width_height(gl, m.multisupport());
        CHECK(w == mu.length());
        CHECK(h == (mu.parts.empty() ? 0 : mu.parts[0]));
        CHECK(rsk_gl(pair, 3, 3) == m);
    });
}

TEST_CASE("transpose symmetry of rsk_gl") {
    for_each_matrix(2, 3, NatMatrix::Kind::Generic, 4, [&](const NatMatrix& m) {
        TableauPair pair = rsk_gl_inverse(m);
        NatMatrix mt(3, 2);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 3; ++j) mt.at(j, i) = m.at(i, j);
        TableauPair swapped{pair.insertion, pair.recording};
        CHECK(rsk_gl(swapped, 3, 2) == mt);
    });
}

TEST_CASE("Lemma first-column law for the GL peel") {
    for_each_matrix(3, 3, NatMatrix::Kind::Generic, 5, [&](const NatMatrix& m) {
        if (m.entry_sum() == 0) return;
        TableauPair pair = rsk_gl_inverse(m);
        auto d = peel(m, PosetKind::GL);
        auto fc_t = pair.recording.first_column();
        auto fc_u = pair.insertion.first_column();
        REQUIRE(fc_t.size() == d.chains_star.size());
        REQUIRE(fc_u.size() == d.chains.size());
        for (size_t i = 0; i < d.chains_star.size(); ++i) {
            int mn = d.chains_star[i].front().i;
            for (auto c : d.chains_star[i]) mn = std::min(mn, c.i);
            CHECK(fc_t[i] == mn);
        }
        for (size_t i = 0; i < d.chains.size(); ++i) {
            int mn = d.chains[i].front().j;
            for (auto c : d.chains[i]) mn = std::min(mn, c.j);
            CHECK(fc_u[i] == mn);
        }
    });
}

TEST_CASE("peel structure: maximal pieces and nested ideals") {
    auto check_structure = [](const NatMatrix& m, PosetKind kind) {
        ClassicalPoset poset = kind == PosetKind::GL ? ClassicalPoset::gl(m.rows, m.cols)
                           : kind == PosetKind::O   ? ClassicalPoset::o(m.rows)
                                                    : ClassicalPoset::sp(m.rows);
        auto d = peel(m, kind);
        // chains are chains; antichains are antichains
        auto pieces = d.chains;
        pieces.insert(pieces.end(), d.chains_star.begin(), d.chains_star.end());
        for (auto& ch : pieces)
            for (auto a : ch)
                for (auto b : ch) CHECK((poset.leq(a, b) || poset.leq(b, a)));
        for (auto& ac : d.antichains)
            for (auto a : ac)
                for (auto b : ac)
                    if (a != b) CHECK((!poset.leq(a, b) && !poset.leq(b, a)));
        // nested upper order ideals of successive antichains
        for (size_t i = 0; i + 1 < d.antichains.size(); ++i) {
            for (auto b : d.antichains[i + 1]) {
                bool covered = false;
                for (auto a : d.antichains[i])
                    if (poset.leq(a, b)) covered = true;
                CHECK(covered);
            }
        }
        // multiset union of each family equals msupp
        auto ms = m.multisupport();
        std::sort(ms.begin(), ms.end());
        auto flat = [&](const std::vector<std::vector<Cell>>& v) {
            std::vector<Cell> f;
            for (auto& piece : v) f.insert(f.end(), piece.begin(), piece.end());
            std::sort(f.begin(), f.end());
            return f;
        };
        CHECK(flat(d.chains) == ms);
        CHECK(flat(d.antichains) == ms);
        if (kind != PosetKind::O) CHECK(flat(d.chains_star) == ms);
    };
    for_each_matrix(3, 3, NatMatrix::Kind::Generic, 4,
                    [&](const NatMatrix& m) { check_structure(m, PosetKind::GL); });
    for_each_matrix(3, 3, NatMatrix::Kind::UpperTriangular, 4, [&](const NatMatrix& m) {
        NatMatrix u = m;
        u.kind = NatMatrix::Kind::UpperTriangular;
        check_structure(u, PosetKind::O);
    });
    for_each_matrix(4, 4, NatMatrix::Kind::StrictlyUpperTriangular, 4, [&](const NatMatrix& m) {
        NatMatrix u = m;
        u.kind = NatMatrix::Kind::StrictlyUpperTriangular;
        check_structure(u, PosetKind::Sp);
    });
}

TEST_CASE("peel rejects support outside the poset") {
    NatMatrix m(3, 3);
    m.at(2, 1) = 1;
    CHECK_THROWS_AS(peel(m, PosetKind::O), std::domain_error);
    CHECK_THROWS_AS(peel(m, PosetKind::Sp), std::domain_error);
}

TEST_CASE("rsk_o: fixtures and laws") {
    SUBCASE("empty and single row") {
        CHECK(rsk_o(Tableau{}, 3).entry_sum() == 0);
        NatMatrix e22 = rsk_o(Tableau({{2, 2}}), 3);
        CHECK(e22.at(2, 2) == 1);
        CHECK(e22.entry_sum() == 1);
        NatMatrix e13 = rsk_o(Tableau({{1, 3}}), 3);
        CHECK(e13.at(1, 3) == 1);
    }
    SUBCASE("odd rows rejected") {
        CHECK_THROWS_AS(rsk_o(Tableau({{1, 2, 2}}), 3), std::domain_error);
    }
    SUBCASE("round trip and laws, exhaustive") {
        auto o3 = ClassicalPoset::o(3);
        std::set<std::vector<std::vector<int>>> images;
        int count = 0;
        for_each_matrix(3, 3, NatMatrix::Kind::UpperTriangular, 4, [&](const NatMatrix& m0) {
            NatMatrix m = m0;
            m.kind = NatMatrix::Kind::UpperTriangular;
            Tableau t = rsk_o_inverse(m);
            if (!t.empty()) REQUIRE(t.is_ssyt(3));
            Partition mu = t.shape();
            REQUIRE(mu.rows_all_even());
            CHECK(mu.size() == 2 * m.entry_sum());
            if (m.entry_sum()) {
                auto [w, h] = multiset_width_height(o3, m.multisupport());
                CHECK(w == mu.length());
                CHECK(2 * h == mu.parts[0]);
                // first-column law against the O peel
                auto d = peel(m, PosetKind::O);
                auto fc = t.first_column();
                REQUIRE(fc.size() == d.chains.size());
                for (size_t i = 0; i < d.chains.size(); ++i) {
                    int mn = d.chains[i].front().i;
                    for (auto c : d.chains[i]) mn = std::min(mn, c.i);
                    CHECK(fc[i] == mn);
                }
            }
            CHECK(rsk_o(t, 3) == m);
            CHECK(images.insert(t.rows).second);  // injective
            ++count;
        });
        // surjective onto even-row SSYT with at most 8 boxes
        int tabs = 0;
        for (auto& mu : partitions_in_box(3, 8)) {
            if (mu.size() > 8 || !mu.rows_all_even()) continue;
            tabs += static_cast<int>(ssyt_count(mu, 3));
        }
        CHECK(count == tabs);
    }
}

TEST_CASE("twin_rsk trace law") {
    CHECK(twin_rsk(Tableau({{2}}), 3).at(2, 2) == 1);
    for (auto shape : {Partition({2, 1}), Partition({2, 2}), Partition({3, 1})}) {
        for (auto& t : ssyt_enumerate(shape, 3)) {
            NatMatrix m = twin_rsk(t, 3);
            int trace = 0;
            for (int i = 1; i <= 3; ++i) trace += m.at(i, i);
            int odd_cols = 0;
            for (int c : t.shape().conjugate().parts) odd_cols += c % 2;
            CHECK(trace == odd_cols);
        }
    }
}

TEST_CASE("rsk_sp: fixtures and laws") {
    SUBCASE("column fixture") {
        NatMatrix m = rsk_sp(Tableau({{1}, {3}}), 4);
        CHECK(m.at(1, 3) == 1);
        CHECK(m.entry_sum() == 1);
        CHECK_THROWS_AS(rsk_sp(Tableau({{1, 2}, {2, 3}, {3, 4}}), 4), std::domain_error);
    }
    SUBCASE("round trip and laws, exhaustive") {
        auto sp4 = ClassicalPoset::sp(4);
        int count = 0;
        for_each_matrix(4, 4, NatMatrix::Kind::StrictlyUpperTriangular, 4, [&](const NatMatrix& m0) {
            NatMatrix m = m0;
            m.kind = NatMatrix::Kind::StrictlyUpperTriangular;
            Tableau t = rsk_sp_inverse(m);
            if (!t.empty()) REQUIRE(t.is_ssyt(4));
            Partition mu = t.shape();
            REQUIRE(mu.columns_all_even());
            CHECK(mu.size() == 2 * m.entry_sum());
            if (m.entry_sum()) {
                auto [w, h] = multiset_width_height(sp4, m.multisupport());
                CHECK(2 * w == mu.length());
                CHECK(h == mu.parts[0]);
            }
            CHECK(rsk_sp(t, 4) == m);
            ++count;
        });
        int tabs = 0;
        for (auto& mu : partitions_in_box(4, 8)) {
            if (mu.size() > 8 || !mu.columns_all_even()) continue;
            tabs += static_cast<int>(ssyt_count(mu, 4));
        }
        CHECK(count == tabs);
    }
    SUBCASE("twin trace for shape (2,1)") {
        for (auto& t : ssyt_enumerate(Partition({2, 1}), 3)) {
            NatMatrix m = twin_rsk(t, 3);
            int trace = 0;
            for (int i = 1; i <= 3; ++i) trace += m.at(i, i);
            CHECK(trace == 1);
        }
    }
}

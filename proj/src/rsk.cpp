#include "stanley/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace stanley {

namespace {

// Row-insert x (bump leftmost entry > x); returns the row where a box was added.
int row_insert(std::vector<std::vector<int>>& tab, int x) {
    size_t r = 0;
    while (true) {
        if (r == tab.size()) {
            tab.push_back({x});
            return static_cast<int>(r);
        }
        auto& row = tab[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return static_cast<int>(r);
        }
        std::swap(*it, x);
        ++r;
    }
}

// Reverse of row_insert from a box at the end of row r; returns the ejected value.
int inverse_bump(std::vector<std::vector<int>>& tab, int r) {
    int x = tab[r].back();
    tab[r].pop_back();
    if (tab[r].empty()) tab.pop_back();
    for (int rr = r - 1; rr >= 0; --rr) {
        auto& row = tab[rr];
        // rightmost entry strictly less than x
        auto it = std::lower_bound(row.begin(), row.end(), x);
        if (it == row.begin()) throw std::domain_error("inverse bump failed");
        --it;
        std::swap(*it, x);
    }
    return x;
}

// Dual row insertion (bump leftmost entry >= x); builds a row-strict tableau.
int dual_row_insert(std::vector<std::vector<int>>& tab, int x) {
    size_t r = 0;
    while (true) {
        if (r == tab.size()) {
            tab.push_back({x});
            return static_cast<int>(r);
        }
        auto& row = tab[r];
        auto it = std::lower_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return static_cast<int>(r);
        }
        std::swap(*it, x);
        ++r;
    }
}

// Reverse of dual_row_insert from the box at the end of row r.
int dual_inverse_bump(std::vector<std::vector<int>>& tab, int r) {
    int x = tab[r].back();
    tab[r].pop_back();
    if (tab[r].empty()) tab.pop_back();
    for (int rr = r - 1; rr >= 0; --rr) {
        auto& row = tab[rr];
        // rightmost entry <= x
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.begin()) throw std::domain_error("inverse bump failed");
        --it;
        std::swap(*it, x);
    }
    return x;
}

}  // namespace

TableauPair rsk_gl_inverse(const NatMatrix& m) {
    std::vector<std::vector<int>> rec, ins;
    for (int i = 1; i <= m.rows; ++i)
        for (int j = 1; j <= m.cols; ++j)
            for (int c = 0; c < m.at(i, j); ++c) {
                int r = row_insert(ins, j);
                if (r == static_cast<int>(rec.size())) rec.push_back({});
                rec[r].push_back(i);
            }
    return {Tableau(rec), Tableau(ins)};
}

NatMatrix rsk_gl(const TableauPair& pair, int p, int q) {
    if (pair.recording.shape() != pair.insertion.shape())
        throw std::domain_error("tableau pair with mismatched shapes");
    if (!pair.recording.empty() &&
        (!pair.recording.is_ssyt(p) || !pair.insertion.is_ssyt(q)))
        throw std::domain_error("not a semistandard pair for the given alphabets");
    auto rec = pair.recording.rows;
    auto ins = pair.insertion.rows;
    NatMatrix m(p, q);
    std::vector<std::pair<int, int>> pairs;
    while (!rec.empty()) {
        // largest recording entry; among ties, the rightmost box was placed last
        int br = -1, bc = -1, bv = -1;
        for (size_t r = 0; r < rec.size(); ++r) {
            int c = static_cast<int>(rec[r].size()) - 1;
            int v = rec[r][c];
            if (v > bv || (v == bv && c > bc)) {
                bv = v;
                br = static_cast<int>(r);
                bc = c;
            }
        }
        rec[br].pop_back();
        if (rec[br].empty()) rec.erase(rec.begin() + br);
        int j = inverse_bump(ins, br);
        pairs.emplace_back(bv, j);
    }
    for (auto [i, j] : pairs) m.at(i, j)++;
    return m;
}

NatMatrix rsk_o(const Tableau& t, int n) {
    if (!t.empty() && !t.is_ssyt(n)) throw std::domain_error("not an SSYT");
    if (!t.shape().rows_all_even()) throw std::domain_error("rsk_o needs even row lengths");
    // P := t transposed is the row-strict (dual) tableau. On the symmetrized
    // matrix the recording tableau of the dual insertion coincides with the
    // final P, so un-insertion starts from Q = P and peels both: the last letter
    // has the largest recording entry, in the lowest row among ties.
    auto P = t.transpose().rows;
    auto Q = P;
    std::vector<std::pair<int, int>> letters;
    while (!Q.empty()) {
        int bi = -1, br = -1;
        for (size_t r = 0; r < Q.size(); ++r) {
            int v = Q[r].back();
            if (v > bi || (v == bi && static_cast<int>(r) > br)) {
                bi = v;
                br = static_cast<int>(r);
            }
        }
        Q[br].pop_back();
        if (Q[br].empty()) Q.erase(Q.begin() + br);
        int j = dual_inverse_bump(P, br);
        letters.emplace_back(bi, j);
    }
    // letters came out in reverse; validate ordering (i asc, j desc within i)
    std::reverse(letters.begin(), letters.end());
    for (size_t k = 0; k + 1 < letters.size(); ++k) {
        auto [i1, j1] = letters[k];
        auto [i2, j2] = letters[k + 1];
        if (i1 > i2 || (i1 == i2 && j1 < j2)) throw std::domain_error("rsk_o inverse failed");
    }
    NatMatrix N(n, n);
    for (auto [i, j] : letters) N.at(i, j)++;
    NatMatrix m(n, n, NatMatrix::Kind::UpperTriangular);
    for (int i = 1; i <= n; ++i) {
        if (N.at(i, i) % 2) throw std::domain_error("rsk_o inverse failed (odd diagonal)");
        m.at(i, i) = N.at(i, i) / 2;
        for (int j = i + 1; j <= n; ++j) {
            if (N.at(i, j) != N.at(j, i)) throw std::domain_error("rsk_o inverse failed");
            m.at(i, j) = N.at(i, j);
        }
    }
    return m;
}

Tableau rsk_o_inverse(const NatMatrix& m) {
    if (m.kind != NatMatrix::Kind::UpperTriangular || !m.check_kind())
        throw std::domain_error("rsk_o_inverse needs an upper-triangular matrix");
    int n = m.rows;
    std::vector<std::vector<int>> P;  // row-strict dual tableau
    for (int i = 1; i <= n; ++i)
        for (int j = n; j >= 1; --j) {
            int cnt = 0;
            if (i < j)
                cnt = m.at(i, j);
            else if (i == j)
                cnt = 2 * m.at(i, i);
            else
                cnt = m.at(j, i);
            for (int c = 0; c < cnt; ++c) dual_row_insert(P, j);
        }
    return Tableau(P).transpose();
}

NatMatrix twin_rsk(const Tableau& t, int n) {
    if (!t.empty() && !t.is_ssyt(n)) throw std::domain_error("not an SSYT");
    NatMatrix full = rsk_gl({t, t}, n, n);
    NatMatrix m(n, n, NatMatrix::Kind::UpperTriangular);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) m.at(i, j) = full.at(i, j);
    return m;
}

NatMatrix rsk_sp(const Tableau& t, int n) {
    if (!t.shape().columns_all_even()) throw std::domain_error("rsk_sp needs even column lengths");
    NatMatrix m = twin_rsk(t, n);
    NatMatrix out(n, n, NatMatrix::Kind::StrictlyUpperTriangular);
    for (int i = 1; i <= n; ++i) {
        if (m.at(i, i) != 0) throw std::domain_error("even-column tableau produced a trace");
        for (int j = i + 1; j <= n; ++j) out.at(i, j) = m.at(i, j);
    }
    return out;
}

Tableau rsk_sp_inverse(const NatMatrix& m) {
    if (m.kind != NatMatrix::Kind::StrictlyUpperTriangular || !m.check_kind())
        throw std::domain_error("rsk_sp_inverse needs a strictly upper-triangular matrix");
    int n = m.rows;
    NatMatrix sym(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            sym.at(i, j) = m.at(i, j);
            sym.at(j, i) = m.at(i, j);
        }
    TableauPair pair = rsk_gl_inverse(sym);
    if (!(pair.recording == pair.insertion)) throw std::domain_error("not a twin matrix");
    return pair.insertion;
}

namespace {

// border membership tests for one peeling pass over the distinct support
bool in_border(PosetKind kind, bool star, Cell c, const std::vector<Cell>& supp) {
    for (auto o : supp) {
        if (o == c) continue;
        bool strictly_before;
        if (kind == PosetKind::O)
            strictly_before = o.i < c.i && o.j < c.j;  // strictly northwest
        else if (star)
            strictly_before = o.i < c.i && o.j > c.j;  // strictly northeast
        else
            strictly_before = o.i > c.i && o.j < c.j;  // strictly southwest
        if (strictly_before) return false;
    }
    return true;
}

std::vector<std::vector<Cell>> peel_chains(const NatMatrix& m, PosetKind kind, bool star) {
    std::vector<std::pair<Cell, int>> mult;
    for (auto c : m.support()) mult.emplace_back(c, m.at(c.i, c.j));
    std::vector<std::vector<Cell>> out;
    while (!mult.empty()) {
        std::vector<Cell> supp;
        for (auto& [c, k] : mult) supp.push_back(c);
        std::vector<Cell> piece;
        std::vector<std::pair<Cell, int>> rest;
        for (auto& [c, k] : mult) {
            if (in_border(kind, star, c, supp))
                for (int x = 0; x < k; ++x) piece.push_back(c);
            else
                rest.emplace_back(c, k);
        }
        out.push_back(std::move(piece));
        mult = std::move(rest);
    }
    return out;
}

std::vector<std::vector<Cell>> peel_antichains(const NatMatrix& m, PosetKind kind) {
    ClassicalPoset poset = kind == PosetKind::GL ? ClassicalPoset::gl(m.rows, m.cols)
                       : kind == PosetKind::O   ? ClassicalPoset::o(m.rows)
                                                : ClassicalPoset::sp(m.rows);
    std::vector<std::pair<Cell, int>> mult;
    for (auto c : m.support()) mult.emplace_back(c, m.at(c.i, c.j));
    std::vector<std::vector<Cell>> out;
    while (!mult.empty()) {
        std::vector<Cell> supp;
        for (auto& [c, k] : mult) supp.push_back(c);
        std::vector<Cell> piece;
        std::vector<std::pair<Cell, int>> rest;
        for (auto& [c, k] : mult) {
            bool minimal = true;
            for (auto o : supp)
                if (o != c && poset.leq(o, c)) minimal = false;
            if (minimal) {
                piece.push_back(c);
                if (k > 1) rest.emplace_back(c, k - 1);
            } else {
                rest.emplace_back(c, k);
            }
        }
        out.push_back(std::move(piece));
        mult = std::move(rest);
    }
    return out;
}

}  // namespace

PeelDecomposition peel(const NatMatrix& m, PosetKind kind) {
    ClassicalPoset poset = kind == PosetKind::GL ? ClassicalPoset::gl(m.rows, m.cols)
                       : kind == PosetKind::O   ? ClassicalPoset::o(m.rows)
                                                : ClassicalPoset::sp(m.rows);
    for (auto c : m.support())
        if (!poset.contains(c)) throw std::domain_error("support outside poset");
    PeelDecomposition d;
    if (kind == PosetKind::O) {
        d.chains = peel_chains(m, kind, false);
    } else {
        d.chains_star = peel_chains(m, kind, true);
        d.chains = peel_chains(m, kind, false);
    }
    d.antichains = peel_antichains(m, kind);
    return d;
}

}

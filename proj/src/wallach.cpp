#include "stanley/wallach.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace stanley {

bool RootPoset::contains(Cell c) const {
    return std::find(cells.begin(), cells.end(), c) != cells.end();
}

bool RootPoset::has_edge(Cell a, Cell b) const {
    for (auto& [u, v] : edges)
        if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
}

WallachPair wallach_pair_from_string(const std::string& s) {
    if (s == "Dn" || s == "dn" || s == "D") return WallachPair::Dn;
    if (s == "E6" || s == "e6") return WallachPair::E6;
    if (s == "E7" || s == "e7") return WallachPair::E7;
    throw std::domain_error("unknown pair: " + s);
}

namespace {

void add_row(RootPoset& poset, int y, int x0, int x1) {
    for (int x = x0; x <= x1; ++x) {
        if (!poset.contains({x, y})) poset.cells.push_back({x, y});
        if (x > x0) poset.edges.push_back({{x - 1, y}, {x, y}});
    }
}

void add_col(RootPoset& poset, int x, int y0, int y1) {  // y0 > y1, downward
    for (int y = y0; y >= y1; --y) {
        if (!poset.contains({x, y})) poset.cells.push_back({x, y});
        if (y < y0) poset.edges.push_back({{x, y + 1}, {x, y}});
    }
}

}  // namespace

RootPoset wallach_poset(WallachPair pair, int n) {
    RootPoset poset;
    switch (pair) {
        case WallachPair::Dn: {
            if (n < 4) throw std::domain_error("Dn needs n >= 4");
            poset.label = "Dn";
            // two rows of n-1 cells, glued at the two central verticals
            add_row(poset, 2, 1, n - 1);
            add_row(poset, 1, n - 2, 2 * n - 4);
            add_col(poset, n - 2, 2, 1);
            add_col(poset, n - 1, 2, 1);
            return poset;
        }
        case WallachPair::E6: {
            poset.label = "E6";
            add_row(poset, 4, 1, 5);
            add_row(poset, 3, 3, 5);
            add_row(poset, 2, 4, 6);
            add_row(poset, 1, 4, 8);
            add_col(poset, 3, 4, 3);
            add_col(poset, 4, 4, 1);
            add_col(poset, 5, 4, 1);
            add_col(poset, 6, 2, 1);
            return poset;
        }
        case WallachPair::E7: {
            poset.label = "E7";
            add_row(poset, 9, 1, 6);
            add_row(poset, 8, 4, 6);
            add_row(poset, 7, 5, 7);
            add_row(poset, 6, 5, 9);
            add_row(poset, 5, 5, 9);
            add_row(poset, 4, 8, 12);
            add_col(poset, 4, 9, 8);
            add_col(poset, 5, 9, 5);
            add_col(poset, 6, 9, 5);
            add_col(poset, 7, 7, 5);
            add_col(poset, 8, 6, 4);
            add_col(poset, 9, 6, 4);
            return poset;
        }
    }
    throw std::domain_error("unknown pair");
}

namespace {

// path order: (x,y) can come before (x',y') iff x <= x' and y >= y'
bool before(Cell a, Cell b) { return a.i <= b.i && a.j >= b.j; }

Cell poset_min(const RootPoset& p) {
    for (auto c : p.cells) {
        bool ok = true;
        for (auto o : p.cells)
            if (!(before(c, o))) ok = false;
        if (ok) return c;
    }
    throw std::logic_error("no minimum");
}

Cell poset_max(const RootPoset& p) {
    for (auto c : p.cells) {
        bool ok = true;
        for (auto o : p.cells)
            if (!(before(o, c))) ok = false;
        if (ok) return c;
    }
    throw std::logic_error("no maximum");
}

// maximal chains in the restriction of the poset to `allowed`, following cover
// edges, from a minimal element of the restriction to a maximal one
std::vector<std::vector<Cell>> maximal_chains(const RootPoset& p, const std::set<Cell>& allowed) {
    std::vector<std::vector<Cell>> out;
    auto step_targets = [&](Cell c) {
        std::vector<Cell> t;
        Cell east{c.i + 1, c.j}, south{c.i, c.j - 1};
        if (allowed.count(east) && p.has_edge(c, east)) t.push_back(east);
        if (allowed.count(south) && p.has_edge(c, south)) t.push_back(south);
        return t;
    };
    auto step_sources = [&](Cell c) {
        std::vector<Cell> t;
        Cell west{c.i - 1, c.j}, north{c.i, c.j + 1};
        if (allowed.count(west) && p.has_edge(west, c)) t.push_back(west);
        if (allowed.count(north) && p.has_edge(north, c)) t.push_back(north);
        return t;
    };
    std::vector<Cell> acc;
    std::function<void(Cell)> rec = [&](Cell c) {
        acc.push_back(c);
        auto nxt = step_targets(c);
        if (nxt.empty())
            out.push_back(acc);
        else
            for (auto t : nxt) rec(t);
        acc.pop_back();
    };
    for (auto c : allowed)
        if (step_sources(c).empty()) rec(c);
    return out;
}

// SE-turn cells that can be flipped to the northeast inside the poset.
std::vector<Cell> flip_corners(const RootPoset& p, const std::vector<Cell>& path) {
    std::vector<Cell> corners;
    std::set<Cell> s(path.begin(), path.end());
    for (auto c : path) {
        Cell north{c.i, c.j + 1}, east{c.i + 1, c.j}, flip{c.i + 1, c.j + 1};
        if (!s.count(north) || !s.count(east)) continue;
        if (!p.contains(flip)) continue;
        if (!p.has_edge(north, flip) || !p.has_edge(flip, east)) continue;
        corners.push_back(c);
    }
    return corners;
}

// Corners lie strictly between the forced segments of each path: the cells the
// path shares with every other facet at its start and end carry no corners.
std::vector<WallachFacet> attach_corners(const RootPoset& p,
                                         std::vector<std::vector<std::vector<Cell>>> families) {
    size_t k = families.empty() ? 0 : families.front().size();
    std::vector<size_t> prefix(k), suffix(k);
    for (size_t l = 0; l < k; ++l) {
        const auto& ref = families.front()[l];
        size_t pre = ref.size(), suf = ref.size();
        for (auto& fam : families) {
            const auto& path = fam[l];
            size_t a = 0;
            while (a < pre && a < path.size() && path[a] == ref[a]) ++a;
            pre = a;
            size_t b = 0;
            while (b < suf && b < path.size() && path[path.size() - 1 - b] == ref[ref.size() - 1 - b])
                ++b;
            suf = b;
        }
        prefix[l] = pre;
        suffix[l] = suf;
    }
    std::vector<WallachFacet> out;
    for (auto& fam : families) {
        std::vector<Cell> corners;
        for (size_t l = 0; l < k; ++l) {
            const auto& path = fam[l];
            for (auto c : flip_corners(p, path)) {
                size_t pos = std::find(path.begin(), path.end(), c) - path.begin();
                if (pos + 1 <= prefix[l]) continue;                 // inside the forced prefix
                if (pos >= path.size() - suffix[l]) continue;       // inside the forced suffix
                corners.push_back(c);
            }
        }
        std::sort(corners.begin(), corners.end());
        out.push_back({fam, corners});
    }
    return out;
}

}  // namespace

std::vector<WallachFacet> wallach_facets(WallachPair pair, int n, int k) {
    RootPoset p = wallach_poset(pair, n);
    std::set<Cell> all(p.cells.begin(), p.cells.end());
    std::vector<std::vector<std::vector<Cell>>> families;
    if (k == 1) {
        for (auto& chain : maximal_chains(p, all)) families.push_back({chain});
        return attach_corners(p, std::move(families));
    }
    if (k == 2 && pair == WallachPair::E7) {
        // families of two disjoint chains, maximal as width-2 subsets
        std::vector<std::vector<std::vector<Cell>>> candidates;
        for (auto& c1 : maximal_chains(p, all)) {
            std::set<Cell> rest = all;
            for (auto c : c1) rest.erase(c);
            for (auto& c2 : maximal_chains(p, rest)) candidates.push_back({c1, c2});
        }
        // keep the set-maximal ones, dedupe by cell set
        std::set<std::set<Cell>> seen;
        std::vector<std::pair<std::set<Cell>, std::vector<std::vector<Cell>>>> sets;
        for (auto& cand : candidates) {
            std::set<Cell> cs;
            for (auto& path : cand)
                for (auto c : path) cs.insert(c);
            sets.push_back({cs, cand});
        }
        for (auto& [cs, cand] : sets) {
            bool maximal = true;
            for (auto& [cs2, cand2] : sets)
                if (cs != cs2 && std::includes(cs2.begin(), cs2.end(), cs.begin(), cs.end()))
                    maximal = false;
            if (!maximal || seen.count(cs)) continue;
            seen.insert(cs);
            families.push_back(cand);
        }
        return attach_corners(p, std::move(families));
    }
    throw std::domain_error("unsupported (pair, k)");
}

RationalSeries wallach_series(WallachPair pair, int n, int k) {
    bool supported = (pair == WallachPair::Dn && k == 1) || (pair == WallachPair::E6 && k == 1) ||
                     (pair == WallachPair::E7 && (k == 1 || k == 2));
    if (!supported) throw std::domain_error("unsupported (pair, k)");
    auto facets = wallach_facets(pair, n, k);
    int size = -1;
    IntPolynomial num;
    for (auto& f : facets) {
        int cells = 0;
        for (auto& path : f.paths) cells += static_cast<int>(path.size());
        if (size < 0) size = cells;
        if (cells != size) throw std::logic_error("facet sizes differ");
        num += IntPolynomial::monomial(static_cast<int>(f.corners.size()));
    }
    return RationalSeries::term(std::move(num), 1, size);
}

FinitePoset FinitePoset::from_classical(const ClassicalPoset& p) {
    auto cells = p.cells();
    FinitePoset f;
    f.size = static_cast<int>(cells.size());
    f.leq.assign(f.size, std::vector<bool>(f.size, false));
    for (int a = 0; a < f.size; ++a)
        for (int b = 0; b < f.size; ++b) f.leq[a][b] = p.leq(cells[a], cells[b]);
    return f;
}

std::vector<std::pair<int, int>> FinitePoset::cover_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            if (a == b || !leq[a][b]) continue;
            bool cover = true;
            for (int c = 0; c < size && cover; ++c)
                if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
            if (cover) out.push_back({a, b});
        }
    return out;
}

namespace {

bool graph_isomorphic(int n, const std::vector<std::vector<bool>>& A,
                      const std::vector<std::vector<bool>>& B) {
    std::vector<int> da(n, 0), db(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            da[i] += A[i][j];
            db[i] += B[i][j];
        }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v] || da[i] != db[v]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (A[i][j] != B[v][perm[j]] || A[j][i] != B[perm[j]][v]) ok = false;
            if (!ok) continue;
            perm[i] = v;
            used[v] = true;
            if (rec(i + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

bool poset_isomorphic(const FinitePoset& a, const FinitePoset& b) {
    if (a.size != b.size) return false;
    int n = a.size;
    std::vector<std::vector<bool>> A(n, std::vector<bool>(n, false)), B = A;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            A[i][j] = i != j && a.leq[i][j];
            B[i][j] = i != j && b.leq[i][j];
        }
    return graph_isomorphic(n, A, B);  // directed adjacency compared entrywise
}

bool covering_graphs_isomorphic(const FinitePoset& a, const FinitePoset& b) {
    if (a.size != b.size) return false;
    int n = a.size;
    std::vector<std::vector<bool>> A(n, std::vector<bool>(n, false)), B = A;
    for (auto [u, v] : a.cover_edges()) A[u][v] = A[v][u] = true;
    for (auto [u, v] : b.cover_edges()) B[u][v] = B[v][u] = true;
    return graph_isomorphic(n, A, B);
}

ClassicalPoset corner_poset_reduced(const ClassicalPoset& poset, int k) {
    switch (poset.kind) {
        case PosetKind::GL: return ClassicalPoset::gl(std::max(poset.p - k, 0), std::max(poset.q - k, 0));
        case PosetKind::O: return ClassicalPoset::sp(std::max(poset.n() - k + 1, 0));
        case PosetKind::Sp: return ClassicalPoset::o(std::max(poset.n() - 2 * k - 1, 0));
    }
    throw std::domain_error("unknown poset kind");
}

FinitePoset corner_poset_classical(const ClassicalPoset& poset, int k) {
    // region of the innermost path, order rotated 90 degrees
    std::vector<Cell> region;
    bool rotated_is_componentwise = false;
    switch (poset.kind) {
        case PosetKind::GL:
            for (int i = k + 1; i <= poset.p; ++i)
                for (int j = 1; j <= poset.q - k; ++j) region.push_back({i, j});
            rotated_is_componentwise = false;  // (i<=i', j>=j')
            break;
        case PosetKind::O:
            for (int i = k + 1; i <= poset.n(); ++i)
                for (int j = i; j <= poset.n(); ++j) region.push_back({i, j});
            rotated_is_componentwise = true;  // (i<=i', j<=j')
            break;
        case PosetKind::Sp:
            for (int i = k + 1; i < poset.n() - k; ++i)
                for (int j = i + 1; j <= poset.n() - k; ++j) region.push_back({i, j});
            rotated_is_componentwise = false;  // (i<=i', j>=j')
            break;
    }
    FinitePoset f;
    f.size = static_cast<int>(region.size());
    f.leq.assign(f.size, std::vector<bool>(f.size, false));
    for (int a = 0; a < f.size; ++a)
        for (int b = 0; b < f.size; ++b) {
            Cell x = region[a], y = region[b];
            f.leq[a][b] = rotated_is_componentwise ? (x.i <= y.i && x.j <= y.j)
                                                   : (x.i <= y.i && x.j >= y.j);
        }
    return f;
}

FinitePoset corner_poset_wallach(WallachPair pair, int n, int k) {
    auto facets = wallach_facets(pair, n, k);
    std::set<Cell> cells;
    for (auto& f : facets) {
        auto& inner = f.paths.back();
        std::set<Cell> s(inner.begin(), inner.end());
        for (auto c : f.corners)
            if (s.count(c)) cells.insert(c);
    }
    std::vector<Cell> v(cells.begin(), cells.end());
    FinitePoset f;
    f.size = static_cast<int>(v.size());
    f.leq.assign(f.size, std::vector<bool>(f.size, false));
    for (int a = 0; a < f.size; ++a)
        for (int b = 0; b < f.size; ++b) f.leq[a][b] = before(v[a], v[b]);
    return f;
}

}

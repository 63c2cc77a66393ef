#include "stanley/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace stanley {

bool LatticePath::contains(Cell c) const {
    return std::find(cells.begin(), cells.end(), c) != cells.end();
}

namespace {

// Monotone path enumeration, deterministic order: at each step the east (GL/Sp)
// or south (O) move is tried first, giving lexicographic step strings.
void paths_se(const ClassicalPoset& poset, Cell from, Cell to, std::set<Cell>& used,
              std::vector<Cell>& acc, const std::function<void(const std::vector<Cell>&)>& emit) {
    if (from == to) {
        emit(acc);
        return;
    }
    Cell east{from.i, from.j + 1}, south{from.i + 1, from.j};
    if (from.j < to.j && poset.contains(east) && !used.count(east)) {
        acc.push_back(east);
        paths_se(poset, east, to, used, acc, emit);
        acc.pop_back();
    }
    if (from.i < to.i && poset.contains(south) && !used.count(south)) {
        acc.push_back(south);
        paths_se(poset, south, to, used, acc, emit);
        acc.pop_back();
    }
}

// O-paths step south or west and end on the diagonal (no further moves).
void paths_o(const ClassicalPoset& poset, Cell from, std::set<Cell>& used,
             std::vector<Cell>& acc, const std::function<void(const std::vector<Cell>&)>& emit) {
    Cell south{from.i + 1, from.j}, west{from.i, from.j - 1};
    bool cs = poset.contains(south) && !used.count(south);
    bool cw = poset.contains(west) && !used.count(west);
    if (!poset.contains(south) && !poset.contains(west)) {
        emit(acc);  // reached the diagonal
        return;
    }
    if (cs) {
        acc.push_back(south);
        paths_o(poset, south, used, acc, emit);
        acc.pop_back();
    }
    if (cw) {
        acc.push_back(west);
        paths_o(poset, west, used, acc, emit);
        acc.pop_back();
    }
}

// Non-intersecting family enumeration over per-path generators.
template <typename PathGen>
void families(int k, PathGen&& gen_paths_for, std::vector<LatticePath>& acc, std::set<Cell>& used,
              const std::function<void(const std::vector<LatticePath>&)>& emit) {
    int l = static_cast<int>(acc.size());
    if (l == k) {
        emit(acc);
        return;
    }
    gen_paths_for(l, used, [&](const std::vector<Cell>& cells) {
        acc.push_back(LatticePath{cells});
        for (auto c : cells) used.insert(c);
        families(k, gen_paths_for, acc, used, emit);
        for (auto c : cells) used.erase(c);
        acc.pop_back();
    });
}

std::vector<Cell> corners_se(const LatticePath& p) {
    std::vector<Cell> out;
    std::set<Cell> s(p.cells.begin(), p.cells.end());
    for (auto c : p.cells)
        if (s.count({c.i - 1, c.j}) && s.count({c.i, c.j + 1})) out.push_back(c);
    return out;
}

std::vector<Cell> corners_rotated(const LatticePath& p) {
    std::vector<Cell> out;
    std::set<Cell> s(p.cells.begin(), p.cells.end());
    for (auto c : p.cells)
        if (s.count({c.i + 1, c.j}) && s.count({c.i, c.j - 1})) out.push_back(c);
    return out;
}

// O corner rule: SW-turn cells plus the diagonal endpoint when reached by a
// vertical step.
std::vector<Cell> corners_o(const LatticePath& p, bool include_diagonal) {
    std::vector<Cell> out;
    std::set<Cell> s(p.cells.begin(), p.cells.end());
    for (auto c : p.cells) {
        if (c.i == c.j) {
            if (include_diagonal && s.count({c.i - 1, c.j})) out.push_back(c);
        } else if (s.count({c.i - 1, c.j}) && s.count({c.i, c.j - 1})) {
            out.push_back(c);
        }
    }
    return out;
}

CornerSet collect_corners(const std::vector<LatticePath>& paths,
                          const std::function<std::vector<Cell>(const LatticePath&, int)>& per_path) {
    CornerSet cs;
    for (size_t l = 0; l < paths.size(); ++l) {
        auto v = per_path(paths[l], static_cast<int>(l));
        cs.cells.insert(cs.cells.end(), v.begin(), v.end());
    }
    std::sort(cs.cells.begin(), cs.cells.end());
    return cs;
}

}  // namespace

std::vector<FacetWithCorners> enumerate_gl_facets_from_rows(int p, int q, const Column& I) {
    int k = static_cast<int>(I.size());
    if (!column_valid(I, p)) throw std::domain_error("invalid start rows");
    ClassicalPoset poset = ClassicalPoset::gl(p, q);
    std::vector<FacetWithCorners> out;
    auto gen = [&](int l, std::set<Cell>& used, const std::function<void(const std::vector<Cell>&)>& emit) {
        Cell start{I[l], 1}, end{p, q - l};
        if (used.count(start)) return;
        std::vector<Cell> acc{start};
        paths_se(poset, start, end, used, acc, emit);
    };
    std::vector<LatticePath> acc;
    std::set<Cell> used;
    families(k, gen, acc, used, [&](const std::vector<LatticePath>& paths) {
        Facet f{paths, {}};
        out.push_back({f, collect_corners(paths, [](const LatticePath& pp, int) { return corners_se(pp); })});
    });
    return out;
}

std::vector<FacetWithCorners> enumerate_gl_facets_from_cols(int p, int q, const Column& J) {
    int k = static_cast<int>(J.size());
    if (!column_valid(J, q)) throw std::domain_error("invalid start columns");
    ClassicalPoset poset = ClassicalPoset::gl(p, q);
    std::vector<FacetWithCorners> out;
    auto gen = [&](int l, std::set<Cell>& used, const std::function<void(const std::vector<Cell>&)>& emit) {
        Cell start{1, J[l]}, end{p - l, q};
        if (used.count(start)) return;
        std::vector<Cell> acc{start};
        paths_se(poset, start, end, used, acc, emit);
    };
    std::vector<LatticePath> acc;
    std::set<Cell> used;
    families(k, gen, acc, used, [&](const std::vector<LatticePath>& paths) {
        Facet f{paths, {}};
        out.push_back(
            {f, collect_corners(paths, [](const LatticePath& pp, int) { return corners_rotated(pp); })});
    });
    return out;
}

std::vector<FacetWithCorners> enumerate_facets_from_starts(int n, const Column& I) {
    int k = static_cast<int>(I.size());
    if (!column_valid(I, n)) throw std::domain_error("invalid start rows");
    ClassicalPoset poset = ClassicalPoset::o(n);
    std::vector<FacetWithCorners> out;
    auto gen = [&](int l, std::set<Cell>& used, const std::function<void(const std::vector<Cell>&)>& emit) {
        Cell start{I[l], n};
        if (used.count(start)) return;
        std::vector<Cell> acc{start};
        paths_o(poset, start, used, acc, emit);
    };
    std::vector<LatticePath> acc;
    std::set<Cell> used;
    families(k, gen, acc, used, [&](const std::vector<LatticePath>& paths) {
        Facet f{paths, {}};
        out.push_back(
            {f, collect_corners(paths, [](const LatticePath& pp, int) { return corners_o(pp, true); })});
    });
    return out;
}

CornerSet sp_corners_with_shadows(const Facet& f, int n, const Column& I) {
    int k = static_cast<int>(I.size());
    std::set<Cell> shadow;
    for (int l = 1; l <= k; ++l) {
        for (int j = 1; j <= l - 1; ++j) {
            shadow.insert({j + 1, I[l - 1] - j});            // start (1, i_l)
            shadow.insert({n - 2 * l + 1 + j, n - j});       // endpoint (n-2l+1, n)
        }
    }
    CornerSet cs;
    for (auto& p : f.paths) {
        for (auto c : corners_se(p))
            if (!shadow.count(c)) cs.cells.push_back(c);
    }
    std::sort(cs.cells.begin(), cs.cells.end());
    return cs;
}

std::vector<FacetWithCorners> enumerate_sp_facets_from_starts(int n, const Column& I) {
    int k = static_cast<int>(I.size());
    if (!column_valid(I, n)) throw std::domain_error("invalid start columns");
    for (int l = 1; l <= k; ++l)
        if (I[l - 1] < 2 * l) throw std::domain_error("starts must dominate (2,4,...,2k)");
    ClassicalPoset poset = ClassicalPoset::sp(n);
    std::vector<FacetWithCorners> out;
    auto gen = [&](int l, std::set<Cell>& used, const std::function<void(const std::vector<Cell>&)>& emit) {
        Cell start{1, I[l]}, end{n - 2 * (l + 1) + 1, n};
        if (used.count(start)) return;
        std::vector<Cell> acc{start};
        paths_se(poset, start, end, used, acc, emit);
    };
    std::vector<LatticePath> acc;
    std::set<Cell> used;
    families(k, gen, acc, used, [&](const std::vector<LatticePath>& paths) {
        Facet f{paths, {}};
        out.push_back({f, sp_corners_with_shadows(f, n, I)});
    });
    return out;
}

std::vector<FacetWithCorners> enumerate_facets(const ClassicalPoset& poset, int k) {
    if (k == 0) return {{Facet{}, CornerSet{}}};
    switch (poset.kind) {
        case PosetKind::GL: {
            if (k < 0 || k > std::min(poset.p, poset.q)) throw std::domain_error("k out of range");
            Column I(k);
            for (int i = 0; i < k; ++i) I[i] = i + 1;
            return enumerate_gl_facets_from_rows(poset.p, poset.q, I);
        }
        case PosetKind::O: {
            if (k < 0 || k > poset.n()) throw std::domain_error("k out of range");
            Column I(k);
            for (int i = 0; i < k; ++i) I[i] = i + 1;
            return enumerate_facets_from_starts(poset.n(), I);
        }
        case PosetKind::Sp: {
            if (k < 0 || k > poset.n() / 2) throw std::domain_error("k out of range");
            Column I(k);
            for (int i = 0; i < k; ++i) I[i] = 2 * (i + 1);
            return enumerate_sp_facets_from_starts(poset.n(), I);
        }
    }
    throw std::domain_error("unknown poset kind");
}

std::vector<FacetWithCorners> enumerate_facets_varied_endpoints(int n, int k) {
    auto base = enumerate_facets(ClassicalPoset::o(n), k);
    for (auto& fc : base) {
        CornerSet filtered;
        for (auto c : fc.corners.cells)
            if (c.i != c.j) filtered.cells.push_back(c);
        fc.corners = filtered;
    }
    return base;
}

std::vector<FacetWithCorners> enumerate_painted_facets(int n, int k, int m) {
    if (m < 0 || m > k) throw std::domain_error("m out of range");
    auto base = enumerate_facets(ClassicalPoset::o(n), k);
    std::vector<FacetWithCorners> out;
    // choose m of the k paths; painted diagonal endpoints are not corners
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<int> pick(m);
    std::function<void(int, int)> choose = [&](int at, int start) {
        if (at == m) {
            for (auto& fc : base) {
                Facet f = fc.facet;
                f.painted.assign(pick.begin(), pick.begin() + m);
                std::set<Cell> painted_cells;
                for (int l : f.painted) painted_cells.insert(f.paths[l].cells.back());
                CornerSet cs;
                for (auto c : fc.corners.cells)
                    if (!painted_cells.count(c)) cs.cells.push_back(c);
                out.push_back({f, cs});
            }
            return;
        }
        for (int v = start; v < k; ++v) {
            pick[at] = v;
            choose(at + 1, v + 1);
        }
    };
    choose(0, 0);
    return out;
}

std::vector<ChainFacet> enumerate_chain_facets(const Column& I, int k, int p) {
    if (static_cast<int>(I.size()) != k || !column_valid(I, p))
        throw std::domain_error("invalid interpolation column");
    Column base(k);
    for (int i = 0; i < k; ++i) base[i] = i + 1;
    for (int i = 0; i < k; ++i)
        if (I[i] < base[i]) throw std::domain_error("interpolation below the base column");
    std::vector<ChainFacet> out;
    std::vector<Column> seq{base};
    std::vector<int> incs;
    std::function<void(const Column&)> rec = [&](const Column& cur) {
        if (cur == I) {
            int corners = 0;
            for (size_t x = 0; x + 1 < incs.size(); ++x)
                if (incs[x] < incs[x + 1]) ++corners;
            out.push_back({seq, corners});
            return;
        }
        for (int t = 0; t < k; ++t) {
            Column nxt = cur;
            nxt[t]++;
            if (nxt[t] > I[t]) continue;
            if (t + 1 < k && nxt[t] >= cur[t + 1]) continue;
            seq.push_back(nxt);
            incs.push_back(t);
            rec(nxt);
            incs.pop_back();
            seq.pop_back();
        }
    };
    rec(base);
    return out;
}

std::vector<SlHyperedgeFamily> enumerate_sl_hyperedge_facets(int p, int q, int k, SlSide side) {
    int bound = side == SlSide::Starred ? p : q;
    if (k > bound) throw std::domain_error("k too large for this side");
    std::vector<SlHyperedgeFamily> out;
    for (auto& I : columns_eq(bound, k)) {
        SlHyperedgeFamily fam;
        fam.interpolation = I;
        auto chains = enumerate_chain_facets(I, k, bound);
        fam.chain_size = static_cast<int>(chains.front().elements.size());
        for (auto& cf : chains) fam.chain_numerator += IntPolynomial::monomial(k * cf.corners);
        auto facets = side == SlSide::Starred ? enumerate_gl_facets_from_rows(p, q, I)
                                              : enumerate_gl_facets_from_cols(p, q, I);
        fam.path_size = 0;
        for (auto& pth : facets.front().facet.paths) fam.path_size += static_cast<int>(pth.cells.size());
        for (auto& fc : facets) fam.path_numerator += IntPolynomial::monomial(2 * fc.corners.size());
        out.push_back(std::move(fam));
    }
    return out;
}

}

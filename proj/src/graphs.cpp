#include "stanley/graphs.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "stanley/rsk.hpp"

namespace stanley {

OracleLimits OracleLimits::from_env() {
    OracleLimits lim;
    if (const char* s = std::getenv("SERIES_MAX_ENUM")) {
        int v = std::atoi(s);
        if (v > 0) {
            lim.max_vertices = v;
            lim.max_degree = v + 2;
        }
    }
    return lim;
}

namespace {

PosetKind poset_kind_for(Group g) {
    switch (g) {
        case Group::GL:
        case Group::SL: return PosetKind::GL;
        case Group::O:
        case Group::SO: return PosetKind::O;
        case Group::Sp: return PosetKind::Sp;
    }
    return PosetKind::GL;
}

}  // namespace

int diagram_width(const ArcDiagram& d) {
    if (d.arcs.entry_sum() == 0) return 0;
    PosetKind kind = poset_kind_for(d.group);
    auto decomp = peel(d.arcs, kind);
    if (kind == PosetKind::O) return static_cast<int>(decomp.chains.size());
    // strict nesting = antichain of the support in the componentwise order
    ClassicalPoset poset = kind == PosetKind::GL ? ClassicalPoset::gl(d.arcs.rows, d.arcs.cols)
                                                 : ClassicalPoset::sp(d.arcs.rows);
    return multiset_width_height(poset, d.arcs.multisupport()).first;
}

bool validate_sl_hyperedges(const ArcDiagram& d, SlSide side, int k) {
    if (d.hyperedges.empty()) return true;
    // chain condition
    for (size_t i = 0; i + 1 < d.hyperedges.size(); ++i)
        if (!column_leq(d.hyperedges[i + 1], d.hyperedges[i]) &&
            !column_leq(d.hyperedges[i], d.hyperedges[i + 1]))
            return false;
    Column top = d.hyperedges.front();
    for (auto& h : d.hyperedges)
        if (column_leq(top, h)) top = h;  // maximal element of the chain
    auto decomp = peel(d.arcs, PosetKind::GL);
    const auto& pieces = side == SlSide::Starred ? decomp.chains_star : decomp.chains;
    for (size_t i = 0; i < pieces.size() && i < top.size(); ++i) {
        int extreme;
        if (side == SlSide::Starred) {
            extreme = pieces[i].front().i;  // smallest row index in C*_i
            for (auto c : pieces[i]) extreme = std::min(extreme, c.i);
            if (top[i] > extreme) return false;  // dot must lie weakly outside
        } else {
            extreme = pieces[i].front().j;
            for (auto c : pieces[i]) extreme = std::min(extreme, c.j);
            if (top[i] > extreme) return false;  // weakly inside: left of all arc left-ends
        }
    }
    return true;
}

bool validate_so_painting(const ArcDiagram& d, int k) {
    if (d.painted.empty()) return true;
    if (static_cast<int>(d.painted.size()) != k) return false;
    auto decomp = peel(d.arcs, PosetKind::O);
    for (size_t i = 0; i < decomp.chains.size() && i < d.painted.size(); ++i) {
        int leftmost = decomp.chains[i].front().i;
        for (auto c : decomp.chains[i]) leftmost = std::min(leftmost, c.i);
        if (d.painted[i] > leftmost) return false;
    }
    return true;
}

namespace {

// enumerate all fillings of the cells with nonnegative entries of given total;
// cells past idx are zero on entry and exit
void fillings(const std::vector<Cell>& cells, int total, NatMatrix& m, size_t idx,
              const std::function<void()>& emit) {
    if (total == 0) {
        emit();
        return;
    }
    if (idx == cells.size()) return;
    auto c = cells[idx];
    for (int v = 0; v <= total; ++v) {
        m.at(c.i, c.j) = v;
        fillings(cells, total - v, m, idx + 1, emit);
    }
    m.at(c.i, c.j) = 0;
}

std::vector<Cell> arc_cells(Group g, int p, int q, int n) {
    std::vector<Cell> cells;
    switch (poset_kind_for(g)) {
        case PosetKind::GL:
            for (int i = 1; i <= p; ++i)
                for (int j = 1; j <= q; ++j) cells.push_back({i, j});
            break;
        case PosetKind::O:
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) cells.push_back({i, j});
            break;
        case PosetKind::Sp:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) cells.push_back({i, j});
            break;
    }
    return cells;
}

// weakly increasing chains of length m in the full-column poset C^n_k
void hyperedge_chains(int n, int k, int m, std::vector<Column>& acc,
                      const std::function<void(const std::vector<Column>&)>& emit) {
    if (static_cast<int>(acc.size()) == m) {
        emit(acc);
        return;
    }
    for (auto& c : columns_eq(n, k)) {
        if (!acc.empty() && !column_leq(acc.back(), c)) continue;
        acc.push_back(c);
        hyperedge_chains(n, k, m, acc, emit);
        acc.pop_back();
    }
}

int vertex_count(const GroupParams& params) {
    return poset_kind_for(params.group) == PosetKind::GL ? params.p + params.q : params.n;
}

}  // namespace

Bigint graded_dimension_by_graphs(const GroupParams& params, int d, const OracleLimits& lim) {
    if (vertex_count(params) > lim.max_vertices)
        throw std::length_error("oracle size limit exceeded (vertices)");
    if (d > lim.max_degree) throw std::length_error("oracle size limit exceeded (degree)");
    if (d < 0) return 0;
    if (d == 0) return 1;
    int k = params.k;
    Group g = params.group;
    auto cells = arc_cells(g, params.p, params.q, params.n);
    Bigint count = 0;

    auto count_plain = [&](int deg, int width_bound,
                           const std::function<bool(const NatMatrix&)>& extra) -> Bigint {
        if (deg % 2) return 0;
        Bigint c = 0;
        int rows = poset_kind_for(g) == PosetKind::GL ? params.p : params.n;
        int cols = poset_kind_for(g) == PosetKind::GL ? params.q : params.n;
        NatMatrix m(rows, cols);
        fillings(cells, deg / 2, m, 0, [&]() {
            ArcDiagram diag{g, m, {}, {}};
            if (diagram_width(diag) > width_bound) return;
            if (extra && !extra(m)) return;
            ++c;
        });
        return c;
    };

    switch (g) {
        case Group::GL:
        case Group::O:
        case Group::Sp: return count_plain(d, k, nullptr);
        case Group::SL: {
            count = count_plain(d, k, nullptr);
            for (auto side : {SlSide::Starred, SlSide::Unstarred}) {
                int nside = side == SlSide::Starred ? params.p : params.q;
                if (k > nside) continue;
                for (int m = 1; m * k <= d; ++m) {
                    int rem = d - m * k;
                    if (rem % 2) continue;
                    int rows = params.p, colsn = params.q;
                    NatMatrix mat(rows, colsn);
                    std::vector<Column> hacc;
                    hyperedge_chains(nside, k, m, hacc, [&](const std::vector<Column>& hs) {
                        fillings(cells, rem / 2, mat, 0, [&]() {
                            ArcDiagram diag{g, mat, hs, {}};
                            if (diagram_width(diag) > k) return;
                            if (!validate_sl_hyperedges(diag, side, k)) return;
                            ++count;
                        });
                    });
                }
            }
            return count;
        }
        case Group::SO: {
            count = count_plain(d, k, nullptr);
            int rem = d - k;
            if (rem >= 0 && rem % 2 == 0) {
                NatMatrix mat(params.n, params.n);
                for (auto& I : columns_eq(params.n, k)) {
                    fillings(cells, rem / 2, mat, 0, [&]() {
                        ArcDiagram diag{g, mat, {}, I};
                        if (diagram_width(diag) > k) return;
                        if (!validate_so_painting(diag, k)) return;
                        ++count;
                    });
                }
            }
            return count;
        }
    }
    throw std::domain_error("unknown group");
}

Bigint count_tensor_invariants_formula(const GroupParams& params) {
    int k = params.k;
    switch (params.group) {
        case Group::GL: {
            if (params.p != params.q) return 0;
            Bigint total = 0;
            for (auto& mu : partitions_in_box(k, params.p)) {
                if (mu.size() != params.p) continue;
                Bigint s = syt_count(mu);
                total += s * s;
            }
            return total;
        }
        case Group::SL: {
            int p = params.p, q = params.q;
            int lo = std::min(p, q), diff = std::abs(p - q);
            if (diff % k != 0) return 0;
            int m = diff / k;
            Bigint total = 0;
            for (auto& mu : partitions_in_box(k, lo)) {
                if (mu.size() != lo) continue;
                std::vector<int> padded(k, m);
                for (int i = 0; i < mu.length(); ++i) padded[i] += mu.parts[i];
                total += syt_count(Partition(padded)) * syt_count(mu);
            }
            return total;
        }
        case Group::O: {
            if (params.n % 2) return 0;
            Bigint total = 0;
            for (auto& mu : partitions_in_box(k, params.n))
                if (mu.size() == params.n && mu.rows_all_even()) total += syt_count(mu);
            return total;
        }
        case Group::SO: {
            Bigint total = 0;
            for (auto& mu : partitions_in_box(k, params.n)) {
                if (mu.size() != params.n) continue;
                bool evens = mu.rows_all_even();
                // the odd case carries the painted column, which has exactly k cells
                bool odds = mu.length() == k &&
                            std::all_of(mu.parts.begin(), mu.parts.end(),
                                        [](int x) { return x % 2 == 1; });
                if (evens || odds) total += syt_count(mu);
            }
            return total;
        }
        case Group::Sp: {
            if (params.n % 2) return 0;
            Bigint total = 0;
            for (auto& mu : partitions_in_box(2 * k, params.n))
                if (mu.size() == params.n && mu.columns_all_even()) total += syt_count(mu);
            return total;
        }
    }
    throw std::domain_error("unknown group");
}

Bigint count_tensor_invariants_graphs(const GroupParams& params, const OracleLimits& lim) {
    if (vertex_count(params) > lim.max_vertices)
        throw std::length_error("oracle size limit exceeded (vertices)");
    int k = params.k;
    Group g = params.group;
    Bigint count = 0;

    // 1-regular: every vertex has degree exactly 1
    auto degree_ok_bip = [&](const NatMatrix& m) {
        for (int i = 1; i <= params.p; ++i) {
            int dsum = 0;
            for (int j = 1; j <= params.q; ++j) dsum += m.at(i, j);
            if (dsum != 1) return false;
        }
        for (int j = 1; j <= params.q; ++j) {
            int dsum = 0;
            for (int i = 1; i <= params.p; ++i) dsum += m.at(i, j);
            if (dsum != 1) return false;
        }
        return true;
    };
    auto degree_vec = [&](const NatMatrix& m) {
        std::vector<int> deg(params.n + 1, 0);
        for (int i = 1; i <= params.n; ++i)
            for (int j = i; j <= params.n; ++j) {
                if (m.at(i, j) == 0) continue;
                deg[i] += m.at(i, j);
                deg[j] += m.at(i, j);
            }
        return deg;
    };

    switch (g) {
        case Group::GL: {
            if (params.p != params.q) return 0;
            auto cells = arc_cells(g, params.p, params.q, 0);
            NatMatrix m(params.p, params.q);
            fillings(cells, params.p, m, 0, [&]() {
                if (!degree_ok_bip(m)) return;
                if (diagram_width({g, m, {}, {}}) > k) return;
                ++count;
            });
            return count;
        }
        case Group::SL: {
            int p = params.p, q = params.q;
            if (std::abs(p - q) % k != 0) return 0;
            int m = std::abs(p - q) / k;
            if (m == 0) return count_tensor_invariants_graphs({Group::GL, k, p, q, 0}, lim);
            SlSide side = p > q ? SlSide::Starred : SlSide::Unstarred;
            int nside = std::max(p, q);
            auto cells = arc_cells(g, p, q, 0);
            NatMatrix mat(p, q);
            std::vector<Column> hacc;
            // hyperedges must be disjoint for 1-regularity, still a chain
            hyperedge_chains(nside, k, m, hacc, [&](const std::vector<Column>& hs) {
                std::vector<int> used(nside + 1, 0);
                for (auto& h : hs)
                    for (int v : h) used[v]++;
                for (int v = 1; v <= nside; ++v)
                    if (used[v] > 1) return;
                fillings(cells, std::min(p, q), mat, 0, [&]() {
                    // all vertices degree 1 (hyperedge endpoints have degree 1 already)
                    for (int i = 1; i <= p; ++i) {
                        int dsum = side == SlSide::Starred ? used[i] : 0;
                        for (int j = 1; j <= q; ++j) dsum += mat.at(i, j);
                        if (dsum != 1) return;
                    }
                    for (int j = 1; j <= q; ++j) {
                        int dsum = side == SlSide::Unstarred ? used[j] : 0;
                        for (int i = 1; i <= p; ++i) dsum += mat.at(i, j);
                        if (dsum != 1) return;
                    }
                    ArcDiagram diag{g, mat, hs, {}};
                    if (diagram_width(diag) > k) return;
                    if (!validate_sl_hyperedges(diag, side, k)) return;
                    ++count;
                });
            });
            return count;
        }
        case Group::O: {
            if (params.n % 2) return 0;
            auto cells = arc_cells(g, 0, 0, params.n);
            // loops give degree 2: 1-regular forbids them
            std::erase_if(cells, [](Cell c) { return c.i == c.j; });
            NatMatrix m(params.n, params.n);
            fillings(cells, params.n / 2, m, 0, [&]() {
                auto deg = degree_vec(m);
                for (int v = 1; v <= params.n; ++v)
                    if (deg[v] != 1) return;
                if (diagram_width({g, m, {}, {}}) > k) return;
                ++count;
            });
            return count;
        }
        case Group::SO: {
            count = count_tensor_invariants_graphs({Group::O, k, 0, 0, params.n}, lim);
            int rem = params.n - k;
            if (rem >= 0 && rem % 2 == 0) {
                auto cells = arc_cells(g, 0, 0, params.n);
                std::erase_if(cells, [](Cell c) { return c.i == c.j; });
                NatMatrix m(params.n, params.n);
                for (auto& I : columns_eq(params.n, k)) {
                    fillings(cells, rem / 2, m, 0, [&]() {
                        auto deg = degree_vec(m);
                        for (int v = 1; v <= params.n; ++v) {
                            bool painted = std::find(I.begin(), I.end(), v) != I.end();
                            if (deg[v] != (painted ? 0 : 1)) return;
                        }
                        ArcDiagram diag{g, m, {}, I};
                        if (diagram_width(diag) > k) return;
                        if (!validate_so_painting(diag, k)) return;
                        ++count;
                    });
                }
            }
            return count;
        }
        case Group::Sp: {
            if (params.n % 2) return 0;
            auto cells = arc_cells(g, 0, 0, params.n);
            NatMatrix m(params.n, params.n);
            fillings(cells, params.n / 2, m, 0, [&]() {
                auto deg = degree_vec(m);
                for (int v = 1; v <= params.n; ++v)
                    if (deg[v] != 1) return;
                if (diagram_width({g, m, {}, {}}) > k) return;
                ++count;
            });
            return count;
        }
    }
    throw std::domain_error("unknown group");
}

}

#include "stanley/poset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stanley {

bool ClassicalPoset::contains(Cell c) const {
    switch (kind) {
        case PosetKind::GL: return 1 <= c.i && c.i <= p && 1 <= c.j && c.j <= q;
        case PosetKind::O: return 1 <= c.i && c.i <= c.j && c.j <= p;
        case PosetKind::Sp: return 1 <= c.i && c.i < c.j && c.j <= p;
    }
    return false;
}

bool ClassicalPoset::leq(Cell a, Cell b) const {
    if (!contains(a) || !contains(b)) throw std::domain_error("cell outside poset");
    if (kind == PosetKind::O) return a.i <= b.i && a.j >= b.j;
    return a.i <= b.i && a.j <= b.j;
}

std::vector<Cell> ClassicalPoset::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j)
            if (contains({i, j})) out.push_back({i, j});
    return out;
}

int NatMatrix::entry_sum() const {
    int s = 0;
    for (int v : a) s += v;
    return s;
}

bool NatMatrix::check_kind() const {
    if (kind == Kind::Generic) return true;
    if (rows != cols) return false;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            bool below = kind == Kind::UpperTriangular ? j < i : j <= i;
            if (below && at(i, j) != 0) return false;
        }
    return true;
}

std::vector<Cell> NatMatrix::support() const {
    std::vector<Cell> out;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            if (at(i, j)) out.push_back({i, j});
    return out;
}

std::vector<Cell> NatMatrix::multisupport() const {
    std::vector<Cell> out;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            for (int m = 0; m < at(i, j); ++m) out.push_back({i, j});
    return out;
}

namespace {

// Dilworth: width = |P| - maximum matching of the strict comparability DAG.
int poset_width(const ClassicalPoset& poset, const std::vector<Cell>& supp) {
    int n = static_cast<int>(supp.size());
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && poset.leq(supp[u], supp[v]) && supp[u] != supp[v]) adj[u].push_back(v);
    std::vector<int> match(n, -1);
    std::vector<char> used;
    std::function<bool(int)> aug = [&](int u) -> bool {
        for (int v : adj[u]) {
            if (used[v]) continue;
            used[v] = 1;
            if (match[v] < 0 || aug(match[v])) {
                match[v] = u;
                return true;
            }
        }
        return false;
    };
    int m = 0;
    for (int u = 0; u < n; ++u) {
        used.assign(n, 0);
        if (aug(u)) ++m;
    }
    return n - m;
}

}  // namespace

std::pair<int, int> multiset_width_height(const ClassicalPoset& poset,
                                          const std::vector<Cell>& msupp) {
    for (auto c : msupp)
        if (!poset.contains(c)) throw std::domain_error("cell outside poset");
    std::map<Cell, int> mult;
    for (auto c : msupp) mult[c]++;
    std::vector<Cell> supp;
    for (auto& [c, m] : mult) supp.push_back(c);

    // height: longest chain with multiplicity, DP over a linear extension
    std::vector<Cell> order = supp;
    std::sort(order.begin(), order.end(), [&](Cell a, Cell b) {
        if (poset.kind == PosetKind::O) return a.i != b.i ? a.i < b.i : a.j > b.j;
        return a < b;
    });
    int height = 0;
    std::map<Cell, int> best;
    for (auto c : order) {
        int b = mult[c];
        for (auto d : order)
            if (d != c && poset.leq(d, c)) b = std::max(b, best[d] + mult[c]);
        best[c] = b;
        height = std::max(height, b);
    }

    return {poset_width(poset, supp), height};
}

}

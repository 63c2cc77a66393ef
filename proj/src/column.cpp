#include "stanley/column.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace stanley {

bool column_valid(const Column& a, int n) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1 || a[i] > n) return false;
        if (i + 1 < a.size() && a[i] >= a[i + 1]) return false;
    }
    return true;
}

Column column_tilde(const Column& a, int n) {
    Column b;
    b.reserve(a.size());
    for (auto it = a.rbegin(); it != a.rend(); ++it) b.push_back(n - *it + 1);
    return b;
}

bool column_leq(const Column& a, const Column& b) {
    if (a.size() < b.size()) return false;
    for (size_t i = 0; i < b.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool column_preceq(const Column& a, const Column& b, int n) {
    if (!column_valid(a, n) || !column_valid(b, n)) throw std::domain_error("invalid column");
    return column_leq(column_tilde(b, n), column_tilde(a, n));
}

bool column_arrow(const Column& a, const Column& b, int k) {
    int r = static_cast<int>(a.size()), s = static_cast<int>(b.size());
    if (r > k || s > k) throw std::domain_error("column longer than k");
    for (int i = 1; i <= r + s - k; ++i)
        if (a[i - 1] > b[k - r + i - 1]) return false;
    return true;
}

std::vector<Column> columns_eq(int n, int k) {
    std::vector<Column> out;
    if (k < 0 || k > n) return out;
    Column cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

std::vector<Column> columns_leq(int n, int k) {
    std::vector<Column> out;
    for (int len = 0; len <= std::min(n, k); ++len) {
        auto v = columns_eq(n, len);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

SigmaChain chain_from_tableau(const Tableau& t, int n) {
    SigmaChain c;
    c.shape = t.shape();
    int m = c.shape.parts.empty() ? 0 : c.shape.parts[0];
    for (int col = m - 1; col >= 0; --col) c.columns.push_back(column_tilde(t.column(col), n));
    return c;
}

Tableau tableau_from_chain(const SigmaChain& c, int n) {
    std::vector<std::vector<int>> cols;
    for (auto it = c.columns.rbegin(); it != c.columns.rend(); ++it)
        cols.push_back(column_tilde(*it, n));
    Tableau tr(std::move(cols));
    return tr.transpose();
}

std::vector<SigmaChain> sigma_chains(const Partition& sigma, int n, int k) {
    if (sigma.length() > k) throw std::domain_error("length(sigma) > k");
    std::vector<SigmaChain> out;
    ssyt_for_each(sigma, n, [&](const Tableau& t) { out.push_back(chain_from_tableau(t, n)); });
    return out;
}

Column bin_complete_minimal(const Column& x, int n, int k) {
    if (static_cast<int>(x.size()) > k) throw std::domain_error("column longer than k");
    Column out = x;
    int next = 1;
    while (static_cast<int>(out.size()) < k) {
        while (std::find(out.begin(), out.end(), next) != out.end()) ++next;
        if (next > n) throw std::domain_error("cannot complete column inside [n]");
        out.push_back(next);
        ++next;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Column bin_sp(const Column& x, int n, int k) {
    int r = static_cast<int>(x.size());
    if (r > k) throw std::domain_error("column longer than k");
    Column out(k);
    for (int i = 1; i <= k; ++i) {
        int v = 2 * i;
        if (i > k - r) v = std::max(v, x[i - (k - r) - 1]);
        out[i - 1] = v;
    }
    for (int i = 1; i < k; ++i)
        if (out[i] <= out[i - 1]) throw std::domain_error("sp bin lower bound not strict");
    if (!out.empty() && out.back() > n) throw std::domain_error("bin outside [n]");
    return out;
}

}

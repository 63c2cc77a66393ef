#include "stanley/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stanley {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
}

int Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool Partition::fits_in(int a, int b) const {
    return length() <= a && (parts.empty() || parts[0] <= b);
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts.empty()) return Partition{};
    c.resize(parts[0], 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) c[j]++;
    return Partition(std::move(c));
}

bool Partition::rows_all_even() const {
    return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
}

bool Partition::columns_all_even() const {
    return conjugate().rows_all_even();
}

bool Partition::columns_all_odd() const {
    auto cols = conjugate().parts;
    return std::all_of(cols.begin(), cols.end(), [](int p) { return p % 2 == 1; });
}

std::vector<Partition> partitions_in_box(int a, int b) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int maxpart) {
        out.emplace_back(Partition(cur));
        if (row >= a) return;
        for (int p = 1; p <= maxpart; ++p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    // emit smaller first parts first but keep weak decrease: iterate descending rows
    out.clear();
    std::function<void(int, int)> rec2 = [&](int row, int maxpart) {
        out.emplace_back(Partition(cur));
        if (row >= a || maxpart == 0) return;
        for (int p = maxpart; p >= 1; --p) {
            cur.push_back(p);
            rec2(row + 1, p);
            cur.pop_back();
        }
    };
    rec2(0, b >= 0 ? b : 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Partition Tableau::shape() const {
    std::vector<int> s;
    s.reserve(rows.size());
    for (auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return Partition(std::move(s));
}

int Tableau::size() const {
    int t = 0;
    for (auto& r : rows) t += static_cast<int>(r.size());
    return t;
}

bool Tableau::is_ssyt(int alphabet) const {
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size()) return false;
        for (size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            if (v < 1 || v > alphabet) return false;
            if (c + 1 < rows[r].size() && rows[r][c + 1] < v) return false;
            if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r + 1][c] <= v) return false;
        }
    }
    return true;
}

std::vector<int> Tableau::column(int c) const {
    std::vector<int> col;
    for (auto& r : rows)
        if (c < static_cast<int>(r.size())) col.push_back(r[c]);
    return col;
}

Tableau Tableau::transpose() const {
    Tableau t;
    if (rows.empty()) return t;
    int w = static_cast<int>(rows[0].size());
    for (int c = 0; c < w; ++c) t.rows.push_back(column(c));
    return t;
}

void ssyt_for_each(const Partition& shape, int n, const std::function<void(const Tableau&)>& fn) {
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts) rows.emplace_back(p, 0);
    std::vector<std::pair<int, int>> cells;
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) cells.emplace_back(r, c);
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            fn(Tableau(rows));
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            rows[r][c] = v;
            rec(idx + 1);
        }
        rows[r][c] = 0;
    };
    rec(0);
}

std::vector<Tableau> ssyt_enumerate(const Partition& shape, int n) {
    std::vector<Tableau> out;
    ssyt_for_each(shape, n, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

Bigint ssyt_count(const Partition& shape, int n) {
    Bigint c = 0;
    ssyt_for_each(shape, n, [&](const Tableau&) { ++c; });
    return c;
}

Bigint gl_module_dim(const Partition& nu, int n) {
    if (nu.length() > n) return 0;
    // hook content formula: prod over cells (n + j - i) / hook(i,j)
    Bigint num = 1, den = 1;
    auto conj = nu.conjugate();
    for (int i = 0; i < nu.length(); ++i) {
        for (int j = 0; j < nu.parts[i]; ++j) {
            num *= n + j - i;
            int hook = (nu.parts[i] - j) + (conj.parts[j] - i) - 1;
            den *= hook;
        }
    }
    return num / den;
}

Bigint syt_count(const Partition& shape) {
    int m = shape.size();
    Bigint num = 1;
    for (int i = 1; i <= m; ++i) num *= i;
    auto conj = shape.conjugate();
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape.parts[i]; ++j)
            num /= (shape.parts[i] - j) + (conj.parts[j] - i) - 1;
    return num;
}

Bigint binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Bigint r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

}

#pragma once

#include <vector>
#include <functional>

#include "stanley/bigint.hpp"

namespace stanley {

// Integer partition, weakly decreasing positive parts, no trailing zeros.
// The empty partition is valid (size 0).
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i < length() ? parts[i] : 0; }  // 0-indexed
    bool fits_in(int a, int b) const;                              // Par(a x b)
    Partition conjugate() const;
    std::vector<int> column_lengths() const { return conjugate().parts; }
    bool rows_all_even() const;
    bool columns_all_even() const;
    bool columns_all_odd() const;  // every column has odd length (empty: true)

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

// All partitions fitting in an a x b box (at most a rows, parts <= b),
// in a deterministic order.
std::vector<Partition> partitions_in_box(int a, int b);

// Semistandard Young tableau: rows weakly increase, columns strictly increase.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {}
    Tableau(std::initializer_list<std::vector<int>> r) : rows(r) {}

    Partition shape() const;
    int size() const;
    bool empty() const { return rows.empty(); }
    bool is_ssyt(int alphabet) const;
    std::vector<int> column(int c) const;  // 0-indexed
    std::vector<int> first_column() const { return column(0); }
    Tableau transpose() const;

    bool operator==(const Tableau&) const = default;
};

// All SSYT of the given shape with entries in 1..n, lexicographic by row-reading word.
std::vector<Tableau> ssyt_enumerate(const Partition& shape, int n);
void ssyt_for_each(const Partition& shape, int n, const std::function<void(const Tableau&)>& fn);
Bigint ssyt_count(const Partition& shape, int n);  // brute-force count (oracle use)

// dim of the irreducible gl_n module with highest weight nu = #SSYT(nu, n),
// by the hook content formula; 0 when length(nu) > n.
Bigint gl_module_dim(const Partition& nu, int n);

// Number of standard Young tableaux, hook length formula.
Bigint syt_count(const Partition& shape);

Bigint binomial(int n, int k);

}

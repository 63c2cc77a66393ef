#pragma once

#include <compare>
#include <vector>

namespace stanley {

// Matrix coordinates throughout, 1-indexed, (1,1) in the upper left.
struct Cell {
    int i = 0, j = 0;
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;  // lexicographic (row, col)
};

enum class PosetKind { GL, O, Sp };

// The classical posets:
//   GL(p,q): {(i,j) : 1<=i<=p, 1<=j<=q},   (i,j) <= (i',j')  iff  i<=i', j<=j'
//   O(n):    {(i,j) : 1<=i<=j<=n},         (i,j) <= (i',j')  iff  i<=i', j>=j'
//   Sp(n):   {(i,j) : 1<=i<j<=n},          (i,j) <= (i',j')  iff  i<=i', j<=j'
struct ClassicalPoset {
    PosetKind kind;
    int p = 0, q = 0;  // O/Sp use p = q = n

    static ClassicalPoset gl(int p, int q) { return {PosetKind::GL, p, q}; }
    static ClassicalPoset o(int n) { return {PosetKind::O, n, n}; }
    static ClassicalPoset sp(int n) { return {PosetKind::Sp, n, n}; }

    int n() const { return p; }
    bool contains(Cell c) const;
    bool leq(Cell a, Cell b) const;  // throws std::domain_error if a or b outside
    std::vector<Cell> cells() const;
};

// Nonnegative integer matrix; the RSK codomain and monomial degree matrix.
struct NatMatrix {
    enum class Kind { Generic, UpperTriangular, StrictlyUpperTriangular };

    int rows = 0, cols = 0;
    Kind kind = Kind::Generic;
    std::vector<int> a;  // row-major

    NatMatrix() = default;
    NatMatrix(int r, int c, Kind k = Kind::Generic) : rows(r), cols(c), kind(k), a(r * c, 0) {}

    int& at(int i, int j) { return a[(i - 1) * cols + (j - 1)]; }  // 1-indexed
    int at(int i, int j) const { return a[(i - 1) * cols + (j - 1)]; }
    int entry_sum() const;
    bool check_kind() const;                 // entries respect the triangularity
    std::vector<Cell> support() const;       // cells with nonzero entry, lex order
    std::vector<Cell> multisupport() const;  // with multiplicity

    bool operator==(const NatMatrix&) const = default;
};

// Largest antichain of the support set, and largest chain of the multisupport
// (counted with multiplicity), in the given poset.
std::pair<int, int> multiset_width_height(const ClassicalPoset& poset,
                                          const std::vector<Cell>& msupp);

}

#pragma once

#include <string>
#include <vector>

#include "stanley/poset.hpp"
#include "stanley/series.hpp"

namespace stanley {

// Noncompact-root posets of the simply laced Hermitian symmetric pairs, stored
// as grid cells (x right, y up as drawn) with explicit cover edges.
struct RootPoset {
    std::string label;
    std::vector<Cell> cells;                    // Cell{ x, y } in drawing coordinates
    std::vector<std::pair<Cell, Cell>> edges;   // covers, drawn grid segments
    bool contains(Cell c) const;
    bool has_edge(Cell a, Cell b) const;
};

enum class WallachPair { Dn, E6, E7 };
WallachPair wallach_pair_from_string(const std::string& s);

RootPoset wallach_poset(WallachPair pair, int n = 0);  // n only for Dn (n >= 4)

// Hilbert series of the k-th Wallach representation:
//   (Dn, k=1), (E6, k=1), (E7, k in {1,2});
// maximal-chain (or non-intersecting pair) enumeration, corner counting as
// drawn, undoubled variable t.
RationalSeries wallach_series(WallachPair pair, int n, int k);

// facets (families of k paths) with their corner counts, for inspection
struct WallachFacet {
    std::vector<std::vector<Cell>> paths;
    std::vector<Cell> corners;
};
std::vector<WallachFacet> wallach_facets(WallachPair pair, int n, int k);

// An abstract finite poset for isomorphism checks.
struct FinitePoset {
    int size = 0;
    std::vector<std::vector<bool>> leq;  // strict closure included; leq[i][i] true
    static FinitePoset from_classical(const ClassicalPoset& p);
    std::vector<std::pair<int, int>> cover_edges() const;
};

// order isomorphism / covering-graph isomorphism by backtracking search
bool poset_isomorphic(const FinitePoset& a, const FinitePoset& b);
bool covering_graphs_isomorphic(const FinitePoset& a, const FinitePoset& b);

// The corner region Cor_k of a classical poset, with the 90-degree rotated
// order; empty when the parameters leave no room.
FinitePoset corner_poset_classical(const ClassicalPoset& poset, int k);

// The reduced poset claimed by the corner-poset isomorphisms:
//   GL(p,q) -> GL(p-k, q-k);  O(n) -> Sp(n-k+1);  Sp(n) -> O(n-2k-1).
ClassicalPoset corner_poset_reduced(const ClassicalPoset& poset, int k);

// Corner poset of a Wallach pair: the cells that occur as corners of the k-th
// (innermost) path, with the order inherited along paths.
FinitePoset corner_poset_wallach(WallachPair pair, int n, int k);

}

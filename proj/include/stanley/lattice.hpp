#pragma once

#include <optional>
#include <vector>

#include "stanley/column.hpp"
#include "stanley/poset.hpp"
#include "stanley/series.hpp"

namespace stanley {

// Saturated chain through a classical poset, stored as its cell sequence.
struct LatticePath {
    std::vector<Cell> cells;
    bool contains(Cell c) const;
};

// Family of k pairwise disjoint lattice paths; `painted` holds painted path
// indices (0-based) for the O covariant variants.
struct Facet {
    std::vector<LatticePath> paths;
    std::vector<int> painted;
};

struct CornerSet {
    std::vector<Cell> cells;
    int size() const { return static_cast<int>(cells.size()); }
};

struct FacetWithCorners {
    Facet facet;
    CornerSet corners;
};

// --- standard facets of the k-th order complex  -----------------------------
// GL(p,q): paths (i,1) -> (p, q-i+1), SE corners; facet size k(p+q-k)
// O(n):    paths (i,n) -> diagonal, SW-turn corners plus vertical-arrival
//          diagonal corners; facet size k(2n-k+1)/2
// Sp(n):   paths (1,2i) -> (n-2i+1, n), SE corners outside the start/end
//          shadows; facet size k(2n-2k-1)
std::vector<FacetWithCorners> enumerate_facets(const ClassicalPoset& poset, int k);

// O(n) facets with m of the k diagonal endpoints painted; painted endpoints are
// not counted as corners.
std::vector<FacetWithCorners> enumerate_painted_facets(int n, int k, int m);

// O(n) facets whose paths start at (i_l, n) for I = (i_1 < ... < i_k).
std::vector<FacetWithCorners> enumerate_facets_from_starts(int n, const Column& I);

// Standard O(n) facets with diagonal cells excluded from the corner set
// (the pure form of the semiinvariant series).
std::vector<FacetWithCorners> enumerate_facets_varied_endpoints(int n, int k);

// GL families with prescribed starts:
//   starred   (I in C^p_k): paths (i_l, 1) -> (p, q+1-l), SE corners
//   unstarred (J in C^q_k): paths (1, j_l) -> (p+1-l, q), rotated (NW-turn) corners
std::vector<FacetWithCorners> enumerate_gl_facets_from_rows(int p, int q, const Column& I);
std::vector<FacetWithCorners> enumerate_gl_facets_from_cols(int p, int q, const Column& J);

// Sp covariant families: paths (1, i_l) -> (n-2l+1, n) for I >= (2,4,...,2k),
// corners = SE patterns not shadowed by the starts/endpoints.
std::vector<FacetWithCorners> enumerate_sp_facets_from_starts(int n, const Column& I);
CornerSet sp_corners_with_shadows(const Facet& f, int n, const Column& I);

// Maximal chains (1,...,k) -> I in the full-column poset C^p_k, with the corner
// count of each chain (middle elements B of A ->(i) B ->(j) C with i < j).
struct ChainFacet {
    std::vector<Column> elements;
    int corners = 0;
};
std::vector<ChainFacet> enumerate_chain_facets(const Column& I, int k, int p);

// One hyperedge-decorated summand of the SL decomposition.
struct SlHyperedgeFamily {
    Column interpolation;            // I or J
    IntPolynomial chain_numerator;   // sum over F -> I of t^{k * #cor(F)}
    int chain_size = 0;              // #F
    IntPolynomial path_numerator;    // sum over I -> f of t^{2 * #cor(f)}
    int path_size = 0;               // #f
};

enum class SlSide { Starred, Unstarred };
std::vector<SlHyperedgeFamily> enumerate_sl_hyperedge_facets(int p, int q, int k, SlSide side);

}

#pragma once

#include "stanley/partition.hpp"
#include "stanley/poset.hpp"

namespace stanley {

// Pair of same-shape SSYT's; T records row indices, U is the insertion tableau.
struct TableauPair {
    Tableau recording;  // entries <= p
    Tableau insertion;  // entries <= q
    bool operator==(const TableauPair&) const = default;
};

// Tableau pair -> matrix (inverse bumping); entries of recording <= p, insertion <= q.
NatMatrix rsk_gl(const TableauPair& pair, int p, int q);

// Matrix -> tableau pair (Knuth row insertion of the lex two-line array).
TableauPair rsk_gl_inverse(const NatMatrix& m);

// Burge correspondence: even-row SSYT over [n] <-> upper-triangular n x n matrix.
// Implemented by Knuth dual insertion on the symmetrized matrix M + M^t.
NatMatrix rsk_o(const Tableau& t, int n);
Tableau rsk_o_inverse(const NatMatrix& m);

// Even-column SSYT over [n] <-> strictly upper-triangular matrix, via the twin
// map T -> RSK_GL(T,T).
NatMatrix rsk_sp(const Tableau& t, int n);
Tableau rsk_sp_inverse(const NatMatrix& m);

// Upper-triangular part of RSK_GL(T,T); trace = number of odd columns of T.
NatMatrix twin_rsk(const Tableau& t, int n);

// Chain/antichain peeling of the multisupport.
//   chains_star: northeast borders (GL, Sp)
//   chains:      southwest borders (GL, Sp); northwest borders for O
//   antichains:  iterated minimal elements of the support
// Cells within one piece are emitted in lexicographic (row, col) order.
struct PeelDecomposition {
    std::vector<std::vector<Cell>> chains_star;  // empty for O
    std::vector<std::vector<Cell>> chains;
    std::vector<std::vector<Cell>> antichains;
};

PeelDecomposition peel(const NatMatrix& m, PosetKind kind);

}

#pragma once

#include <vector>

#include "stanley/partition.hpp"

namespace stanley {

// A column: strictly increasing subsequence of (1,...,n).
using Column = std::vector<int>;

bool column_valid(const Column& a, int n);

// tilde: entrywise i -> n-i+1, re-sorted increasing.
Column column_tilde(const Column& a, int n);

// A <= B componentwise, demanding equal lengths (the order on C^n_k) or,
// for unequal lengths, #A >= #B with prefix comparison (the order on C^n_{<=k}
// used for standard monomials: A <= B iff #A >= #B and a_i <= b_i for i <= #B).
bool column_leq(const Column& a, const Column& b);

// A preceq B  iff  tilde(B) <= tilde(A).
bool column_preceq(const Column& a, const Column& b, int n);

// the slide-down overlap test of the arrow relation:
// A -> B iff a_i <= b_{k-r+i} for all i = 1..(r+s-k); vacuous when r+s <= k.
bool column_arrow(const Column& a, const Column& b, int k);

// all columns of length exactly k (resp. <= k) from [n], lexicographic.
std::vector<Column> columns_eq(int n, int k);
std::vector<Column> columns_leq(int n, int k);

// chain of columns X_1 preceq ... preceq X_m whose reversed tilde columns form
// an SSYT of the stated shape
struct SigmaChain {
    std::vector<Column> columns;
    Partition shape;
};

// all sigma-chains in C^n_{<=k}; count equals gl_module_dim(sigma, n).
// Requires length(sigma) <= k.
std::vector<SigmaChain> sigma_chains(const Partition& sigma, int n, int k);

// tableau <-> chain conversions (bijection (6.4))
SigmaChain chain_from_tableau(const Tableau& t, int n);
Tableau tableau_from_chain(const SigmaChain& c, int n);

// GL/O bin: the minimal element of C^n_k containing the chain's maximal element,
// obtained by inserting the smallest unused entries.
Column bin_complete_minimal(const Column& x, int n, int k);

// Sp bin: minimal I in C^n_k with X -> I and I >= (2,4,...,2k).
Column bin_sp(const Column& x, int n, int k);

}

#pragma once

#include <optional>
#include <vector>

#include "stanley/column.hpp"
#include "stanley/hilbert.hpp"
#include "stanley/poset.hpp"

namespace stanley {

// Arc diagrams encoding basis invariants. Arcs live in the (bi)adjacency
// matrix: GL uses the full p x q grid, O the upper triangle with the diagonal
// (loops), Sp the strict upper triangle.
struct ArcDiagram {
    Group group;                        // GL/SL: bipartite; O/SO/Sp: single row
    NatMatrix arcs;                     // degree matrix
    std::vector<Column> hyperedges;     // SL: chain of size-k columns (weakly increasing)
    Column painted;                     // SO: at most one size-k painted set
};

// GL/Sp: size of the largest strict nesting; O: minimum number of weak
// nestings, via the leftmost-arc peeling (shared with module rsk).
int diagram_width(const ArcDiagram& d);

// rule (4.2): the i-th dot of the topmost hyperedge lies weakly outside all
// arcs in C*_i (starred side) / weakly inside all arcs in C_i (unstarred side)
bool validate_sl_hyperedges(const ArcDiagram& d, SlSide side, int k);

// rule (4.5): the i-th painted vertex lies weakly left of the arcs in C_i
bool validate_so_painting(const ArcDiagram& d, int k);

// Enumeration limits; overridable through SERIES_MAX_ENUM.
struct OracleLimits {
    int max_vertices = 10;
    int max_degree = 12;
    static OracleLimits from_env();
};

// count of 1-regular basis diagrams (tensor invariants) by direct enumeration;
// throws std::length_error beyond the limits
Bigint count_tensor_invariants_graphs(const GroupParams& params,
                                      const OracleLimits& lim = OracleLimits::from_env());

// the SYT-sum formulas of the dimension corollaries
Bigint count_tensor_invariants_formula(const GroupParams& params);

// number of basis diagrams of total degree d (arcs count 2, hyperedges count k)
Bigint graded_dimension_by_graphs(const GroupParams& params, int d,
                                  const OracleLimits& lim = OracleLimits::from_env());

}

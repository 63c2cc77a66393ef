#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stanley/column.hpp"
#include "stanley/lattice.hpp"
#include "stanley/series.hpp"

namespace stanley {

enum class Group { GL, SL, O, SO, Sp };

Group group_from_string(const std::string& s);
std::string group_to_string(Group g);

struct GroupParams {
    Group group;
    int k = 0;
    int p = 0, q = 0;  // GL/SL
    int n = 0;         // O/SO/Sp
};

// One direct summand of a Stanley decomposition, kept for reporting.
struct StanleyComponent {
    Facet facet;
    CornerSet corners;
    int free_variables = 0;  // rank of the polynomial subalgebra
};

struct HilbertResult {
    RationalSeries series;
    std::vector<StanleyComponent> components;  // empty if not tracked
};

// Hilbert--Poincare series of the invariant ring, computed from the lattice
// path Stanley decomposition. Where a tableau-dimension form exists it is
// computed as well and the two are required to agree.
HilbertResult hilbert_invariants(const GroupParams& params);

// tableau/dimension forms (used as the second route and exposed for tests)
RationalSeries hilbert_invariants_tableau_form(const GroupParams& params);

// O(V)-semiinvariants: nonpure (variable starts) or pure (diagonal corners
// dropped, t^k prefactor); both routes must agree.
enum class SemiForm { Nonpure, Pure };
RationalSeries hilbert_o_semiinvariants(int k, int n, SemiForm form);
RationalSeries hilbert_o_semiinvariants_tableau_form(int k, int n);

// P_I / Q_J building blocks (eq 6.7 and the Sp variant)
RationalSeries p_i_series_gl(const Column& I, int p, int q, int k);   // I in C^p_k
RationalSeries q_j_series_gl(const Column& J, int p, int q, int k);   // J in C^q_k
RationalSeries p_i_series_o(const Column& I, int n, int k);           // I in C^n_k
RationalSeries p_i_series_sp(const Column& I, int n, int k);          // I >= (2,4,...,2k)

// GL covariants of type U_sigma with sigma^- = 0 or sigma^+ = 0.
struct GlSigma {
    Partition plus;   // polynomial part
    Partition minus;  // dual part
};
RationalSeries hilbert_gl_covariants(int k, int p, int q, const GlSigma& sigma);

// O covariants of wedge type sigma = (1^m); both routes computed and compared.
RationalSeries hilbert_o_covariants_wedge(int k, int n, int m);

// Sp covariants of type U_sigma, length(sigma) <= k <= n/2.
RationalSeries hilbert_sp_covariants(int k, int n, const Partition& sigma);

// bin sizes #sigma_I in a deterministic order of the interpolation columns
std::vector<std::pair<Column, Bigint>> sigma_bins_gl(const Partition& sigma, int alphabet, int k);
std::vector<std::pair<Column, Bigint>> sigma_bins_sp(const Partition& sigma, int n, int k);

// Howe duality highest weight (Table 1); exact rationals as (numerator, /2 flag).
struct HoweWeight {
    std::vector<std::pair<Bigint, Bigint>> lambda;  // entries as reduced fractions (num, den)
    static std::pair<Bigint, Bigint> frac(Bigint n, Bigint d);
};
HoweWeight howe_weight(Group group, const GroupParams& params, const GlSigma& sigma);

}

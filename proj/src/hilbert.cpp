#include "stanley/hilbert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stanley {

Group group_from_string(const std::string& s) {
    if (s == "gl") return Group::GL;
    if (s == "sl") return Group::SL;
    if (s == "o") return Group::O;
    if (s == "so") return Group::SO;
    if (s == "sp") return Group::Sp;
    throw std::domain_error("unknown group: " + s);
}

std::string group_to_string(Group g) {
    switch (g) {
        case Group::GL: return "gl";
        case Group::SL: return "sl";
        case Group::O: return "o";
        case Group::SO: return "so";
        case Group::Sp: return "sp";
    }
    return "?";
}

namespace {

int facet_cells(const Facet& f) {
    int s = 0;
    for (auto& p : f.paths) s += static_cast<int>(p.cells.size());
    return s;
}

// sum over facets of t^{2 #cor} / (1-t^2)^{#f}; all facets must share #f
RationalSeries facet_sum(const std::vector<FacetWithCorners>& facets) {
    if (facets.empty()) return RationalSeries::zero();
    int size = facet_cells(facets.front().facet);
    IntPolynomial num;
    for (auto& fc : facets) {
        if (facet_cells(fc.facet) != size) throw std::domain_error("facet sizes differ");
        num += IntPolynomial::monomial(2 * fc.corners.size());
    }
    return RationalSeries::term(std::move(num), 2, size);
}

RationalSeries gl_tableau_form(int k, int p, int q) {
    IntPolynomial num;
    int a = std::min(p - k, q - k);
    for (auto& nu : partitions_in_box(a, k))
        num += IntPolynomial::monomial(2 * nu.size(), gl_module_dim(nu, p - k) * gl_module_dim(nu, q - k));
    return RationalSeries::term(std::move(num), 2, k * (p + q - k));
}

RationalSeries o_tableau_form(int k, int n) {
    IntPolynomial num;
    for (auto& nu : partitions_in_box(n - k + 1, k))
        if (nu.columns_all_even())
            num += IntPolynomial::monomial(nu.size(), gl_module_dim(nu, n - k + 1));
    return RationalSeries::term(std::move(num), 2, k * (2 * n - k + 1) / 2);
}

RationalSeries sp_tableau_form(int k, int n) {
    IntPolynomial num = IntPolynomial::one();
    int a = n - 2 * k - 1;
    if (a > 0) {
        num = IntPolynomial{};
        for (auto& nu : partitions_in_box(a, 2 * k))
            if (nu.rows_all_even()) num += IntPolynomial::monomial(nu.size(), gl_module_dim(nu, a));
    }
    return RationalSeries::term(std::move(num), 2, k * (2 * n - 2 * k - 1));
}

RationalSeries sl_series(int k, int p, int q) {
    RationalSeries total = hilbert_invariants({Group::GL, k, p, q, 0}).series;
    for (auto side : {SlSide::Starred, SlSide::Unstarred}) {
        for (auto& fam : enumerate_sl_hyperedge_facets(p, q, k, side)) {
            RationalSeries chain = RationalSeries::term(fam.chain_numerator, k, fam.chain_size);
            RationalSeries paths = RationalSeries::term(fam.path_numerator, 2, fam.path_size);
            total += chain * paths.mul_poly(IntPolynomial::monomial(k));
        }
    }
    return total;
}

}  // namespace

RationalSeries hilbert_invariants_tableau_form(const GroupParams& params) {
    switch (params.group) {
        case Group::GL: return gl_tableau_form(params.k, params.p, params.q);
        case Group::O: return o_tableau_form(params.k, params.n);
        case Group::Sp: return sp_tableau_form(params.k, params.n);
        case Group::SO: {
            RationalSeries s = o_tableau_form(params.k, params.n);
            return s + hilbert_o_semiinvariants_tableau_form(params.k, params.n);
        }
        default: throw std::domain_error("no tableau form for this group");
    }
}

HilbertResult hilbert_invariants(const GroupParams& params) {
    int k = params.k;
    HilbertResult res;
    switch (params.group) {
        case Group::GL: {
            int p = params.p, q = params.q;
            if (k < 0) throw std::domain_error("k out of range");
            if (k == 0) {
                res.series = RationalSeries::constant(1);
                return res;
            }
            if (k >= std::min(p, q)) {  // no relations: full polynomial ring
                res.series = RationalSeries::term(IntPolynomial::one(), 2, p * q);
                return res;
            }
            auto facets = enumerate_facets(ClassicalPoset::gl(p, q), k);
            res.series = facet_sum(facets);
            for (auto& fc : facets)
                res.components.push_back({fc.facet, fc.corners, facet_cells(fc.facet)});
            if (!res.series.equals(gl_tableau_form(k, p, q)))
                throw std::logic_error("GL path/tableau forms disagree");
            return res;
        }
        case Group::O: {
            int n = params.n;
            if (k < 0 || k > n) throw std::domain_error("k out of range");
            if (k == 0) {
                res.series = RationalSeries::constant(1);
                return res;
            }
            auto facets = enumerate_facets(ClassicalPoset::o(n), k);
            res.series = facet_sum(facets);
            for (auto& fc : facets)
                res.components.push_back({fc.facet, fc.corners, facet_cells(fc.facet)});
            if (!res.series.equals(o_tableau_form(k, n)))
                throw std::logic_error("O path/tableau forms disagree");
            return res;
        }
        case Group::Sp: {
            int n = params.n;
            if (k < 0 || k > n / 2) throw std::domain_error("k out of range");
            if (k == 0) {
                res.series = RationalSeries::constant(1);
                return res;
            }
            auto facets = enumerate_facets(ClassicalPoset::sp(n), k);
            res.series = facet_sum(facets);
            for (auto& fc : facets)
                res.components.push_back({fc.facet, fc.corners, facet_cells(fc.facet)});
            if (!res.series.equals(sp_tableau_form(k, n)))
                throw std::logic_error("Sp path/tableau forms disagree");
            return res;
        }
        case Group::SL: {
            int p = params.p, q = params.q;
            if (k < 1 || k > std::min(p, q)) throw std::domain_error("k out of range");
            res.series = sl_series(k, p, q);
            return res;
        }
        case Group::SO: {
            int n = params.n;
            if (k < 1 || k > n) throw std::domain_error("k out of range");
            RationalSeries o = hilbert_invariants({Group::O, k, 0, 0, n}).series;
            res.series = o + hilbert_o_semiinvariants(k, n, SemiForm::Pure);
            if (!res.series.equals(hilbert_invariants_tableau_form(params)))
                throw std::logic_error("SO path/tableau forms disagree");
            return res;
        }
    }
    throw std::domain_error("unknown group");
}

RationalSeries hilbert_o_semiinvariants_tableau_form(int k, int n) {
    IntPolynomial num;
    for (auto& nu : partitions_in_box(n - k + 1, k))
        if (nu.conjugate().length() == k && nu.columns_all_odd())
            num += IntPolynomial::monomial(nu.size(), gl_module_dim(nu, n - k + 1));
    return RationalSeries::term(std::move(num), 2, k * (2 * n - k + 1) / 2);
}

RationalSeries hilbert_o_semiinvariants(int k, int n, SemiForm form) {
    if (k < 0 || k > n) throw std::domain_error("k out of range");
    if (k == 0) return RationalSeries::constant(1);
    RationalSeries total;
    if (form == SemiForm::Nonpure) {
        for (auto& I : columns_eq(n, k)) {
            auto facets = enumerate_facets_from_starts(n, I);
            if (facets.empty()) continue;
            total += facet_sum(facets);
        }
        total = total.mul_poly(IntPolynomial::monomial(k));
    } else {
        auto facets = enumerate_facets_varied_endpoints(n, k);
        total = facet_sum(facets).mul_poly(IntPolynomial::monomial(k));
    }
    if (!total.equals(hilbert_o_semiinvariants_tableau_form(k, n)))
        throw std::logic_error("O semiinvariant forms disagree");
    return total;
}

RationalSeries p_i_series_gl(const Column& I, int p, int q, int k) {
    if (static_cast<int>(I.size()) != k || !column_valid(I, p))
        throw std::domain_error("invalid I");
    return facet_sum(enumerate_gl_facets_from_rows(p, q, I));
}

RationalSeries q_j_series_gl(const Column& J, int p, int q, int k) {
    if (static_cast<int>(J.size()) != k || !column_valid(J, q))
        throw std::domain_error("invalid J");
    return facet_sum(enumerate_gl_facets_from_cols(p, q, J));
}

RationalSeries p_i_series_o(const Column& I, int n, int k) {
    if (static_cast<int>(I.size()) != k || !column_valid(I, n))
        throw std::domain_error("invalid I");
    return facet_sum(enumerate_facets_from_starts(n, I));
}

RationalSeries p_i_series_sp(const Column& I, int n, int k) {
    if (static_cast<int>(I.size()) != k || !column_valid(I, n))
        throw std::domain_error("invalid I");
    return facet_sum(enumerate_sp_facets_from_starts(n, I));
}

std::vector<std::pair<Column, Bigint>> sigma_bins_gl(const Partition& sigma, int alphabet, int k) {
    std::map<Column, Bigint> bins;
    for (auto& I : columns_eq(alphabet, k)) bins[I] = 0;
    for (auto& chain : sigma_chains(sigma, alphabet, k)) {
        Column top = chain.columns.empty() ? Column{} : chain.columns.back();
        bins[bin_complete_minimal(top, alphabet, k)] += 1;
    }
    return {bins.begin(), bins.end()};
}

std::vector<std::pair<Column, Bigint>> sigma_bins_sp(const Partition& sigma, int n, int k) {
    std::map<Column, Bigint> bins;
    for (auto& I : columns_eq(n, k)) {
        bool dominates = true;
        for (int l = 1; l <= k; ++l)
            if (I[l - 1] < 2 * l) dominates = false;
        if (dominates) bins[I] = 0;
    }
    for (auto& chain : sigma_chains(sigma, n, k)) {
        Column top = chain.columns.empty() ? Column{} : chain.columns.back();
        bins[bin_sp(top, n, k)] += 1;
    }
    return {bins.begin(), bins.end()};
}

RationalSeries hilbert_gl_covariants(int k, int p, int q, const GlSigma& sigma) {
    bool has_plus = sigma.plus.size() > 0, has_minus = sigma.minus.size() > 0;
    if (has_plus && has_minus)
        throw std::domain_error("mixed sigma (both parts nonzero) is unsupported");
    if (!has_plus && !has_minus) return hilbert_invariants({Group::GL, k, p, q, 0}).series;
    const Partition& s = has_plus ? sigma.plus : sigma.minus;
    if (s.length() > k) throw std::domain_error("length(sigma) > k");
    int alphabet = has_plus ? q : p;
    if (s.length() > alphabet) throw std::domain_error("sigma too long for the alphabet");
    auto bins = sigma_bins_gl(s, alphabet, k);
    Bigint binsum = 0;
    RationalSeries total;
    for (auto& [I, cnt] : bins) {
        binsum += cnt;
        if (cnt == 0) continue;
        RationalSeries pi = has_plus ? q_j_series_gl(I, p, q, k) : p_i_series_gl(I, p, q, k);
        total += pi.scale(cnt);
    }
    if (binsum != gl_module_dim(s, alphabet))
        throw std::logic_error("bin sizes do not sum to dim F_lambda");
    return total.mul_poly(IntPolynomial::monomial(s.size()));
}

RationalSeries hilbert_o_covariants_wedge(int k, int n, int m) {
    if (m < 0 || m > k || k > n) throw std::domain_error("m out of range");
    // bin form: t^m sum_I #sigma_I P_I with sigma = (1^m)
    RationalSeries bin_form;
    {
        std::map<Column, Bigint> bins;
        for (auto& I : columns_eq(n, k)) bins[I] = 0;
        for (auto& X : columns_eq(n, m)) bins[bin_complete_minimal(X, n, k)] += 1;
        for (auto& [I, cnt] : bins) {
            if (cnt == 0) continue;
            bin_form += p_i_series_o(I, n, k).scale(cnt);
        }
        bin_form = bin_form.mul_poly(IntPolynomial::monomial(m));
    }
    // painted form: t^m sum over F_{k,m} of t^{2#cor} / (1-t^2)^{k(2n-k+1)/2}
    RationalSeries painted_form =
        facet_sum(enumerate_painted_facets(n, k, m)).mul_poly(IntPolynomial::monomial(m));
    if (!bin_form.equals(painted_form))
        throw std::logic_error("O covariant bin/painted forms disagree");
    return painted_form;
}

RationalSeries hilbert_sp_covariants(int k, int n, const Partition& sigma) {
    if (sigma.length() > k || k > n / 2) throw std::domain_error("invalid sigma");
    if (sigma.size() == 0) return hilbert_invariants({Group::Sp, k, 0, 0, n}).series;
    auto bins = sigma_bins_sp(sigma, n, k);
    Bigint binsum = 0;
    RationalSeries total;
    for (auto& [I, cnt] : bins) {
        binsum += cnt;
        if (cnt == 0) continue;
        total += p_i_series_sp(I, n, k).scale(cnt);
    }
    if (binsum != gl_module_dim(sigma, n))
        throw std::logic_error("Sp bin sizes do not sum to dim F_lambda");
    return total.mul_poly(IntPolynomial::monomial(sigma.size()));
}

std::pair<Bigint, Bigint> HoweWeight::frac(Bigint n, Bigint d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Bigint g = gcd(n < 0 ? Bigint(-n) : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return {n, d};
}

HoweWeight howe_weight(Group group, const GroupParams& params, const GlSigma& sigma) {
    HoweWeight w;
    int k = params.k;
    switch (group) {
        case Group::GL: {
            int p = params.p, q = params.q;
            if (sigma.minus.length() > p || sigma.plus.length() > q)
                throw std::domain_error("sigma violates the Table 1 constraints");
            // (-k - reverse(sigma^-); sigma^+)
            std::vector<int> minus(p, 0);
            for (int i = 0; i < sigma.minus.length(); ++i) minus[i] = sigma.minus.parts[i];
            for (int i = p - 1; i >= 0; --i)
                w.lambda.push_back(HoweWeight::frac(-k - minus[p - 1 - i], 1));
            for (int i = 0; i < q; ++i)
                w.lambda.push_back(HoweWeight::frac(i < sigma.plus.length() ? sigma.plus.parts[i] : 0, 1));
            return w;
        }
        case Group::O: {
            int n = params.n;
            const Partition& s = sigma.plus;
            auto conj = s.conjugate();
            if (conj.part(0) + conj.part(1) > k || s.length() > n)
                throw std::domain_error("sigma violates the Table 1 constraints");
            std::vector<int> v(n, 0);
            for (int i = 0; i < s.length(); ++i) v[i] = s.parts[i];
            for (int i = 0; i < n; ++i)
                w.lambda.push_back(HoweWeight::frac(-k - 2 * v[n - 1 - i], 2));
            return w;
        }
        case Group::Sp: {
            int n = params.n;
            const Partition& s = sigma.plus;
            if (s.length() > k || s.length() > n)
                throw std::domain_error("sigma violates the Table 1 constraints");
            std::vector<int> v(n, 0);
            for (int i = 0; i < s.length(); ++i) v[i] = s.parts[i];
            for (int i = 0; i < n; ++i)
                w.lambda.push_back(HoweWeight::frac(-k - v[n - 1 - i], 1));
            return w;
        }
        default: throw std::domain_error("howe_weight: use GL, O or Sp");
    }
}

}

#pragma once

#include <map>
#include <string>
#include <vector>

#include "stanley/bigint.hpp"

namespace stanley {

// Sparse integer polynomial in t with arbitrary-precision coefficients.
struct IntPolynomial {
    std::map<int, Bigint> coeff;  // degree -> nonzero coefficient

    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<std::pair<const int, Bigint>> c);
    static IntPolynomial monomial(int deg, Bigint c = 1);
    static IntPolynomial one() { return monomial(0); }

    bool is_zero() const { return coeff.empty(); }
    int degree() const { return coeff.empty() ? -1 : coeff.rbegin()->first; }
    Bigint at(int deg) const;
    Bigint eval_at_one() const;
    bool is_palindromic() const;  // coefficients read the same reversed (nonzero range)

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial&) const = default;

    // exact division; throws std::domain_error when not divisible
    IntPolynomial divide_exact(const IntPolynomial& d) const;
    bool divisible_by(const IntPolynomial& d) const;

    std::string str(const std::string& var = "t") const;
};

// (1 - t^d)^e
IntPolynomial one_minus_t_pow(int d);

struct DenomFactor {
    int d = 1;  // base degree
    int e = 1;  // power
    bool operator==(const DenomFactor&) const = default;
    auto operator<=>(const DenomFactor&) const = default;
};

// numerator / prod (1 - t^d)^e, exact integer arithmetic throughout.
struct RationalSeries {
    IntPolynomial num;
    std::vector<DenomFactor> den;  // canonical: sorted by d, merged, e >= 1

    RationalSeries() = default;
    RationalSeries(IntPolynomial n, std::vector<DenomFactor> d);
    static RationalSeries zero() { return {}; }
    static RationalSeries constant(Bigint c);
    // t^shift / (1-t^d)^e convenience
    static RationalSeries term(IntPolynomial n, int d, int e);

    bool is_zero() const { return num.is_zero(); }
    void canonicalize();
    IntPolynomial denominator_expanded() const;

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries& operator+=(const RationalSeries& o);
    RationalSeries operator*(const RationalSeries& o) const;
    RationalSeries scale(const Bigint& c) const;
    RationalSeries mul_poly(const IntPolynomial& p) const;

    // equality as rational functions: cross-multiplication
    bool equals(const RationalSeries& o) const;

    // Taylor coefficients 0..upto
    std::vector<Bigint> expand(int upto) const;

    // reduced displayed form: divide numerator and denominator by their common
    // (1 - t^d) content, greedily from the largest d present in the denominator
    RationalSeries reduced() const;

    std::string pretty() const;  // e.g. (1+3t^2+6t^4)/(1-t^2)^7
    std::string json() const;    // schema: numerator / denominator / reduced
};

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_scale(const RationalSeries& s, const Bigint& c);

// parse the JSON schema back (round-trip with json())
RationalSeries series_from_json(const std::string& text);

// numerator value at t=1 after exact cancellation of all (1-t) content of the
// reduced form; requires a nonzero series
Bigint bernstein_degree(const RationalSeries& s);

// true iff the reduced displayed form has a palindromic numerator
bool gorenstein_check(const RationalSeries& s);

}

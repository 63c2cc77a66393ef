#include "stanley/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace stanley {

IntPolynomial::IntPolynomial(std::initializer_list<std::pair<const int, Bigint>> c) : coeff(c) {
    for (auto it = coeff.begin(); it != coeff.end();)
        it = it->second == 0 ? coeff.erase(it) : std::next(it);
}

IntPolynomial IntPolynomial::monomial(int deg, Bigint c) {
    IntPolynomial p;
    if (c != 0) p.coeff[deg] = std::move(c);
    return p;
}

Bigint IntPolynomial::at(int deg) const {
    auto it = coeff.find(deg);
    return it == coeff.end() ? Bigint(0) : it->second;
}

Bigint IntPolynomial::eval_at_one() const {
    Bigint s = 0;
    for (auto& [d, c] : coeff) s += c;
    return s;
}

bool IntPolynomial::is_palindromic() const {
    if (coeff.empty()) return true;
    int lo = coeff.begin()->first, hi = coeff.rbegin()->first;
    for (int d = lo; d <= hi; ++d)
        if (at(d) != at(hi + lo - d)) return false;
    return true;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    for (auto& [d, c] : o.coeff) {
        auto& v = coeff[d];
        v += c;
        if (v == 0) coeff.erase(d);
    }
    return *this;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    r += o;
    return r;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& [d, c] : r.coeff) c = -c;
    return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    IntPolynomial r;
    for (auto& [d1, c1] : coeff)
        for (auto& [d2, c2] : o.coeff) {
            auto& v = r.coeff[d1 + d2];
            v += c1 * c2;
        }
    for (auto it = r.coeff.begin(); it != r.coeff.end();)
        it = it->second == 0 ? r.coeff.erase(it) : std::next(it);
    return r;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    IntPolynomial rem = *this, quot;
    int dd = d.degree();
    const Bigint& lead = d.coeff.rbegin()->second;
    while (!rem.is_zero()) {
        int rd = rem.degree();
        if (rd < dd) throw std::domain_error("polynomial division not exact");
        Bigint lc = rem.coeff.rbegin()->second;
        if (lc % lead != 0) throw std::domain_error("polynomial division not exact");
        Bigint q = lc / lead;
        quot.coeff[rd - dd] = q;
        rem += -(d * IntPolynomial::monomial(rd - dd, q));
    }
    return quot;
}

bool IntPolynomial::divisible_by(const IntPolynomial& d) const {
    try {
        divide_exact(d);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

std::string IntPolynomial::str(const std::string& var) const {
    if (coeff.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, c] : coeff) {
        Bigint ab = c < 0 ? Bigint(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (d == 0)
            os << ab.str();
        else {
            if (ab != 1) os << ab.str() << "*";
            os << var;
            if (d != 1) os << "^" << d;
        }
    }
    return os.str();
}

IntPolynomial one_minus_t_pow(int d) {
    IntPolynomial p;
    p.coeff[0] = 1;
    p.coeff[d] = -1;
    return p;
}

RationalSeries::RationalSeries(IntPolynomial n, std::vector<DenomFactor> d)
    : num(std::move(n)), den(std::move(d)) {
    canonicalize();
}

RationalSeries RationalSeries::constant(Bigint c) {
    RationalSeries s;
    s.num = IntPolynomial::monomial(0, std::move(c));
    return s;
}

RationalSeries RationalSeries::term(IntPolynomial n, int d, int e) {
    RationalSeries s;
    s.num = std::move(n);
    if (e > 0) s.den.push_back({d, e});
    s.canonicalize();
    return s;
}

void RationalSeries::canonicalize() {
    if (num.is_zero()) {
        den.clear();
        return;
    }
    std::map<int, int> m;
    for (auto& f : den) {
        if (f.d < 1 || f.e < 0) throw std::domain_error("bad denominator factor");
        m[f.d] += f.e;
    }
    den.clear();
    for (auto& [d, e] : m)
        if (e > 0) den.push_back({d, e});
}

IntPolynomial RationalSeries::denominator_expanded() const {
    IntPolynomial p = IntPolynomial::one();
    for (auto& f : den)
        for (int i = 0; i < f.e; ++i) p = p * one_minus_t_pow(f.d);
    return p;
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // common denominator: factor-wise max
    std::map<int, int> da, db, dc;
    for (auto& f : den) da[f.d] = f.e;
    for (auto& f : o.den) db[f.d] = f.e;
    dc = da;
    for (auto& [d, e] : db) dc[d] = std::max(dc[d], e);
    IntPolynomial na = num, nb = o.num;
    for (auto& [d, e] : dc) {
        int ea = e - (da.count(d) ? da[d] : 0), eb = e - (db.count(d) ? db[d] : 0);
        for (int i = 0; i < ea; ++i) na = na * one_minus_t_pow(d);
        for (int i = 0; i < eb; ++i) nb = nb * one_minus_t_pow(d);
    }
    std::vector<DenomFactor> den2;
    for (auto& [d, e] : dc) den2.push_back({d, e});
    return RationalSeries(na + nb, std::move(den2));
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
    *this = *this + o;
    return *this;
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    std::vector<DenomFactor> d = den;
    d.insert(d.end(), o.den.begin(), o.den.end());
    return RationalSeries(num * o.num, std::move(d));
}

RationalSeries RationalSeries::scale(const Bigint& c) const {
    return RationalSeries(num * IntPolynomial::monomial(0, c), den);
}

RationalSeries RationalSeries::mul_poly(const IntPolynomial& p) const {
    return RationalSeries(num * p, den);
}

bool RationalSeries::equals(const RationalSeries& o) const {
    return num * o.denominator_expanded() == o.num * denominator_expanded();
}

std::vector<Bigint> RationalSeries::expand(int upto) const {
    if (upto < 0) throw std::domain_error("expansion order must be >= 0");
    std::vector<Bigint> c(upto + 1, 0);
    for (auto& [d, v] : num.coeff) {
        if (d < 0) throw std::domain_error("negative degree in numerator");
        if (d <= upto) c[d] += v;
    }
    for (auto& f : den)
        for (int r = 0; r < f.e; ++r)
            for (int i = f.d; i <= upto; ++i) c[i] += c[i - f.d];
    return c;
}

RationalSeries RationalSeries::reduced() const {
    if (is_zero()) return *this;
    RationalSeries s = *this;
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(s.den.begin(), s.den.end(),
                  [](const DenomFactor& a, const DenomFactor& b) { return a.d > b.d; });
        for (auto& f : s.den) {
            while (f.e > 0 && s.num.divisible_by(one_minus_t_pow(f.d))) {
                s.num = s.num.divide_exact(one_minus_t_pow(f.d));
                --f.e;
                changed = true;
            }
        }
        s.canonicalize();
    }
    return s;
}

std::string RationalSeries::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    // numerator without '*' separators, matching the displayed forms
    std::string n = num.str();
    std::string clean;
    for (size_t i = 0; i < n.size(); ++i) {
        if (n[i] == '*') continue;
        clean += n[i];
    }
    // tighten "a + b" -> "a+b"
    std::string tight;
    for (size_t i = 0; i < clean.size(); ++i) {
        if (clean[i] == ' ') continue;
        tight += clean[i];
    }
    if (den.empty()) return tight;
    bool paren = num.coeff.size() > 1;
    os << (paren ? "(" + tight + ")" : tight) << "/";
    for (auto& f : den) {
        os << "(1-t";
        if (f.d != 1) os << "^" << f.d;
        os << ")";
        if (f.e != 1) os << "^" << f.e;
    }
    return os.str();
}

std::string RationalSeries::json() const {
    nlohmann::json j;
    j["numerator"] = nlohmann::json::object();
    for (auto& [d, c] : num.coeff) j["numerator"][std::to_string(d)] = c.str();
    j["denominator"] = nlohmann::json::array();
    for (auto& f : den) j["denominator"].push_back({{"d", f.d}, {"e", f.e}});
    RationalSeries r = reduced();
    j["reduced"] = r.num == num && r.den == den;
    return j.dump();
}

RationalSeries series_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    RationalSeries s;
    for (auto& [k, v] : j["numerator"].items())
        s.num.coeff[std::stoi(k)] = Bigint(v.get<std::string>());
    for (auto& f : j["denominator"]) s.den.push_back({f["d"].get<int>(), f["e"].get<int>()});
    s.canonicalize();
    return s;
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) { return a + b; }
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) { return a * b; }
RationalSeries series_scale(const RationalSeries& s, const Bigint& c) { return s.scale(c); }

Bigint bernstein_degree(const RationalSeries& s) {
    if (s.is_zero()) throw std::domain_error("zero series has no Bernstein degree");
    IntPolynomial n = s.reduced().num;
    while (n.eval_at_one() == 0) n = n.divide_exact(one_minus_t_pow(1));
    return n.eval_at_one();
}

bool gorenstein_check(const RationalSeries& s) {
    return s.reduced().num.is_palindromic();
}

}

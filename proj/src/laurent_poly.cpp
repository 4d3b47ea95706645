#include "sdlab/laurent_poly.hpp"

#include "sdlab/error.hpp"
#include "sdlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sdlab {

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0)
        terms_.emplace(0, Rational(constant));
}

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (constant != 0)
        terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(long exp, const Rational& coeff) {
    LaurentPoly f;
    if (coeff != 0)
        f.terms_.emplace(exp, coeff);
    return f;
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
    LaurentPoly f;
    f.terms_ = std::move(terms);
    for (auto& [e, c] : f.terms_)
        c.canonicalize();
    f.purge();
    return f;
}

LaurentPoly LaurentPoly::from_exponents(std::span<const long> exps) {
    LaurentPoly f;
    for (long e : exps)
        f.terms_[e] += 1;
    f.purge();
    return f;
}

Rational LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

long LaurentPoly::min_exp() const {
    if (terms_.empty())
        throw Error(ErrorKind::InvalidArgument, "min_exp of the zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty())
        throw Error(ErrorKind::InvalidArgument, "max_exp of the zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::purge() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [e1, c1] : lhs.terms_)
        for (const auto& [e2, c2] : rhs.terms_)
            out.terms_[e1 + e2] += c1 * c2;
    out.purge();
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, v] : out.terms_)
        v = -v;
    return out;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), e + k, c);
    return out;
}

LaurentPoly LaurentPoly::substituted_power(long k) const {
    if (k < 1)
        throw Error(ErrorKind::InvalidArgument, "substitution power must be >= 1");
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), e * k, c);
    return out;
}

LaurentPoly LaurentPoly::truncated(long max_exp) const {
    LaurentPoly out;
    out.terms_.insert(terms_.begin(), terms_.upper_bound(max_exp));
    return out;
}

Rational LaurentPoly::coefficient_sum() const {
    Rational s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

double LaurentPoly::abs_coefficient_sum() const {
    double s = 0;
    for (const auto& [e, c] : terms_)
        s += std::abs(c.get_d());
    return s;
}

namespace {

template <class T>
T power(T base, long n) {
    T result(1);
    while (n > 0) {
        if (n & 1)
            result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

// Ascending sweep keeping a running power of x; x^{min} seeds it.
template <class T, class FromCoeff>
T eval_sparse(const LaurentPoly::Terms& terms, const T& x, FromCoeff from_coeff) {
    if (terms.empty())
        return T(0);
    long first = terms.begin()->first;
    T running;
    if (first < 0) {
        T inv = T(1);
        inv /= x;
        running = power(inv, -first);
    } else {
        running = power(x, first);
    }
    long at = first;
    T sum(0);
    for (const auto& [e, c] : terms) {
        running *= power(x, e - at);
        at = e;
        sum += from_coeff(c) * running;
    }
    return sum;
}

} // namespace

Rational LaurentPoly::eval(const Rational& x) const {
    if (x == 0 && !terms_.empty() && terms_.begin()->first < 0)
        throw Error(ErrorKind::InvalidArgument, "evaluating negative powers at 0");
    return eval_sparse<Rational>(terms_, x, [](const Rational& c) { return c; });
}

CxVal LaurentPoly::eval(CxVal z) const {
    return eval_sparse<CxVal>(terms_, z, [](const Rational& c) { return CxVal(c.get_d(), 0.0); });
}

double LaurentPoly::eval(double x) const {
    return eval_sparse<double>(terms_, x, [](const Rational& c) { return c.get_d(); });
}

LaurentPoly pow(const LaurentPoly& f, unsigned n) {
    LaurentPoly result(1);
    for (unsigned i = 0; i < n; ++i)
        result *= f;
    return result;
}

LaurentPoly geom_sum(long m, long step) {
    if (m < 0)
        throw Error(ErrorKind::InvalidArgument, "geometric sum length must be >= 0");
    LaurentPoly::Terms terms;
    for (long i = 0; i < m; ++i)
        terms.emplace_hint(terms.end(), i * step, Rational(1));
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly multisection(const LaurentPoly& f, long n, long r) {
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "multisection modulus must be >= 1");
    long cls = mod(r, n);
    LaurentPoly::Terms terms;
    for (const auto& [e, c] : f.terms())
        if (mod(e, n) == cls)
            terms.emplace_hint(terms.end(), e, c);
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly root_class_sum(const LaurentPoly& f, long n, long k) { return multisection(f, n, k); }

CxVal root_class_sum_float(const LaurentPoly& f, long n, long k, CxVal z) {
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "modulus must be >= 1");
    CxVal sum = 0;
    for (long j = 0; j < n; ++j)
        sum += root_of_unity(n, -j * k) * f.eval(root_of_unity(n, j) * z);
    return sum / static_cast<double>(n);
}

DivisionResult divide(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero())
        throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
    if (num.is_zero())
        return {};
    // Shift both to ordinary polynomials, divide, shift the quotient back.
    long den_low = den.min_exp();
    LaurentPoly d = den.shifted(-den_low);
    long num_low = num.min_exp();
    LaurentPoly r = num.shifted(-num_low);

    long d_deg = d.max_exp();
    Rational d_lead = d.coeff(d_deg);
    LaurentPoly quotient;
    while (!r.is_zero() && r.max_exp() >= d_deg) {
        long e = r.max_exp() - d_deg;
        Rational c = r.coeff(r.max_exp()) / d_lead;
        LaurentPoly term = LaurentPoly::monomial(e, c);
        quotient += term;
        r -= term * d;
    }
    return {quotient.shifted(num_low - den_low), r.shifted(num_low)};
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    DivisionResult res = divide(num, den);
    if (!res.remainder.is_zero())
        throw Error(ErrorKind::InexactDivision,
                    "(" + to_string(num) + ") / (" + to_string(den) + ") leaves remainder " +
                        to_string(res.remainder));
    return std::move(res.quotient);
}

bool rational_eq(const LaurentPoly& fnum, const LaurentPoly& fden, const LaurentPoly& gnum,
                 const LaurentPoly& gden) {
    if (fden.is_zero() || gden.is_zero())
        throw Error(ErrorKind::InvalidArgument, "zero denominator in rational_eq");
    return fnum * gden == gnum * fden;
}

double max_abs_diff(const LaurentPoly& f, const LaurentPoly& g) {
    double worst = 0;
    const auto diff = f - g;
    for (const auto& [e, c] : diff.terms())
        worst = std::max(worst, std::abs(c.get_d()));
    return worst;
}

std::string to_string(const LaurentPoly& f, char var) {
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = mag == 1;
        if (!unit || e == 0)
            os << mag.get_str();
        if (e != 0) {
            if (!unit)
                os << '*';
            os << var;
            if (e != 1)
                os << '^' << e;
        }
    }
    return os.str();
}

} // namespace sdlab

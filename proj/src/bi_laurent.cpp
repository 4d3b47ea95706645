#include "sdlab/bi_laurent.hpp"

#include "sdlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sdlab {

BiLaurent::BiLaurent(long constant) {
    if (constant != 0)
        terms_.emplace(Exponent{0, 0}, Rational(constant));
}

BiLaurent::BiLaurent(const Rational& constant) {
    if (constant != 0)
        terms_.emplace(Exponent{0, 0}, constant);
}

BiLaurent BiLaurent::monomial(long q_exp, long t_exp, const Rational& coeff) {
    BiLaurent f;
    if (coeff != 0)
        f.terms_.emplace(Exponent{q_exp, t_exp}, coeff);
    return f;
}

BiLaurent BiLaurent::from_terms(Terms terms) {
    BiLaurent f;
    f.terms_ = std::move(terms);
    for (auto& [e, c] : f.terms_)
        c.canonicalize();
    f.purge();
    return f;
}

BiLaurent BiLaurent::embed(const LaurentPoly& f, Var var) {
    BiLaurent out;
    for (const auto& [e, c] : f.terms())
        out.terms_.emplace(var == Var::q ? Exponent{e, 0} : Exponent{0, e}, c);
    return out;
}

Rational BiLaurent::coeff(long q_exp, long t_exp) const {
    auto it = terms_.find(Exponent{q_exp, t_exp});
    return it == terms_.end() ? Rational(0) : it->second;
}

long BiLaurent::min_q_exp() const {
    if (terms_.empty())
        throw Error(ErrorKind::InvalidArgument, "min_q_exp of the zero polynomial");
    // Keys are ordered by q exponent first.
    return terms_.begin()->first.first;
}

void BiLaurent::purge() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& rhs) {
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

BiLaurent& BiLaurent::operator-=(const BiLaurent& rhs) {
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

BiLaurent operator*(const BiLaurent& lhs, const BiLaurent& rhs) {
    BiLaurent out;
    for (const auto& [e1, c1] : lhs.terms_)
        for (const auto& [e2, c2] : rhs.terms_)
            out.terms_[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
    out.purge();
    return out;
}

BiLaurent& BiLaurent::operator*=(const BiLaurent& rhs) { return *this = *this * rhs; }

BiLaurent& BiLaurent::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

BiLaurent BiLaurent::operator-() const {
    BiLaurent out = *this;
    for (auto& [e, v] : out.terms_)
        v = -v;
    return out;
}

BiLaurent BiLaurent::shifted(long dq, long dt) const {
    BiLaurent out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), Exponent{e.first + dq, e.second + dt}, c);
    return out;
}

BiLaurent BiLaurent::substituted_q_power(long k) const {
    if (k < 1)
        throw Error(ErrorKind::InvalidArgument, "substitution power must be >= 1");
    BiLaurent out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), Exponent{e.first * k, e.second}, c);
    return out;
}

namespace {

template <class T>
T int_power(const T& x, long n) {
    T base(1);
    T result(1);
    if (n < 0) {
        base /= x;
        n = -n;
    } else {
        base = x;
    }
    while (n > 0) {
        if (n & 1)
            result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

} // namespace

Rational BiLaurent::eval(const Rational& q, const Rational& t) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        if ((q == 0 && e.first < 0) || (t == 0 && e.second < 0))
            throw Error(ErrorKind::InvalidArgument, "evaluating negative powers at 0");
        Rational term = c * int_power(q, e.first);
        term *= int_power(t, e.second);
        sum += term;
    }
    return sum;
}

CxVal BiLaurent::eval(CxVal q, CxVal t) const {
    CxVal sum = 0;
    for (const auto& [e, c] : terms_)
        sum += c.get_d() * int_power(q, e.first) * int_power(t, e.second);
    return sum;
}

BiLaurent pow(const BiLaurent& f, unsigned n) {
    BiLaurent result(1);
    for (unsigned i = 0; i < n; ++i)
        result *= f;
    return result;
}

BiLaurent geom_quotient(long m, Var var) { return BiLaurent::embed(geom_sum(m), var); }

double max_abs_diff(const BiLaurent& f, const BiLaurent& g) {
    double worst = 0;
    const auto diff = f - g;
    for (const auto& [e, c] : diff.terms())
        worst = std::max(worst, std::abs(c.get_d()));
    return worst;
}

std::string to_string(const BiLaurent& f) {
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
        bool constant = e.first == 0 && e.second == 0;
        if (!unit || constant)
            os << mag.get_str();
        bool need_star = !unit;
        for (auto [var, exp] : {std::pair{'q', e.first}, std::pair{'t', e.second}}) {
            if (exp == 0)
                continue;
            if (need_star)
                os << '*';
            os << var;
            if (exp != 1)
                os << '^' << exp;
            need_star = true;
        }
    }
    return os.str();
}

} // namespace sdlab

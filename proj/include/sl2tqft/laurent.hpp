// Exact integer Laurent polynomials in q, the value ring of balanced
// K-theory classes. Also the bivariate image under q -> uv.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl2tqft {

using Int = boost::multiprecision::cpp_int;

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

// Integer Laurent polynomial. Invariant: no stored coefficient is zero,
// so equality is equality of the term maps.
class LaurentPoly {
public:
    using Terms = std::map<int, Int>;

    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) terms_[0] = c; }          // NOLINT(google-explicit-constructor)
    LaurentPoly(Int c) { if (c != 0) terms_[0] = std::move(c); } // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(Int c, int exp) {
        LaurentPoly p;
        if (c != 0) p.terms_[exp] = std::move(c);
        return p;
    }
    static LaurentPoly q(int exp = 1) { return monomial(1, exp); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

    Int coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }
    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    // multiply by the unit q^k
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    LaurentPoly pow(int n) const {
        if (n < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
        LaurentPoly r(1), base = *this;
        for (; n > 0; n >>= 1) {
            if (n & 1) r *= base;
            if (n > 1) base *= base;
        }
        return r;
    }

    // Exact division in Z[q, q^-1]; throws NotDivisible when the remainder
    // is nonzero. Both operands are shifted by units to ordinary polynomials
    // first, then long division runs over Z.
    friend LaurentPoly exact_div(const LaurentPoly& x, const LaurentPoly& y) {
        if (y.is_zero()) throw std::invalid_argument("exact_div: division by zero");
        if (x.is_zero()) return {};
        // z*y = x forces min/max exponent arithmetic; work with shifted copies.
        LaurentPoly rem = x.shifted(-x.min_exp());
        const LaurentPoly d = y.shifted(-y.min_exp());
        const int dd = d.max_exp();
        const Int& dl = d.terms_.rbegin()->second;
        LaurentPoly quot;
        while (!rem.is_zero() && rem.max_exp() >= dd) {
            const Int& rl = rem.terms_.rbegin()->second;
            if (rl % dl != 0) throw NotDivisible(to_string(x) + " / " + to_string(y));
            const Int c = rl / dl;
            const int e = rem.max_exp() - dd;
            quot.add_term(e, c);
            rem -= d * monomial(c, e);
        }
        if (!rem.is_zero()) throw NotDivisible(to_string(x) + " / " + to_string(y));
        return quot.shifted(x.min_exp() - y.min_exp());
    }

    bool divisible_by(const LaurentPoly& y) const {
        try { (void)exact_div(*this, y); return true; } catch (const NotDivisible&) { return false; }
    }

    // Exact evaluation at a nonzero integer. Negative exponents are cleared
    // by a power of n; the final division must be exact.
    Int eval_int(const Int& n) const {
        if (n == 0) throw std::invalid_argument("eval_int: q = 0 (negative exponents exist)");
        if (terms_.empty()) return 0;
        const int m = std::min(0, min_exp());
        Int acc = 0;
        for (const auto& [e, c] : terms_) {
            Int p = 1;
            for (int i = 0; i < e - m; ++i) p *= n;
            acc += c * p;
        }
        Int den = 1;
        for (int i = 0; i < -m; ++i) den *= n;
        if (acc % den != 0)
            throw NotDivisible("eval_int: value is not an integer at q = " + n.str());
        return acc / den;
    }

    // Canonical text: descending exponents, explicit signs, caret exponents.
    friend std::string to_string(const LaurentPoly& p) {
        if (p.terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            const bool neg = c < 0;
            Int a = neg ? Int(-c) : c;
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            first = false;
            if (e == 0) { os << a.str(); continue; }
            if (a != 1) os << a.str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

    // Parses the canonical form (whitespace tolerant): e.g. "q^4 + 4*q^3 - q".
    static LaurentPoly parse(const std::string& s) {
        LaurentPoly r;
        size_t i = 0;
        auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
        skip_ws();
        if (i == s.size()) throw std::invalid_argument("LaurentPoly::parse: empty input");
        bool any = false;
        while (i < s.size()) {
            skip_ws();
            int sign = 1;
            if (s[i] == '+' || s[i] == '-') {
                if (s[i] == '-') sign = -1;
                ++i;
                skip_ws();
            } else if (any) {
                throw std::invalid_argument("LaurentPoly::parse: expected +/- at '" + s.substr(i) + "'");
            }
            Int coef = 1;
            bool saw_num = false;
            if (i < s.size() && std::isdigit((unsigned char)s[i])) {
                size_t j = i;
                while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
                coef = Int(s.substr(i, j - i));
                i = j;
                saw_num = true;
                skip_ws();
                if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
            }
            int exp = 0;
            if (i < s.size() && s[i] == 'q') {
                ++i;
                exp = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    int es = 1;
                    if (i < s.size() && (s[i] == '-' || s[i] == '+')) { if (s[i] == '-') es = -1; ++i; }
                    size_t j = i;
                    while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
                    if (j == i) throw std::invalid_argument("LaurentPoly::parse: bad exponent");
                    exp = es * std::atoi(s.substr(i, j - i).c_str());
                    i = j;
                }
            } else if (!saw_num) {
                throw std::invalid_argument("LaurentPoly::parse: expected term at '" + s.substr(i) + "'");
            }
            r.add_term(exp, sign * coef);
            any = true;
            skip_ws();
        }
        return r;
    }

private:
    void add_term(int e, Int c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

inline LaurentPoly q_pow(int e) { return LaurentPoly::q(e); }

// q - 1 and q + 1, the localized primes, and E(SL2) = q^3 - q.
inline LaurentPoly q_minus_1() { return LaurentPoly::q() - LaurentPoly(1); }
inline LaurentPoly q_plus_1() { return LaurentPoly::q() + LaurentPoly(1); }
inline LaurentPoly sl2_class() { return LaurentPoly::q(3) - LaurentPoly::q(); }

// (q - c) | p iff p(c) = 0; only c = +-1 is ever needed and the sum is exact.
inline bool divisible_by_q_minus(const LaurentPoly& p, int c) {
    Int s = 0;
    for (const auto& [e, co] : p.terms()) s += (c == 1 || e % 2 == 0) ? co : -co;
    return s == 0;
}

// Exact synthetic division by (q - c), c = +-1; caller guarantees divisibility.
inline LaurentPoly div_by_q_minus(const LaurentPoly& p, int c) {
    if (p.is_zero()) return {};
    const int lo = p.min_exp(), hi = p.max_exp();
    std::vector<Int> a(size_t(hi - lo + 1));
    for (const auto& [e, co] : p.terms()) a[e - lo] = co;
    LaurentPoly out;
    Int carry = 0;  // runs top-down: b_i = a_{i+1} + c*b_{i+1}
    for (int i = hi - lo; i >= 1; --i) {
        carry = a[i] + (c == 1 ? carry : -carry);
        out += LaurentPoly::monomial(carry, i - 1 + lo);
    }
    return out;
}

// Polynomial in u, v with integer coefficients; image of q under q -> uv.
class BivariatePoly {
public:
    using Key = std::pair<int, int>;  // (u-exponent, v-exponent)
    using Terms = std::map<Key, Int>;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BivariatePoly& a, const BivariatePoly& b) { return !(a == b); }

    void add_term(int eu, int ev, Int c) {
        if (c == 0) return;
        const Key k{eu, ev};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Exact evaluation; negative exponents are cleared by a common power of
    // u and v before the (single, exact) final division.
    Int eval_int(const Int& u, const Int& v) const {
        if (terms_.empty()) return 0;
        int mu = 0, mv = 0;
        for (const auto& [k, c] : terms_) {
            mu = std::min(mu, k.first);
            mv = std::min(mv, k.second);
        }
        if ((mu < 0 && u == 0) || (mv < 0 && v == 0))
            throw std::invalid_argument("BivariatePoly::eval_int: zero base with negative exponent");
        auto pow_of = [](const Int& b, int e) {
            Int x = 1;
            for (int i = 0; i < e; ++i) x *= b;
            return x;
        };
        Int acc = 0;
        for (const auto& [k, c] : terms_)
            acc += c * pow_of(u, k.first - mu) * pow_of(v, k.second - mv);
        const Int den = pow_of(u, -mu) * pow_of(v, -mv);
        if (acc % den != 0) throw NotDivisible("BivariatePoly::eval_int: non-integral value");
        return acc / den;
    }

    friend std::string to_string(const BivariatePoly& p) {
        if (p.terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            const bool neg = c < 0;
            Int a = neg ? Int(-c) : c;
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            first = false;
            std::string vars;
            auto app = [&](const char* v, int e) {
                if (e == 0) return;
                if (!vars.empty()) vars += "*";
                vars += v;
                if (e != 1) vars += "^" + std::to_string(e);
            };
            app("u", k.first);
            app("v", k.second);
            if (vars.empty()) { os << a.str(); continue; }
            if (a != 1) os << a.str() << "*";
            os << vars;
        }
        return os.str();
    }

private:
    Terms terms_;
};

// q -> uv, term by term: c*q^k becomes c*u^k*v^k.
inline BivariatePoly to_bivariate(const LaurentPoly& p) {
    BivariatePoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, e, c);
    return r;
}

}  // namespace sl2tqft

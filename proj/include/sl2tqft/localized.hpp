// Scalars of the reduced TQFT: Laurent polynomials divided by
// (q-1)^a (q+1)^b, kept in the normalized form where neither factor
// divides the numerator while its exponent is positive.

#pragma once

#include "laurent.hpp"

namespace sl2tqft {

class LocalizedScalar {
public:
    LocalizedScalar() = default;
    LocalizedScalar(LaurentPoly num) : num_(std::move(num)) {}   // NOLINT(google-explicit-constructor)
    LocalizedScalar(long c) : num_(c) {}                          // NOLINT(google-explicit-constructor)
    LocalizedScalar(LaurentPoly num, int a, int b) : num_(std::move(num)), a_(a), b_(b) {
        if (a < 0 || b < 0) throw std::invalid_argument("LocalizedScalar: negative denominator exponent");
        normalize();
    }

    const LaurentPoly& num() const { return num_; }
    int a() const { return a_; }
    int b() const { return b_; }

    bool is_zero() const { return num_.is_zero(); }
    // a = b = 0 iff the value lies in the Laurent ring
    bool is_polynomial() const { return a_ == 0 && b_ == 0; }

    // The normalized form is unique (Z[q,q^-1] is a UFD and q-1, q+1 are
    // primes), so equality is field-wise.
    friend bool operator==(const LocalizedScalar& x, const LocalizedScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.num_ == y.num_;
    }
    friend bool operator!=(const LocalizedScalar& x, const LocalizedScalar& y) { return !(x == y); }

    friend LocalizedScalar operator+(const LocalizedScalar& x, const LocalizedScalar& y) {
        const int a = std::max(x.a_, y.a_), b = std::max(x.b_, y.b_);
        LaurentPoly n = x.num_ * q_minus_1().pow(a - x.a_) * q_plus_1().pow(b - x.b_)
                      + y.num_ * q_minus_1().pow(a - y.a_) * q_plus_1().pow(b - y.b_);
        return LocalizedScalar(std::move(n), a, b);
    }
    friend LocalizedScalar operator-(const LocalizedScalar& x, const LocalizedScalar& y) { return x + (-y); }
    friend LocalizedScalar operator-(const LocalizedScalar& x) {
        LocalizedScalar r = x;
        r.num_ = -r.num_;
        return r;
    }
    friend LocalizedScalar operator*(const LocalizedScalar& x, const LocalizedScalar& y) {
        return LocalizedScalar(x.num_ * y.num_, x.a_ + y.a_, x.b_ + y.b_);
    }
    LocalizedScalar& operator+=(const LocalizedScalar& o) { return *this = *this + o; }
    LocalizedScalar& operator-=(const LocalizedScalar& o) { return *this = *this - o; }
    LocalizedScalar& operator*=(const LocalizedScalar& o) { return *this = *this * o; }

    // Exact division by another scalar; the quotient must again lie in the
    // localized ring. Unit factors q^k, (q-1)^j, (q+1)^k of the divisor are
    // peeled off; the remaining integer-content core must divide exactly.
    friend LocalizedScalar exact_div(const LocalizedScalar& x, const LocalizedScalar& y) {
        if (y.is_zero()) throw std::invalid_argument("exact_div: division by zero");
        if (x.is_zero()) return {};
        LaurentPoly core = y.num_.shifted(-y.num_.min_exp());
        int shift = y.num_.min_exp(), j = 0, k = 0;
        while (divisible_by_q_minus(core, 1)) { core = div_by_q_minus(core, 1); ++j; }
        while (divisible_by_q_minus(core, -1)) { core = div_by_q_minus(core, -1); ++k; }
        // x / y = x * (q-1)^{ya-j} (q+1)^{yb-k} q^{-shift} / core
        LaurentPoly n = exact_div(x.num_.shifted(-shift), core);
        int a = x.a_ - y.a_ + j, b = x.b_ - y.b_ + k;
        if (a < 0) n = n * q_minus_1().pow(-a), a = 0;
        if (b < 0) n = n * q_plus_1().pow(-b), b = 0;
        return LocalizedScalar(std::move(n), a, b);
    }

    // Requires the value to be a plain Laurent polynomial.
    const LaurentPoly& as_laurent() const {
        if (!is_polynomial())
            throw NotDivisible("LocalizedScalar: residual denominator (q-1)^" + std::to_string(a_) +
                               "(q+1)^" + std::to_string(b_) + " on " + to_string(num_));
        return num_;
    }

    friend std::string to_string(const LocalizedScalar& x) {
        if (x.is_polynomial()) return to_string(x.num_);
        std::string den;
        if (x.a_ > 0) den += "(q - 1)" + (x.a_ > 1 ? "^" + std::to_string(x.a_) : "");
        if (x.b_ > 0) {
            if (!den.empty()) den += "*";
            den += "(q + 1)" + (x.b_ > 1 ? "^" + std::to_string(x.b_) : "");
        }
        return "(" + to_string(x.num_) + ") / (" + den + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) { a_ = b_ = 0; return; }
        while (a_ > 0 && divisible_by_q_minus(num_, 1)) { num_ = div_by_q_minus(num_, 1); --a_; }
        while (b_ > 0 && divisible_by_q_minus(num_, -1)) { num_ = div_by_q_minus(num_, -1); --b_; }
    }

    LaurentPoly num_;
    int a_ = 0;
    int b_ = 0;
};

}  // namespace sl2tqft

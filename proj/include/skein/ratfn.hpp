#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "skein/bilaurent.hpp"

namespace skein {

// An element of Q(alpha, s) in canonical reduced form:
//   * den is an ordinary polynomial with zero minimum exponents and leading
//     coefficient +1 under the fixed monomial order,
//   * gcd(num, den) = 1 after shifting num to the ordinary ring,
//   * num carries the Laurent monomial prefactor.
// Two values are equal iff their representations are identical.
class RatFn {
  public:
    RatFn() : den_(1) {}
    RatFn(long c) : num_(c), den_(1) {}  // NOLINT: implicit by design
    explicit RatFn(const Rat& c) : num_(c), den_(1) {}
    RatFn(BiLaurent num, BiLaurent den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero();
        canonicalize();
    }
    explicit RatFn(BiLaurent num) : num_(std::move(num)), den_(1) {}

    static RatFn monomial(const Rat& c, int32_t a_exp, int32_t s_exp) {
        RatFn r;
        r.num_ = BiLaurent::monomial(c, a_exp, s_exp);
        return r;
    }
    static RatFn alpha(int32_t k = 1) { return monomial(Rat(1), k, 0); }
    static RatFn s(int32_t k = 1) { return monomial(Rat(1), 0, k); }

    const BiLaurent& num() const { return num_; }
    const BiLaurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // Field semantics: every nonzero element is invertible.
    bool is_invertible() const { return !is_zero(); }

    friend bool operator==(const RatFn& x, const RatFn& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const RatFn& x, const RatFn& y) { return !(x == y); }
    friend bool operator<(const RatFn& x, const RatFn& y) {
        if (x.num_ != y.num_) return x.num_ < y.num_;
        return x.den_ < y.den_;
    }

    friend RatFn operator+(const RatFn& x, const RatFn& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        RatFn r;
        if (x.den_ == y.den_) {
            r.num_ = x.num_ + y.num_;
            r.den_ = x.den_;
        } else {
            const BiLaurent g = gcd(x.den_, y.den_);
            const BiLaurent yd = divexact(y.den_, g), xd = divexact(x.den_, g);
            r.num_ = x.num_ * yd + y.num_ * xd;
            r.den_ = x.den_ * yd;
        }
        r.canonicalize();
        return r;
    }
    friend RatFn operator-(const RatFn& x, const RatFn& y) { return x + (-y); }
    friend RatFn operator-(const RatFn& x) {
        RatFn r = x;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFn operator*(const RatFn& x, const RatFn& y) {
        if (x.is_zero() || y.is_zero()) return RatFn();
        RatFn r;
        // Cross-cancel to keep the final gcd small.
        const BiLaurent g1 = gcd(x.num_, y.den_), g2 = gcd(y.num_, x.den_);
        r.num_ = divexact(x.num_, g1) * divexact(y.num_, g2);
        r.den_ = divexact(x.den_, g2) * divexact(y.den_, g1);
        r.canonicalize();
        return r;
    }

    friend RatFn operator/(const RatFn& x, const RatFn& y) {
        if (y.is_zero()) throw DivisionByZero();
        RatFn inv;
        inv.num_ = y.den_;
        inv.den_ = y.num_;
        inv.canonicalize();
        return x * inv;
    }

    RatFn& operator+=(const RatFn& y) { return *this = *this + y; }
    RatFn& operator-=(const RatFn& y) { return *this = *this - y; }
    RatFn& operator*=(const RatFn& y) { return *this = *this * y; }
    RatFn& operator/=(const RatFn& y) { return *this = *this / y; }

    RatFn inverse() const {
        if (is_zero()) throw DivisionByZero();
        RatFn r;
        r.num_ = den_;
        r.den_ = num_;
        r.canonicalize();
        return r;
    }

    RatFn pow(int k) const {
        if (k == 0) return RatFn(1);
        RatFn base = k > 0 ? *this : inverse();
        int e = k > 0 ? k : -k;
        RatFn r(1);
        while (e > 0) {
            if (e & 1) r *= base;
            base = e > 1 ? base * base : base;
            e >>= 1;
        }
        return r;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        std::string n = num_.str();
        if (num_.term_count() > 1) n = "(" + n + ")";
        std::string d = den_.str();
        if (den_.term_count() > 1) d = "(" + d + ")";
        return n + " / " + d;
    }
    friend std::ostream& operator<<(std::ostream& os, const RatFn& r) { return os << r.str(); }

  private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = BiLaurent(1);
            return;
        }
        const Exp mn = num_.min_exp(), md = den_.min_exp();
        num_.shift(Exp{0, 0} - mn);
        den_.shift(Exp{0, 0} - md);
        const BiLaurent g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
            // Renormalize minimum exponents dropped by the gcd split.
            num_.shift(Exp{0, 0} - num_.min_exp());
            den_.shift(Exp{0, 0} - den_.min_exp());
        }
        const Rat lc = den_.leading().second;
        num_.scale(Rat(1) / lc);
        den_.scale(Rat(1) / lc);
        num_.shift(mn - md);
    }

    BiLaurent num_;
    BiLaurent den_;
};

enum class ArithOp { add, sub, mul, div };

inline RatFn arith(const RatFn& x, const RatFn& y, ArithOp op) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
    }
    throw Error("unknown arithmetic op");
}

inline RatFn s_minus_sinv() { return RatFn::s(1) - RatFn::s(-1); }

// Value of a disjoint contractible unknot:
// delta = (alpha - alpha^-1)/(s - s^-1) + 1.
inline RatFn loop_value() {
    return (RatFn::alpha(1) - RatFn::alpha(-1)) / s_minus_sinv() + RatFn(1);
}

}  // namespace skein

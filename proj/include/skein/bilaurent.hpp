#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

// Exponent pair of a monomial alpha^a * s^s_.  Ordered by graded lex with
// alpha > s; any fixed total order works, this one is conventional.
struct Exp {
    int32_t a = 0;
    int32_t s = 0;

    friend bool operator==(const Exp& x, const Exp& y) { return x.a == y.a && x.s == y.s; }
    friend bool operator!=(const Exp& x, const Exp& y) { return !(x == y); }
    friend bool operator<(const Exp& x, const Exp& y) {
        const int64_t dx = int64_t(x.a) + x.s, dy = int64_t(y.a) + y.s;
        if (dx != dy) return dx < dy;
        if (x.a != y.a) return x.a < y.a;
        return x.s < y.s;
    }
    Exp operator+(const Exp& o) const { return Exp{a + o.a, s + o.s}; }
    Exp operator-(const Exp& o) const { return Exp{a - o.a, s - o.s}; }
};

// Laurent polynomial in alpha, s over Q.  Zero coefficients are never stored;
// the zero polynomial is the empty map.
class BiLaurent {
  public:
    using TermMap = std::map<Exp, Rat>;

    BiLaurent() = default;
    explicit BiLaurent(long c) {
        if (c != 0) terms_[Exp{0, 0}] = Rat(c);
    }
    explicit BiLaurent(const Rat& c) {
        if (!skein::is_zero(c)) terms_[Exp{0, 0}] = c;
    }
    static BiLaurent monomial(const Rat& c, int32_t a, int32_t s) {
        BiLaurent p;
        if (!skein::is_zero(c)) p.terms_[Exp{a, s}] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0} && terms_.begin()->second == 1;
    }
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }

    // Leading term in the fixed monomial order.
    const std::pair<const Exp, Rat>& leading() const { return *terms_.rbegin(); }

    Exp min_exp() const {
        Exp m{INT32_MAX, INT32_MAX};
        for (const auto& [e, c] : terms_) {
            m.a = std::min(m.a, e.a);
            m.s = std::min(m.s, e.s);
        }
        return m;
    }
    Exp max_exp() const {
        Exp m{INT32_MIN, INT32_MIN};
        for (const auto& [e, c] : terms_) {
            m.a = std::max(m.a, e.a);
            m.s = std::max(m.s, e.s);
        }
        return m;
    }

    void add_term(const Exp& e, const Rat& c) {
        if (skein::is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (skein::is_zero(it->second)) terms_.erase(it);
        }
    }

    BiLaurent& operator+=(const BiLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    BiLaurent& operator-=(const BiLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend BiLaurent operator+(BiLaurent x, const BiLaurent& y) { return x += y; }
    friend BiLaurent operator-(BiLaurent x, const BiLaurent& y) { return x -= y; }
    friend BiLaurent operator-(const BiLaurent& x) {
        BiLaurent r;
        for (const auto& [e, c] : x.terms_) r.terms_[e] = -c;
        return r;
    }

    friend BiLaurent operator*(const BiLaurent& x, const BiLaurent& y) {
        BiLaurent r;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_) r.add_term(ex + ey, cx * cy);
        return r;
    }
    BiLaurent& operator*=(const BiLaurent& o) { return *this = *this * o; }

    void scale(const Rat& c) {
        if (skein::is_zero(c)) {
            terms_.clear();
            return;
        }
        for (auto& [e, v] : terms_) v *= c;
    }
    void shift(const Exp& by) {
        if (by.a == 0 && by.s == 0) return;
        TermMap shifted;
        for (const auto& [e, c] : terms_) shifted.emplace(e + by, c);
        terms_ = std::move(shifted);
    }

    friend bool operator==(const BiLaurent& x, const BiLaurent& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const BiLaurent& x, const BiLaurent& y) { return !(x == y); }
    friend bool operator<(const BiLaurent& x, const BiLaurent& y) {
        auto i = x.terms_.begin(), j = y.terms_.begin();
        for (; i != x.terms_.end() && j != y.terms_.end(); ++i, ++j) {
            if (i->first != j->first) return i->first < j->first;
            if (i->second != j->second) return i->second < j->second;
        }
        return j != y.terms_.end();
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Print leading terms first.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rat& c = it->second;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            Rat ac = abs(c);
            const Exp& e = it->first;
            const bool unit_coeff = (ac == 1) && !(e.a == 0 && e.s == 0);
            if (!unit_coeff) os << ac.get_str();
            bool coeff_printed = !unit_coeff;
            auto put_var = [&](const char* v, int32_t k) {
                if (k == 0) return;
                if (coeff_printed) os << "*";
                os << v;
                if (k != 1) os << "^" << k;
                coeff_printed = true;
            };
            put_var("a", e.a);
            put_var("s", e.s);
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const BiLaurent& p) { return os << p.str(); }

  private:
    TermMap terms_;
};

namespace detail {

// Dense recursive form: coeffs[i] is the Q[alpha]-coefficient of s^i, each
// itself a dense vector in alpha.  Used only by gcd and exact division.
using APoly = std::vector<Rat>;

inline void apoly_trim(APoly& p) {
    while (!p.empty() && skein::is_zero(p.back())) p.pop_back();
}
inline int apoly_deg(const APoly& p) { return int(p.size()) - 1; }
inline bool apoly_is_zero(const APoly& p) { return p.empty(); }

inline APoly apoly_mul(const APoly& x, const APoly& y) {
    if (x.empty() || y.empty()) return {};
    APoly r(x.size() + y.size() - 1, Rat(0));
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    apoly_trim(r);
    return r;
}

inline APoly apoly_sub(APoly x, const APoly& y) {
    if (x.size() < y.size()) x.resize(y.size(), Rat(0));
    for (size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
    apoly_trim(x);
    return x;
}

inline void apoly_make_monic(APoly& p) {
    if (p.empty()) return;
    Rat lc = p.back();
    for (auto& c : p) c /= lc;
}

// Euclidean gcd in Q[alpha], monic result.
inline APoly apoly_gcd(APoly x, APoly y) {
    apoly_trim(x);
    apoly_trim(y);
    while (!y.empty()) {
        // x mod y with y monic.
        apoly_make_monic(y);
        while (x.size() >= y.size() && !x.empty()) {
            Rat q = x.back();
            size_t off = x.size() - y.size();
            for (size_t i = 0; i < y.size(); ++i) x[off + i] -= q * y[i];
            apoly_trim(x);
        }
        std::swap(x, y);
    }
    if (!x.empty()) apoly_make_monic(x);
    return x;
}

// x / y in Q[alpha]; requires exact divisibility.
inline APoly apoly_divexact(APoly x, APoly y) {
    apoly_trim(x);
    apoly_trim(y);
    if (y.empty()) throw Error("apoly_divexact: division by zero");
    if (x.empty()) return {};
    APoly q(x.size() >= y.size() ? x.size() - y.size() + 1 : 0, Rat(0));
    while (!x.empty() && x.size() >= y.size()) {
        Rat c = x.back() / y.back();
        size_t off = x.size() - y.size();
        q[off] = c;
        for (size_t i = 0; i < y.size(); ++i) x[off + i] -= c * y[i];
        apoly_trim(x);
    }
    if (!x.empty()) throw Error("apoly_divexact: not divisible");
    apoly_trim(q);
    return q;
}

using SPoly = std::vector<APoly>;  // index: degree in s

inline void spoly_trim(SPoly& p) {
    while (!p.empty() && apoly_is_zero(p.back())) p.pop_back();
}

inline SPoly to_spoly(const BiLaurent& p) {
    // Requires ordinary (non-negative) exponents.
    SPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (size_t(e.s) >= r.size()) r.resize(e.s + 1);
        APoly& row = r[e.s];
        if (size_t(e.a) >= row.size()) row.resize(e.a + 1, Rat(0));
        row[e.a] = c;
    }
    for (auto& row : r) apoly_trim(row);
    spoly_trim(r);
    return r;
}

inline BiLaurent from_spoly(const SPoly& p) {
    BiLaurent r;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p[i].size(); ++j)
            if (!skein::is_zero(p[i][j])) r.add_term(Exp{int32_t(j), int32_t(i)}, p[i][j]);
    return r;
}

inline APoly spoly_content(const SPoly& p) {
    APoly g;
    for (const auto& row : p) {
        g = apoly_gcd(g, row);
        if (apoly_deg(g) == 0) break;
    }
    return g;
}

inline SPoly spoly_div_apoly(const SPoly& p, const APoly& d) {
    SPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = apoly_divexact(p[i], d);
    return r;
}

inline SPoly spoly_mul_apoly(const SPoly& p, const APoly& m) {
    SPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = apoly_mul(p[i], m);
    spoly_trim(r);
    return r;
}

// Pseudo-remainder of x by y in (Q[alpha])[s].
inline SPoly spoly_prem(SPoly x, const SPoly& y) {
    spoly_trim(x);
    const int dy = int(y.size()) - 1;
    const APoly& lcy = y.back();
    while (int(x.size()) - 1 >= dy && !x.empty()) {
        const int dx = int(x.size()) - 1;
        APoly lcx = x.back();
        // x := lcy * x - lcx * s^(dx-dy) * y
        SPoly xs = spoly_mul_apoly(x, lcy);
        SPoly sub(dx + 1);
        for (int i = 0; i <= dy; ++i) sub[i + dx - dy] = apoly_mul(y[i], lcx);
        x.assign(std::max(xs.size(), sub.size()), APoly{});
        for (size_t i = 0; i < x.size(); ++i) {
            APoly v = i < xs.size() ? xs[i] : APoly{};
            if (i < sub.size()) v = apoly_sub(std::move(v), sub[i]);
            x[i] = std::move(v);
        }
        spoly_trim(x);
        if (int(x.size()) - 1 == dx) throw Error("spoly_prem: no degree drop");
    }
    return x;
}

// Primitive-PRS gcd in (Q[alpha])[s] for primitive inputs.
inline SPoly spoly_gcd_primitive(SPoly x, SPoly y) {
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        SPoly r = spoly_prem(x, y);
        x = std::move(y);
        if (!r.empty()) {
            APoly c = spoly_content(r);
            r = spoly_div_apoly(r, c);
        }
        y = std::move(r);
    }
    return x;
}

}  // namespace detail

// Gcd of two Laurent polynomials, as an ordinary primitive polynomial with
// zero minimum exponents.  Defined up to a rational unit; canonicalization of
// callers fixes the unit.
inline BiLaurent gcd(const BiLaurent& x, const BiLaurent& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    BiLaurent a = x, b = y;
    a.shift(Exp{0, 0} - a.min_exp());
    b.shift(Exp{0, 0} - b.min_exp());
    if (a.is_monomial() || b.is_monomial()) return BiLaurent(1);
    if (a == b) return a;
    detail::SPoly sa = detail::to_spoly(a), sb = detail::to_spoly(b);
    detail::APoly ca = detail::spoly_content(sa), cb = detail::spoly_content(sb);
    sa = detail::spoly_div_apoly(sa, ca);
    sb = detail::spoly_div_apoly(sb, cb);
    detail::SPoly g = detail::spoly_gcd_primitive(sa, sb);
    detail::APoly cg = detail::spoly_content(g);
    g = detail::spoly_div_apoly(g, cg);
    detail::APoly cc = detail::apoly_gcd(ca, cb);
    BiLaurent r = detail::from_spoly(detail::spoly_mul_apoly(g, cc));
    r.shift(Exp{0, 0} - r.min_exp());
    return r;
}

// Exact division; requires y | x over the Laurent ring.
inline BiLaurent divexact(const BiLaurent& x, const BiLaurent& y) {
    if (y.is_zero()) throw DivisionByZero();
    if (x.is_zero()) return BiLaurent();
    if (y.is_monomial()) {
        const auto& [e, c] = *y.terms().begin();
        BiLaurent r = x;
        r.shift(Exp{0, 0} - e);
        r.scale(Rat(1) / c);
        return r;
    }
    // Shift to the ordinary polynomial ring; a divisible quotient of
    // min-exponent-zero polynomials is again ordinary, which bounds the
    // long division below.
    const Exp mx = x.min_exp(), my = y.min_exp();
    BiLaurent rem = x, d = y;
    rem.shift(Exp{0, 0} - mx);
    d.shift(Exp{0, 0} - my);
    BiLaurent q;
    const auto& [ly_e, ly_c] = d.leading();
    while (!rem.is_zero()) {
        const auto& [lr_e, lr_c] = rem.leading();
        Exp qe = lr_e - ly_e;
        if (qe.a < 0 || qe.s < 0) throw Error("divexact: not divisible");
        Rat qc = lr_c / ly_c;
        q.add_term(qe, qc);
        BiLaurent t = d;
        t.shift(qe);
        t.scale(qc);
        rem -= t;
        if (!rem.is_zero() && !(rem.leading().first < lr_e))
            throw Error("divexact: not divisible");
    }
    q.shift(mx - my);
    return q;
}

}  // namespace skein

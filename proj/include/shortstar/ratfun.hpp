#pragma once

#include <string>
#include <type_traits>
#include <utility>

#include "shortstar/polynomial.hpp"

namespace shortstar {

// Rational function num/den over the field F in the variable Var.
// Canonical form: gcd(num,den)=1 and den monic, so structural equality is
// field equality. Zero is 0/1.
template <class F, char Var>
class RatFun {
public:
    using poly_type = Poly<F, Var>;

    RatFun() : den_(1) {}
    RatFun(long n) : num_(n), den_(1) {}  // NOLINT
    RatFun(Rational r) requires(!std::is_same_v<F, Rational>)
        : num_(std::move(r)), den_(1) {}  // NOLINT
    explicit RatFun(F constant) : num_(std::move(constant)), den_(1) {}
    explicit RatFun(poly_type num) : num_(std::move(num)), den_(1) {}
    RatFun(poly_type num, poly_type den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFun gen() { return RatFun(poly_type::gen()); }

    const poly_type& num() const { return num_; }
    const poly_type& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    const poly_type& as_poly() const {
        if (!den_.is_one()) throw Error("value is not polynomial: " + to_string());
        return num_;
    }

    RatFun conj() const {
        RatFun r;
        r.num_ = num_.conj();
        r.den_ = den_.conj();
        return r;
    }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    // Addition keeps fractions canonical without a full normalizing gcd:
    // with g = gcd(d1,d2), the only factor the sum can share with the
    // denominator sits inside g (d1/g and d2/g are coprime to everything).
    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.num_.is_zero()) return b;
        if (b.num_.is_zero()) return a;
        if (a.den_ == b.den_) {
            if (a.den_.is_one()) return raw(a.num_ + b.num_, a.den_);
            poly_type t = a.num_ + b.num_;
            if (t.is_zero()) return RatFun();
            poly_type h = gcd(t, a.den_);
            if (h.is_one()) return raw(std::move(t), a.den_);
            return raw(divexact(t, h), divexact(a.den_, h));
        }
        if (a.den_.is_one()) return raw(a.num_ * b.den_ + b.num_, b.den_);
        if (b.den_.is_one()) return raw(b.num_ * a.den_ + a.num_, a.den_);
        poly_type g = gcd(a.den_, b.den_);
        if (g.is_one())
            return raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        poly_type d1r = divexact(a.den_, g);
        poly_type d2r = divexact(b.den_, g);
        poly_type t = a.num_ * d2r + b.num_ * d1r;
        if (t.is_zero()) return RatFun();
        poly_type h = gcd(t, g);
        if (h.is_one()) return raw(std::move(t), a.den_ * d2r);
        return raw(divexact(t, h), divexact(a.den_, h) * d2r);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return RatFun();
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ * b.num_, a.den_);
        // Cross-reduce; the four remaining pairs are coprime, so the product
        // is already canonical.
        poly_type g1 = gcd(a.num_, b.den_);
        poly_type g2 = gcd(b.num_, a.den_);
        poly_type n = (g1.is_one() ? a.num_ : divexact(a.num_, g1)) *
                      (g2.is_one() ? b.num_ : divexact(b.num_, g2));
        poly_type d = (g2.is_one() ? a.den_ : divexact(a.den_, g2)) *
                      (g1.is_one() ? b.den_ : divexact(b.den_, g1));
        return raw(std::move(n), std::move(d));
    }
    RatFun inverse() const {
        if (is_zero()) throw DivisionByZero();
        F lead = num_.leading();
        if (lead.is_one()) return raw(den_, num_);
        return raw(den_.scaled(F(1) / lead), num_.scaled(F(1) / lead));
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    // d/dVar.
    RatFun derivative() const {
        if (den_.is_one()) return RatFun(num_.derivative());
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Evaluate (or embed) at x in a field K constructible from F.
    template <class K>
    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d.is_zero()) throw PoleAtParameter(to_string());
        return num_.eval(x) / d;
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::string to_string() const {
        if constexpr (std::is_same_v<F, Rational>) {
            // Clear rational content so values print with integer coefficients,
            // e.g. (l^2+2*l)/3 rather than 1/3*l^2+2/3*l.
            if (num_.is_zero()) return "0";
            auto [np, ns] = integer_normalized(num_);
            auto [dp, ds] = integer_normalized(den_);
            Rational scale = ns / ds;  // value = scale * np/dp
            poly_type n = np.scaled(Rational(scale.num()));
            poly_type d = dp.scaled(Rational(scale.den()));
            std::string nstr = n.to_string();
            if (d.is_one()) return nstr;
            nstr = maybe_paren(nstr);
            if (d.is_constant()) return nstr + "/" + d.to_string();
            return nstr + "/(" + d.to_string() + ")";
        } else {
            if (den_.is_one()) return num_.to_string();
            return maybe_paren(num_.to_string()) + "/(" + den_.to_string() + ")";
        }
    }

private:
    // Construct a fraction already known to be canonical (coprime, den monic).
    static RatFun raw(poly_type num, poly_type den) {
        RatFun r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = poly_type(1);
            return;
        }
        if (!den_.is_one()) {
            poly_type g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = divexact(num_, g);
                den_ = divexact(den_, g);
            }
            if (!den_.leading().is_one()) {
                F inv = F(1) / den_.leading();
                num_ = num_.scaled(inv);
                den_ = den_.scaled(inv);
            }
        }
    }

    poly_type num_;
    poly_type den_;
};

template <class F, char Var>
std::string to_string(const RatFun<F, Var>& f) { return f.to_string(); }

// Derivative with respect to a coefficient-level parameter: d is applied to
// every coefficient, the variable Var is treated as a constant.
template <class F, char Var, class DFn>
RatFun<F, Var> coeff_derivative(const RatFun<F, Var>& f, DFn d) {
    using P = Poly<F, Var>;
    auto dpoly = [&](const P& p) {
        std::vector<F> c;
        c.reserve(static_cast<std::size_t>(p.degree()) + 1);
        for (int k = 0; k <= p.degree(); ++k) c.push_back(d(p.coeff(k)));
        return P(std::move(c));
    };
    if (f.den().is_one()) return RatFun<F, Var>(dpoly(f.num()));
    return RatFun<F, Var>(dpoly(f.num()) * f.den() - f.num() * dpoly(f.den()),
                          f.den() * f.den());
}

// The concrete tower used throughout: Q, Q(l), Q(l)(w), Q(w), Q(q), Q(l)(w)(t).
using Q = Rational;
using Ql = RatFun<Q, 'l'>;
using Qw = RatFun<Q, 'w'>;
using Qq = RatFun<Q, 'q'>;
using Qlw = RatFun<Ql, 'w'>;
using Qlwt = RatFun<Qlw, 't'>;

}  // namespace shortstar

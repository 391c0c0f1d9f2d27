#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "shortstar/errors.hpp"

namespace shortstar {

// Exact rational number backed by GMP. Thin value wrapper so that generic
// field code never sees gmpxx expression templates, and so that every
// coefficient field in the tower exposes the same surface:
// ctor from long / string, +,-,*,/, is_zero/is_one, conj, to_string.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw DivisionByZero();
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    // Exact parse of "p", "-p/q". No decimals.
    explicit Rational(const std::string& s) {
        if (v_.set_str(s, 10) != 0) throw Error("cannot parse rational: '" + s + "'");
        if (v_.get_den() == 0) throw DivisionByZero();
        v_.canonicalize();
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    Rational conj() const { return *this; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1) / v_);
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline std::string to_string(const Rational& r) { return r.to_string(); }

}  // namespace shortstar

#pragma once

#include <string>

#include "shortstar/rational.hpp"

namespace shortstar {

// F(i): elements re + im*i over a real coefficient field F.
template <class F>
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long n) : re_(n) {}  // NOLINT
    Gaussian(Rational r) : re_(std::move(r)) {}  // NOLINT
    Gaussian(F re, F im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return Gaussian(F(0), F(1)); }

    const F& re() const { return re_; }
    const F& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Gaussian conj() const { return Gaussian(re_, -im_); }

    Gaussian operator-() const { return Gaussian(-re_, -im_); }
    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    Gaussian inverse() const {
        if (is_zero()) throw DivisionByZero();
        F n = re_ * re_ + im_ * im_;
        return Gaussian(re_ / n, -im_ / n);
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * b.inverse(); }
    Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
    Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
    Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    std::string to_string() const {
        using shortstar::to_string;
        if (im_.is_zero()) return to_string(re_);
        std::string im = to_string(im_) + "*i";
        if (re_.is_zero()) return im;
        if (im[0] == '-') return to_string(re_) + im;
        return to_string(re_) + "+" + im;
    }

private:
    F re_{0};
    F im_{0};
};

template <class F>
std::string to_string(const Gaussian<F>& g) { return g.to_string(); }

using GaussianRational = Gaussian<Rational>;

}  // namespace shortstar

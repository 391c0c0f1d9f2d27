#pragma once

#include <algorithm>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "shortstar/rational.hpp"

namespace shortstar {

inline std::string maybe_paren(const std::string& s) {
    // Wrap if the rendering has top-level structure (+, -, /) that would bind
    // wrong as a coefficient or numerator.
    for (std::size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (c == '/' || c == '+') return "(" + s + ")";
        if (c == '-' && k > 0) return "(" + s + ")";
    }
    return s;
}

// Dense univariate polynomial over a field F in the variable named Var.
// Invariant: trailing (highest-degree) coefficient nonzero; zero polynomial
// is the empty coefficient list.
template <class F, char Var>
class Poly {
public:
    Poly() = default;
    Poly(long n) { if (n != 0) c_.push_back(F(n)); }  // NOLINT
    Poly(Rational r) requires(!std::is_same_v<F, Rational>) {  // NOLINT
        F f(std::move(r));
        if (!f.is_zero()) c_.push_back(std::move(f));
    }
    explicit Poly(F constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly gen() { return monomial(F(1), 1); }
    static Poly monomial(F coeff, int deg) {
        Poly p;
        if (!coeff.is_zero()) {
            p.c_.assign(static_cast<std::size_t>(deg) + 1, F(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    const F& leading() const { return c_.back(); }
    F coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return F(0);
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<F>& coeffs() const { return c_; }
    F constant_term() const { return coeff(0); }

    Poly conj() const {
        Poly p = *this;
        for (auto& c : p.c_) c = c.conj();
        return p;
    }

    Poly operator-() const {
        Poly p = *this;
        for (auto& c : p.c_) c = -c;
        return p;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t k = 0; k < r.c_.size(); ++k) {
            if (k < a.c_.size()) r.c_[k] += a.c_[k];
            if (k < b.c_.size()) r.c_[k] += b.c_[k];
        }
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const F& s) const {
        if (s.is_zero()) return Poly();
        Poly p = *this;
        for (auto& c : p.c_) c = c * s;
        return p;
    }

    Poly pow(int e) const {
        Poly r(1);
        Poly b = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
        }
        return r;
    }

    // Euclidean division; F is a field so this is always defined for b != 0.
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero();
        Poly q, r = a;
        if (r.degree() >= b.degree())
            q.c_.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, F(0));
        F lb_inv = F(1) / b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            F f = r.leading() * lb_inv;
            q.c_[static_cast<std::size_t>(k)] = f;
            for (int j = 0; j <= b.degree(); ++j)
                r.c_[static_cast<std::size_t>(j + k)] -= f * b.c_[static_cast<std::size_t>(j)];
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    // Exact division; throws if the remainder is nonzero.
    friend Poly divexact(const Poly& a, const Poly& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw Error("divexact: nonzero remainder");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(F(1) / leading());
    }

    friend Poly gcd(const Poly& a, const Poly& b) {
        Poly x = a, y = b;
        while (!y.is_zero()) {
            auto [q, r] = divrem(x, y);
            (void)q;
            x = std::move(y);
            y = std::move(r);
        }
        return x.monic();
    }

    Poly derivative() const {
        Poly p;
        if (c_.size() <= 1) return p;
        p.c_.resize(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) p.c_[k - 1] = c_[k] * F(static_cast<long>(k));
        p.trim();
        return p;
    }

    // Horner evaluation into any field K constructible from F.
    template <class K>
    K eval(const K& x) const {
        K acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + K(c_[k]);
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string() const {
        using shortstar::to_string;
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const F& c = c_[static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            std::string cs = maybe_paren(to_string(c));
            std::string term;
            if (k == 0) {
                term = to_string(c);
            } else {
                std::string var = (k == 1) ? std::string(1, Var)
                                           : std::string(1, Var) + "^" + std::to_string(k);
                if (cs == "1") term = var;
                else if (cs == "-1") term = "-" + var;
                else term = cs + "*" + var;
            }
            if (out.empty()) out = term;
            else if (term[0] == '-') out += term;
            else out += "+" + term;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

template <class F, char Var>
std::string to_string(const Poly<F, Var>& p) { return p.to_string(); }

// Writes p = scale * q with q having coprime integer coefficients and positive
// leading coefficient. Display helper for rational-coefficient polynomials.
template <char Var>
std::pair<Poly<Rational, Var>, Rational> integer_normalized(const Poly<Rational, Var>& p) {
    if (p.is_zero()) return {p, Rational(1)};
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = l;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        num_gcd = g;
    }
    Rational scale(mpq_class(num_gcd, den_lcm));
    if (p.leading().sign() < 0) scale = -scale;
    std::vector<Rational> q;
    q.reserve(static_cast<std::size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) q.push_back(p.coeff(k) / scale);
    return {Poly<Rational, Var>(std::move(q)), scale};
}

// Newton interpolation through the first degree_bound+1 points; every extra
// point is checked against the result.
template <class F, char Var>
Poly<F, Var> interpolate(const std::vector<std::pair<F, F>>& points, int degree_bound) {
    if (degree_bound < 0) throw Error("interpolate: negative degree bound");
    std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
    if (points.size() < need) throw Error("interpolate: not enough points");
    // Divided differences.
    std::vector<F> xs, dd;
    for (std::size_t k = 0; k < need; ++k) {
        xs.push_back(points[k].first);
        dd.push_back(points[k].second);
    }
    for (std::size_t level = 1; level < need; ++level)
        for (std::size_t k = need - 1; k >= level; --k)
            dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
    Poly<F, Var> result;
    Poly<F, Var> basis(1);
    const Poly<F, Var> x = Poly<F, Var>::gen();
    for (std::size_t k = 0; k < need; ++k) {
        result += basis.scaled(dd[k]);
        basis *= x - Poly<F, Var>(xs[k]);
    }
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (result.eval(points[k].first) != points[k].second)
            throw InconsistentSamples("point " + std::to_string(k) +
                                      " off the degree-" + std::to_string(degree_bound) + " fit");
    }
    return result;
}

}  // namespace shortstar

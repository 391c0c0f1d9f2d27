#pragma once

#include <string>
#include <vector>

#include "shortstar/linalg.hpp"
#include "shortstar/ratfun.hpp"

namespace shortstar {

// Sum_{n>=0} n^k w^n as an exact rational function; denominator (1-w)^{k+1}.
// S_0 is the geometric series, S_k = w * d/dw S_{k-1}.
inline const Qw& power_sum(int k) {
    if (k < 0) throw Error("power_sum: negative exponent");
    static std::vector<Qw> cache;
    if (cache.empty()) {
        Qw one_minus_w = Qw(1) - Qw::gen();
        cache.push_back(Qw(1) / one_minus_w);
    }
    while (static_cast<int>(cache.size()) <= k)
        cache.push_back(Qw::gen() * cache.back().derivative());
    return cache[static_cast<std::size_t>(k)];
}

// First `count` Taylor coefficients of f at 0; requires den(0) != 0.
template <class F, char V>
std::vector<F> series_prefix(const RatFun<F, V>& f, int count) {
    const auto& num = f.num();
    const auto& den = f.den();
    F d0 = den.coeff(0);
    if (d0.is_zero()) throw PoleAtParameter("series expansion at 0");
    F d0_inv = F(1) / d0;
    std::vector<F> c;
    c.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        F acc = num.coeff(k);
        for (int j = 1; j <= den.degree() && j <= k; ++j)
            acc = acc - den.coeff(j) * c[static_cast<std::size_t>(k - j)];
        c.push_back(acc * d0_inv);
    }
    return c;
}

// Reconstructs P/Q with deg P <= num_bound, deg Q <= den_bound, Q(0)=1, whose
// series expansion reproduces the entire prefix. The linear solve uses the
// window [num_bound+1, num_bound+den_bound]; everything else in the prefix is
// surplus and is verified term by term.
template <class F, char V>
RatFun<F, V> reconstruct_rational(const std::vector<F>& prefix, int num_bound, int den_bound) {
    if (num_bound < 0 || den_bound < 0) throw Error("reconstruct_rational: negative bound");
    int need = num_bound + den_bound + 2;
    if (static_cast<int>(prefix.size()) < need)
        throw Error("reconstruct_rational: prefix too short (" + std::to_string(prefix.size()) +
                    " < " + std::to_string(need) + ")");
    auto coeff = [&](int k) -> F {
        if (k < 0 || k >= static_cast<int>(prefix.size())) return F(0);
        return prefix[static_cast<std::size_t>(k)];
    };
    // q_0 = 1; unknown q_1..q_D from sum_j q_j c_{k-j} = 0, k in the window.
    Matrix<F> a(den_bound, den_bound);
    std::vector<F> rhs;
    for (int row = 0; row < den_bound; ++row) {
        int k = num_bound + 1 + row;
        for (int j = 1; j <= den_bound; ++j) a(row, j - 1) = coeff(k - j);
        rhs.push_back(-coeff(k));
    }
    auto qsol = solve(a, rhs);
    if (!qsol) throw NotRational("denominator system inconsistent");
    std::vector<F> qc(static_cast<std::size_t>(den_bound) + 1, F(0));
    qc[0] = F(1);
    for (int j = 1; j <= den_bound; ++j) qc[static_cast<std::size_t>(j)] = (*qsol)[static_cast<std::size_t>(j - 1)];
    Poly<F, V> q(std::move(qc));
    std::vector<F> pc(static_cast<std::size_t>(num_bound) + 1, F(0));
    for (int k = 0; k <= num_bound; ++k) {
        F acc(0);
        for (int j = 0; j <= q.degree() && j <= k; ++j) acc += q.coeff(j) * coeff(k - j);
        pc[static_cast<std::size_t>(k)] = acc;
    }
    RatFun<F, V> result(Poly<F, V>(std::move(pc)), std::move(q));
    // Verify against the whole prefix, surplus terms included.
    std::vector<F> expansion = series_prefix(result, static_cast<int>(prefix.size()));
    for (std::size_t k = 0; k < prefix.size(); ++k)
        if (expansion[k] != prefix[k])
            throw NotRational("surplus term " + std::to_string(k) + " mismatches");
    return result;
}

// Sum_{n>=0} P(n) w^n for a polynomial P, evaluated with w embedded in (or
// specialized to) the field K. Closed form through power sums; exact.
template <class K>
K polynomial_power_series(const Poly<K, 'n'>& p, const K& w) {
    K acc(0);
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k).is_zero()) continue;
        acc += p.coeff(k) * power_sum(k).template eval<K>(w);
    }
    return acc;
}

}  // namespace shortstar

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "shortstar/linalg.hpp"
#include "shortstar/series.hpp"
#include "shortstar/sl2.hpp"

namespace shortstar {

// --- Verma module with symbolic layer index -------------------------------
//
// Action on the basis v_n: h v_n = (lambda-2n) v_n, f v_n = v_{n+1},
// e v_n = n(lambda-n+1) v_{n-1}. Reduced basis keys are diagonal only for
// pure h-powers, so the diagonal matrix element of a reduced element is the
// polynomial sum of (lambda-2n)^b over its h^b keys.
template <class K>
Poly<K, 'n'> verma_diagonal(const PBWElement<K>& a, const K& lambda) {
    Poly<K, 'n'> out;
    Poly<K, 'n'> eigen(std::vector<K>{lambda, K(-2)});
    for (const auto& [k, c] : a.terms()) {
        if (k.f != 0 || k.e != 0) continue;
        out += eigen.pow(k.h).scaled(c);
    }
    return out;
}

// Matrices of the (n+1)-dimensional irreducible; same action rules truncated.
inline Matrix<Q> rep_generator(long n, char gen) {
    int dim = static_cast<int>(n) + 1;
    Matrix<Q> m(dim, dim);
    for (long k = 0; k <= n; ++k) {
        if (gen == 'h') m(static_cast<int>(k), static_cast<int>(k)) = Rational(n - 2 * k);
        if (gen == 'f' && k < n) m(static_cast<int>(k + 1), static_cast<int>(k)) = Rational(1);
        if (gen == 'e' && k > 0)
            m(static_cast<int>(k - 1), static_cast<int>(k)) = Rational(k * (n - k + 1));
    }
    return m;
}

inline Matrix<Q> rep_matrix(long n, const PBWElement<Q>& a) {
    int dim = static_cast<int>(n) + 1;
    Matrix<Q> e = rep_generator(n, 'e'), f = rep_generator(n, 'f'), h = rep_generator(n, 'h');
    Matrix<Q> out(dim, dim);
    for (const auto& [k, c] : a.terms()) {
        Matrix<Q> m = Matrix<Q>::identity(dim);
        for (int i = 0; i < k.f; ++i) m = m * f;
        for (int i = 0; i < k.h; ++i) m = m * h;
        for (int i = 0; i < k.e; ++i) m = m * e;
        out = out + m.scaled(c);
    }
    return out;
}

inline Q matrix_trace(const Matrix<Q>& m) {
    Q t(0);
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

// Exact trace of a over the (n+1)-dimensional irreducible, lambda = n.
inline Q findim_trace(const PBWElement<Q>& a, long n) {
    return matrix_trace(rep_matrix(n, a));
}

// Specialize coefficients at a numeric lambda.
inline PBWElement<Q> specialize_lambda(const PBWElement<Ql>& a, const Q& at) {
    PBWElement<Q> out;
    for (const auto& [k, c] : a.terms()) out.add_term(k, c.template eval<Q>(at));
    return out;
}

// --- trace functionals -----------------------------------------------------

// A linear functional on the quotient algebra determined by its values on
// reduced basis keys, tagged with its twist. Key values are memoized; the
// functional itself is immutable.
template <class K>
class SlTrace {
public:
    SlTrace(std::string name, Sl2Auto<K> twist, bool torus_weight_vanishing, bool normalized,
            std::function<K(const PBWKey&)> key_value)
        : name_(std::move(name)),
          twist_(std::move(twist)),
          kills_nonzero_weight_(torus_weight_vanishing),
          normalized_(normalized),
          key_value_(std::move(key_value)),
          memo_(std::make_shared<Memo>()) {}

    const std::string& name() const { return name_; }
    const Sl2Auto<K>& twist() const { return twist_; }
    bool kills_nonzero_weight() const { return kills_nonzero_weight_; }
    bool normalized() const { return normalized_; }

    K value(const PBWKey& k) const {
        if (kills_nonzero_weight_ && k.weight() != 0) return K(0);
        std::lock_guard<std::mutex> lock(memo_->mu);
        auto it = memo_->values.find(k);
        if (it != memo_->values.end()) return it->second;
        K v = key_value_(k);
        memo_->values.emplace(k, v);
        return v;
    }

    K operator()(const PBWElement<K>& a) const {
        K acc(0);
        for (const auto& [k, c] : a.terms()) acc += c * value(k);
        return acc;
    }

private:
    struct Memo {
        std::mutex mu;
        std::map<PBWKey, K> values;
    };
    std::string name_;
    Sl2Auto<K> twist_;
    bool kills_nonzero_weight_;
    bool normalized_;
    std::function<K(const PBWKey&)> key_value_;
    std::shared_ptr<Memo> memo_;
};

// T(a) = (1-w) sum_n (v_n^*, a v_n) w^n for the highest-weight module at
// lambda_value (the quotient parameter and the module parameter coincide up
// to lambda <-> -lambda-2, which labels the same algebra). Twist: f -> wf,
// e -> e/w, h -> h.
template <class K>
SlTrace<K> make_verma_trace(const Sl2Algebra<K>& alg, const K& w, const K& lambda_value,
                            const std::string& name) {
    K one_minus_w = K(1) - w;
    return SlTrace<K>(
        name, alg.torus_auto(w), /*torus_weight_vanishing=*/true, /*normalized=*/true,
        [w, one_minus_w, lambda_value](const PBWKey& k) -> K {
            if (k.f != 0 || k.e != 0) return K(0);
            Poly<K, 'n'> eigen(std::vector<K>{lambda_value, K(-2)});
            return one_minus_w * polynomial_power_series(eigen.pow(k.h), w);
        });
}

template <class K>
SlTrace<K> make_verma_trace(const Sl2Algebra<K>& alg, const K& w) {
    return make_verma_trace(alg, w, alg.lambda(), "verma");
}
template <class K>
SlTrace<K> make_verma_trace_dual(const Sl2Algebra<K>& alg, const K& w) {
    return make_verma_trace(alg, w, -alg.lambda() - K(2), "verma-dual");
}

namespace detail {
// Interpolates n -> samples(n)/(n+1) with the stated degree bound, fitting
// bound+1 points and checking two surplus ones, then evaluates at lambda.
template <class K>
K interpolate_normalized_trace(int degree_bound, const K& lambda,
                               const std::function<Q(long)>& sample) {
    std::vector<std::pair<Q, Q>> pts;
    for (long n = 0; n <= degree_bound + 2; ++n)
        pts.push_back({Rational(n), sample(n) / Rational(n + 1)});
    Poly<Q, 'l'> fit = interpolate<Q, 'l'>(pts, degree_bound);
    return fit.eval(lambda);
}
}  // namespace detail

// Untwisted trace: the normalized character, interpolated in the highest
// weight. Polynomial in lambda; degree bound m+1 for a key of degree 2m.
template <class K>
SlTrace<K> make_untwisted_trace(const Sl2Algebra<K>& alg) {
    K lambda = alg.lambda();
    return SlTrace<K>(
        "untwisted", alg.identity_auto(), /*torus_weight_vanishing=*/true, /*normalized=*/true,
        [lambda](const PBWKey& k) -> K {
            if (k.f != 0 || k.e != 0) return K(0);
            int b = k.h;
            return detail::interpolate_normalized_trace<K>(b + 1, lambda, [b](long n) {
                Q acc(0);
                for (long j = 0; j <= n; ++j) {
                    Q term(1);
                    for (int t = 0; t < b; ++t) term *= Rational(n - 2 * j);
                    acc += term;
                }
                return acc;
            });
        });
}

// Unipotent twist exp(c e) acting on the irreducible, normalized by the
// dimension and interpolated in the highest weight; polynomial in lambda.
template <class K>
SlTrace<K> make_jordan_trace(const Sl2Algebra<K>& alg, const Q& c) {
    K lambda = alg.lambda();
    return SlTrace<K>(
        "jordan", alg.unipotent_auto(K(c)), /*torus_weight_vanishing=*/false,
        /*normalized=*/true, [lambda, c](const PBWKey& k) -> K {
            // Only the exp(c e) term balancing the key's weight survives the
            // trace, so the traced element has degree 2(2 max(f,e) + h).
            int m = 2 * std::max(k.f, k.e) + k.h;
            return detail::interpolate_normalized_trace<K>(m + 1, lambda, [&](long n) {
                // g = exp(c e) on the irreducible; e is nilpotent so the sum
                // is finite and exact.
                int dim = static_cast<int>(n) + 1;
                Matrix<Q> en = rep_generator(n, 'e');
                Matrix<Q> g(dim, dim);
                Matrix<Q> pw = Matrix<Q>::identity(dim);
                Q coef(1);  // c^j / j!
                for (int j = 0; j <= static_cast<int>(n); ++j) {
                    if (j > 0) {
                        pw = pw * en;
                        coef = coef * c / Rational(j);
                        if (pw.is_zero() || coef.is_zero()) break;
                    }
                    g = g + pw.scaled(coef);
                }
                PBWElement<Q> key_elem;
                key_elem.add_term(k, Q(1));
                return matrix_trace(rep_matrix(n, key_elem) * g);
            });
        });
}

// d/dlambda of the Verma family at lambda = -1; a twisted trace for the same
// torus twist, with T(1) = 0. Scalars live in Q(w).
inline SlTrace<Qw> make_derivative_trace(const Sl2Algebra<Qw>& alg) {
    Qw w = Qw::gen();
    return SlTrace<Qw>(
        "verma-derivative", alg.torus_auto(w), /*torus_weight_vanishing=*/true,
        /*normalized=*/false, [](const PBWKey& k) -> Qw {
            if (k.f != 0 || k.e != 0) return Qw(0);
            // Build T_lambda^w(h^b) symbolically, differentiate in lambda,
            // evaluate at lambda = -1.
            Qlw wsym = Qlw::gen();
            Poly<Qlw, 'n'> eigen(std::vector<Qlw>{Qlw(Ql::gen()), Qlw(Rational(-2))});
            Qlw value = (Qlw(1) - wsym) * polynomial_power_series(eigen.pow(k.h), wsym);
            Qlw deriv = coeff_derivative(value, [](const Ql& c) { return c.derivative(); });
            auto eval_l = [](const Poly<Ql, 'w'>& p) {
                std::vector<Q> out;
                for (int j = 0; j <= p.degree(); ++j)
                    out.push_back(p.coeff(j).template eval<Q>(Rational(-1)));
                return Poly<Q, 'w'>(std::move(out));
            };
            return Qw(eval_l(deriv.num()), eval_l(deriv.den()));
        });
}

// --- verification ----------------------------------------------------------

struct CheckOutcome {
    bool pass = true;
    std::string witness;
};

// Checks T(uv) = T(v g(u)) on all reduced-basis pairs with total degree
// <= cap. For weight-preserving twists, pairs of nonzero total weight vanish
// on both sides and are skipped.
template <class K>
CheckOutcome verify_twisted_trace(const Sl2Algebra<K>& alg, const SlTrace<K>& trace, int cap) {
    auto keys = Sl2Algebra<K>::basis_upto(cap);
    for (const auto& ku : keys) {
        auto u = Sl2Algebra<K>::monomial(ku);
        auto gu = alg.apply_auto(trace.twist(), u);
        for (const auto& kv : keys) {
            if (ku.filtration_degree() + kv.filtration_degree() > cap) continue;
            if (trace.kills_nonzero_weight() && ku.weight() + kv.weight() != 0) continue;
            auto v = Sl2Algebra<K>::monomial(kv);
            K lhs = trace(alg.multiply(u, v));
            K rhs = trace(alg.multiply(v, gu));
            if (lhs != rhs)
                return {false, "(" + ku.to_string() + ", " + kv.to_string() + "): T(uv) = " +
                                   to_string(lhs) + " vs T(v g(u)) = " + to_string(rhs)};
        }
    }
    return {};
}

struct ProbeReport {
    int dimension = 0;          // null space rank projected to F_{cap-2}
    bool spanned_by_verma = false;
    int raw_null_dimension = 0;
};

// Solves the truncated twisted-trace constraints at numeric parameters: the
// unknowns are the values on reduced keys of degree <= cap, one homogeneous
// row per basis pair. Consistency is judged on F_{cap-2} where truncation
// cannot leak.
inline ProbeReport trace_space_probe(const Q& lambda, const Q& w, int cap) {
    Sl2Algebra<Q> alg(lambda);
    auto keys = Sl2Algebra<Q>::basis_upto(cap);
    std::map<PBWKey, int> index;
    for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = static_cast<int>(i);
    auto torus = alg.torus_auto(w);

    std::vector<std::vector<Q>> rows;
    for (const auto& ku : keys)
        for (const auto& kv : keys) {
            if (ku.filtration_degree() + kv.filtration_degree() > cap) continue;
            auto u = Sl2Algebra<Q>::monomial(ku);
            auto v = Sl2Algebra<Q>::monomial(kv);
            PBWElement<Q> diff =
                alg.multiply(u, v) - alg.multiply(v, alg.apply_auto(torus, u));
            if (diff.is_zero()) continue;
            std::vector<Q> row(keys.size(), Q(0));
            for (const auto& [k, c] : diff.terms()) row[static_cast<std::size_t>(index.at(k))] = c;
            rows.push_back(std::move(row));
        }
    Matrix<Q> a(static_cast<int>(rows.size()), static_cast<int>(keys.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < keys.size(); ++j) a(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    auto null_basis = null_space(a);

    // Restrict to keys of degree <= cap-2 and measure the span.
    std::vector<int> low;
    for (std::size_t j = 0; j < keys.size(); ++j)
        if (keys[j].filtration_degree() <= cap - 2) low.push_back(static_cast<int>(j));

    auto verma = make_verma_trace(alg, w);
    auto verma2 = make_verma_trace_dual(alg, w);
    std::vector<std::vector<Q>> span_rows;
    for (const auto* t : {&verma, &verma2}) {
        std::vector<Q> r;
        for (int j : low) r.push_back((*t).value(keys[static_cast<std::size_t>(j)]));
        span_rows.push_back(std::move(r));
    }
    auto rank_of = [&](const std::vector<std::vector<Q>>& rws) {
        Matrix<Q> m(static_cast<int>(rws.size()), static_cast<int>(low.size()));
        for (std::size_t i = 0; i < rws.size(); ++i)
            for (std::size_t j = 0; j < rws[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = rws[i][j];
        return rref(m).rank;
    };

    ProbeReport rep;
    rep.raw_null_dimension = static_cast<int>(null_basis.size());
    std::vector<std::vector<Q>> null_projected;
    for (const auto& v : null_basis) {
        std::vector<Q> r;
        for (int j : low) r.push_back(v[static_cast<std::size_t>(j)]);
        null_projected.push_back(std::move(r));
    }
    rep.dimension = rank_of(null_projected);
    std::vector<std::vector<Q>> combined = span_rows;
    combined.insert(combined.end(), null_projected.begin(), null_projected.end());
    rep.spanned_by_verma = rank_of(combined) == rank_of(span_rows);
    return rep;
}

}  // namespace shortstar

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shortstar/cone.hpp"
#include "shortstar/linalg.hpp"
#include "shortstar/series.hpp"

namespace shortstar {

// --- symplectic matrices -------------------------------------------------

// Poisson bivector matrix in interleaved coordinates (x_1,y_1,...,x_n,y_n):
// one [[0,-1],[1,0]] block per pair, i.e. {y,x} = 1.
template <class K>
Matrix<K> poisson_matrix(int pairs) {
    Matrix<K> p(2 * pairs, 2 * pairs);
    for (int i = 0; i < pairs; ++i) {
        p(2 * i, 2 * i + 1) = K(-1);
        p(2 * i + 1, 2 * i) = K(1);
    }
    return p;
}

// Membership test for sp(V): omega(Bv,w) + omega(v,Bw) = 0, equivalently
// B Pi + Pi B^T = 0 for the bivector matrix Pi.
template <class K>
bool is_sp(const Matrix<K>& b) {
    if (b.rows() != b.cols() || b.rows() % 2 != 0) return false;
    Matrix<K> pi = poisson_matrix<K>(b.rows() / 2);
    return (b * pi + pi * b.transpose()).is_zero();
}

// B = (1+g)(1-g)^{-1}; defined when 1-g is invertible.
template <class K>
Matrix<K> cayley(const Matrix<K>& g) {
    Matrix<K> id = Matrix<K>::identity(g.rows());
    try {
        return (id + g) * inverse(id - g);
    } catch (const SingularMatrix&) {
        throw SingularTransform("1-g is singular");
    }
}

// g = (B+1)^{-1}(B-1); defined when B+1 is invertible.
template <class K>
Matrix<K> cayley_inv(const Matrix<K>& b) {
    Matrix<K> id = Matrix<K>::identity(b.rows());
    try {
        return inverse(b + id) * (b - id);
    } catch (const SingularMatrix&) {
        throw SingularTransform("B+1 is singular");
    }
}

// --- Moyal family ---------------------------------------------------------

template <class K>
GradedElement<K> derivative(const GradedElement<K>& a, int var) {
    if (a.cone() && a.cone()->kind() != ConeKind::SymplecticPoly)
        throw Error("derivative: free polynomial cone required");
    GradedElement<K> out(a.cone());
    for (const auto& [m, c] : a.terms()) {
        int e = m[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        Monomial d = m;
        d[static_cast<std::size_t>(var)] -= 1;
        out.add_term(d, c * K(static_cast<long>(e)));
    }
    return out;
}

// Components C_k of the Moyal product with bivector (B+1)Pi acting on the
// first tensor slot: C_k(a,b) = mu(P^k(a ox b)) / (2^k k!). C_0 = ab and the
// sum terminates because derivatives kill polynomials.
template <class K>
std::vector<GradedElement<K>> moyal_product(const GradedElement<K>& a, const GradedElement<K>& b,
                                            const Matrix<K>& B) {
    GradedElement<K>::check_cones(a, b);
    ConePtr cone = a.cone() ? a.cone() : b.cone();
    if (!cone || cone->kind() != ConeKind::SymplecticPoly)
        throw Error("moyal_product: symplectic polynomial cone required");
    if (!is_sp(B)) throw NotInSp();
    int nv = cone->nvars();
    Matrix<K> m = (B + Matrix<K>::identity(nv)) * poisson_matrix<K>(cone->pairs());

    std::vector<GradedElement<K>> components;
    std::vector<std::pair<GradedElement<K>, GradedElement<K>>> tensor = {{a, b}};
    components.push_back(multiply(a, b));
    Rational factorial_term(1);
    for (int k = 1; !tensor.empty(); ++k) {
        std::vector<std::pair<GradedElement<K>, GradedElement<K>>> next;
        for (const auto& [ta, tb] : tensor)
            for (int u = 0; u < nv; ++u)
                for (int v = 0; v < nv; ++v) {
                    if (m(u, v).is_zero()) continue;
                    GradedElement<K> da = derivative(ta, u);
                    if (da.is_zero()) continue;
                    GradedElement<K> db = derivative(tb, v);
                    if (db.is_zero()) continue;
                    next.emplace_back(da.scaled(m(u, v)), std::move(db));
                }
        tensor = std::move(next);
        if (tensor.empty()) break;
        factorial_term *= Rational(1, 2 * k);  // 1/(2^k k!)
        GradedElement<K> ck(cone);
        for (const auto& [ta, tb] : tensor) ck += multiply(ta, tb);
        components.push_back(ck.scaled(K(factorial_term)));
    }
    while (!components.empty() && components.back().is_zero()) components.pop_back();
    return components;
}

template <class K>
GradedElement<K> moyal_star(const GradedElement<K>& a, const GradedElement<K>& b,
                            const Matrix<K>& B) {
    GradedElement<K> out(a.cone() ? a.cone() : b.cone());
    for (const auto& c : moyal_product(a, b, B)) out += c;
    return out;
}

// --- the Weyl algebra in normal order ------------------------------------

// Exponent key X_1^{a_1} Y_1^{b_1} ... X_n^{a_n} Y_n^{b_n}, interleaved to
// match the symplectic cone's variable order; YX - XY = 1 per pair.
template <class K>
class WeylAlgebra {
public:
    using Elem = GradedElement<K>;  // reuse the monomial-map container
    // Elements live on a parallel "cone" purely as exponent bookkeeping; the
    // product below is the noncommutative one.

    explicit WeylAlgebra(int pairs) : pairs_(pairs), cone_(ConeDescriptor::symplectic(pairs)) {}

    int pairs() const { return pairs_; }
    const ConePtr& key_space() const { return cone_; }

    Elem zero() const { return Elem(cone_); }
    Elem one() const { return Elem::scalar(cone_, K(1)); }
    Elem scalar(K v) const { return Elem::scalar(cone_, std::move(v)); }
    Elem gen_x(int i = 0) const { return Elem::variable(cone_, 2 * i); }
    Elem gen_y(int i = 0) const { return Elem::variable(cone_, 2 * i + 1); }
    Elem monomial(const Monomial& m, K coeff = K(1)) const { return Elem(cone_, m, coeff); }

    static int filtration_degree(const Elem& u) { return u.degree(); }
    // Torus weight under g = diag(q, 1/q): X-degree minus Y-degree (pair 0).
    int weight(const Monomial& m) const {
        int w = 0;
        for (int i = 0; i < pairs_; ++i)
            w += m[static_cast<std::size_t>(2 * i)] - m[static_cast<std::size_t>(2 * i + 1)];
        return w;
    }

    Elem multiply(const Elem& u, const Elem& v) const {
        Elem acc(cone_);
        for (const auto& [k, c] : u.terms()) {
            Elem t = v;
            for (int i = 0; i < pairs_; ++i)
                for (int rep = 0; rep < k[static_cast<std::size_t>(2 * i + 1)]; ++rep)
                    t = left_y(t, i);
            Elem shifted(cone_);
            for (const auto& [kv, cv] : t.terms()) {
                Monomial m = kv;
                for (int i = 0; i < pairs_; ++i) m[static_cast<std::size_t>(2 * i)] += k[static_cast<std::size_t>(2 * i)];
                shifted.add_term(m, cv);
            }
            acc += shifted.scaled(c);
        }
        return acc;
    }

    Elem commutator(const Elem& u, const Elem& v) const {
        return multiply(u, v) - multiply(v, u);
    }

    Elem pow(const Elem& u, int n) const {
        Elem r = one();
        for (int i = 0; i < n; ++i) r = multiply(r, u);
        return r;
    }

    // gr: normal-ordered keys to commuting monomials, top degree only.
    GradedElement<K> symbol(const Elem& u) const {
        GradedElement<K> out(cone_);
        int d = u.degree();
        for (const auto& [m, c] : u.terms())
            if (cone_->degree(m) == d) out.add_term(m, c);
        return out;
    }

    // s = (-1)^deg: X -> -X, Y -> -Y.
    Elem apply_s(const Elem& u) const {
        Elem out(cone_);
        for (const auto& [m, c] : u.terms()) {
            int d = cone_->degree(m);
            out.add_term(m, d % 2 == 0 ? c : -c);
        }
        return out;
    }

    // Torus twist g(X) = qX, g(Y) = Y/q (single pair).
    Elem apply_torus(const Elem& u, const K& q) const {
        require_single_pair();
        Elem out(cone_);
        for (const auto& [m, c] : u.terms()) {
            int w = weight(m);
            K factor(1);
            for (int k = 0; k < w; ++k) factor *= q;
            for (int k = 0; k < -w; ++k) factor /= q;
            out.add_term(m, c * factor);
        }
        return out;
    }

    // Twisted trace against the polynomial module: T(a) = (1-q) * sum over n
    // of the diagonal matrix element of a.g on x^n, summed in closed form.
    // g acts on the module by p(x) -> p(qx); balanced monomials X^j Y^j
    // contribute the falling factorial n(n-1)...(n-j+1).
    K torus_trace(const Elem& u, const K& q) const {
        require_single_pair();
        if (q.is_zero()) throw Error("torus_trace: q must be invertible");
        Poly<K, 'n'> diag;
        for (const auto& [m, c] : u.terms()) {
            if (m[0] != m[1]) continue;  // off-diagonal on the module
            Poly<K, 'n'> ff(1);
            for (int t = 0; t < m[1]; ++t)
                ff *= Poly<K, 'n'>(std::vector<K>{K(static_cast<long>(-t)), K(1)});
            diag += ff.scaled(c);
        }
        if (diag.is_zero()) return K(0);
        return (K(1) - q) * polynomial_power_series(diag, q);
    }

    // Normal-ordered operator rendering, X/Y uppercase to keep operators and
    // their symbols apart.
    std::string elem_string(const Elem& u) const {
        std::string s = u.to_string();
        for (auto& c : s) {
            if (c == 'x') c = 'X';
            else if (c == 'y') c = 'Y';
        }
        return s;
    }

private:
    void require_single_pair() const {
        if (pairs_ != 1) throw Error("torus trace implemented for one pair only");
    }
    Elem left_y(const Elem& v, int i) const {
        // Y X^c = X^c Y + c X^{c-1} within the pair; other pairs commute.
        Elem out(cone_);
        std::size_t xi = static_cast<std::size_t>(2 * i);
        for (const auto& [m, c] : v.terms()) {
            Monomial up = m;
            up[xi + 1] += 1;
            out.add_term(up, c);
            if (m[xi] > 0) {
                Monomial down = m;
                down[xi] -= 1;
                out.add_term(down, c * K(static_cast<long>(m[xi])));
            }
        }
        return out;
    }

    int pairs_;
    ConePtr cone_;
};

}  // namespace shortstar

#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shortstar/cone.hpp"
#include "shortstar/errors.hpp"
#include "shortstar/polynomial.hpp"

namespace shortstar {

// Normal-ordered monomial f^a h^b e^c. The reduced basis of the quotient
// eliminates every fe pair through the central element, so stored elements
// satisfy a*c = 0; intermediates during multiplication may violate it.
struct PBWKey {
    int f = 0, h = 0, e = 0;
    int filtration_degree() const { return 2 * (f + h + e); }
    int weight() const { return 2 * (e - f); }  // ad-h eigenvalue
    bool reduced() const { return f == 0 || e == 0; }
    friend auto operator<=>(const PBWKey& a, const PBWKey& b) {
        if (auto c = (a.f + a.h + a.e) <=> (b.f + b.h + b.e); c != 0) return c;
        if (auto c = a.e <=> b.e; c != 0) return c;
        return a.h <=> b.h;
    }
    friend bool operator==(const PBWKey&, const PBWKey&) = default;
    std::string to_string() const {
        std::string out;
        auto pow = [&](const char* g, int k) {
            if (k == 0) return;
            if (!out.empty()) out += "*";
            out += g;
            if (k > 1) out += "^" + std::to_string(k);
        };
        pow("f", f);
        pow("h", h);
        pow("e", e);
        return out.empty() ? "1" : out;
    }
};

template <class K>
class PBWElement {
public:
    using term_map = std::map<PBWKey, K>;

    PBWElement() = default;
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PBWKey& k, K coeff) {
        if (coeff.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(k, std::move(coeff));
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    K coeff(const PBWKey& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? K(0) : it->second;
    }
    K constant_term() const { return coeff(PBWKey{}); }

    int filtration_degree() const {  // -1 for zero
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.filtration_degree());
        return d;
    }
    bool pure_weight(int* weight_out = nullptr) const {
        bool first = true;
        int w = 0;
        for (const auto& [k, c] : terms_) {
            if (first) { w = k.weight(); first = false; }
            else if (k.weight() != w) return false;
        }
        if (weight_out) *weight_out = w;
        return true;
    }

    PBWElement operator-() const {
        PBWElement r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    friend PBWElement operator+(const PBWElement& a, const PBWElement& b) {
        PBWElement r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }
    friend PBWElement operator-(const PBWElement& a, const PBWElement& b) { return a + (-b); }
    PBWElement scaled(const K& s) const {
        PBWElement r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
        return r;
    }
    PBWElement& operator+=(const PBWElement& o) { return *this = *this + o; }
    PBWElement& operator-=(const PBWElement& o) { return *this = *this - o; }

    PBWElement conj_coeffs() const {
        PBWElement r;
        for (const auto& [k, c] : terms_) r.terms_[k] = c.conj();
        return r;
    }

    friend bool operator==(const PBWElement& a, const PBWElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

    std::string to_string() const {
        using shortstar::to_string;
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string raw = to_string(it->second);
            std::string cs = maybe_paren(raw);
            std::string ms = it->first.to_string();
            std::string term;
            if (ms == "1") term = raw;
            else if (cs == "1") term = ms;
            else if (cs == "-1") term = "-" + ms;
            else term = cs + "*" + ms;
            if (out.empty()) out = term;
            else if (term[0] == '-') out += term;
            else out += "+" + term;
        }
        return out;
    }

private:
    term_map terms_;
};

// Generator images defining a filtration-preserving (anti)automorphism; the
// defining relations and the central character are checked at construction.
template <class K>
struct Sl2Auto {
    PBWElement<K> im_e, im_f, im_h;
    bool antilinear = false;
    bool antiautomorphism = false;
};

// Arithmetic context of the quotient algebra at parameter lambda, with
// central value chi = lambda(lambda+2)/2. Elements are plain immutable data;
// all operations live here and are pure.
template <class K>
class Sl2Algebra {
public:
    using Elem = PBWElement<K>;

    explicit Sl2Algebra(K lambda)
        : lambda_(std::move(lambda)), chi_(lambda_ * (lambda_ + K(2)) / K(2)) {}

    const K& lambda() const { return lambda_; }
    const K& chi() const { return chi_; }

    static Elem zero() { return Elem(); }
    static Elem one() { return scalar(K(1)); }
    static Elem scalar(K v) {
        Elem r;
        r.add_term(PBWKey{}, std::move(v));
        return r;
    }
    static Elem monomial(const PBWKey& k, K coeff = K(1)) {
        Elem r;
        r.add_term(k, std::move(coeff));
        return r;
    }
    static Elem gen_e() { return monomial(PBWKey{0, 0, 1}); }
    static Elem gen_f() { return monomial(PBWKey{1, 0, 0}); }
    static Elem gen_h() { return monomial(PBWKey{0, 1, 0}); }

    // Polynomial in h as an element.
    static Elem from_h_poly(const Poly<K, 'h'>& p) {
        Elem r;
        for (int k = 0; k <= p.degree(); ++k) r.add_term(PBWKey{0, k, 0}, p.coeff(k));
        return r;
    }

    Elem casimir() const {  // 2fe + h + h^2/2, reduces to the scalar chi
        Elem c = multiply(gen_f(), gen_e()).scaled(K(2));
        c += gen_h();
        c += monomial(PBWKey{0, 2, 0}, K(Rational(1, 2)));
        return c;
    }

    // Reduced basis keys of filtration degree <= cap; (m+1)^2 keys for
    // cap = 2m, ordered by (degree, e, h).
    static std::vector<PBWKey> basis_upto(int cap) {
        std::vector<PBWKey> keys;
        for (int s = 0; 2 * s <= cap; ++s)
            for (int e = 0; e <= s; ++e)
                for (int f = 0; f <= s - e; ++f) {
                    if (e > 0 && f > 0) continue;
                    keys.push_back(PBWKey{f, s - e - f, e});
                }
        std::sort(keys.begin(), keys.end());
        return keys;
    }

    Elem multiply(const Elem& u, const Elem& v) const {
        Elem acc;
        for (const auto& [k, c] : u.terms()) {
            Elem t = v;
            for (int i = 0; i < k.e; ++i) t = left_e(t);
            for (int i = 0; i < k.h; ++i) t = left_h(t);
            for (int i = 0; i < k.f; ++i) t = left_f(t);
            acc += t.scaled(c);
        }
        return reduce(acc);
    }

    Elem pow(const Elem& u, int n) const {
        Elem r = one();
        for (int i = 0; i < n; ++i) r = multiply(r, u);
        return r;
    }

    Elem commutator(const Elem& u, const Elem& v) const {
        return multiply(u, v) - multiply(v, u);
    }

    // Top graded part in the cone coordinates x = gr e, z = gr h, y = gr f.
    GradedElement<K> symbol(const Elem& u, const ConePtr& cone) const {
        GradedElement<K> out(cone);
        int d = u.filtration_degree();
        if (d < 0) return out;
        for (const auto& [k, c] : u.terms()) {
            if (k.filtration_degree() != d) continue;
            GradedElement<K> m = GradedElement<K>::scalar(cone, c);
            GradedElement<K> x = GradedElement<K>::variable(cone, 0);
            GradedElement<K> z = GradedElement<K>::variable(cone, 1);
            GradedElement<K> y = GradedElement<K>::variable(cone, 2);
            for (int i = 0; i < k.e; ++i) m = shortstar::multiply(m, x);
            for (int i = 0; i < k.h; ++i) m = shortstar::multiply(m, z);
            for (int i = 0; i < k.f; ++i) m = shortstar::multiply(m, y);
            out += m;
        }
        return out;
    }

    // --- automorphisms ---

    Sl2Auto<K> identity_auto() const {
        return make_auto(gen_e(), gen_f(), gen_h(), false, false);
    }
    // e -> e/w, f -> w f, h -> h; the torus family.
    Sl2Auto<K> torus_auto(const K& w) const {
        return make_auto(gen_e().scaled(K(1) / w), gen_f().scaled(w), gen_h(), false, false);
    }
    // Conjugation by exp(c e): e -> e, h -> h - 2c e, f -> f + c h - c^2 e.
    Sl2Auto<K> unipotent_auto(const K& c) const {
        Elem im_h = gen_h() - gen_e().scaled(K(2) * c);
        Elem im_f = gen_f() + gen_h().scaled(c) - gen_e().scaled(c * c);
        return make_auto(gen_e(), im_f, im_h, false, false);
    }
    // Antipode: the antiautomorphism negating the generators.
    Sl2Auto<K> antipode_auto() const {
        return make_auto(-gen_e(), -gen_f(), -gen_h(), false, true);
    }
    // Conjugations (antilinear automorphisms squaring to 1), lambda real:
    // split fixes e, f, h; compact sends e -> -f, f -> -e, h -> -h.
    Sl2Auto<K> split_conjugation() const {
        return make_auto(gen_e(), gen_f(), gen_h(), true, false);
    }
    Sl2Auto<K> compact_conjugation() const {
        return make_auto(-gen_f(), -gen_e(), -gen_h(), true, false);
    }

    Sl2Auto<K> make_auto(Elem im_e, Elem im_f, Elem im_h, bool antilinear,
                         bool antiautomorphism) const {
        Sl2Auto<K> a{std::move(im_e), std::move(im_f), std::move(im_h), antilinear,
                     antiautomorphism};
        int sign = antiautomorphism ? -1 : 1;
        auto check = [&](const Elem& got, const Elem& want, const char* what) {
            if (got != want) throw RelationViolation(what);
        };
        check(commutator(a.im_h, a.im_e), a.im_e.scaled(K(2 * sign)), "[h,e] = 2e");
        check(commutator(a.im_h, a.im_f), a.im_f.scaled(K(-2 * sign)), "[h,f] = -2f");
        check(commutator(a.im_e, a.im_f), a.im_h.scaled(K(sign)), "[e,f] = h");
        // Image of ef + fe + h^2/2; the symmetric form is order-independent,
        // so the same check covers antiautomorphisms.
        Elem cas = multiply(a.im_e, a.im_f) + multiply(a.im_f, a.im_e) +
                   multiply(a.im_h, a.im_h).scaled(K(Rational(1, 2)));
        check(cas, scalar(antilinear ? chi_.conj() : chi_), "central character");
        return a;
    }

    Elem apply_auto(const Sl2Auto<K>& a, const Elem& u) const {
        Elem out;
        for (const auto& [k, c] : u.terms()) {
            Elem m = one();
            if (!a.antiautomorphism) {
                for (int i = 0; i < k.f; ++i) m = multiply(m, a.im_f);
                for (int i = 0; i < k.h; ++i) m = multiply(m, a.im_h);
                for (int i = 0; i < k.e; ++i) m = multiply(m, a.im_e);
            } else {
                for (int i = 0; i < k.e; ++i) m = multiply(m, a.im_e);
                for (int i = 0; i < k.h; ++i) m = multiply(m, a.im_h);
                for (int i = 0; i < k.f; ++i) m = multiply(m, a.im_f);
            }
            out += m.scaled(a.antilinear ? c.conj() : c);
        }
        return out;
    }

    Elem antipode(const Elem& u) const { return apply_auto(antipode_auto(), u); }

private:
    // Left multiplication by generators on normal-ordered monomials:
    //   e f^a = f^a e + a f^{a-1}(h - a + 1),   e h^b = (h-2)^b e,
    //   h f^a = f^a (h - 2a).
    Elem left_e(const Elem& x) const {
        Elem out;
        for (const auto& [k, c] : x.terms()) {
            // f^a (h-2)^b e^{c+1}
            Poly<K, 'h'> hp = binom_pow(K(-2), k.h);
            for (int j = 0; j <= hp.degree(); ++j)
                out.add_term(PBWKey{k.f, j, k.e + 1}, c * hp.coeff(j));
            if (k.f > 0) {
                // a f^{a-1} (h - a + 1) h^b e^c
                K a(static_cast<long>(k.f));
                out.add_term(PBWKey{k.f - 1, k.h + 1, k.e}, c * a);
                out.add_term(PBWKey{k.f - 1, k.h, k.e}, c * a * K(1 - static_cast<long>(k.f)));
            }
        }
        return out;
    }
    Elem left_h(const Elem& x) const {
        Elem out;
        for (const auto& [k, c] : x.terms()) {
            out.add_term(PBWKey{k.f, k.h + 1, k.e}, c);
            if (k.f > 0) out.add_term(PBWKey{k.f, k.h, k.e}, c * K(-2L * k.f));
        }
        return out;
    }
    Elem left_f(const Elem& x) const {
        Elem out;
        for (const auto& [k, c] : x.terms()) out.add_term(PBWKey{k.f + 1, k.h, k.e}, c);
        return out;
    }

    // (h + shift)^b as coefficients in h.
    static Poly<K, 'h'> binom_pow(const K& shift, int b) {
        Poly<K, 'h'> base({shift, K(1)});
        if (shift.is_zero()) return Poly<K, 'h'>::monomial(K(1), b);
        return base.pow(b);
    }

    // Eliminate fe pairs: f^a h^b e^c with a,c > 0 rewrites through
    // fe = (chi - h - h^2/2)/2, using f^a h^b e^c = f^{a-1} p(h)(h+2)^b e^{c-1}.
    Elem reduce(const Elem& x) const {
        Elem out;
        Poly<K, 'h'> pfe({chi_ * K(Rational(1, 2)), K(Rational(-1, 2)), K(Rational(-1, 4))});
        std::vector<std::pair<PBWKey, K>> work(x.terms().begin(), x.terms().end());
        while (!work.empty()) {
            auto [k, c] = work.back();
            work.pop_back();
            if (c.is_zero()) continue;
            if (k.reduced()) {
                out.add_term(k, c);
                continue;
            }
            Poly<K, 'h'> p = pfe * binom_pow(K(2), k.h);
            for (int j = 0; j <= p.degree(); ++j) {
                K cj = p.coeff(j);
                if (cj.is_zero()) continue;
                work.push_back({PBWKey{k.f - 1, j, k.e - 1}, c * cj});
            }
        }
        return out;
    }

    K lambda_;
    K chi_;
};

}  // namespace shortstar

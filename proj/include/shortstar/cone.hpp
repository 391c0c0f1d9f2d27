#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "shortstar/errors.hpp"
#include "shortstar/ratfun.hpp"

namespace shortstar {

// Exponent vector in the descriptor's variable order.
using Monomial = std::vector<int>;

// Graded order: total exponent first, then descending lexicographic. All
// descriptors here have uniform per-variable degree, so this sorts by degree
// and gives the deterministic basis enumeration used everywhere.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a > b;
    }
};

enum class ConeKind { SymplecticPoly, Sl2Cone };

// One of the two graded Poisson algebras: polynomials on a symplectic vector
// space (variables of degree 1, bracket of degree -2 on the grading doubled
// view; here plain {y_i,x_i}=1), or the quadratic cone with coordinates
// x = gr e, z = gr h, y = gr f of degree 2, relation z^2 = -4xy and brackets
// {x,y} = z, {z,x} = 2x, {z,y} = -2y.
class ConeDescriptor {
public:
    static std::shared_ptr<const ConeDescriptor> symplectic(int pairs) {
        auto d = std::shared_ptr<ConeDescriptor>(new ConeDescriptor());
        d->kind_ = ConeKind::SymplecticPoly;
        d->pairs_ = pairs;
        d->var_degree_ = 1;
        for (int i = 0; i < pairs; ++i) {
            std::string suffix = pairs == 1 ? "" : std::to_string(i + 1);
            d->names_.push_back("x" + suffix);
            d->names_.push_back("y" + suffix);
        }
        return d;
    }
    static std::shared_ptr<const ConeDescriptor> sl2() {
        auto d = std::shared_ptr<ConeDescriptor>(new ConeDescriptor());
        d->kind_ = ConeKind::Sl2Cone;
        d->pairs_ = 0;
        d->var_degree_ = 2;
        d->names_ = {"x", "z", "y"};
        return d;
    }

    ConeKind kind() const { return kind_; }
    int pairs() const { return pairs_; }
    int nvars() const { return static_cast<int>(names_.size()); }
    const std::string& var_name(int k) const { return names_[static_cast<std::size_t>(k)]; }
    int var_degree() const { return var_degree_; }
    int degree(const Monomial& m) const {
        return var_degree_ * std::accumulate(m.begin(), m.end(), 0);
    }

    bool same_as(const ConeDescriptor& o) const {
        return kind_ == o.kind_ && pairs_ == o.pairs_;
    }

    // {var u, var v} as integer combination of monomials; empty if zero.
    std::vector<std::pair<Monomial, long>> bracket(int u, int v) const {
        std::vector<std::pair<Monomial, long>> out;
        if (kind_ == ConeKind::SymplecticPoly) {
            if (u / 2 == v / 2 && u != v) {
                // Variables interleaved x_i, y_i; {y,x} = 1.
                Monomial one(static_cast<std::size_t>(nvars()), 0);
                out.push_back({one, (u % 2 == 1) ? 1L : -1L});
            }
            return out;
        }
        // sl2 cone, variable order x=0, z=1, y=2.
        auto mono = [this](int var) {
            Monomial m(static_cast<std::size_t>(nvars()), 0);
            m[static_cast<std::size_t>(var)] = 1;
            return m;
        };
        if (u == 1 && v == 0) out.push_back({mono(0), 2});    // {z,x} = 2x
        else if (u == 0 && v == 1) out.push_back({mono(0), -2});
        else if (u == 1 && v == 2) out.push_back({mono(2), -2});  // {z,y} = -2y
        else if (u == 2 && v == 1) out.push_back({mono(2), 2});
        else if (u == 0 && v == 2) out.push_back({mono(1), 1});   // {x,y} = z
        else if (u == 2 && v == 0) out.push_back({mono(1), -1});
        return out;
    }

    // Reduced monomials of the given degree in deterministic order
    // (descending lexicographic). For the sl2 cone the z-exponent stays <= 1.
    std::vector<Monomial> basis_of_degree(int d) const {
        std::vector<Monomial> out;
        if (d < 0 || d % var_degree_ != 0) return out;
        int total = d / var_degree_;
        Monomial cur(static_cast<std::size_t>(nvars()), 0);
        enumerate(total, 0, cur, out);
        std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a > b; });
        return out;
    }

    std::string monomial_string(const Monomial& m) const {
        std::string out;
        bool star_sep = false;
        for (const auto& n : names_)
            if (n.size() > 1) star_sep = true;
        for (int k = 0; k < nvars(); ++k) {
            int e = m[static_cast<std::size_t>(k)];
            if (e == 0) continue;
            if (!out.empty() && star_sep) out += "*";
            out += names_[static_cast<std::size_t>(k)];
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out.empty() ? "1" : out;
    }

private:
    ConeDescriptor() = default;
    void enumerate(int remaining, int var, Monomial& cur, std::vector<Monomial>& out) const {
        if (var == nvars() - 1) {
            cur[static_cast<std::size_t>(var)] = remaining;
            out.push_back(cur);
            cur[static_cast<std::size_t>(var)] = 0;
            return;
        }
        int cap = remaining;
        if (kind_ == ConeKind::Sl2Cone && var == 1) cap = std::min(cap, 1);  // z^2 reduced away
        for (int e = 0; e <= cap; ++e) {
            cur[static_cast<std::size_t>(var)] = e;
            enumerate(remaining - e, var + 1, cur, out);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    }

    ConeKind kind_;
    int pairs_;
    int var_degree_;
    std::vector<std::string> names_;
};

using ConePtr = std::shared_ptr<const ConeDescriptor>;

// Element of the graded algebra: reduced monomials -> coefficients in K.
template <class K>
class GradedElement {
public:
    using term_map = std::map<Monomial, K, MonomialOrder>;

    GradedElement() = default;
    explicit GradedElement(ConePtr cone) : cone_(std::move(cone)) {}
    GradedElement(ConePtr cone, const Monomial& m, K coeff) : cone_(std::move(cone)) {
        add_term(m, std::move(coeff));
    }
    static GradedElement scalar(ConePtr cone, K value) {
        GradedElement g(cone);
        Monomial one(static_cast<std::size_t>(cone->nvars()), 0);
        g.add_term(one, std::move(value));
        return g;
    }
    static GradedElement variable(ConePtr cone, int var) {
        Monomial m(static_cast<std::size_t>(cone->nvars()), 0);
        m[static_cast<std::size_t>(var)] = 1;
        return GradedElement(cone, m, K(1));
    }

    const ConePtr& cone() const { return cone_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, K coeff) {
        if (coeff.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, std::move(coeff));
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    K coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K(0) : it->second;
    }
    K constant_term() const {
        return terms_.empty() ? K(0)
                              : coeff(Monomial(static_cast<std::size_t>(cone_->nvars()), 0));
    }

    int degree() const {  // max degree; -1 for zero
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, cone_->degree(m));
        return d;
    }
    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int dm = cone_->degree(m);
            if (d >= 0 && dm != d) return false;
            d = dm;
        }
        return true;
    }
    GradedElement component(int d) const {
        GradedElement g(cone_);
        for (const auto& [m, c] : terms_)
            if (cone_->degree(m) == d) g.add_term(m, c);
        return g;
    }
    std::map<int, GradedElement> by_degree() const {
        std::map<int, GradedElement> out;
        for (const auto& [m, c] : terms_) {
            auto [it, fresh] = out.try_emplace(cone_->degree(m), GradedElement(cone_));
            it->second.add_term(m, c);
        }
        return out;
    }

    GradedElement operator-() const {
        GradedElement g(cone_);
        for (const auto& [m, c] : terms_) g.terms_[m] = -c;
        return g;
    }
    friend GradedElement operator+(const GradedElement& a, const GradedElement& b) {
        check_cones(a, b);
        GradedElement g = a.cone_ ? a : b;
        if (!a.cone_) return b;
        for (const auto& [m, c] : b.terms_) g.add_term(m, c);
        return g;
    }
    friend GradedElement operator-(const GradedElement& a, const GradedElement& b) {
        return a + (-b);
    }
    GradedElement scaled(const K& s) const {
        GradedElement g(cone_);
        if (s.is_zero()) return g;
        for (const auto& [m, c] : terms_) g.add_term(m, c * s);
        return g;
    }
    GradedElement& operator+=(const GradedElement& o) { return *this = *this + o; }
    GradedElement& operator-=(const GradedElement& o) { return *this = *this - o; }

    friend bool operator==(const GradedElement& a, const GradedElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedElement& a, const GradedElement& b) { return !(a == b); }

    std::string to_string() const {
        using shortstar::to_string;
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string raw = to_string(it->second);
            std::string cs = maybe_paren(raw);
            std::string ms = cone_->monomial_string(it->first);
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

    static void check_cones(const GradedElement& a, const GradedElement& b) {
        if (a.cone_ && b.cone_ && !a.cone_->same_as(*b.cone_)) throw DescriptorMismatch();
    }

private:
    ConePtr cone_;
    term_map terms_;
};

namespace detail {
// Applies the sl2-cone relation z^2 = -4xy until the z-exponent is reduced.
template <class K>
void reduced_add(GradedElement<K>& out, const ConeDescriptor& cone, Monomial m, K coeff) {
    if (cone.kind() == ConeKind::Sl2Cone && m[1] >= 2) {
        int half = m[1] / 2;
        m[1] %= 2;
        m[0] += half;
        m[2] += half;
        Rational scale = 1;
        for (int k = 0; k < half; ++k) scale *= Rational(-4);
        coeff = coeff * K(scale);
    }
    out.add_term(m, std::move(coeff));
}
}  // namespace detail

template <class K>
GradedElement<K> multiply(const GradedElement<K>& a, const GradedElement<K>& b) {
    GradedElement<K>::check_cones(a, b);
    GradedElement<K> out(a.cone() ? a.cone() : b.cone());
    if (!out.cone()) return out;
    const ConeDescriptor& cone = *out.cone();
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma;
            for (std::size_t k = 0; k < m.size(); ++k) m[k] += mb[k];
            detail::reduced_add(out, cone, std::move(m), ca * cb);
        }
    return out;
}

template <class K>
GradedElement<K> poisson_bracket(const GradedElement<K>& a, const GradedElement<K>& b) {
    GradedElement<K>::check_cones(a, b);
    GradedElement<K> out(a.cone() ? a.cone() : b.cone());
    if (!out.cone()) return out;
    const ConeDescriptor& cone = *out.cone();
    int nv = cone.nvars();
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            for (int u = 0; u < nv; ++u) {
                if (ma[static_cast<std::size_t>(u)] == 0) continue;
                for (int v = 0; v < nv; ++v) {
                    if (mb[static_cast<std::size_t>(v)] == 0) continue;
                    auto br = cone.bracket(u, v);
                    if (br.empty()) continue;
                    K factor = ca * cb *
                               K(Rational(static_cast<long>(ma[static_cast<std::size_t>(u)]) *
                                          mb[static_cast<std::size_t>(v)]));
                    Monomial base = ma;
                    base[static_cast<std::size_t>(u)] -= 1;
                    for (std::size_t k = 0; k < base.size(); ++k) base[k] += mb[k];
                    base[static_cast<std::size_t>(v)] -= 1;
                    for (const auto& [bm, bc] : br) {
                        Monomial m = base;
                        for (std::size_t k = 0; k < m.size(); ++k) m[k] += bm[k];
                        detail::reduced_add(out, cone, std::move(m), factor * K(Rational(bc)));
                    }
                }
            }
    return out;
}

}  // namespace shortstar

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "shortstar/gaussian.hpp"
#include "shortstar/sl2.hpp"

using namespace shortstar;

namespace {

// Independent normal-ordering oracle: elements as formal words in e, f, h,
// reordered one adjacent swap at a time with the bare commutation relations,
// then fe pairs eliminated through the central element. Shares no code with
// Sl2Algebra::multiply.
template <class K>
struct WordOracle {
    K lambda, chi;
    explicit WordOracle(K lam) : lambda(lam), chi(lam * (lam + K(2)) / K(2)) {}

    using Word = std::vector<char>;  // letters 'f','h','e'
    using Expr = std::map<Word, K>;

    static void add(Expr& x, const Word& w, const K& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = x.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) x.erase(it);
        }
    }

    static int rank(char g) { return g == 'f' ? 0 : (g == 'h' ? 1 : 2); }

    Expr normalize(Expr x) const {
        Expr done;
        while (!x.empty()) {
            auto it = x.begin();
            Word w = it->first;
            K c = it->second;
            x.erase(it);
            bool swapped = false;
            for (std::size_t k = 0; k + 1 < w.size(); ++k) {
                char a = w[k], b = w[k + 1];
                if (rank(a) <= rank(b)) continue;
                // a b = b a + [a,b]
                Word sw = w;
                std::swap(sw[k], sw[k + 1]);
                add(x, sw, c);
                Word rest(w.begin(), w.begin() + static_cast<long>(k));
                Word tail(w.begin() + static_cast<long>(k) + 2, w.end());
                auto emit = [&](char g, long s) {
                    Word v = rest;
                    v.push_back(g);
                    v.insert(v.end(), tail.begin(), tail.end());
                    add(x, v, c * K(s));
                };
                if (a == 'h' && b == 'f') emit('f', -2);       // [h,f] = -2f
                else if (a == 'e' && b == 'f') emit('h', 1);   // [e,f] = h
                else if (a == 'e' && b == 'h') emit('e', -2);  // [e,h] = -2e
                swapped = true;
                break;
            }
            if (!swapped) add(done, w, c);
        }
        // Eliminate fe: words are now f^a h^b e^c; while a,c > 0 substitute
        // the rightmost f and leftmost e via fe = (chi - h - h^2/2)/2 after
        // commuting them together... simpler: recurse multiplying words again.
        Expr reduced;
        for (const auto& [w, c] : done) {
            std::size_t nf = 0, nh = 0, ne = 0;
            for (char g : w) (g == 'f' ? nf : (g == 'h' ? nh : ne))++;
            if (nf == 0 || ne == 0) {
                add(reduced, w, c);
                continue;
            }
            // f^a h^b e^c = f^{a-1} (f e) shifted ... use f h^b e = (fe)(h+2)^b
            // via h f = f (h-2): f h^b e^c = f e (h+2)^b e^{c-1} -> substitute fe.
            // Build the replacement expression and re-normalize it.
            Expr expr;
            // p(h) = (chi - h - h^2/2)/2 expanded into words of h's.
            std::vector<std::pair<int, K>> p = {{0, chi * K(Rational(1, 2))},
                                                {1, K(Rational(-1, 2))},
                                                {2, K(Rational(-1, 4))}};
            for (auto& [hk, pc] : p) {
                Word v;
                for (std::size_t i = 0; i + 1 < nf; ++i) v.push_back('f');
                for (int i = 0; i < hk; ++i) v.push_back('h');
                // (h+2)^b with b = nh: binomial expansion.
                for (std::size_t j = 0; j <= nh; ++j) {
                    Word u = v;
                    for (std::size_t i = 0; i < j; ++i) u.push_back('h');
                    for (std::size_t i = 0; i + 1 < ne; ++i) u.push_back('e');
                    long binom = 1;
                    for (std::size_t i = 0; i < j; ++i)
                        binom = binom * static_cast<long>(nh - i) / static_cast<long>(i + 1);
                    long pow2 = 1;
                    for (std::size_t i = j; i < nh; ++i) pow2 *= 2;
                    add(expr, u, c * pc * K(binom * pow2));
                }
            }
            for (const auto& [w2, c2] : normalize(std::move(expr))) add(reduced, w2, c2);
        }
        return reduced;
    }

    PBWElement<K> to_pbw(const Expr& x) const {
        PBWElement<K> out;
        for (const auto& [w, c] : x) {
            PBWKey k;
            for (char g : w) (g == 'f' ? k.f : (g == 'h' ? k.h : k.e))++;
            out.add_term(k, c);
        }
        return out;
    }

    PBWElement<K> multiply(const PBWElement<K>& a, const PBWElement<K>& b) const {
        Expr prod;
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms()) {
                Word w;
                auto push = [&](char g, int n) { for (int i = 0; i < n; ++i) w.push_back(g); };
                push('f', ka.f); push('h', ka.h); push('e', ka.e);
                push('f', kb.f); push('h', kb.h); push('e', kb.e);
                add(prod, w, ca * cb);
            }
        return to_pbw(normalize(std::move(prod)));
    }
};

std::mt19937_64 rng(42017u);

template <class K>
PBWElement<K> random_element(int max_half_degree) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> pick(0, 2);
    PBWElement<K> out;
    for (int s = 0; s <= max_half_degree; ++s)
        for (int e = 0; e <= s; ++e)
            for (int f = 0; f <= s - e; ++f) {
                if (e > 0 && f > 0) continue;
                if (pick(rng) == 0) out.add_term(PBWKey{f, s - e - f, e}, K(Rational(coeff(rng))));
            }
    return out;
}

}  // namespace

TEST_CASE("pbw products on generators", "[sl2]") {
    Sl2Algebra<Ql> alg(Ql::gen());
    auto E = alg.gen_e(), F = alg.gen_f(), H = alg.gen_h();
    // e f = chi/2 + h/2 - h^2/4 after the central reduction.
    PBWElement<Ql> ef = alg.multiply(E, F);
    PBWElement<Ql> expect;
    expect.add_term(PBWKey{0, 0, 0}, alg.chi() / Ql(2));
    expect.add_term(PBWKey{0, 1, 0}, Ql(Rational(1, 2)));
    expect.add_term(PBWKey{0, 2, 0}, Ql(Rational(-1, 4)));
    REQUIRE(ef == expect);
    // e h = h e - 2e.
    PBWElement<Ql> eh = alg.multiply(E, H);
    PBWElement<Ql> he_2e = alg.multiply(H, E) - E.scaled(Ql(2));
    REQUIRE(eh == he_2e);
    REQUIRE(alg.multiply(alg.one(), ef) == ef);
    // Casimir combination collapses to the scalar chi.
    REQUIRE(alg.casimir() == Sl2Algebra<Ql>::scalar(alg.chi()));
}

TEST_CASE("pbw multiplication agrees with the word oracle", "[sl2][oracle]") {
    Sl2Algebra<Ql> alg(Ql::gen());
    WordOracle<Ql> oracle(Ql::gen());
    REQUIRE(alg.multiply(alg.gen_e(), alg.gen_f()) ==
            oracle.multiply(alg.gen_e(), alg.gen_f()));
    for (int trial = 0; trial < 12; ++trial) {
        auto a = random_element<Ql>(3), b = random_element<Ql>(3);
        REQUIRE(alg.multiply(a, b) == oracle.multiply(a, b));
    }
}

TEST_CASE("pbw associativity, symbolic lambda", "[sl2][property]") {
    Sl2Algebra<Ql> alg(Ql::gen());
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_element<Ql>(6), b = random_element<Ql>(3), c = random_element<Ql>(3);
        REQUIRE(alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c)));
    }
}

TEST_CASE("casimir is central", "[sl2][property]") {
    Sl2Algebra<Ql> alg(Ql::gen());
    auto cas = alg.casimir();
    for (int trial = 0; trial < 20; ++trial) {
        auto u = random_element<Ql>(5);
        REQUIRE(alg.multiply(cas, u) == alg.multiply(u, cas));
        REQUIRE(alg.multiply(cas, u) == u.scaled(alg.chi()));
    }
}

TEST_CASE("filtration bookkeeping", "[sl2]") {
    Sl2Algebra<Ql> alg(Ql::gen());
    for (int m = 0; m <= 8; ++m)
        REQUIRE(Sl2Algebra<Ql>::basis_upto(2 * m).size() ==
                static_cast<std::size_t>((m + 1) * (m + 1)));
    // Degrees add subadditively and commutators drop by 2.
    auto keys = Sl2Algebra<Ql>::basis_upto(10);
    for (const auto& ka : keys)
        for (const auto& kb : keys) {
            auto a = Sl2Algebra<Ql>::monomial(ka), b = Sl2Algebra<Ql>::monomial(kb);
            auto prod = alg.multiply(a, b);
            REQUIRE(prod.filtration_degree() <= ka.filtration_degree() + kb.filtration_degree());
            auto br = alg.commutator(a, b);
            if (!br.is_zero())
                REQUIRE(br.filtration_degree() <=
                        ka.filtration_degree() + kb.filtration_degree() - 2);
        }
}

TEST_CASE("symbol map", "[sl2]") {
    Sl2Algebra<Ql> alg(Ql::gen());
    auto cone = ConeDescriptor::sl2();
    using GE = GradedElement<Ql>;
    GE x = GE::variable(cone, 0), z = GE::variable(cone, 1), y = GE::variable(cone, 2);
    REQUIRE(alg.symbol(alg.gen_f(), cone) == y);
    // h^2 maps to the reduced square of z.
    auto h2 = alg.multiply(alg.gen_h(), alg.gen_h());
    REQUIRE(alg.symbol(h2, cone) == multiply(z, z));
    REQUIRE(multiply(z, z) == multiply(x, y).scaled(Ql(-4)));
    // fe + lower has top symbol xy.
    auto fe = alg.multiply(alg.gen_f(), alg.gen_e());
    REQUIRE(alg.symbol(fe + alg.gen_h(), cone) == multiply(x, y));
    // gr is multiplicative when no top-degree cancellation happens.
    auto keys = Sl2Algebra<Ql>::basis_upto(10);
    for (const auto& ka : keys)
        for (const auto& kb : keys) {
            if (ka.filtration_degree() + kb.filtration_degree() > 10) continue;
            auto a = Sl2Algebra<Ql>::monomial(ka), b = Sl2Algebra<Ql>::monomial(kb);
            auto prod = alg.multiply(a, b);
            if (prod.filtration_degree() != ka.filtration_degree() + kb.filtration_degree())
                continue;
            REQUIRE(alg.symbol(prod, cone) ==
                    multiply(alg.symbol(a, cone), alg.symbol(b, cone)));
        }
}

TEST_CASE("automorphisms", "[sl2]") {
    Sl2Algebra<Qw> alg(Qw(Rational(1, 3)));  // numeric lambda, w symbolic
    Qw w = Qw::gen();
    auto gw = alg.torus_auto(w);
    // Balanced weights are fixed; f h picks up one factor of w.
    auto fh = alg.multiply(alg.gen_f(), alg.gen_h());
    REQUIRE(alg.apply_auto(gw, fh) == fh.scaled(w));
    auto f2e2 = alg.multiply(alg.pow(alg.gen_f(), 2), alg.pow(alg.gen_e(), 2));
    REQUIRE(alg.apply_auto(gw, f2e2) == f2e2);
    // Twisted by the unipotent.
    auto uni = alg.unipotent_auto(Qw(1));
    REQUIRE(alg.apply_auto(uni, alg.gen_h()) ==
            alg.gen_h() - alg.gen_e().scaled(Qw(2)));
    // Automorphism property on random elements.
    Sl2Algebra<Ql> salg(Ql::gen());
    auto suni = salg.unipotent_auto(Ql(Rational(2, 3)));
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_element<Ql>(4), b = random_element<Ql>(4);
        REQUIRE(salg.apply_auto(suni, salg.multiply(a, b)) ==
                salg.multiply(salg.apply_auto(suni, a), salg.apply_auto(suni, b)));
    }
    REQUIRE(salg.apply_auto(salg.identity_auto(), salg.gen_f()) == salg.gen_f());
    // Images violating the relations are rejected.
    REQUIRE_THROWS_AS(salg.make_auto(salg.gen_e().scaled(Ql(2)), salg.gen_f(), salg.gen_h(),
                                     false, false),
                      RelationViolation);
}

TEST_CASE("antipode", "[sl2]") {
    Sl2Algebra<Ql> alg(Ql::gen());
    auto E = alg.gen_e(), F = alg.gen_f(), H = alg.gen_h();
    REQUIRE(alg.antipode(H) == -H);
    // sigma(ef) = fe = ef - h.
    REQUIRE(alg.antipode(alg.multiply(E, F)) == alg.multiply(E, F) - H);
    // Antiautomorphism and involution.
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_element<Ql>(4), b = random_element<Ql>(4);
        REQUIRE(alg.antipode(alg.multiply(a, b)) ==
                alg.multiply(alg.antipode(b), alg.antipode(a)));
        REQUIRE(alg.antipode(alg.antipode(a)) == a);
    }
}

TEST_CASE("conjugations", "[sl2]") {
    using GQ = Gaussian<Rational>;
    Sl2Algebra<GQ> alg(GQ(Rational(1, 2)));
    auto split = alg.split_conjugation();
    auto compact = alg.compact_conjugation();
    // Antilinearity: rho(i e) = -i e for the split form.
    auto ie = alg.gen_e().scaled(GQ::i());
    REQUIRE(alg.apply_auto(split, ie) == alg.gen_e().scaled(-GQ::i()));
    REQUIRE(alg.apply_auto(compact, alg.gen_h()) == -alg.gen_h());
    REQUIRE(alg.apply_auto(compact, alg.apply_auto(compact, alg.gen_e())) == alg.gen_e());
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_element<GQ>(4), b = random_element<GQ>(4);
        for (const auto& rho : {split, compact}) {
            REQUIRE(alg.apply_auto(rho, alg.multiply(a, b)) ==
                    alg.multiply(alg.apply_auto(rho, a), alg.apply_auto(rho, b)));
            REQUIRE(alg.apply_auto(rho, alg.apply_auto(rho, a)) == a);
        }
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "shortstar/cone.hpp"

using namespace shortstar;

namespace {

using GE = GradedElement<Q>;

std::mt19937_64 rng(77001u);

GE random_element(const ConePtr& cone, int max_degree) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    GE g(cone);
    for (int d = 0; d <= max_degree; d += cone->var_degree()) {
        for (const auto& m : cone->basis_of_degree(d))
            if (coeff(rng) > 1) g.add_term(m, Rational(coeff(rng)));
    }
    return g;
}

}  // namespace

TEST_CASE("sl2 cone bases", "[cones]") {
    auto cone = ConeDescriptor::sl2();
    auto b2 = cone->basis_of_degree(2);
    REQUIRE(b2.size() == 3);
    REQUIRE(cone->monomial_string(b2[0]) == "x");
    REQUIRE(cone->monomial_string(b2[1]) == "z");
    REQUIRE(cone->monomial_string(b2[2]) == "y");
    REQUIRE(cone->basis_of_degree(4).size() == 5);
    // Cumulative dimension of the filtration is a perfect square.
    for (int m = 0; m <= 8; ++m) {
        std::size_t total = 0;
        for (int k = 0; k <= m; ++k) total += cone->basis_of_degree(2 * k).size();
        REQUIRE(total == static_cast<std::size_t>((m + 1) * (m + 1)));
    }
}

TEST_CASE("symplectic cone bases", "[cones]") {
    auto cone = ConeDescriptor::symplectic(1);
    auto b2 = cone->basis_of_degree(2);
    REQUIRE(b2.size() == 3);
    REQUIRE(cone->monomial_string(b2[0]) == "x^2");
    REQUIRE(cone->monomial_string(b2[1]) == "xy");
    REQUIRE(cone->monomial_string(b2[2]) == "y^2");
    REQUIRE(ConeDescriptor::symplectic(2)->basis_of_degree(2).size() == 10);
}

TEST_CASE("cone multiplication reduces z^2", "[cones]") {
    auto cone = ConeDescriptor::sl2();
    GE x = GE::variable(cone, 0), z = GE::variable(cone, 1), y = GE::variable(cone, 2);
    REQUIRE(multiply(z, z) == multiply(x, y).scaled(Rational(-4)));
    REQUIRE(multiply(x, GE::scalar(cone, Rational(1))) == x);
    REQUIRE(multiply(x + y, z) == multiply(x, z) + multiply(y, z));
    // No key with z-exponent >= 2 survives.
    GE zz = multiply(multiply(z, z), z);
    for (const auto& [m, c] : zz.terms()) REQUIRE(m[1] <= 1);
    // Commutative and associative on random elements.
    for (int trial = 0; trial < 10; ++trial) {
        GE a = random_element(cone, 6), b = random_element(cone, 6), c = random_element(cone, 6);
        REQUIRE(multiply(a, b) == multiply(b, a));
        REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("descriptor mismatch is rejected", "[cones]") {
    GE a = GE::variable(ConeDescriptor::sl2(), 0);
    GE b = GE::variable(ConeDescriptor::symplectic(1), 0);
    REQUIRE_THROWS_AS(multiply(a, b), DescriptorMismatch);
    REQUIRE_THROWS_AS(poisson_bracket(a, b), DescriptorMismatch);
}

TEST_CASE("poisson brackets on generators", "[cones]") {
    auto sp = ConeDescriptor::symplectic(1);
    GE xs = GE::variable(sp, 0), ys = GE::variable(sp, 1);
    REQUIRE(poisson_bracket(ys, xs) == GE::scalar(sp, Rational(1)));
    REQUIRE(poisson_bracket(xs, ys) == GE::scalar(sp, Rational(-1)));

    auto cone = ConeDescriptor::sl2();
    GE x = GE::variable(cone, 0), z = GE::variable(cone, 1), y = GE::variable(cone, 2);
    REQUIRE(poisson_bracket(x, y) == z);
    REQUIRE(poisson_bracket(z, x) == x.scaled(Rational(2)));
    REQUIRE(poisson_bracket(z, y) == y.scaled(Rational(-2)));
    GE a = random_element(cone, 6);
    REQUIRE(poisson_bracket(a, a).is_zero());
}

TEST_CASE("bracket degree and jacobi", "[cones][property]") {
    for (auto cone : {ConeDescriptor::sl2(), ConeDescriptor::symplectic(1)}) {
        // deg {a,b} = deg a + deg b - 2 on basis pairs (zero allowed).
        for (int da = cone->var_degree(); da <= 8; da += cone->var_degree())
            for (int db = cone->var_degree(); da + db <= 8; db += cone->var_degree())
                for (const auto& ma : cone->basis_of_degree(da))
                    for (const auto& mb : cone->basis_of_degree(db)) {
                        GE br = poisson_bracket(GE(cone, ma, Rational(1)), GE(cone, mb, Rational(1)));
                        if (br.is_zero()) continue;
                        REQUIRE(br.is_homogeneous());
                        REQUIRE(br.degree() == da + db - 2);
                    }
        for (int trial = 0; trial < 50; ++trial) {
            GE a = random_element(cone, 6), b = random_element(cone, 6), c = random_element(cone, 6);
            GE jac = poisson_bracket(a, poisson_bracket(b, c)) +
                     poisson_bracket(b, poisson_bracket(c, a)) +
                     poisson_bracket(c, poisson_bracket(a, b));
            REQUIRE(jac.is_zero());
        }
        for (int trial = 0; trial < 20; ++trial) {
            // Leibniz: {a, bc} = {a,b}c + b{a,c}.
            GE a = random_element(cone, 4), b = random_element(cone, 4), c = random_element(cone, 4);
            REQUIRE(poisson_bracket(a, multiply(b, c)) ==
                    multiply(poisson_bracket(a, b), c) + multiply(b, poisson_bracket(a, c)));
        }
    }
}

TEST_CASE("element rendering", "[cones]") {
    auto cone = ConeDescriptor::sl2();
    GE x = GE::variable(cone, 0), y = GE::variable(cone, 2);
    GE v = multiply(x, y) + GE::scalar(cone, Rational(-1, 2));
    REQUIRE(v.to_string() == "xy-1/2");
    REQUIRE(v.constant_term() == Rational(-1, 2));
    REQUIRE(v.component(4).to_string() == "xy");
}

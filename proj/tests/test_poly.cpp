#include <doctest.h>

#include "test_util.hpp"

using namespace rees;
using namespace rees::testutil;

TEST_SUITE_BEGIN("poly");

TEST_CASE("ring arithmetic basics") {
    Poly xpy = P("x+y"), xmy = P("x-y");
    CHECK(xpy + xmy == P("2x"));
    CHECK(xpy * Poly::zero(2) == Poly::zero(2));
    CHECK(P("x+y").pow(2) == P("x^2+2*x*y+y^2"));
    CHECK(P("x+y") - P("x+y") == Poly::zero(2));
    CHECK_THROWS(P("x") + Poly::variable(3, 0));
}

TEST_CASE("canonical form drops zero coefficients") {
    Poly f = P("x") - P("x") + P("y");
    CHECK(f.term_count() == 1);
    CHECK(f == P("y"));
    CHECK(P("3/2x^2y - y^3 + 1") == P("3/2*x^2*y + 1 - y^3"));
}

TEST_CASE("grlex order") {
    CHECK(grlex_less(Monomial({1, 0}), Monomial({2, 0})));
    CHECK(grlex_less(Monomial({0, 2}), Monomial({1, 1})));
    CHECK(grlex_less(Monomial({1, 1}), Monomial({2, 0})));
    CHECK(P("x^2+x*y+y^2").leading_monomial() == Monomial({2, 0}));
}

TEST_CASE("order_at") {
    Poly f = P("x^2+y^3");
    CHECK(*f.order_at(pt({0, 0})) == 2);
    CHECK(!Poly::zero(2).order_at(pt({0, 0})).has_value());
    // Shift oracle: f(x+1, y) = x^2 + 2x + 1 + y^3 has a constant term, so the
    // order at (1,0) is 0; at the curve point (1,-1) the shift has minimal
    // degree 1.
    CHECK(*f.order_at(pt({1, 0})) == 0);
    CHECK(*f.order_at(pt({1, -1})) == 1);
}

TEST_CASE("delta") {
    CHECK(P("x^2").delta(Monomial({1, 0})) == P("2x"));
    Poly f = P("x^2+y^3");
    CHECK(f.delta(Monomial({0, 0})) == f);
    // Expand (y+T)^3 and read the T^2 coefficient.
    CHECK(f.delta(Monomial({0, 2})) == P("3y"));
    CHECK(f.delta(Monomial({2, 0})) == Poly::constant(2, Rat(1)));
}

TEST_CASE("order_along") {
    Poly f = P("x^2*y + x^3");
    CHECK(*f.order_along({0}) == 2);
    CHECK(*f.order_along({0, 1}) == 3);
    CHECK(*P("y + x^2").order_along({0}) == 0);
    CHECK(!Poly::zero(2).order_along({0}).has_value());
}

TEST_CASE("Leibniz identity for divided powers") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Poly f = random_poly(rng, 2, 3, 3), g = random_poly(rng, 2, 3, 3);
        for (int d = 0; d <= 3; ++d) {
            for (const Monomial& alpha : monomials_of_degree(2, d)) {
                Poly lhs = (f * g).delta(alpha);
                Poly rhs(2);
                for (int k = 0; k <= d; ++k) {
                    for (const Monomial& beta : monomials_of_degree(2, k)) {
                        if (!beta.divides(alpha)) continue;
                        Monomial gamma(2);
                        for (int i = 0; i < 2; ++i) gamma.e[i] = alpha.e[i] - beta.e[i];
                        rhs = rhs + f.delta(beta) * g.delta(gamma);
                    }
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("order via vanishing deltas") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        Poly f = random_poly(rng, 2, 4, 4);
        PointQ p = pt({static_cast<long>(rng() % 3) - 1, static_cast<long>(rng() % 3) - 1});
        auto ord = f.order_at(p);
        REQUIRE(ord.has_value());
        // order >= r iff all deltas of degree < r vanish at p.
        for (int r = 0; r <= 5; ++r) {
            bool all_vanish = true;
            for (int d = 0; d < r && all_vanish; ++d) {
                for (const Monomial& alpha : monomials_of_degree(2, d)) {
                    if (f.delta(alpha).eval(p) != 0) {
                        all_vanish = false;
                        break;
                    }
                }
            }
            CHECK(all_vanish == (*ord >= r));
        }
    }
}

TEST_CASE("order is additive on products") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        Poly f = random_poly(rng, 2, 3, 3), g = random_poly(rng, 2, 3, 3);
        PointQ p = pt({1, -1});
        CHECK(*(f * g).order_at(p) == *f.order_at(p) + *g.order_at(p));
    }
}

TEST_CASE("order_along matches the x_j-adic order at generic samples") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        Poly f = random_poly(rng, 2, 4, 4);
        auto along = f.order_along({1});  // order along {y = 0}
        REQUIRE(along.has_value());
        // Substitute a generic x value and read the y-adic order of the
        // resulting univariate polynomial; minimize over samples.
        std::optional<int> best;
        for (long xv = -5; xv <= 5; ++xv) {
            std::vector<Poly> im{Poly::constant(2, Rat(xv)), Poly::variable(2, 1)};
            Poly g = f.substitute(im);
            if (g.is_zero()) continue;
            int ord = g.terms().begin()->first.e[1];
            if (!best || ord < *best) best = ord;
        }
        if (best) CHECK(*along == *best);
    }
}

TEST_CASE("substitution and monomial division") {
    Poly f = P("x^2+y^3");
    std::vector<Poly> blowup{P("x"), P("x*y")};
    CHECK(f.substitute(blowup) == P("x^2 + x^3*y^3"));
    Monomial m({2, 0});
    CHECK(f.substitute(blowup).divide_by_monomial(m) == P("1 + x*y^3"));
    CHECK_THROWS_AS(P("x+y").divide_by_monomial(m), std::domain_error);
}

TEST_CASE("rational roots") {
    // (t - 2)^2 (t + 1/3) = t^3 - 11/3 t^2 + 8/3 t + 4/3
    std::vector<Rat> c{Rat(4, 3), Rat(8, 3), Rat(-11, 3), Rat(1)};
    auto roots = rational_roots(c);
    REQUIRE(roots.has_value());
    REQUIRE(roots->size() == 2);
    CHECK((*roots)[0].first == Rat(-1, 3));
    CHECK((*roots)[0].second == 1);
    CHECK((*roots)[1].first == Rat(2));
    CHECK((*roots)[1].second == 2);

    auto none = rational_roots({Rat(1), Rat(0), Rat(1)});  // t^2 + 1
    REQUIRE(none.has_value());
    CHECK(none->empty());

    auto zero = rational_roots({Rat(0), Rat(0), Rat(1)});  // t^2
    REQUIRE(zero.has_value());
    REQUIRE(zero->size() == 1);
    CHECK((*zero)[0] == std::pair<Rat, int>{Rat(0), 2});
}

TEST_SUITE_END();

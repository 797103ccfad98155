#include <doctest.h>

#include "test_util.hpp"

using namespace rees;
using namespace rees::testutil;

namespace {

ReesAlgebra alg(std::initializer_list<std::pair<const char*, int>> gens,
                std::vector<std::string> vars = {"x", "y"}) {
    std::vector<WeightedGen> gs;
    for (const auto& [s, n] : gens) gs.push_back({parse_poly(s, vars), n});
    return ReesAlgebra(static_cast<int>(vars.size()), std::move(gs));
}

MarkedObject with_divisors(ReesAlgebra G, std::vector<std::string> vars,
                           std::vector<DivisorRecord> divs) {
    MarkedObject M{std::move(G), Chart::root(std::move(vars))};
    M.chart.divisors = std::move(divs);
    M.chart.sort_divisors();
    return M;
}

}  // namespace

TEST_SUITE_BEGIN("basicobj");

TEST_CASE("weak_part extraction") {
    MarkedObject M = with_divisors(alg({{"x^2*y^3*x + x^2*y^4", 6}}), {"x", "y"},
                                   {{0, 1, Rat(0), true}, {1, 2, Rat(0), true}});
    // Generator x^2 y^3 (x + y), N = 6.
    WeakPart w = weak_part(M);
    CHECK(w.N == 6);
    REQUIRE(w.a.size() == 2);
    CHECK(w.a[0] == Rat(1, 3));
    CHECK(w.a[1] == Rat(1, 2));
    REQUIRE(w.weak.gens().size() == 1);
    CHECK(w.weak.gens()[0].f == P("x + y"));
    CHECK(w.weak.gens()[0].n == 6);
}

TEST_CASE("weak part with empty E matches the algebra integrally") {
    MarkedObject M{alg({{"x^2+y^3", 2}, {"x*y", 1}}), Chart::root({"x", "y"})};
    WeakPart w = weak_part(M);
    CHECK(w.a.empty());
    for (const PointQ& p : grid(2, 2, 10, 77)) {
        if (!contains_point(M.G, p)) continue;
        CHECK(*ord_at(w.weak, p) == *ord_at(M.G, p));
    }
}

TEST_CASE("maximality of the extracted exponent") {
    MarkedObject M = with_divisors(alg({{"x^2*y^3*x + x^2*y^3*y", 6}}), {"x", "y"},
                                   {{0, 1, Rat(0), false}, {1, 2, Rat(0), false}});
    WeakPart w = weak_part(M);
    // Raising any exponent by one breaks divisibility of I_N.
    Monomial m0(2), m1(2);
    m0.e[0] = static_cast<int>(rat_num(w.a[0] * Rat(w.N))) + 1;
    m1.e[1] = static_cast<int>(rat_num(w.a[1] * Rat(w.N))) + 1;
    bool div0 = true, div1 = true;
    for (const Poly& g : w.piece.gens()) {
        for (const auto& [mm, c] : g.terms()) {
            (void)c;
            if (mm.e[0] < m0.e[0]) div0 = false;
            if (mm.e[1] < m1.e[1]) div1 = false;
        }
    }
    CHECK(!div0);
    CHECK(!div1);
}

TEST_CASE("word values") {
    // Cusp pair, no divisors.
    MarkedObject M{alg({{"x^2+y^3", 2}}), Chart::root({"x", "y"})};
    CHECK(word_at(M, pt({0, 0})) == Rat(1));
    // After the blowup, the y-chart transform with exceptional divisor y.
    MarkedObject M2 = with_divisors(alg({{"x^2+y", 2}}), {"x", "y"}, {{1, 1, Rat(0), false}});
    CHECK(word_at(M2, pt({0, 0})) == Rat(1, 2));
}

TEST_CASE("word invariant under integral-proxy rewrites") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 8; ++trial) {
        ReesAlgebra G = random_algebra(rng, 2, 2, 3, 3);
        MarkedObject M = with_divisors(G, {"x", "y"}, {{0, 1, Rat(0), false}});
        MarkedObject Mv = M, Mn = M;
        Mv.G = veronese(G, 2);
        Mn.G = natural_closure(G);
        for (const PointQ& p : grid(2, 1, 5, 85)) {
            if (!contains_point(G, p)) continue;
            Rat w = word_at(M, p);
            CHECK(word_at(Mv, p) == w);
            CHECK(word_at(Mn, p) == w);
        }
    }
}

TEST_CASE("t values and divisor counting") {
    MarkedObject M = with_divisors(alg({{"x^2*y^2", 2}}), {"x", "y"},
                                   {{0, 1, Rat(0), true}, {1, 2, Rat(0), true}});
    TValue t0 = t_at(M, pt({0, 0}));
    CHECK(t0.n == 2);
    TValue t1 = t_at(M, pt({0, 1}));
    CHECK(t1.n == 1);
    MarkedObject M2{alg({{"x^2+y^3", 2}}), Chart::root({"x", "y"})};
    CHECK(t_at(M2, pt({0, 0})).n == 0);
    CHECK(TValue{Rat(1), 0} < TValue{Rat(1), 1});
    CHECK(TValue{Rat(1, 2), 5} < TValue{Rat(1), 0});
}

TEST_CASE("candidates and max_t on the cusp") {
    MarkedObject M{alg({{"x^2+y^3", 2}}), Chart::root({"x", "y"})};
    auto cands = candidate_loci(M, {});
    REQUIRE(cands.size() == 1);  // only the origin is singular
    CHECK(cands[0].is_point(2));
    auto mt = max_t(M, cands);
    REQUIRE(mt.has_value());
    CHECK(mt->t == TValue{Rat(1), 0});
    CHECK(mt->attaining.size() == 1);
}

TEST_CASE("candidates discover shifted loci") {
    // x(1 - y^2): the lines {y = 1}, {y = -1} and their meetings with {x=0}.
    MarkedObject M = with_divisors(alg({{"x - x*y^2", 1}}), {"x", "y"},
                                   {{0, 1, Rat(1), true}});
    auto cands = candidate_loci(M, {});
    bool has_line_y1 = false, has_pt = false;
    for (const Locus& L : cands) {
        if (!L.is_point(2) && L.constraints.size() == 1 && L.constraints[0].first == 1 &&
            L.constraints[0].second == Rat(1))
            has_line_y1 = true;
        if (L.is_point(2) && L.as_point(2) == pt({0, -1})) has_pt = true;
    }
    CHECK(has_line_y1);
    CHECK(has_pt);
    auto mt = max_t(M, cands);
    REQUIRE(mt.has_value());
    // Word 1 at the stray points on the exceptional divisor, n = 1 there.
    CHECK(mt->t == TValue{Rat(1), 1});
    REQUIRE(!mt->attaining.empty());
    CHECK(mt->attaining.front().is_point(2));
    CHECK(mt->attaining.front().as_point(2) == pt({0, -1}));
}

TEST_CASE("max_t invariant under veronese") {
    MarkedObject M = with_divisors(alg({{"x^2*y + x*y^3", 2}}), {"x", "y"},
                                   {{0, 1, Rat(0), true}, {1, 2, Rat(0), true}});
    MarkedObject Mv = M;
    Mv.G = veronese(M.G, 2);
    auto a = max_t(M, candidate_loci(M, {}));
    auto b = max_t(Mv, candidate_loci(Mv, {}));
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->t == b->t);
    CHECK(a->attaining.size() == b->attaining.size());
}

TEST_CASE("dm_algebra") {
    MarkedObject M = with_divisors(alg({{"x*y", 1}}), {"x", "y"},
                                   {{0, 1, Rat(0), true}, {1, 2, Rat(0), true}});
    ReesAlgebra d1 = dm_algebra(M.chart, 1);
    REQUIRE(d1.gens().size() == 1);
    CHECK(d1.gens()[0] == WeightedGen{P("x*y"), 1});
    ReesAlgebra d2 = dm_algebra(M.chart, 2);
    REQUIRE(d2.gens().size() == 2);
    CHECK(d2.gens()[0] == WeightedGen{P("x"), 1});
    CHECK(d2.gens()[1] == WeightedGen{P("y"), 1});
    CHECK_THROWS(dm_algebra(M.chart, 3));

    Chart single = Chart::root({"x", "y"});
    single.divisors = {{0, 1, Rat(0), true}};
    ReesAlgebra s1 = dm_algebra(single, 1);
    REQUIRE(s1.gens().size() == 1);
    CHECK(s1.gens()[0] == WeightedGen{P("x"), 1});
}

TEST_CASE("T_of is simple on the max locus") {
    // Cusp: omega = 1, m = 0.
    MarkedObject M{alg({{"x^2+y^3", 2}}), Chart::root({"x", "y"})};
    auto mt = max_t(M, candidate_loci(M, {}));
    ReesAlgebra T = T_of(M, mt->t);
    CHECK(is_simple_at(T, pt({0, 0})));
    CHECK(contains_point(T, pt({0, 0})));

    // ord 3/2 at the origin: the twist makes it simple.
    MarkedObject M2{alg({{"x^3", 2}}), Chart::root({"x", "y"})};
    auto mt2 = max_t(M2, candidate_loci(M2, {}));
    CHECK(mt2->t.word == Rat(3, 2));
    ReesAlgebra T2 = T_of(M2, mt2->t);
    CHECK(is_simple_at(T2, pt({0, 0})));
}

TEST_CASE("Sing of T is the max-t locus on candidates") {
    MarkedObject M = with_divisors(alg({{"x^2*y + x*y^3", 2}}), {"x", "y"},
                                   {{0, 1, Rat(1, 2), true}, {1, 2, Rat(1, 2), true}});
    auto cands = candidate_loci(M, {});
    auto mt = max_t(M, cands);
    REQUIRE(mt.has_value());
    if (mt->t.word > 0) {
        ReesAlgebra T = T_of(M, mt->t);
        MarkedObject MT{T, M.chart};
        for (const Locus& L : cands) {
            bool attains = false;
            for (const Locus& A : mt->attaining) attains |= (A == L);
            CHECK(locus_in_sing(MT, L) == attains);
        }
    }
}

TEST_CASE("transform_marked updates D by the max-word comparison") {
    // (xy, 1) with no divisors: word drops from 2 to 1 after blowing the
    // origin, so D' = E' in both charts.
    MarkedObject M{alg({{"x*y", 1}}), Chart::root({"x", "y"})};
    TransformResult tr = transform_marked(M, {0, 1}, 1);
    REQUIRE(tr.max_word_before.has_value());
    CHECK(*tr.max_word_before == Rat(2));
    REQUIRE(tr.max_word_after.has_value());
    CHECK(*tr.max_word_after == Rat(1));
    for (const MarkedObject& child : tr.children) {
        for (const DivisorRecord& d : child.chart.divisors) CHECK(d.inD);
    }
}

TEST_SUITE_END();

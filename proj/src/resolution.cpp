#include "reesolve/resolution.hpp"

#include <algorithm>

namespace rees {

Poly maximal_contact(const ReesAlgebra& Gd, const PointQ& p) {
    for (const WeightedGen& g : Gd.gens()) {
        if (g.n != 1) continue;
        auto o = g.f.order_at(p);
        if (o && *o == 1) return g.f;
    }
    throw std::logic_error("maximal_contact: no weight-1 generator of order 1");
}

GraphForm to_graph_form(const Poly& ell, const PointQ& p) {
    int d = ell.dim();
    auto o = ell.order_at(p);
    if (!o || *o != 1) throw std::invalid_argument("to_graph_form: order at p is not 1");
    Poly sh = p.is_origin() ? ell : ell.shifted(p);

    // Linear part coefficients.
    std::vector<Rat> lin(d, Rat(0));
    for (int i = 0; i < d; ++i) {
        Monomial m(d);
        m.e[i] = 1;
        lin[i] = sh.coeff(m);
    }
    int j = -1;
    for (int i = d - 1; i >= 0; --i) {
        if (lin[i] != 0) {
            j = i;
            break;
        }
    }
    if (j < 0) throw std::logic_error("to_graph_form: vanishing linear part");

    GraphForm gf;
    gf.var = j;
    gf.identity = true;
    for (int i = 0; i < d; ++i) {
        if (i != j && lin[i] != 0) gf.identity = false;
    }
    for (int i = 0; i < d; ++i) {
        gf.old_in_new.push_back(Poly::variable(d, i));
        gf.new_in_old.push_back(Poly::variable(d, i));
    }
    if (!gf.identity) {
        // new_j = sum_i lin_i * old_i ; other coordinates unchanged.
        Poly fwd(d);
        for (int i = 0; i < d; ++i) {
            if (lin[i] != 0) {
                Monomial m(d);
                m.e[i] = 1;
                fwd.add_term(m, lin[i]);
            }
        }
        gf.new_in_old[j] = fwd;
        Poly inv = Poly::variable(d, j);
        for (int i = 0; i < d; ++i) {
            if (i == j || lin[i] == 0) continue;
            Monomial m(d);
            m.e[i] = 1;
            inv.add_term(m, -lin[i]);
        }
        gf.old_in_new[j] = inv.scaled(Rat(1) / lin[j]);
    }

    Poly ell_new = ell.substitute(gf.old_in_new);
    std::vector<Poly> slices = ell_new.coeffs_in_variable(j);
    if (slices.size() > 2 || (slices.size() == 2 && !slices[1].is_constant()))
        throw NonGraphError("non-graph hypersurface");
    Rat c = slices.size() == 2 ? slices[1].coeff(Monomial(d)) : Rat(0);
    if (c == 0) throw NonGraphError("non-graph hypersurface");
    gf.h = slices[0].scaled(Rat(-1) / c);
    return gf;
}

ReesAlgebra restrict_to_hypersurface(const ReesAlgebra& G, int var, const Poly& h) {
    int d = G.dim();
    std::vector<Poly> images;
    for (int i = 0; i < d; ++i) images.push_back(i == var ? h : Poly::variable(d, i));
    std::vector<WeightedGen> gens;
    for (const WeightedGen& g : G.gens()) {
        Poly f = g.f.substitute(images).drop_variable(var);
        if (!f.is_zero()) gens.push_back({f, g.n});
    }
    return ReesAlgebra(d - 1, std::move(gens));
}

std::optional<Locus> monomial_center(const MarkedObject& M) {
    WeakPart w = weak_part(M);
    const auto& divs = M.chart.divisors;
    size_t r = divs.size();
    std::optional<std::vector<size_t>> best;
    std::vector<int> best_labels;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        Rat sum(0);
        std::vector<size_t> subset;
        bool distinct_vars = true;
        std::set<int> seen;
        for (size_t i = 0; i < r; ++i) {
            if (mask & (1u << i)) {
                sum += w.a[i];
                subset.push_back(i);
                if (!seen.insert(divs[i].var).second) distinct_vars = false;
            }
        }
        if (!distinct_vars || sum < 1) continue;
        // Inclusion-minimal: no proper nonempty subset may already reach 1.
        bool minimal = true;
        for (unsigned sub = (mask - 1) & mask; sub && minimal; sub = (sub - 1) & mask) {
            Rat s(0);
            for (size_t i = 0; i < r; ++i)
                if (sub & (1u << i)) s += w.a[i];
            if (s >= 1) minimal = false;
        }
        if (!minimal) continue;
        std::vector<int> labels;
        for (size_t i : subset) labels.push_back(divs[i].label);
        std::sort(labels.begin(), labels.end());
        if (!best || labels < best_labels) {
            best = subset;
            best_labels = labels;
        }
    }
    if (!best) return std::nullopt;
    Locus L;
    for (size_t i : *best) L.constraints.push_back({divs[i].var, divs[i].shift});
    std::sort(L.constraints.begin(), L.constraints.end());
    return L;
}

std::vector<CenterSpec> monomial_resolve(const MarkedObject& M) {
    std::vector<CenterSpec> out;
    MarkedObject cur = M;
    int label = 1000;  // local simulation labels; callers re-run the real driver
    while (true) {
        if (cur.G.is_zero()) break;
        auto L = monomial_center(cur);
        if (!L) break;
        CenterSpec c;
        for (const auto& [v, s] : L->constraints) c.push_back(v);
        std::sort(c.begin(), c.end());
        out.push_back(c);
        if (c.size() != 1) break;  // chart processing branches
        if (L->is_shifted()) break;
        TransformResult tr = transform_marked(cur, c, label++);
        cur = tr.children[0];
        if (contains_unit(sing_ideal(cur.G)) == Membership::In) break;
    }
    return out;
}

int ResolutionTrace::blowup_count() const {
    int n = 0;
    for (const TraceStep& s : steps)
        if (s.kind != StepKind::Resolved) ++n;
    return n;
}

const char* step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::Blowup: return "blowup";
        case StepKind::Codim1Adjust: return "codim1-adjust";
        case StepKind::Monomial: return "monomial";
        case StepKind::Restrict: return "restrict";
        case StepKind::Resolved: return "resolved";
    }
    return "?";
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Resolved: return "resolved";
        case Outcome::LimitExceeded: return "limit-exceeded";
        case Outcome::UnsupportedGeometry: return "unsupported-geometry";
    }
    return "?";
}

namespace {

struct StopRun {
    Outcome outcome;
};

struct Driver {
    ResolveLimits lim;
    GroebnerLimits glim;
    int steps_used = 0;
    int next_label = 1;
    ResolutionTrace trace;

    static void translate_object(MarkedObject& M, const PointQ& p) {
        int d = M.G.dim();
        std::vector<WeightedGen> gens;
        for (const WeightedGen& g : M.G.gens()) gens.push_back({g.f.shifted(p), g.n});
        M.G = ReesAlgebra(d, std::move(gens));
        translate_chart(M.chart, p);
        for (Poly& e : M.escapes) e = e.shifted(p);
    }

    // Rational points of Sing for a one-variable algebra, ascending.
    std::vector<Rat> sing_points_dim1(const ReesAlgebra& G) {
        std::vector<Rat> out;
        const WeightedGen* pivot = nullptr;
        for (const WeightedGen& g : G.gens()) {
            if (!g.f.is_zero()) {
                pivot = &g;
                break;
            }
        }
        if (!pivot) return out;
        std::vector<Rat> coeffs;
        int deg = pivot->f.total_degree();
        coeffs.resize(static_cast<size_t>(deg) + 1, Rat(0));
        for (const auto& [m, c] : pivot->f.terms()) coeffs[m.e[0]] = c;
        auto roots = rational_roots(coeffs);
        if (!roots) return out;
        for (const auto& [r, mult] : *roots) {
            if (mult < pivot->n) continue;
            PointQ p(std::vector<Rat>{r});
            if (contains_point(G, p)) out.push_back(r);
        }
        return out;
    }

    // Locate the coordinates of a point to blow, descending through maximal
    // contact restrictions. Returns a singular rational point in M's current
    // coordinates, or nullopt when the machinery finds nothing.
    std::optional<PointQ> descend(const MarkedObject& M) {
        int d = M.G.dim();
        if (M.G.is_zero()) return std::nullopt;
        if (d == 1) {
            auto pts = sing_points_dim1(M.G);
            if (pts.empty()) return std::nullopt;
            return PointQ(std::vector<Rat>{pts.front()});
        }
        auto cands = candidate_loci(M, {});
        auto mt = max_t(M, cands);
        if (!mt) return std::nullopt;
        const Locus* anchor = nullptr;
        for (const Locus& L : mt->attaining) {
            if (L.is_point(d)) {
                anchor = &L;
                break;
            }
        }
        if (!anchor) return std::nullopt;
        PointQ p0 = anchor->as_point(d);
        MarkedObject local = M;
        if (!p0.is_origin()) translate_object(local, p0);
        if (mt->t.word == 0) return p0;

        ReesAlgebra Gd = diff_closure(T_of(local, mt->t));
        PointQ origin = PointQ::origin(d);
        for (const WeightedGen& g : Gd.gens()) {
            if (g.n != 1) continue;
            auto o = g.f.order_at(origin);
            if (!o || *o != 1) continue;
            GraphForm gf;
            try {
                gf = to_graph_form(g.f, origin);
            } catch (const NonGraphError&) {
                continue;
            }
            if (!gf.identity && local.chart.record_on(gf.var)) continue;  // would move a divisor
            ReesAlgebra Gz = Gd;
            if (!gf.identity) {
                std::vector<WeightedGen> gens;
                for (const WeightedGen& wg : Gd.gens())
                    gens.push_back({wg.f.substitute(gf.old_in_new), wg.n});
                Gz = ReesAlgebra(d, std::move(gens));
            }
            ReesAlgebra restr = restrict_to_hypersurface(Gz, gf.var, gf.h);
            if (restr.is_zero()) continue;
            MarkedObject down;
            down.G = restr;
            down.chart.id = local.chart.id + "|" + local.chart.vars[gf.var];
            for (int i = 0; i < d; ++i) {
                if (i == gf.var) continue;
                down.chart.vars.push_back(local.chart.vars[i]);
                down.chart.to_root.push_back(Poly::variable(d - 1,
                                                            i < gf.var ? i : i - 1));
            }
            for (const DivisorRecord& dv : local.chart.divisors) {
                if (dv.var == gf.var) continue;
                DivisorRecord nd = dv;
                nd.var = dv.var < gf.var ? dv.var : dv.var - 1;
                down.chart.divisors.push_back(nd);
            }
            auto q = descend(down);
            if (!q) continue;
            // Pull the point back: insert the graph coordinate, undo the
            // linear change, undo the translation.
            PointQ full = PointQ::origin(d);
            int k = 0;
            for (int i = 0; i < d; ++i) {
                if (i == gf.var) continue;
                full.coords[i] = q->coords[k++];
            }
            full.coords[gf.var] = gf.h.eval(full);
            if (!gf.identity) {
                PointQ old = PointQ::origin(d);
                for (int i = 0; i < d; ++i) old.coords[i] = gf.old_in_new[i].eval(full);
                full = old;
            }
            for (int i = 0; i < d; ++i) full.coords[i] += p0.coords[i];
            if (!contains_point(M.G, full)) continue;
            return full;
        }
        return p0;  // no usable maximal contact; the anchor point itself
    }

    void run(MarkedObject M, std::optional<TValue> parent_t,
             std::vector<PointQ> user_points) {
        int d = M.G.dim();
        if (M.G.is_zero()) throw StopRun{Outcome::UnsupportedGeometry};
        auto cands = candidate_loci(M, user_points);
        if (cands.empty()) {
            Ideal si = sing_ideal(M.G);
            Membership unit = contains_unit(si, glim);
            if (unit == Membership::Undecided) throw StopRun{Outcome::LimitExceeded};
            if (unit == Membership::NotIn) {
                // Residual singular points invisible to the candidate search.
                // If the residue avoids the locus a sibling chart cannot see,
                // the sibling carries it in coordinate-trackable form and this
                // chart may close.
                bool handed_off = false;
                for (const Poly& e : M.escapes) {
                    Membership cov = contains_unit(ideal_sum(si, Ideal::principal(e)), glim);
                    if (cov == Membership::In) {
                        handed_off = true;
                        break;
                    }
                }
                if (!handed_off) throw StopRun{Outcome::UnsupportedGeometry};
            }
            TraceStep leaf;
            leaf.chart = M.chart.id;
            leaf.kind = StepKind::Resolved;
            trace.steps.push_back(std::move(leaf));
            return;
        }
        if (++steps_used > lim.max_steps) throw StopRun{Outcome::LimitExceeded};

        auto mt = max_t(M, cands);
        const Locus& first = mt->attaining.front();

        CenterSpec center;
        StepKind kind;
        if (!first.is_point(d)) {
            // Largest candidate locus of maximal t: blow it up directly.
            if (first.is_shifted()) {
                PointQ sh = first.shift_vector(d);
                translate_object(M, sh);
                for (PointQ& p : user_points)
                    for (int i = 0; i < d; ++i) p.coords[i] -= sh.coords[i];
            }
            for (const auto& [v, c] : first.constraints) center.push_back(v);
            std::sort(center.begin(), center.end());
            kind = center.size() == 1 ? StepKind::Codim1Adjust : StepKind::Blowup;
        } else if (mt->t.word == 0) {
            auto L = monomial_center(M);
            if (!L) throw StopRun{Outcome::UnsupportedGeometry};
            if (L->is_shifted()) {
                PointQ sh = L->shift_vector(d);
                translate_object(M, sh);
                for (PointQ& p : user_points)
                    for (int i = 0; i < d; ++i) p.coords[i] -= sh.coords[i];
            }
            for (const auto& [v, s] : L->constraints) center.push_back(v);
            std::sort(center.begin(), center.end());
            kind = center.size() == 1 ? StepKind::Codim1Adjust : StepKind::Monomial;
        } else {
            auto pt = descend(M);
            if (!pt) throw StopRun{Outcome::UnsupportedGeometry};
            if (!pt->is_origin()) {
                translate_object(M, *pt);
                for (PointQ& p : user_points)
                    for (int i = 0; i < d; ++i) p.coords[i] -= pt->coords[i];
            }
            for (int i = 0; i < d; ++i) center.push_back(i);
            kind = d == 1 ? StepKind::Codim1Adjust : StepKind::Blowup;
        }

        int label = next_label++;
        TransformResult tr;
        try {
            tr = transform_marked(M, center, label, user_points);
        } catch (const std::domain_error&) {
            throw StopRun{Outcome::UnsupportedGeometry};
        }

        TraceStep step;
        step.chart = M.chart.id;
        for (int v : center) step.center.push_back(M.chart.vars[v]);
        step.t = mt->t;
        step.kind = kind;
        step.t_drop = parent_t.has_value() && mt->t < *parent_t;
        step.new_a_bookkept = tr.new_a_bookkept;
        step.new_a_recomputed = tr.new_a_recomputed;
        trace.steps.push_back(std::move(step));

        for (size_t k = 0; k < tr.children.size(); ++k) {
            std::vector<PointQ> child_points;
            for (const PointQ& p : user_points) {
                // Preimage in chart k: q_j = p_j, q_i = p_i / p_j on the center.
                int j = tr.chosen[k];
                if (p.coords[j] == 0) {
                    bool on_center = true;
                    for (int v : center)
                        if (p.coords[v] != 0) on_center = false;
                    if (!on_center) continue;  // no preimage in this chart
                    child_points.push_back(p);  // on the center: keep the base point
                    continue;
                }
                PointQ q = p;
                for (int v : center) {
                    if (v != j) q.coords[v] = p.coords[v] / p.coords[j];
                }
                child_points.push_back(q);
            }
            run(tr.children[k], mt->t, child_points);
        }
    }
};

}  // namespace

ResolutionTrace resolve(const MarkedObject& M, const ResolveLimits& lim,
                        const std::vector<PointQ>& user_points) {
    Driver drv;
    drv.lim = lim;
    drv.glim = GroebnerLimits{lim.max_reductions, lim.max_degree};
    try {
        drv.run(M, std::nullopt, user_points);
        drv.trace.outcome = Outcome::Resolved;
    } catch (const StopRun& s) {
        drv.trace.outcome = s.outcome;
    }
    return drv.trace;
}

ResolutionTrace resolve(const ReesAlgebra& G, const std::vector<std::string>& var_names,
                        const ResolveLimits& lim, const std::vector<PointQ>& user_points) {
    MarkedObject M{G, Chart::root(var_names)};
    return resolve(M, lim, user_points);
}

ResolutionTrace resolve(const Pair& p, const std::vector<std::string>& var_names,
                        const ResolveLimits& lim, const std::vector<PointQ>& user_points) {
    return resolve(from_pair(p), var_names, lim, user_points);
}

bool traces_equal(const ResolutionTrace& a, const ResolutionTrace& b) {
    if (a.outcome != b.outcome) return false;
    if (a.steps.size() != b.steps.size()) return false;
    for (size_t i = 0; i < a.steps.size(); ++i) {
        const TraceStep &x = a.steps[i], &y = b.steps[i];
        if (x.chart != y.chart || x.center != y.center || x.kind != y.kind) return false;
        if (x.t.has_value() != y.t.has_value()) return false;
        if (x.t && !(*x.t == *y.t)) return false;
    }
    return true;
}

}  // namespace rees

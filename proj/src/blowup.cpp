#include "reesolve/blowup.hpp"

#include <algorithm>

namespace rees {

Chart Chart::root(std::vector<std::string> names) {
    Chart c;
    c.id = "r";
    c.vars = std::move(names);
    c.parent_id = "";
    for (int i = 0; i < c.dim(); ++i) c.to_root.push_back(Poly::variable(c.dim(), i));
    return c;
}

const DivisorRecord* Chart::record_on(int var) const {
    for (const DivisorRecord& d : divisors)
        if (d.var == var) return &d;
    return nullptr;
}

std::vector<int> Chart::divisor_vars() const {
    std::vector<int> out;
    for (const DivisorRecord& d : divisors) out.push_back(d.var);
    return out;
}

void Chart::sort_divisors() {
    std::sort(divisors.begin(), divisors.end(), [](const DivisorRecord& a, const DivisorRecord& b) {
        if (a.var != b.var) return a.var < b.var;
        return a.shift < b.shift;
    });
}

bool is_permissible(const ReesAlgebra& G, const CenterSpec& c) {
    if (c.empty()) throw std::invalid_argument("empty center");
    Ideal si = sing_ideal(G);
    for (const Poly& g : si.gens()) {
        for (const auto& [m, cf] : g.terms()) {
            (void)cf;
            bool divisible = false;
            for (int j : c) {
                if (m.e[j] > 0) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible) return false;
        }
    }
    return true;
}

std::vector<Poly> blowup_substitution(int dim, const CenterSpec& c, int chosen) {
    std::vector<Poly> sub;
    sub.reserve(dim);
    for (int i = 0; i < dim; ++i) {
        bool in_center = std::find(c.begin(), c.end(), i) != c.end();
        if (in_center && i != chosen) {
            sub.push_back(Poly::variable(dim, i) * Poly::variable(dim, chosen));
        } else {
            sub.push_back(Poly::variable(dim, i));
        }
    }
    return sub;
}

std::vector<ChartMap> blowup_charts(int dim, const CenterSpec& c) {
    if (c.empty()) throw std::invalid_argument("empty center");
    std::vector<ChartMap> out;
    for (int j : c) out.push_back({j, blowup_substitution(dim, c, j)});
    return out;
}

ReesAlgebra total_transform(const ReesAlgebra& G, const std::vector<Poly>& subst) {
    std::vector<WeightedGen> gens;
    for (const WeightedGen& g : G.gens()) gens.push_back({g.f.substitute(subst), g.n});
    return ReesAlgebra(G.dim(), std::move(gens));
}

ReesAlgebra weighted_transform(const ReesAlgebra& G, const std::vector<Poly>& subst, int h) {
    std::vector<WeightedGen> gens;
    for (const WeightedGen& g : G.gens()) {
        Poly pulled = g.f.substitute(subst);
        Monomial m(G.dim());
        m.e[h] = g.n;
        Poly divided;
        try {
            divided = pulled.divide_by_monomial(m);
        } catch (const std::domain_error&) {
            throw std::domain_error("center was not permissible");
        }
        gens.push_back({divided, g.n});
    }
    return ReesAlgebra(G.dim(), std::move(gens));
}

Chart blowup_chart_geometry(const Chart& chart, const CenterSpec& c, int chosen, int step_label) {
    Chart child;
    child.id = chart.id + "." + chart.vars[chosen];
    child.vars = chart.vars;
    child.parent_id = chart.id;
    std::vector<Poly> sub = blowup_substitution(chart.dim(), c, chosen);
    for (const Poly& f : chart.to_root) child.to_root.push_back(f.substitute(sub));
    for (const DivisorRecord& d : chart.divisors) {
        bool in_center = std::find(c.begin(), c.end(), d.var) != c.end();
        if (!in_center) {
            child.divisors.push_back(d);  // untouched variable
        } else if (d.var == chosen) {
            // x_chosen pulls back identically, so a shifted hyperplane
            // {x_chosen = s}, s != 0, survives verbatim; the unshifted one is
            // the center side and is replaced by the fresh record.
            if (d.shift != 0) child.divisors.push_back(d);
        } else {
            // x_v pulls back to x_v * x_chosen: the strict transform of
            // {x_v = 0} is {x_v = 0} again; a shifted hyperplane becomes
            // non-coordinate and leaves the bookkeeping.
            if (d.shift == 0) child.divisors.push_back(d);
        }
    }
    DivisorRecord fresh;
    fresh.var = chosen;
    fresh.label = step_label;
    fresh.a = Rat(0);
    fresh.inD = false;
    child.divisors.push_back(fresh);
    child.sort_divisors();
    return child;
}

void translate_chart(Chart& chart, const PointQ& p) {
    if (p.dim() != chart.dim()) throw std::invalid_argument("translation dimension mismatch");
    if (p.is_origin()) return;
    std::vector<Poly> shift;
    for (int i = 0; i < chart.dim(); ++i) {
        Poly im = Poly::variable(chart.dim(), i);
        im.add_term(Monomial(chart.dim()), p.coords[i]);
        shift.push_back(im);
    }
    for (Poly& f : chart.to_root) f = f.substitute(shift);
    for (DivisorRecord& d : chart.divisors) d.shift -= p.coords[d.var];
}

Poly divide_by_linear(const Poly& f, int var, const Rat& shift, int k) {
    if (k == 0) return f;
    if (shift == 0) {
        Monomial m(f.dim());
        m.e[var] = k;
        return f.divide_by_monomial(m);
    }
    Poly cur = f;
    for (int round = 0; round < k; ++round) {
        // Synthetic division of cur by (x_var - shift) over the other
        // variables; the remainder must vanish.
        std::vector<Poly> slices = cur.coeffs_in_variable(var);
        int deg = static_cast<int>(slices.size()) - 1;
        if (deg < 1) throw std::domain_error("linear division is not exact");
        std::vector<Poly> q(deg, Poly(f.dim()));
        Poly carry = slices[deg];
        for (int i = deg - 1; i >= 0; --i) {
            q[i] = carry;
            carry = slices[i] + carry.scaled(shift);
        }
        if (!carry.is_zero()) throw std::domain_error("linear division is not exact");
        Poly next(f.dim());
        for (int i = 0; i < deg; ++i) {
            Monomial m(f.dim());
            m.e[var] = i;
            next = next + q[i] * Poly::term(m, Rat(1));
        }
        cur = next;
    }
    return cur;
}

std::optional<int> order_along_hyperplane(const Poly& f, int var, const Rat& shift) {
    if (f.is_zero()) return std::nullopt;
    if (shift == 0) return f.order_along({var});
    int count = 0;
    Poly cur = f;
    while (true) {
        try {
            cur = divide_by_linear(cur, var, shift, 1);
            ++count;
        } catch (const std::domain_error&) {
            return count;
        }
    }
}

}  // namespace rees

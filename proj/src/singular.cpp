#include "reesolve/singular.hpp"

namespace rees {

Ideal sing_ideal(const ReesAlgebra& G) {
    Ideal total(G.dim());
    for (const WeightedGen& g : G.gens()) {
        total = ideal_sum(total, diff_ideal(Ideal::principal(g.f), g.n - 1));
    }
    return total;
}

bool contains_point(const ReesAlgebra& G, const PointQ& p) {
    for (const WeightedGen& g : G.gens()) {
        auto o = g.f.order_at(p);
        if (o && *o < g.n) return false;
    }
    return true;
}

std::optional<Rat> ord_at(const ReesAlgebra& G, const PointQ& p) {
    std::optional<Rat> best;
    for (const WeightedGen& g : G.gens()) {
        auto o = g.f.order_at(p);
        if (!o) continue;  // never happens for stored generators
        Rat v(static_cast<long>(*o), static_cast<long>(g.n));
        if (!best || v < *best) best = v;
    }
    return best;
}

std::optional<Rat> ord_along(const ReesAlgebra& G, const std::set<int>& vars) {
    if (vars.empty()) throw std::invalid_argument("ord_along needs a nonempty variable set");
    std::optional<Rat> best;
    for (const WeightedGen& g : G.gens()) {
        auto o = g.f.order_along(vars);
        if (!o) continue;
        Rat v(static_cast<long>(*o), static_cast<long>(g.n));
        if (!best || v < *best) best = v;
    }
    return best;
}

bool is_simple_at(const ReesAlgebra& G, const PointQ& p) {
    if (!contains_point(G, p)) throw std::domain_error("is_simple_at: point is not singular");
    auto o = ord_at(G, p);
    return o && *o == 1;
}

}  // namespace rees

#include "reesolve/ideal.hpp"

#include <algorithm>

namespace rees {

Ideal::Ideal(int dim, std::vector<Poly> gens) : dim_(dim) {
    for (Poly& g : gens) {
        if (g.dim() != dim) throw std::invalid_argument("ideal generator dimension mismatch");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::principal(const Poly& f) {
    Ideal I(f.dim());
    if (!f.is_zero()) I.gens_.push_back(f);
    return I;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("ideal dimension mismatch");
    std::vector<Poly> gens = a.gens();
    for (const Poly& g : b.gens()) gens.push_back(g);
    return Ideal(a.dim(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("ideal dimension mismatch");
    std::vector<Poly> gens;
    for (const Poly& f : a.gens())
        for (const Poly& g : b.gens()) gens.push_back(f * g);
    return Ideal(a.dim(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int k) {
    if (k < 1) throw std::invalid_argument("ideal power needs k >= 1");
    Ideal r = a;
    for (int i = 1; i < k; ++i) r = ideal_product(r, a);
    // Dedupe products; order-preserving.
    std::vector<Poly> out;
    for (const Poly& g : r.gens()) {
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    return Ideal(a.dim(), std::move(out));
}

std::optional<int> ideal_order_at(const Ideal& I, const PointQ& p) {
    std::optional<int> best;
    for (const Poly& g : I.gens()) {
        auto o = g.order_at(p);
        if (o && (!best || *o < *best)) best = o;
    }
    return best;
}

std::optional<int> ideal_order_along(const Ideal& I, const std::set<int>& vars) {
    std::optional<int> best;
    for (const Poly& g : I.gens()) {
        auto o = g.order_along(vars);
        if (o && (!best || *o < *best)) best = o;
    }
    return best;
}

Ideal diff_ideal(const Ideal& I, int r) {
    if (r < 0) throw std::invalid_argument("diff_ideal needs r >= 0");
    std::vector<Poly> gens;
    for (const Poly& g : I.gens()) {
        for (int d = 0; d <= r; ++d) {
            for (const Monomial& alpha : monomials_of_degree(I.dim(), d)) {
                Poly h = g.delta(alpha);
                if (!h.is_zero() && std::find(gens.begin(), gens.end(), h) == gens.end())
                    gens.push_back(h);
            }
        }
    }
    return Ideal(I.dim(), std::move(gens));
}

MonomialPart extract_monomial_part(const Ideal& I, const std::vector<int>& divisor_vars) {
    if (I.is_zero()) throw std::domain_error("extract_monomial_part: zero ideal");
    MonomialPart out;
    Monomial m(I.dim());
    for (int v : divisor_vars) {
        auto e = ideal_order_along(I, {v});
        out.exponents.push_back(*e);
        m.e[v] = *e;
    }
    std::vector<Poly> cof;
    for (const Poly& g : I.gens()) cof.push_back(g.divide_by_monomial(m));
    out.cofactor = Ideal(I.dim(), std::move(cof));
    return out;
}

// ---- Groebner ---------------------------------------------------------------

Poly reduce(const Poly& f, const std::vector<Poly>& basis) {
    Poly rem(f.dim());
    Poly h = f;
    while (!h.is_zero()) {
        bool divided = false;
        const Monomial& lm = h.leading_monomial();
        for (const Poly& g : basis) {
            if (g.is_zero()) continue;
            const Monomial& glm = g.leading_monomial();
            if (!glm.divides(lm)) continue;
            Monomial q(f.dim());
            for (int i = 0; i < f.dim(); ++i) q.e[i] = lm.e[i] - glm.e[i];
            Rat c = h.leading_coeff() / g.leading_coeff();
            h = h - g * Poly::term(q, c);
            divided = true;
            break;
        }
        if (!divided) {
            Poly lt = Poly::term(lm, h.leading_coeff());
            rem = rem + lt;
            h = h - lt;
        }
    }
    return rem;
}

namespace {

Poly make_monic(const Poly& f) {
    if (f.is_zero()) return f;
    return f.scaled(Rat(1) / f.leading_coeff());
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.dim());
    for (int i = 0; i < a.dim(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.dim(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

GroebnerBasis buchberger(const std::vector<Poly>& input, const GroebnerLimits& lim) {
    GroebnerBasis out;
    // Insertion interreduction first: generator lists arriving from graded
    // pieces are hugely redundant, and the pair queue is quadratic in the
    // basis size.
    std::vector<Poly> sorted;
    for (const Poly& g : input)
        if (!g.is_zero()) sorted.push_back(make_monic(g));
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Poly> basis;
    for (const Poly& g : sorted) {
        Poly r = reduce(g, basis);
        if (!r.is_zero()) basis.push_back(make_monic(r));
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});

    int reductions = 0;
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const Monomial &mi = basis[i].leading_monomial(), &mj = basis[j].leading_monomial();
        if (coprime(mi, mj)) continue;  // Buchberger's first criterion
        if (++reductions > lim.max_reductions) {
            out.complete = false;
            break;
        }
        Monomial l = mono_lcm(mi, mj);
        if (l.degree() > lim.max_degree) {
            out.complete = false;
            continue;
        }
        Monomial qi(mi.dim()), qj(mi.dim());
        for (int k = 0; k < mi.dim(); ++k) {
            qi.e[k] = l.e[k] - mi.e[k];
            qj.e[k] = l.e[k] - mj.e[k];
        }
        Poly s = basis[i] * Poly::term(qi, Rat(1)) - basis[j] * Poly::term(qj, Rat(1));
        Poly r = reduce(s, basis);
        if (r.is_zero()) continue;
        if (r.total_degree() > lim.max_degree) {
            out.complete = false;
            continue;
        }
        r = make_monic(r);
        basis.push_back(r);
        for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.push_back({k, basis.size() - 1});
    }

    if (out.complete) {
        // Interreduce for a canonical reduced basis.
        std::vector<Poly> reduced;
        for (size_t i = 0; i < basis.size(); ++i) {
            const Monomial& lm = basis[i].leading_monomial();
            bool redundant = false;
            for (size_t j = 0; j < basis.size() && !redundant; ++j) {
                if (i == j) continue;
                const Monomial& oj = basis[j].leading_monomial();
                if (!oj.divides(lm)) continue;
                if (!(oj == lm) || j < i) redundant = true;  // keep first among equal LMs
            }
            if (!redundant) reduced.push_back(basis[i]);
        }
        for (size_t i = 0; i < reduced.size(); ++i) {
            std::vector<Poly> others;
            for (size_t j = 0; j < reduced.size(); ++j)
                if (j != i) others.push_back(reduced[j]);
            reduced[i] = make_monic(reduce(reduced[i], others));
        }
        reduced.erase(std::remove_if(reduced.begin(), reduced.end(),
                                     [](const Poly& p) { return p.is_zero(); }),
                      reduced.end());
        std::sort(reduced.begin(), reduced.end());
        basis = std::move(reduced);
    }
    out.polys = std::move(basis);
    return out;
}

}  // namespace

const GroebnerBasis& Ideal::groebner(const GroebnerLimits& lim) const {
    if (!gb_) gb_ = std::make_shared<GroebnerBasis>(buchberger(gens_, lim));
    return *gb_;
}

Membership ideal_membership(const Poly& f, const Ideal& I, const GroebnerLimits& lim) {
    if (f.is_zero()) return Membership::In;
    if (I.is_zero()) return Membership::NotIn;
    const GroebnerBasis& gb = I.groebner(lim);
    Poly r = reduce(f, gb.polys);
    if (r.is_zero()) return Membership::In;
    return gb.complete ? Membership::NotIn : Membership::Undecided;
}

Membership contains_unit(const Ideal& I, const GroebnerLimits& lim) {
    return ideal_membership(Poly::constant(I.dim(), Rat(1)), I, lim);
}

}  // namespace rees

#include "reesolve/rees.hpp"

#include <algorithm>
#include <map>

namespace rees {

ReesAlgebra::ReesAlgebra(int dim, std::vector<WeightedGen> gens) : dim_(dim) {
    for (WeightedGen& g : gens) {
        if (g.f.dim() != dim) throw std::invalid_argument("generator dimension mismatch");
        if (g.f.is_zero()) continue;
        if (g.n < 1) throw std::invalid_argument("generator weight must be positive");
        if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
    }
}

long ReesAlgebra::weight_lcm() const {
    long l = 1;
    for (const WeightedGen& g : gens_) l = lcm_long(l, g.n);
    return l;
}

ReesAlgebra from_pair(const Pair& p) {
    if (p.J.is_zero()) throw std::domain_error("from_pair: zero ideal");
    if (p.b < 1) throw std::invalid_argument("from_pair: b must be positive");
    std::vector<WeightedGen> gens;
    for (const Poly& g : p.J.gens()) gens.push_back({g, p.b});
    return ReesAlgebra(p.J.dim(), std::move(gens));
}

namespace {

// Exponent vectors a with sum a_i n_i == N, lexicographically descending.
void weighted_partitions(const std::vector<int>& weights, long N, size_t pos,
                         std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (pos == weights.size()) {
        if (N == 0) out.push_back(cur);
        return;
    }
    long maxa = N / weights[pos];
    for (long a = maxa; a >= 0; --a) {
        cur[pos] = static_cast<int>(a);
        weighted_partitions(weights, N - a * weights[pos], pos + 1, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

Ideal graded_piece(const ReesAlgebra& G, long N) {
    if (N < 1) throw std::invalid_argument("graded_piece needs N >= 1");
    std::vector<int> weights;
    for (const WeightedGen& g : G.gens()) weights.push_back(g.n);
    std::vector<std::vector<int>> exps;
    std::vector<int> cur(weights.size(), 0);
    weighted_partitions(weights, N, 0, cur, exps);
    std::vector<Poly> gens;
    for (const auto& a : exps) {
        Poly p = Poly::constant(G.dim(), Rat(1));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] > 0) p = p * G.gens()[i].f.pow(a[i]);
        }
        if (!p.is_zero() && std::find(gens.begin(), gens.end(), p) == gens.end())
            gens.push_back(p);
    }
    return Ideal(G.dim(), std::move(gens));
}

ReesAlgebra odot(const ReesAlgebra& a, const ReesAlgebra& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("odot dimension mismatch");
    std::vector<WeightedGen> gens = a.gens();
    for (const WeightedGen& g : b.gens()) gens.push_back(g);
    return ReesAlgebra(a.dim(), std::move(gens));
}

ReesAlgebra veronese(const ReesAlgebra& G, int m) {
    if (m < 1) throw std::invalid_argument("veronese needs m >= 1");
    if (m == 1 || G.is_zero()) return G;
    const auto& gens = G.gens();
    size_t s = gens.size();
    // Members of the monoid {a in {0..m}^s : m | sum a_i n_i}; every Hilbert
    // basis element has all entries <= m because m*e_i always lies in the
    // monoid.
    std::vector<std::vector<int>> members;
    std::vector<int> cur(s, 0);
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == s) {
            long w = 0;
            for (size_t i = 0; i < s; ++i) w += static_cast<long>(cur[i]) * gens[i].n;
            if (w > 0 && w % m == 0) members.push_back(cur);
            return;
        }
        for (int a = m; a >= 0; --a) {
            cur[pos] = a;
            self(self, pos + 1);
        }
        cur[pos] = 0;
    };
    rec(rec, 0);
    // Keep the indecomposable members.
    std::vector<WeightedGen> out;
    for (const auto& a : members) {
        bool decomposable = false;
        for (const auto& b : members) {
            if (b == a) continue;
            bool leq = true;
            for (size_t i = 0; i < s; ++i)
                if (b[i] > a[i]) {
                    leq = false;
                    break;
                }
            if (leq) {
                decomposable = true;
                break;
            }
        }
        if (decomposable) continue;
        Poly p = Poly::constant(G.dim(), Rat(1));
        long w = 0;
        for (size_t i = 0; i < s; ++i) {
            if (a[i] > 0) p = p * gens[i].f.pow(a[i]);
            w += static_cast<long>(a[i]) * gens[i].n;
        }
        if (!p.is_zero()) out.push_back({p, static_cast<int>(w)});
    }
    return ReesAlgebra(G.dim(), std::move(out));
}

ReesAlgebra natural_closure(const ReesAlgebra& G) {
    std::vector<WeightedGen> out;
    for (const WeightedGen& g : G.gens()) {
        for (int np = 1; np <= g.n; ++np) out.push_back({g.f, np});
    }
    return ReesAlgebra(G.dim(), std::move(out));
}

ReesAlgebra diff_closure(const ReesAlgebra& G) {
    std::vector<WeightedGen> out;
    for (const WeightedGen& g : G.gens()) {
        for (int d = 0; d < g.n; ++d) {
            for (const Monomial& alpha : monomials_of_degree(G.dim(), d)) {
                Poly h = g.f.delta(alpha);
                if (h.is_zero()) continue;
                for (int np = g.n; np > d; --np) out.push_back({h, np - d});
            }
        }
    }
    return ReesAlgebra(G.dim(), std::move(out));
}

ReesAlgebra twist(const ReesAlgebra& G, const Rat& omega) {
    if (omega <= 0) throw std::invalid_argument("twist needs omega > 0");
    Int a = rat_num(omega), b = rat_den(omega);
    ReesAlgebra V = veronese(G, static_cast<int>(b));
    std::vector<WeightedGen> out;
    for (const WeightedGen& g : V.gens()) {
        Rat w = Rat(g.n) * omega;
        if (!is_integer(w)) throw std::logic_error("twist produced a fractional weight");
        out.push_back({g.f, static_cast<int>(rat_num(w))});
    }
    return ReesAlgebra(G.dim(), std::move(out));
}

Membership subalgebra_graded_up_to(const ReesAlgebra& A, const ReesAlgebra& B, long bound,
                                   const GroebnerLimits& lim) {
    // Containment of graded subalgebras follows from generator-level
    // containment: products land in B because B is closed under products.
    bool undecided = false;
    std::map<int, Ideal> pieces;
    for (const WeightedGen& g : A.gens()) {
        if (g.n > bound) continue;
        auto it = pieces.find(g.n);
        if (it == pieces.end()) it = pieces.emplace(g.n, graded_piece(B, g.n)).first;
        Membership m = ideal_membership(g.f, it->second, lim);
        if (m == Membership::NotIn) return Membership::NotIn;
        if (m == Membership::Undecided) undecided = true;
    }
    return undecided ? Membership::Undecided : Membership::In;
}

Membership equal_graded_up_to(const ReesAlgebra& A, const ReesAlgebra& B, long bound,
                              const GroebnerLimits& lim) {
    Membership ab = subalgebra_graded_up_to(A, B, bound, lim);
    if (ab == Membership::NotIn) return Membership::NotIn;
    Membership ba = subalgebra_graded_up_to(B, A, bound, lim);
    if (ba == Membership::NotIn) return Membership::NotIn;
    if (ab == Membership::Undecided || ba == Membership::Undecided) return Membership::Undecided;
    return Membership::In;
}

}  // namespace rees

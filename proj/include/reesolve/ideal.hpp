#pragma once

#include "reesolve/poly.hpp"

#include <memory>

namespace rees {

enum class Membership { In, NotIn, Undecided };

// Resource caps for Buchberger; runaway computations surface as Undecided.
struct GroebnerLimits {
    int max_reductions = 5000;
    int max_degree = 40;
};

struct GroebnerBasis {
    std::vector<Poly> polys;  // monic, interreduced when complete
    bool complete = true;     // false when a cap was hit
};

// Finitely generated ideal. Generators are nonzero; the zero ideal is the
// empty list. Values are immutable; the Groebner basis is memoized.
class Ideal {
  public:
    Ideal() : dim_(0) {}
    explicit Ideal(int dim) : dim_(dim) {}
    Ideal(int dim, std::vector<Poly> gens);

    static Ideal zero(int dim) { return Ideal(dim); }
    static Ideal principal(const Poly& f);

    int dim() const { return dim_; }
    bool is_zero() const { return gens_.empty(); }
    const std::vector<Poly>& gens() const { return gens_; }

    const GroebnerBasis& groebner(const GroebnerLimits& lim = {}) const;

    bool operator==(const Ideal& o) const { return dim_ == o.dim_ && gens_ == o.gens_; }

  private:
    int dim_;
    std::vector<Poly> gens_;
    mutable std::shared_ptr<GroebnerBasis> gb_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int k);

// min over generators of order_at / order_along; nullopt = infinity.
std::optional<int> ideal_order_at(const Ideal& I, const PointQ& p);
std::optional<int> ideal_order_along(const Ideal& I, const std::set<int>& vars);

// Extension by all divided-power derivatives of order <= r.
Ideal diff_ideal(const Ideal& I, int r);

// Largest exponents e_j with I contained in prod (x_j)^{e_j} over the listed
// divisor variables, together with the exactly divided cofactor.
// Throws on the zero ideal.
struct MonomialPart {
    std::vector<int> exponents;  // aligned with divisor_vars
    Ideal cofactor;
};
MonomialPart extract_monomial_part(const Ideal& I, const std::vector<int>& divisor_vars);

// Normal form of f modulo basis under the graded-lex order.
Poly reduce(const Poly& f, const std::vector<Poly>& basis);

Membership ideal_membership(const Poly& f, const Ideal& I, const GroebnerLimits& lim = {});

// Convenience: is 1 in I?
Membership contains_unit(const Ideal& I, const GroebnerLimits& lim = {});

}  // namespace rees

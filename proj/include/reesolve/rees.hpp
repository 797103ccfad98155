#pragma once

#include "reesolve/ideal.hpp"

namespace rees {

struct WeightedGen {
    Poly f;
    int n;  // weight, >= 1
    bool operator==(const WeightedGen& o) const { return n == o.n && f == o.f; }
};

struct Pair {
    Ideal J;
    int b;
};

// A Rees algebra is its finite weighted generator list; exact duplicates are
// dropped, first occurrence wins, order is semantic (it drives the
// deterministic choices downstream).
class ReesAlgebra {
  public:
    ReesAlgebra() : dim_(0) {}
    explicit ReesAlgebra(int dim) : dim_(dim) {}
    ReesAlgebra(int dim, std::vector<WeightedGen> gens);

    int dim() const { return dim_; }
    bool is_zero() const { return gens_.empty(); }
    const std::vector<WeightedGen>& gens() const { return gens_; }

    // lcm of the weights (1 for the zero algebra).
    long weight_lcm() const;

    bool operator==(const ReesAlgebra& o) const { return dim_ == o.dim_ && gens_ == o.gens_; }

  private:
    int dim_;
    std::vector<WeightedGen> gens_;
};

ReesAlgebra from_pair(const Pair& p);

// Ideal generated by the weighted-homogeneous products of degree N.
Ideal graded_piece(const ReesAlgebra& G, long N);

ReesAlgebra odot(const ReesAlgebra& a, const ReesAlgebra& b);

// Subalgebra of pieces in degrees divisible by m, presented by the Hilbert
// basis of the exponent monoid {a : m | sum a_i n_i}.
ReesAlgebra veronese(const ReesAlgebra& G, int m);

ReesAlgebra natural_closure(const ReesAlgebra& G);

// Differential closure: generators Delta^alpha(f_i) W^{n'-|alpha|} for
// 1 <= n' <= n_i, |alpha| < n'. Enumeration order (per generator, alpha in
// graded-lex order, then n' descending) is part of the contract.
ReesAlgebra diff_closure(const ReesAlgebra& G);

// Grading rescale by omega > 0 via the b-Veronese, weights n -> n*omega.
ReesAlgebra twist(const ReesAlgebra& G, const Rat& omega);

// Degree-bounded bidirectional graded-piece membership; the working notion of
// equality between algebras. Undecided surfaces Groebner caps.
Membership equal_graded_up_to(const ReesAlgebra& A, const ReesAlgebra& B, long bound,
                              const GroebnerLimits& lim = {});

// One-sided version: every graded piece of A up to bound is contained in the
// corresponding piece of B.
Membership subalgebra_graded_up_to(const ReesAlgebra& A, const ReesAlgebra& B, long bound,
                                   const GroebnerLimits& lim = {});

}  // namespace rees

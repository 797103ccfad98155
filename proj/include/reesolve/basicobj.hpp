#pragma once

#include "reesolve/blowup.hpp"

namespace rees {

struct MarkedObject {
    ReesAlgebra G;
    Chart chart;
    // Sibling-visibility certificates. For each sibling chart j' of an
    // ancestor blowup, the locus invisible from that sibling is the vanishing
    // set of one polynomial (x_j' composed through the later substitutions).
    // A chart whose residual singular locus avoids such a hypersurface may
    // hand the residue to that sibling, where it stays coordinate-trackable.
    std::vector<Poly> escapes;
};

// The induction invariant t = (word, n), compared lexicographically.
struct TValue {
    Rat word;
    int n = 0;
    bool operator==(const TValue& o) const { return word == o.word && n == o.n; }
    bool operator<(const TValue& o) const {
        if (word != o.word) return word < o.word;
        return n < o.n;
    }
};

// Maximal-monomial data: N = lcm of the weights, the exponent vector over the
// chart's divisor records (a_i = alpha_i / N), and the weak algebra
// represented by the pair (cofactor of I_N, N).
struct WeakPart {
    long N = 1;
    std::vector<Rat> a;  // aligned with chart.divisors
    ReesAlgebra weak;
    Ideal piece;  // I_N
};

WeakPart weak_part(const MarkedObject& M);

Rat word_at(const MarkedObject& M, const PointQ& p);
Rat word_along(const MarkedObject& M, const std::set<int>& vars);
TValue t_at(const MarkedObject& M, const PointQ& p);

// A shifted coordinate locus {x_v = value_v : v in constraints}; a point when
// every variable is constrained.
struct Locus {
    std::vector<std::pair<int, Rat>> constraints;  // sorted by variable

    bool is_point(int dim) const { return static_cast<int>(constraints.size()) == dim; }
    bool is_shifted() const {
        for (const auto& [v, c] : constraints)
            if (c != 0) return true;
        return false;
    }
    std::set<int> var_set() const {
        std::set<int> s;
        for (const auto& [v, c] : constraints) s.insert(v);
        return s;
    }
    PointQ as_point(int dim) const;       // requires is_point
    PointQ shift_vector(int dim) const;   // value on constrained vars, 0 elsewhere
    bool operator==(const Locus& o) const { return constraints == o.constraints; }
};

bool locus_in_sing(const MarkedObject& M, const Locus& L);
TValue t_at_locus(const MarkedObject& M, const Locus& L);

// Deterministic candidate realization of the max-t search space: coordinate
// and shifted coordinate subspaces (shift values are roots of linear factors
// of the generators), the origin, discovered points, then user points; all
// filtered to Sing(G). Order: proper subspaces by (size, variables, values),
// then the origin, then remaining points sorted by coordinates.
std::vector<Locus> candidate_loci(const MarkedObject& M, const std::vector<PointQ>& user_points);

struct MaxT {
    TValue t;
    std::vector<Locus> attaining;  // in candidate order
};
std::optional<MaxT> max_t(const MarkedObject& M, const std::vector<Locus>& candidates);

// Largest word value over the candidate set; nullopt when no candidate is
// singular.
std::optional<Rat> max_word(const MarkedObject& M, const std::vector<PointQ>& user_points);

// Product over the m-element subsets of D of the ideal generated by their
// variables, as a weight-1 algebra. Requires 1 <= m <= |D|.
ReesAlgebra dm_algebra(const Chart& chart, int m);

// T(G) = G odot twist(weak, omega) odot D_m for max t = (omega, m); the
// D-factor is omitted when m = 0.
ReesAlgebra T_of(const MarkedObject& M, const TValue& tmax);

// One blowup with full bookkeeping: per-chart weighted transform, strict
// transforms of E, the new exceptional exponent omega - 1 + sum of the a_i
// over divisors containing the center, the from-scratch recomputation of that
// exponent, and the D-update keyed on the max word across the sibling charts.
struct TransformResult {
    std::vector<MarkedObject> children;   // ascending chosen variable
    std::vector<int> chosen;              // chosen variable per child
    std::vector<Rat> new_a_bookkept;      // per child
    std::vector<Rat> new_a_recomputed;    // per child
    Rat omega;                            // word along the center
    std::optional<Rat> max_word_before;
    std::optional<Rat> max_word_after;
};
TransformResult transform_marked(const MarkedObject& M, const CenterSpec& c, int step_label,
                                 const std::vector<PointQ>& user_points = {});

}  // namespace rees

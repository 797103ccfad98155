#pragma once

#include "reesolve/basicobj.hpp"

namespace rees {

// First weight-1 generator with order exactly 1 at p, under the generator
// enumeration order. Throws when none exists (the algebra was not
// differentially closed and simple at p).
Poly maximal_contact(const ReesAlgebra& Gd, const PointQ& p);

// Invertible linear change making the linear part of ell a single variable,
// plus the graph data Z = {x_var = h} with h free of x_var.
struct GraphForm {
    int var = -1;
    Poly h;
    bool identity = true;
    std::vector<Poly> old_in_new;  // substitute into a polynomial to change coordinates
    std::vector<Poly> new_in_old;
};
struct NonGraphError : std::domain_error {
    using std::domain_error::domain_error;
};
GraphForm to_graph_form(const Poly& ell, const PointQ& p);

// Substitute x_var -> h and drop the variable; the result lives in dimension
// d - 1 (variables above var shift down).
ReesAlgebra restrict_to_hypersurface(const ReesAlgebra& G, int var, const Poly& h);

// Next center of the word-0 combinatorial rule: the inclusion-minimal subset
// of E with exponent sum >= 1 that is smallest by sorted divisor labels. The
// locus records the divisors' hyperplanes (shifts included).
std::optional<Locus> monomial_center(const MarkedObject& M);

// The center sequence the rule produces from M: codimension-1 choices iterate
// in place; a higher-codimension choice ends the list (chart processing
// branches there).
std::vector<CenterSpec> monomial_resolve(const MarkedObject& M);

enum class StepKind { Blowup, Codim1Adjust, Monomial, Restrict, Resolved };
enum class Outcome { Resolved, LimitExceeded, UnsupportedGeometry };

struct TraceStep {
    std::string chart;
    std::vector<std::string> center;  // variable names, post-coordinate-change
    std::optional<TValue> t;
    StepKind kind = StepKind::Resolved;
    bool t_drop = false;
    // Cross-check payload (not serialized): bookkept vs recomputed exceptional
    // exponents, one entry per chart of the blowup.
    std::vector<Rat> new_a_bookkept, new_a_recomputed;
};

struct ResolutionTrace {
    std::vector<TraceStep> steps;
    Outcome outcome = Outcome::Resolved;
    int blowup_count() const;
};

struct ResolveLimits {
    int max_steps = 200;
    int max_degree = 40;
    int max_reductions = 5000;
};

ResolutionTrace resolve(const MarkedObject& M, const ResolveLimits& lim = {},
                        const std::vector<PointQ>& user_points = {});
ResolutionTrace resolve(const ReesAlgebra& G, const std::vector<std::string>& var_names,
                        const ResolveLimits& lim = {}, const std::vector<PointQ>& user_points = {});
ResolutionTrace resolve(const Pair& p, const std::vector<std::string>& var_names,
                        const ResolveLimits& lim = {}, const std::vector<PointQ>& user_points = {});

bool traces_equal(const ResolutionTrace& a, const ResolutionTrace& b);

const char* step_kind_name(StepKind k);
const char* outcome_name(Outcome o);

}  // namespace rees

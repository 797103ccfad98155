#pragma once

#include "reesolve/singular.hpp"

#include <string>

namespace rees {

// An exceptional hypersurface {x_var = shift} of the current chart, with the
// bookkept maximal-monomial exponent and the D-membership flag. Shifts arise
// when the driver re-anchors a chart at a point away from a divisor; keeping
// the hyperplane on record (rather than forgetting it) is what keeps the word
// invariant from re-inflating at its points.
struct DivisorRecord {
    int var;
    int label;  // birth step
    Rat a;
    bool inD = false;
    Rat shift = Rat(0);
    bool operator==(const DivisorRecord& o) const {
        return var == o.var && label == o.label && a == o.a && inD == o.inD && shift == o.shift;
    }
};

// Affine coordinate chart. to_root expresses the root chart's coordinates as
// polynomials in this chart's coordinates (the composed substitution).
struct Chart {
    std::string id;
    std::vector<std::string> vars;
    std::vector<DivisorRecord> divisors;  // sorted by var, at most one per var
    std::string parent_id;
    std::vector<Poly> to_root;

    int dim() const { return static_cast<int>(vars.size()); }
    static Chart root(std::vector<std::string> names);

    const DivisorRecord* record_on(int var) const;
    std::vector<int> divisor_vars() const;
    void sort_divisors();
};

// The center V(x_j : j in S), coordinates of the current chart.
using CenterSpec = std::vector<int>;  // sorted, unique, nonempty

// Y subset of Sing(G) for a coordinate center, decided term-wise on the
// generators of sing_ideal (membership in the monomial prime).
bool is_permissible(const ReesAlgebra& G, const CenterSpec& c);

// The substitution of the chart with chosen index j: x_i -> x_i * x_j for
// i in S \ {j}, identity otherwise (identity map when |S| = 1).
std::vector<Poly> blowup_substitution(int dim, const CenterSpec& c, int chosen);

struct ChartMap {
    int chosen;
    std::vector<Poly> subst;
};
// One map per j in S, ascending.
std::vector<ChartMap> blowup_charts(int dim, const CenterSpec& c);

ReesAlgebra total_transform(const ReesAlgebra& G, const std::vector<Poly>& subst);

// Substitute, then divide each generator exactly by x_h^{n_i}. A divisibility
// failure means the center was not permissible.
ReesAlgebra weighted_transform(const ReesAlgebra& G, const std::vector<Poly>& subst, int h);

// Chart-level geometry of one blowup chart: substitution applied to to_root,
// strict transforms of the divisor records (the chosen variable's record is
// dropped), and a fresh record on the chosen variable whose exponent the
// caller fills in.
Chart blowup_chart_geometry(const Chart& chart, const CenterSpec& c, int chosen, int step_label);

// In-place recoordinate x -> x + p. Divisor records follow: {x_v = s} becomes
// {x_v = s - p_v}.
void translate_chart(Chart& chart, const PointQ& p);

// Exact division by (x_var - shift)^k; throws std::domain_error when the
// division is not exact.
Poly divide_by_linear(const Poly& f, int var, const Rat& shift, int k);

// Order of f along the hyperplane {x_var = shift}.
std::optional<int> order_along_hyperplane(const Poly& f, int var, const Rat& shift);

}  // namespace rees

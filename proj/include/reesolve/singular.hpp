#pragma once

#include "reesolve/rees.hpp"

namespace rees {

// Defining ideal of Sing(G): sum over generators of the order-(n_i - 1)
// differential extensions of (f_i).
Ideal sing_ideal(const ReesAlgebra& G);

// x in Sing(G) iff every generator has order >= its weight at x.
bool contains_point(const ReesAlgebra& G, const PointQ& p);

// min over generators of order_at(f_i, p) / n_i. nullopt for the zero algebra.
std::optional<Rat> ord_at(const ReesAlgebra& G, const PointQ& p);

// min over generators of order_along(f_i, S) / n_i at the generic point of
// the coordinate subspace V(x_j : j in S).
std::optional<Rat> ord_along(const ReesAlgebra& G, const std::set<int>& vars);

// ord 1 at a singular point. Throws std::domain_error off Sing(G).
bool is_simple_at(const ReesAlgebra& G, const PointQ& p);

}  // namespace rees

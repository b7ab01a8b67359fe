#pragma once

#include "sg/signed_graph.hpp"

namespace sg::solver {

// Exact K_n-minor test by exhaustive search for n pairwise-adjacent disjoint
// connected branch sets. Requires |V| <= 12 and n <= 6.
bool has_clique_minor(const SignedGraph& g, int n);

} // namespace sg::solver

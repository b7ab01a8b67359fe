#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg {

enum class CanonMode { Sp, Signed };

// Canonical byte string: equal keys iff sp-isomorphic (Sp mode) or
// signed-isomorphic (Signed mode). Sp mode runs individualization-refinement
// over the 2-edge-colored encoding; Signed mode canonicalizes the double
// switching graph, which identifies switching classes.
std::string canonical_key(const SignedGraph& g, CanonMode mode);

// Bijection preserving adjacency, non-adjacency and edge signs, or nullopt.
// When one exists the lexicographically least image array is returned.
std::optional<Mapping> sp_isomorphic(const SignedGraph& g1, const SignedGraph& g2);

// True iff the double switching graphs are sp-isomorphic; by the
// switch-iso correspondence this matches "some switching of g1 is
// sp-isomorphic to g2" (the tests exercise both routes).
bool signed_isomorphic(const SignedGraph& g1, const SignedGraph& g2);

// All sp-automorphisms (exact sign preservation), as image arrays in
// lexicographic order.
std::vector<std::vector<Vertex>> sp_automorphisms(const SignedGraph& g);

// All underlying automorphisms f whose pulled-back signature is
// switching-equivalent to the original, i.e. automorphisms of the signed
// graph up to switching.
std::vector<std::vector<Vertex>> signed_automorphisms(const SignedGraph& g);

} // namespace sg

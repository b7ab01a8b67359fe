#pragma once

#include <map>
#include <string>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg::gen {

// Graph plus named distinguished vertices; plain named graphs have no ports.
struct GadgetTemplate {
    SignedGraph graph;
    std::map<std::string, Vertex> ports;
};

// Signed Paley graph: complete on GF(q), uv positive iff u-v is a nonzero
// square. Requires q ≡ 1 (mod 4) so that squareness of u-v is symmetric.
SignedGraph paley(int q);

// paley(q) plus a dominating vertex "inf" joined positively to everything.
SignedGraph paley_plus(int q);

// Names: K4_bad_positive, K4_bad_negative, K4_Mminus, K4_Mplus, K6_M,
// K6_Mbar, P5_M, H_gadget, X_phi, X_phi_prime, Y_phi, Y_phi_prime.
GadgetTemplate named_graph(const std::string& name);
std::vector<std::string> named_graph_names();

// Disjoint union of g and the template, identifying each bound port with its
// target vertex. Fresh vertices are labeled "<base>^{<bound...>}" after the
// bound vertices. A template edge landing on an existing g edge must agree in
// sign (identification), otherwise this throws.
SignedGraph pin(const SignedGraph& g, const GadgetTemplate& tmpl,
                const std::map<std::string, Vertex>& binding);

// The gadget tower: level 0 is the base gadget with plain vertex names;
// levels 1-5 pin or glue further copies as the escalating constructions
// require. Orders: 8, 14, 112, 32, 80, 640.
SignedGraph build_tower(int level);

// Two disjoint copies of g plus a vertex "inf" joined positively to all of
// copy 1 and negatively to all of copy 2.
SignedGraph star_construction(const SignedGraph& g);

// Per vertex v of g: two fresh copies of a, one joined to v all-positive,
// the other all-negative.
SignedGraph attach_vertex_gadgets(const SignedGraph& g, const SignedGraph& a);

// Per edge xy of g and each (alpha, beta) in {+,-}^2: a fresh copy of a with
// every copy vertex joined to x with sign alpha and to y with sign beta.
SignedGraph attach_edge_gadgets(const SignedGraph& g, const SignedGraph& a);

// One representative per switching class of the underlying graph of g:
// spanning-forest edges forced positive, all sign patterns on the remaining
// edges. 2^(m-n+c) graphs, enumerated in counting order.
std::vector<SignedGraph> enumerate_signatures_mod_switching(const SignedGraph& g);

} // namespace sg::gen

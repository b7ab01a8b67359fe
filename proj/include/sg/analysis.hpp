#pragma once

#include <array>
#include <utility>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg::analysis {

using SignVector = std::vector<Sign>;

// Intersection of the sign-filtered neighborhoods N^{a_i}(v_i). The tuple
// entries must be distinct and match the sign vector in length.
VertexSet alpha_neighborhood(const SignedGraph& g, const std::vector<Vertex>& tuple,
                             const SignVector& signs);

// P_{k,l}: every ordered k-tuple of distinct vertices and every sign vector
// has at least l common filtered neighbors.
bool has_property_P(const SignedGraph& g, int k, int l);

// Same with the switched neighborhood N^{a}(v) ∪ N^{-a}(v); invariant under
// switching.
bool has_property_Phat(const SignedGraph& g, int k, int l);

enum class TransitivityKind { SpVertex, SpEdge, Vertex, Edge };

// Sp kinds quantify over sp-automorphisms, signed kinds over automorphisms up
// to switching. Edge transitivity demands, for ordered endpoint pairs, an
// automorphism mapping one onto the other; the sp variant only compares
// same-sign edges, the signed variant all edges.
bool transitivity(const SignedGraph& g, TransitivityKind kind);

// True iff the edges uw and vw carry the same sign; w must be a common
// neighbor of u and v.
bool agrees_on(const SignedGraph& g, Vertex u, Vertex v, Vertex w);

// On an order-6 complete signed graph: a pair agreeing on exactly two of the
// other four vertices and disagreeing on the other two; the agreeing and
// disagreeing pairs are its teams. Which team agrees can flip under
// switching, the partition cannot.
struct SplitterRecord {
    std::pair<Vertex, Vertex> pair;
    std::array<std::pair<Vertex, Vertex>, 2> teams; // normalized, order-insensitive

    friend bool operator==(const SplitterRecord&, const SplitterRecord&) = default;
};

std::vector<SplitterRecord> splitters(const SignedGraph& g);

// Vertex-induced signed subgraph with compacted ids; labels are retained.
SignedGraph induced_signed_subgraph(const SignedGraph& g, const VertexSet& s);

} // namespace sg::analysis

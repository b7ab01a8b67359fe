#pragma once

#include <optional>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg::gen {

// All connected 3-regular graphs on n vertices up to isomorphism (as
// all-positive signed graphs), sorted by canonical key. n must be even,
// 4 <= n <= 14; generation is attachment backtracking with canonical
// deduplication.
std::vector<SignedGraph> enumerate_cubic_graphs(int n);

// Underlying pattern with a black/white split: black vertices carry their
// entire neighborhood inside the pattern, white vertices may have outside
// neighbors or coincide with each other.
struct ConfigPattern {
    SignedGraph graph;
    std::vector<bool> black;
};

// The four reducible configurations, keyed 'a'..'d':
//   a: K4 minus an edge with two pendant edges
//   b: triangle with three pendant edges
//   c: 4-cycle with four pendant edges
//   d: tree of six degree-3 vertices with eight pendant leaves
ConfigPattern config_pattern(char which);

// Embedding of the pattern into g: blacks map injectively and their g
// neighborhoods equal their pattern neighborhoods' images; whites may fall
// together (never onto a black image); every pattern edge maps to a g edge.
// Returns the image array, pattern vertex -> g vertex.
std::optional<std::vector<Vertex>> find_configuration(const SignedGraph& g,
                                                      const ConfigPattern& p);

} // namespace sg::gen

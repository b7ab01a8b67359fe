#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sg/types.hpp"

namespace sg {

// A simple graph with a sign on every edge. Values are immutable once built
// (labels may be attached during construction by generators); every operation
// below returns a fresh graph rather than mutating its input.
class SignedGraph {
public:
    SignedGraph() = default;

    // Throws std::invalid_argument on loops, duplicate pairs (even with equal
    // signs) and out-of-range endpoints.
    static SignedGraph build(int order, const std::vector<EdgeSpec>& edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(Vertex u, Vertex v) const { return cell(u, v) != 0; }
    Sign sign(Vertex u, Vertex v) const;

    // 0 when absent, otherwise +1 / -1.
    std::int8_t cell(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u) * n_ + v];
    }

    // Edges sorted by (u, v) with u < v; stable across identical builds.
    const std::vector<EdgeSpec>& edges() const { return edges_; }

    int negative_edge_count() const;

    std::vector<Vertex> neighbors(Vertex v, std::optional<Sign> filter = {}) const;
    int degree(Vertex v, std::optional<Sign> filter = {}) const;

    // Neighborhood as a bitmask; only valid while order() <= 64.
    std::uint64_t neighbor_mask(Vertex v, std::optional<Sign> filter = {}) const;

    const std::string& label(Vertex v) const;
    void set_label(Vertex v, std::string label);
    bool has_label(Vertex v) const { return !label(v).empty(); }
    std::optional<Vertex> find_label(const std::string& label) const;

    // Same order and same edge set, signs ignored.
    bool same_underlying(const SignedGraph& other) const;

    // Full structural equality: order, adjacency with signs, labels.
    friend bool operator==(const SignedGraph&, const SignedGraph&);

    void check_vertex(Vertex v) const;

private:
    int n_ = 0;
    std::vector<std::int8_t> adj_;
    std::vector<EdgeSpec> edges_;
    std::vector<std::string> labels_;
};

// -------------------- switching and walk signs --------------------

// Flips the sign of every edge with exactly one endpoint in s.
SignedGraph switched(const SignedGraph& g, const VertexSet& s);

// Sign of a closed walk: positive iff the number of negative edge traversals
// (counted with multiplicity) is even. Throws when the walk is not closed or
// uses a non-edge.
Sign walk_sign(const SignedGraph& g, const Walk& w);

// Switches g so that every spanning-tree edge becomes positive; per-component
// tree rooted at the least vertex id, BFS with ascending neighbor order. Two
// signatures on one underlying graph are switching-equivalent iff their
// normal forms have identical signs.
SignedGraph switch_normal_form(const SignedGraph& g);

// Throws when the underlying graphs differ.
bool is_switch_equivalent(const SignedGraph& g1, const SignedGraph& g2);

// All 2^(n-c) distinct switchings of g (one representative per switch set,
// fixing the least vertex of every component outside the set).
std::vector<SignedGraph> all_switchings(const SignedGraph& g);

// -------------------- derived constructions and queries --------------------

// Adds an anti-twin v^ for every vertex v: edge uv of sign s yields uv and
// u^v^ of sign s plus uv^ and u^v of sign -s. Anti-twin labels get a '^'
// suffix.
SignedGraph double_switching(const SignedGraph& g);

// Pairs that must receive distinct images under every homomorphism: adjacent
// pairs and pairs lying together on a negative 4-cycle.
std::vector<std::pair<Vertex, Vertex>> forced_distinct_pairs(const SignedGraph& g);

// Shortest cycle length of the underlying graph; nullopt for forests.
std::optional<int> girth(const SignedGraph& g);

std::vector<std::vector<Vertex>> connected_components(const SignedGraph& g);

} // namespace sg

#include "sg/signed_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace sg {

SignedGraph SignedGraph::build(int order, const std::vector<EdgeSpec>& edges) {
    if (order < 0) throw std::invalid_argument("order must be non-negative");
    SignedGraph g;
    g.n_ = order;
    g.adj_.assign(static_cast<std::size_t>(order) * order, 0);
    g.labels_.assign(order, {});
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= order || e.v < 0 || e.v >= order)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("loops are not allowed");
        auto& cell = g.adj_[static_cast<std::size_t>(e.u) * order + e.v];
        if (cell != 0)
            throw std::invalid_argument("duplicate edge pair");
        cell = static_cast<std::int8_t>(e.sign);
        g.adj_[static_cast<std::size_t>(e.v) * order + e.u] = static_cast<std::int8_t>(e.sign);
    }
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v)
            if (g.adj_[static_cast<std::size_t>(u) * order + v] != 0)
                g.edges_.push_back({u, v, g.sign(u, v)});
    return g;
}

void SignedGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

Sign SignedGraph::sign(Vertex u, Vertex v) const {
    auto c = cell(u, v);
    if (c == 0) throw std::invalid_argument("no such edge");
    return c > 0 ? Sign::Positive : Sign::Negative;
}

int SignedGraph::negative_edge_count() const {
    int k = 0;
    for (const auto& e : edges_)
        if (e.sign == Sign::Negative) ++k;
    return k;
}

std::vector<Vertex> SignedGraph::neighbors(Vertex v, std::optional<Sign> filter) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u) {
        auto c = adj_[static_cast<std::size_t>(v) * n_ + u];
        if (c == 0) continue;
        if (filter && static_cast<std::int8_t>(*filter) != c) continue;
        out.push_back(u);
    }
    return out;
}

int SignedGraph::degree(Vertex v, std::optional<Sign> filter) const {
    check_vertex(v);
    int d = 0;
    for (Vertex u = 0; u < n_; ++u) {
        auto c = adj_[static_cast<std::size_t>(v) * n_ + u];
        if (c == 0) continue;
        if (filter && static_cast<std::int8_t>(*filter) != c) continue;
        ++d;
    }
    return d;
}

std::uint64_t SignedGraph::neighbor_mask(Vertex v, std::optional<Sign> filter) const {
    check_vertex(v);
    if (n_ > 64) throw std::logic_error("neighbor_mask requires order <= 64");
    std::uint64_t m = 0;
    for (Vertex u = 0; u < n_; ++u) {
        auto c = adj_[static_cast<std::size_t>(v) * n_ + u];
        if (c == 0) continue;
        if (filter && static_cast<std::int8_t>(*filter) != c) continue;
        m |= std::uint64_t{1} << u;
    }
    return m;
}

const std::string& SignedGraph::label(Vertex v) const {
    check_vertex(v);
    return labels_[v];
}

void SignedGraph::set_label(Vertex v, std::string label) {
    check_vertex(v);
    if (!label.empty())
        for (Vertex u = 0; u < n_; ++u)
            if (u != v && labels_[u] == label)
                throw std::invalid_argument("duplicate vertex label '" + label + "'");
    labels_[v] = std::move(label);
}

std::optional<Vertex> SignedGraph::find_label(const std::string& label) const {
    for (Vertex v = 0; v < n_; ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < adj_.size(); ++i)
        if ((adj_[i] != 0) != (other.adj_[i] != 0)) return false;
    return true;
}

bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_ && a.labels_ == b.labels_;
}

// -------------------- switching and walk signs --------------------

SignedGraph switched(const SignedGraph& g, const VertexSet& s) {
    for (Vertex v : s) g.check_vertex(v);
    std::vector<EdgeSpec> edges = g.edges();
    for (auto& e : edges)
        if (s.contains(e.u) != s.contains(e.v)) e.sign = -e.sign;
    auto out = SignedGraph::build(g.order(), edges);
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.has_label(v)) out.set_label(v, g.label(v));
    return out;
}

Sign walk_sign(const SignedGraph& g, const Walk& w) {
    if (w.sequence.empty()) throw std::invalid_argument("empty walk");
    for (Vertex v : w.sequence) g.check_vertex(v);
    if (!w.closed()) throw std::invalid_argument("walk is not closed");
    int negatives = 0;
    for (std::size_t i = 0; i + 1 < w.sequence.size(); ++i) {
        Sign s = g.sign(w.sequence[i], w.sequence[i + 1]); // throws on non-edges
        if (s == Sign::Negative) ++negatives;
    }
    return negatives % 2 == 0 ? Sign::Positive : Sign::Negative;
}

namespace {

// s[v] = 1 when v belongs to the switch set that makes every spanning-tree
// edge positive; component roots (least ids) stay outside the set.
std::vector<char> tree_switch_assignment(const SignedGraph& g) {
    const int n = g.order();
    std::vector<char> s(n, 0), seen(n, 0);
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex u : g.neighbors(v)) {
                if (seen[u]) continue;
                seen[u] = 1;
                bool negative = g.sign(v, u) == Sign::Negative;
                s[u] = static_cast<char>(s[v] ^ (negative ? 1 : 0));
                queue.push_back(u);
            }
        }
    }
    return s;
}

} // namespace

SignedGraph switch_normal_form(const SignedGraph& g) {
    auto s = tree_switch_assignment(g);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.order(); ++v)
        if (s[v]) members.push_back(v);
    return switched(g, VertexSet(std::move(members)));
}

bool is_switch_equivalent(const SignedGraph& g1, const SignedGraph& g2) {
    if (!g1.same_underlying(g2))
        throw std::invalid_argument("underlying graphs differ");
    auto n1 = switch_normal_form(g1);
    auto n2 = switch_normal_form(g2);
    for (std::size_t i = 0; i < n1.edges().size(); ++i)
        if (n1.edges()[i].sign != n2.edges()[i].sign) return false;
    return true;
}

std::vector<SignedGraph> all_switchings(const SignedGraph& g) {
    const int n = g.order();
    std::vector<Vertex> free_vertices;
    std::vector<char> is_root(n, 0);
    for (const auto& comp : connected_components(g))
        is_root[comp.front()] = 1;
    for (Vertex v = 0; v < n; ++v)
        if (!is_root[v]) free_vertices.push_back(v);

    std::vector<SignedGraph> out;
    const std::uint64_t total = std::uint64_t{1} << free_vertices.size();
    out.reserve(total);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<Vertex> members;
        for (std::size_t i = 0; i < free_vertices.size(); ++i)
            if (bits >> i & 1) members.push_back(free_vertices[i]);
        out.push_back(switched(g, VertexSet(std::move(members))));
    }
    return out;
}

// -------------------- derived constructions and queries --------------------

SignedGraph double_switching(const SignedGraph& g) {
    const int n = g.order();
    std::vector<EdgeSpec> edges;
    edges.reserve(g.edges().size() * 4);
    for (const auto& e : g.edges()) {
        edges.push_back({e.u, e.v, e.sign});
        edges.push_back({e.u + n, e.v + n, e.sign});
        edges.push_back({e.u, e.v + n, -e.sign});
        edges.push_back({e.u + n, e.v, -e.sign});
    }
    auto out = SignedGraph::build(2 * n, edges);
    for (Vertex v = 0; v < n; ++v) {
        if (!g.has_label(v)) continue;
        out.set_label(v, g.label(v));
        out.set_label(v + n, g.label(v) + "^");
    }
    return out;
}

std::vector<std::pair<Vertex, Vertex>> forced_distinct_pairs(const SignedGraph& g) {
    const int n = g.order();
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) {
                out.emplace_back(u, v);
                continue;
            }
            // u, v can only lie antipodally on a 4-cycle u-a-v-b-u.
            auto common = g.neighbors(u);
            bool found = false;
            for (std::size_t i = 0; i < common.size() && !found; ++i) {
                Vertex a = common[i];
                if (!g.has_edge(a, v)) continue;
                for (std::size_t j = i + 1; j < common.size() && !found; ++j) {
                    Vertex b = common[j];
                    if (!g.has_edge(b, v)) continue;
                    int negatives = (g.sign(u, a) == Sign::Negative) +
                                    (g.sign(a, v) == Sign::Negative) +
                                    (g.sign(v, b) == Sign::Negative) +
                                    (g.sign(b, u) == Sign::Negative);
                    if (negatives % 2 == 1) found = true;
                }
            }
            if (found) out.emplace_back(u, v);
        }
    }
    return out;
}

std::optional<int> girth(const SignedGraph& g) {
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex u : g.neighbors(v)) {
                if (u == parent[v]) continue;
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else {
                    // Non-tree edge closes a cycle through root of this length
                    // or shorter; taking the minimum over all roots is exact.
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::vector<std::vector<Vertex>> connected_components(const SignedGraph& g) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> comps;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<Vertex> comp;
        std::deque<Vertex> queue{root};
        seen[root] = 1;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (Vertex u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace sg

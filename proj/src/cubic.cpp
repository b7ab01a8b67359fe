#include "sg/cubic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sg/canonical.hpp"

namespace sg::gen {

namespace {

// Attachment backtracking: always finish the smallest incomplete vertex, add
// neighbors in increasing order, and bring fresh vertices in by increasing
// label. Fresh vertices attach to the current component, so every leaf is
// connected; isomorphic duplicates are removed by canonical key.
struct CubicGen {
    int n = 0;
    std::vector<std::vector<Vertex>> adj;
    int used = 0;
    std::map<std::string, SignedGraph> found;

    bool adjacent(Vertex u, Vertex v) const {
        return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
    }

    void add_edge(Vertex u, Vertex v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    void remove_edge(Vertex u, Vertex v) {
        adj[u].pop_back();
        adj[v].pop_back();
    }

    void record() {
        std::vector<EdgeSpec> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : adj[u])
                if (u < v) edges.push_back({u, v, Sign::Positive});
        auto g = SignedGraph::build(n, edges);
        auto key = canonical_key(g, CanonMode::Sp);
        found.emplace(std::move(key), std::move(g));
    }

    void search() {
        Vertex v = -1;
        for (Vertex u = 0; u < used; ++u)
            if (adj[u].size() < 3) {
                v = u;
                break;
            }
        if (v == -1) {
            if (used == n) record();
            return; // complete but short of n vertices: dead (disconnected)
        }
        // Deficiency must be coverable by the unused vertices.
        int deficiency = 0;
        for (Vertex u = 0; u < used; ++u) deficiency += 3 - static_cast<int>(adj[u].size());
        int unused = n - used;
        if ((deficiency + 3 * unused) % 2 != 0) return;

        Vertex last = adj[v].empty() ? -1 : adj[v].back();
        for (Vertex w = std::max(v + 1, last + 1); w < used; ++w) {
            if (adj[w].size() >= 3 || adjacent(v, w)) continue;
            add_edge(v, w);
            search();
            remove_edge(v, w);
        }
        if (used < n) {
            Vertex w = used;
            ++used;
            add_edge(v, w);
            search();
            remove_edge(v, w);
            --used;
        }
    }
};

} // namespace

std::vector<SignedGraph> enumerate_cubic_graphs(int n) {
    if (n % 2 != 0) throw std::invalid_argument("no cubic graph on an odd number of vertices");
    if (n < 4 || n > 14) throw std::invalid_argument("enumerate_cubic_graphs supports 4 <= n <= 14");
    CubicGen gen;
    gen.n = n;
    gen.adj.assign(n, {});
    gen.used = 1;
    gen.search();
    std::vector<SignedGraph> out;
    out.reserve(gen.found.size());
    for (auto& [key, g] : gen.found) out.push_back(std::move(g));
    return out;
}

ConfigPattern config_pattern(char which) {
    auto build = [](int order, std::vector<std::pair<Vertex, Vertex>> edge_list,
                    std::vector<Vertex> blacks) {
        std::vector<EdgeSpec> edges;
        for (auto [u, v] : edge_list) edges.push_back({u, v, Sign::Positive});
        ConfigPattern p{SignedGraph::build(order, edges), std::vector<bool>(order, false)};
        for (Vertex b : blacks) p.black[b] = true;
        return p;
    };
    switch (which) {
    case 'a':
        // 0,1 white; diamond 2-4, 2-5, 4-5, 4-3, 5-3 with pendants 0-2, 3-...
        // vertices: v1=0, v2=1 (white), v3=2, v5=3, v6=4, v4=5 (black)
        return build(6, {{0, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {5, 1}}, {2, 3, 4, 5});
    case 'b':
        // triangle 3,4,5 with pendant whites 0,1,2
        return build(6, {{3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}, {3, 4, 5});
    case 'c':
        // 4-cycle 4,5,6,7 with pendant whites 0..3
        return build(8, {{4, 5}, {5, 6}, {6, 7}, {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}},
                     {4, 5, 6, 7});
    case 'd':
        // six black degree-3 vertices 8..13 forming a tree, eight white leaves
        // 0..7; 8:{0,1,12}, 9:{2,3,13}, 10:{4,5,13}, 11:{6,7,12}, 12:{8,11,13},
        // 13:{9,10,12}
        return build(14,
                     {{0, 8},
                      {1, 8},
                      {2, 9},
                      {3, 9},
                      {4, 10},
                      {5, 10},
                      {6, 11},
                      {7, 11},
                      {8, 12},
                      {11, 12},
                      {9, 13},
                      {10, 13},
                      {12, 13}},
                     {8, 9, 10, 11, 12, 13});
    default:
        throw std::invalid_argument("config_pattern expects 'a'..'d'");
    }
}

namespace {

struct ConfigSearch {
    const SignedGraph& g;
    const ConfigPattern& p;
    std::vector<Vertex> order;   // blacks first
    std::vector<Vertex> image;   // pattern -> g, -1 unassigned
    std::vector<char> black_hit; // g vertices used by blacks

    bool feasible(Vertex pv, Vertex gv) {
        if (p.black[pv]) {
            if (black_hit[gv]) return false;
            if (g.degree(gv) != p.graph.degree(pv)) return false;
        } else {
            if (black_hit[gv]) return false; // whites never land on a black image
        }
        for (Vertex q : p.graph.neighbors(pv)) {
            if (image[q] == -1) continue;
            if (image[q] == gv || !g.has_edge(gv, image[q])) return false;
        }
        return true;
    }

    bool black_neighborhood_exact(Vertex pv) {
        // All pattern neighbors of pv are assigned; the g neighborhood of its
        // image must be exactly their images.
        std::vector<Vertex> mapped;
        for (Vertex q : p.graph.neighbors(pv)) mapped.push_back(image[q]);
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        auto real = g.neighbors(image[pv]);
        return mapped == real;
    }

    bool run(std::size_t depth) {
        if (depth == order.size()) {
            for (Vertex pv = 0; pv < p.graph.order(); ++pv)
                if (p.black[pv] && !black_neighborhood_exact(pv)) return false;
            return true;
        }
        Vertex pv = order[depth];
        for (Vertex gv = 0; gv < g.order(); ++gv) {
            if (!feasible(pv, gv)) continue;
            image[pv] = gv;
            if (p.black[pv]) black_hit[gv] = 1;
            if (run(depth + 1)) return true;
            if (p.black[pv]) black_hit[gv] = 0;
            image[pv] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<Vertex>> find_configuration(const SignedGraph& g,
                                                      const ConfigPattern& p) {
    ConfigSearch search{g, p, {}, std::vector<Vertex>(p.graph.order(), -1),
                        std::vector<char>(g.order(), 0)};
    for (Vertex v = 0; v < p.graph.order(); ++v)
        if (p.black[v]) search.order.push_back(v);
    for (Vertex v = 0; v < p.graph.order(); ++v)
        if (!p.black[v]) search.order.push_back(v);
    if (!search.run(0)) return std::nullopt;
    return search.image;
}

} // namespace sg::gen

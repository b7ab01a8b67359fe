#include "sg/analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sg/canonical.hpp"

namespace sg::analysis {

namespace {

void check_tuple(const SignedGraph& g, const std::vector<Vertex>& tuple, const SignVector& signs) {
    if (tuple.size() != signs.size())
        throw std::invalid_argument("tuple and sign vector lengths differ");
    if (tuple.empty()) throw std::invalid_argument("empty tuple");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        g.check_vertex(tuple[i]);
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] == tuple[j]) throw std::invalid_argument("repeated vertex in tuple");
    }
}

std::uint64_t alpha_mask(const SignedGraph& g, const std::vector<Vertex>& tuple,
                         const SignVector& signs) {
    std::uint64_t m = ~std::uint64_t{0};
    for (std::size_t i = 0; i < tuple.size(); ++i) m &= g.neighbor_mask(tuple[i], signs[i]);
    return m;
}

// Quantifies |intersection| >= l over all ordered k-tuples of distinct
// vertices and all 2^k sign vectors; switched variant unions the negated
// sign vector's neighborhood before counting.
bool quantified_property(const SignedGraph& g, int k, int l, bool switched_variant) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (l < 0) throw std::invalid_argument("l must be >= 0");
    if (k > g.order()) throw std::invalid_argument("k exceeds the graph order");

    std::vector<Vertex> tuple(k);
    std::vector<char> in_use(g.order(), 0);
    SignVector signs(k, Sign::Positive);

    auto check_all_signs = [&]() {
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << k); ++bits) {
            for (int i = 0; i < k; ++i)
                signs[i] = (bits >> i & 1) ? Sign::Negative : Sign::Positive;
            std::uint64_t m = alpha_mask(g, tuple, signs);
            if (switched_variant) {
                SignVector negated(k);
                for (int i = 0; i < k; ++i) negated[i] = -signs[i];
                m |= alpha_mask(g, tuple, negated);
            }
            if (std::popcount(m) < l) return false;
        }
        return true;
    };

    // Ordered tuples; the criterion is symmetric, but the quantifier in the
    // definition is over ordered tuples and the cost difference is nil.
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == k) return check_all_signs();
        for (Vertex v = 0; v < g.order(); ++v) {
            if (in_use[v]) continue;
            in_use[v] = 1;
            tuple[depth] = v;
            bool ok = self(self, depth + 1);
            in_use[v] = 0;
            if (!ok) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

} // namespace

VertexSet alpha_neighborhood(const SignedGraph& g, const std::vector<Vertex>& tuple,
                             const SignVector& signs) {
    check_tuple(g, tuple, signs);
    std::uint64_t m = alpha_mask(g, tuple, signs);
    std::vector<Vertex> members;
    while (m) {
        members.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return VertexSet(std::move(members));
}

bool has_property_P(const SignedGraph& g, int k, int l) {
    return quantified_property(g, k, l, false);
}

bool has_property_Phat(const SignedGraph& g, int k, int l) {
    return quantified_property(g, k, l, true);
}

bool transitivity(const SignedGraph& g, TransitivityKind kind) {
    const bool sp = kind == TransitivityKind::SpVertex || kind == TransitivityKind::SpEdge;
    auto autos = sp ? sp_automorphisms(g) : signed_automorphisms(g);

    if (kind == TransitivityKind::SpVertex || kind == TransitivityKind::Vertex) {
        // Orbit of vertex 0 must be everything (orbits partition V).
        std::vector<char> orbit(g.order(), 0);
        for (const auto& f : autos) orbit[f[0]] = 1;
        for (Vertex v = 0; v < g.order(); ++v)
            if (!orbit[v]) return false;
        return true;
    }

    // Edge kinds: ordered endpoint pairs of edges, partitioned into orbits by
    // the group action; transitivity means one orbit per sign class (sp) or
    // one orbit overall (signed).
    auto pair_index = [&](Vertex u, Vertex v) { return u * g.order() + v; };
    std::vector<int> orbit_id(static_cast<std::size_t>(g.order()) * g.order(), -1);
    std::vector<std::pair<Vertex, Vertex>> all_pairs;
    for (const auto& e : g.edges()) {
        all_pairs.emplace_back(e.u, e.v);
        all_pairs.emplace_back(e.v, e.u);
    }
    int next_orbit = 0;
    for (const auto& [u, v] : all_pairs) {
        if (orbit_id[pair_index(u, v)] != -1) continue;
        int id = next_orbit++;
        // Closure under the whole group in one sweep: the group is closed
        // under composition, so the orbit is exactly {f(u), f(v) : f}.
        for (const auto& f : autos) orbit_id[pair_index(f[u], f[v])] = id;
        orbit_id[pair_index(u, v)] = id;
    }
    if (kind == TransitivityKind::Edge) return next_orbit <= 1;

    // Sp edge kind: same-sign pairs must share an orbit.
    int pos_orbit = -1, neg_orbit = -1;
    for (const auto& e : g.edges()) {
        for (auto [u, v] : {std::make_pair(e.u, e.v), std::make_pair(e.v, e.u)}) {
            int id = orbit_id[pair_index(u, v)];
            int& slot = e.sign == Sign::Positive ? pos_orbit : neg_orbit;
            if (slot == -1) slot = id;
            if (slot != id) return false;
        }
    }
    return true;
}

bool agrees_on(const SignedGraph& g, Vertex u, Vertex v, Vertex w) {
    if (u == v) throw std::invalid_argument("agrees_on requires distinct u, v");
    if (!g.has_edge(u, w) || !g.has_edge(v, w))
        throw std::invalid_argument("w is not a common neighbor of u and v");
    return g.sign(u, w) == g.sign(v, w);
}

std::vector<SplitterRecord> splitters(const SignedGraph& g) {
    if (g.order() != 6) throw std::invalid_argument("splitters requires order 6");
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = u + 1; v < 6; ++v)
            if (!g.has_edge(u, v))
                throw std::invalid_argument("splitters requires a complete signed graph");

    std::vector<SplitterRecord> out;
    for (Vertex i1 = 0; i1 < 6; ++i1) {
        for (Vertex i2 = i1 + 1; i2 < 6; ++i2) {
            std::vector<Vertex> agree, disagree;
            for (Vertex w = 0; w < 6; ++w) {
                if (w == i1 || w == i2) continue;
                (agrees_on(g, i1, i2, w) ? agree : disagree).push_back(w);
            }
            if (agree.size() != 2 || disagree.size() != 2) continue;
            SplitterRecord rec;
            rec.pair = {i1, i2};
            rec.teams[0] = ordered(agree[0], agree[1]);
            rec.teams[1] = ordered(disagree[0], disagree[1]);
            if (rec.teams[1] < rec.teams[0]) std::swap(rec.teams[0], rec.teams[1]);
            out.push_back(rec);
        }
    }
    return out;
}

SignedGraph induced_signed_subgraph(const SignedGraph& g, const VertexSet& s) {
    for (Vertex v : s) g.check_vertex(v);
    const auto& keep = s.members();
    std::vector<int> compact(g.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) compact[keep[i]] = static_cast<int>(i);

    std::vector<EdgeSpec> edges;
    for (const auto& e : g.edges())
        if (compact[e.u] != -1 && compact[e.v] != -1)
            edges.push_back({compact[e.u], compact[e.v], e.sign});
    auto out = SignedGraph::build(static_cast<int>(keep.size()), edges);
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (g.has_label(keep[i])) out.set_label(static_cast<int>(i), g.label(keep[i]));
    return out;
}

} // namespace sg::analysis

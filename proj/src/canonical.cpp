#include "sg/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

namespace sg {

namespace {

// -------------------- color refinement --------------------

// Refines vertex colors by the multiset of (edge sign, neighbor color) pairs
// until stable. Colors are dense ranks 0..k-1 whose order is preserved, so
// the result is equivariant under relabeling.
std::vector<int> refine_colors(const SignedGraph& g, std::vector<int> colors) {
    const int n = g.order();
    if (n == 0) return colors;
    while (true) {
        std::vector<std::pair<std::vector<int>, Vertex>> sigs(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> sig{colors[v]};
            std::vector<int> nbr;
            for (Vertex u = 0; u < n; ++u) {
                auto c = g.cell(v, u);
                if (c != 0) nbr.push_back(colors[u] * 2 + (c > 0 ? 0 : 1));
            }
            std::sort(nbr.begin(), nbr.end());
            sig.insert(sig.end(), nbr.begin(), nbr.end());
            sigs[v] = {std::move(sig), v};
        }
        auto order = sigs;
        std::sort(order.begin(), order.end());
        std::vector<int> next(n);
        int rank = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && order[i].first != order[i - 1].first) ++rank;
            next[order[i].second] = rank;
        }
        if (next == colors) return colors;
        colors = std::move(next);
    }
}

std::string key_from_discrete(const SignedGraph& g, const std::vector<int>& colors) {
    const int n = g.order();
    std::vector<Vertex> by_color(n);
    for (Vertex v = 0; v < n; ++v) by_color[colors[v]] = v;
    std::string key;
    key.reserve(2 + static_cast<std::size_t>(n) * (n - 1) / 2);
    key.push_back(static_cast<char>(n & 0xff));
    key.push_back(static_cast<char>((n >> 8) & 0xff));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto c = g.cell(by_color[i], by_color[j]);
            key.push_back(c == 0 ? '.' : (c > 0 ? '+' : '-'));
        }
    return key;
}

// Individualization-refinement search: branch on every vertex of the first
// non-singleton cell and keep the lexicographically least leaf key. Branching
// over the whole cell makes the minimum independent of the input labeling.
void canon_search(const SignedGraph& g, std::vector<int> colors, std::string& best) {
    colors = refine_colors(g, std::move(colors));
    const int n = g.order();
    std::vector<int> cell_size(n, 0);
    for (int c : colors) ++cell_size[c];
    int split_color = -1;
    for (int c = 0; c < n; ++c)
        if (cell_size[c] > 1) {
            split_color = c;
            break;
        }
    if (split_color == -1) {
        auto key = key_from_discrete(g, colors);
        if (best.empty() || key < best) best = std::move(key);
        return;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (colors[v] != split_color) continue;
        std::vector<int> branched(n);
        for (Vertex u = 0; u < n; ++u)
            branched[u] = colors[u] * 2 + (u == v ? 0 : 1);
        canon_search(g, std::move(branched), best);
    }
}

std::string canonical_key_sp(const SignedGraph& g) {
    std::string best;
    canon_search(g, std::vector<int>(g.order(), 0), best);
    if (best.empty()) {
        best.push_back(0);
        best.push_back(0);
    }
    return best;
}

// -------------------- backtracking isomorphism search --------------------

struct DegreePair {
    int pos;
    int neg;
    friend auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

std::vector<DegreePair> sign_degrees(const SignedGraph& g) {
    std::vector<DegreePair> d(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        d[v] = {g.degree(v, Sign::Positive), g.degree(v, Sign::Negative)};
    return d;
}

// Extends f vertex by vertex in id order, candidates ascending, so the first
// complete bijection found has the lexicographically least image array.
bool extend_sp_iso(const SignedGraph& g1, const SignedGraph& g2,
                   const std::vector<DegreePair>& d1, const std::vector<DegreePair>& d2,
                   std::vector<Vertex>& f, std::vector<char>& used, Vertex v) {
    const int n = g1.order();
    if (v == n) return true;
    for (Vertex t = 0; t < n; ++t) {
        if (used[t] || d1[v] != d2[t]) continue;
        bool ok = true;
        for (Vertex u = 0; u < v && ok; ++u)
            if (g1.cell(v, u) != g2.cell(t, f[u])) ok = false;
        if (!ok) continue;
        f[v] = t;
        used[t] = 1;
        if (extend_sp_iso(g1, g2, d1, d2, f, used, v + 1)) return true;
        used[t] = 0;
    }
    return false;
}

void collect_sp_autos(const SignedGraph& g, const std::vector<DegreePair>& d,
                      std::vector<Vertex>& f, std::vector<char>& used, Vertex v,
                      std::vector<std::vector<Vertex>>& out) {
    const int n = g.order();
    if (v == n) {
        out.push_back(f);
        return;
    }
    for (Vertex t = 0; t < n; ++t) {
        if (used[t] || d[v] != d[t]) continue;
        bool ok = true;
        for (Vertex u = 0; u < v && ok; ++u)
            if (g.cell(v, u) != g.cell(t, f[u])) ok = false;
        if (!ok) continue;
        f[v] = t;
        used[t] = 1;
        collect_sp_autos(g, d, f, used, v + 1, out);
        used[t] = 0;
    }
}

// Signed automorphisms: underlying automorphism whose pullback signature is
// switching-equivalent to the original. Triangle signs are switching
// invariants, which prunes most branches; a full normal-form comparison at
// the leaves keeps the search exact for graphs whose cycle space is not
// generated by triangles.
void collect_signed_autos(const SignedGraph& g, const std::vector<int>& deg,
                          std::vector<Vertex>& f, std::vector<char>& used, Vertex v,
                          std::vector<std::vector<Vertex>>& out) {
    const int n = g.order();
    if (v == n) {
        std::vector<EdgeSpec> pullback;
        pullback.reserve(g.edges().size());
        for (const auto& e : g.edges())
            pullback.push_back({e.u, e.v, g.sign(f[e.u], f[e.v])});
        if (is_switch_equivalent(g, SignedGraph::build(n, pullback)))
            out.push_back(f);
        return;
    }
    for (Vertex t = 0; t < n; ++t) {
        if (used[t] || deg[v] != deg[t]) continue;
        bool ok = true;
        for (Vertex u = 0; u < v && ok; ++u)
            if ((g.cell(v, u) != 0) != (g.cell(t, f[u]) != 0)) ok = false;
        for (Vertex u = 0; u < v && ok; ++u) {
            if (g.cell(v, u) == 0) continue;
            for (Vertex w = 0; w < u && ok; ++w) {
                if (g.cell(v, w) == 0 || g.cell(u, w) == 0) continue;
                int orig = g.cell(v, u) * g.cell(u, w) * g.cell(w, v);
                int mapped = g.cell(t, f[u]) * g.cell(f[u], f[w]) * g.cell(f[w], t);
                if (orig != mapped) ok = false;
            }
        }
        if (!ok) continue;
        f[v] = t;
        used[t] = 1;
        collect_signed_autos(g, deg, f, used, v + 1, out);
        used[t] = 0;
    }
}

} // namespace

std::string canonical_key(const SignedGraph& g, CanonMode mode) {
    if (mode == CanonMode::Sp) return canonical_key_sp(g);
    return canonical_key_sp(double_switching(g));
}

std::optional<Mapping> sp_isomorphic(const SignedGraph& g1, const SignedGraph& g2) {
    if (g1.order() != g2.order()) return std::nullopt;
    auto d1 = sign_degrees(g1);
    auto d2 = sign_degrees(g2);
    auto s1 = d1;
    auto s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;

    std::vector<Vertex> f(g1.order(), -1);
    std::vector<char> used(g1.order(), 0);
    if (!extend_sp_iso(g1, g2, d1, d2, f, used, 0)) return std::nullopt;
    return Mapping{std::move(f), std::nullopt};
}

bool signed_isomorphic(const SignedGraph& g1, const SignedGraph& g2) {
    if (g1.order() != g2.order()) return false;
    return sp_isomorphic(double_switching(g1), double_switching(g2)).has_value();
}

std::vector<std::vector<Vertex>> sp_automorphisms(const SignedGraph& g) {
    auto d = sign_degrees(g);
    std::vector<Vertex> f(g.order(), -1);
    std::vector<char> used(g.order(), 0);
    std::vector<std::vector<Vertex>> out;
    collect_sp_autos(g, d, f, used, 0, out);
    return out;
}

std::vector<std::vector<Vertex>> signed_automorphisms(const SignedGraph& g) {
    std::vector<int> deg(g.order());
    for (Vertex v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
    std::vector<Vertex> f(g.order(), -1);
    std::vector<char> used(g.order(), 0);
    std::vector<std::vector<Vertex>> out;
    collect_signed_autos(g, deg, f, used, 0, out);
    return out;
}

} // namespace sg

#include "sg/chromatic.hpp"

#include <algorithm>
#include <stdexcept>

#include "sg/catalog.hpp"

namespace sg::solver {

namespace {

Mapping identity_mapping(int n, bool with_witness) {
    Mapping m;
    m.image.resize(n);
    for (Vertex v = 0; v < n; ++v) m.image[v] = v;
    if (with_witness) m.switch_witness = VertexSet{};
    return m;
}

ChromaticOutcome chi_search(const SignedGraph& g, int cap, const SearchOptions& opts,
                            CanonMode mode) {
    if (cap < 0) throw std::invalid_argument("cap must be non-negative");
    const int n = g.order();
    ChromaticOutcome outcome;
    outcome.cap = cap;
    if (n == 0) {
        outcome.result = ChromaticResult{0, SignedGraph::build(0, {}), Mapping{}};
        return outcome;
    }

    const int catalog_cap = mode == CanonMode::Sp ? gen::kSpCatalogCap : gen::kSignedCatalogCap;
    const int scan_up_to = std::min(cap, n - 1);
    if (scan_up_to > catalog_cap)
        throw std::invalid_argument("cap requires target catalogs beyond the supported limit");

    for (int order = 1; order <= scan_up_to; ++order) {
        auto catalog = gen::enumerate_targets(order, mode);
        for (const auto& target : catalog->targets) {
            auto r = mode == CanonMode::Sp ? sp_hom(g, target, opts) : hom(g, target, opts);
            if (r.status == HomStatus::BudgetExceeded) {
                outcome.budget_exceeded = true;
                return outcome;
            }
            if (r.found()) {
                outcome.result = ChromaticResult{order, target, std::move(*r.mapping)};
                return outcome;
            }
        }
    }
    if (n <= cap) {
        // Orders below n are exhausted; g maps to itself by the identity.
        outcome.result =
            ChromaticResult{n, g, identity_mapping(n, mode == CanonMode::Signed)};
    }
    return outcome;
}

} // namespace

ChromaticOutcome chi_sp(const SignedGraph& g, int cap, const SearchOptions& opts) {
    return chi_search(g, cap, opts, CanonMode::Sp);
}

ChromaticOutcome chi_s(const SignedGraph& g, int cap, const SearchOptions& opts) {
    return chi_search(g, cap, opts, CanonMode::Signed);
}

// -------------------- exact vertex colorings --------------------

namespace {

// Greedy clique on descending degree: cheap lower bound for both colorings.
int greedy_clique_bound(const SignedGraph& g) {
    const int n = g.order();
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<Vertex> clique;
    for (Vertex v : order) {
        bool ok = true;
        for (Vertex u : clique)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

bool colorable_with(const SignedGraph& g, int k, std::vector<int>& color, Vertex v) {
    const int n = g.order();
    if (v == n) return true;
    int used_max = 0;
    for (Vertex u = 0; u < v; ++u) used_max = std::max(used_max, color[u]);
    const int limit = std::min(k, used_max + 1); // new colors introduced in order
    for (int c = 1; c <= limit; ++c) {
        bool ok = true;
        for (Vertex u = 0; u < v && ok; ++u)
            if (color[u] == c && g.has_edge(u, v)) ok = false;
        if (!ok) continue;
        color[v] = c;
        if (colorable_with(g, k, color, v + 1)) return true;
        color[v] = 0;
    }
    return false;
}

// Does assigning color[v] close a bicolored cycle? Checks every color pair
// (color[v], c) by looking for two vertex-disjoint v-avoiding connections.
bool creates_bicolored_cycle(const SignedGraph& g, const std::vector<int>& color, Vertex v) {
    const int n = g.order();
    for (int other = 1; other <= n; ++other) {
        if (other == color[v]) continue;
        // DFS in the subgraph of colors {color[v], other} restricted to
        // assigned vertices; a cycle, if any, must pass through v.
        std::vector<int> state(n, 0);
        std::vector<Vertex> stack{v};
        std::vector<Vertex> parent(n, -1);
        state[v] = 1;
        bool cycle = false;
        while (!stack.empty() && !cycle) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (color[y] == 0) continue;
                if (color[y] != color[v] && color[y] != other) continue;
                if (y == parent[x]) continue;
                if (state[y]) {
                    cycle = true;
                    break;
                }
                state[y] = 1;
                parent[y] = x;
                stack.push_back(y);
            }
        }
        if (cycle) return true;
    }
    return false;
}

bool acyclic_colorable_with(const SignedGraph& g, int k, std::vector<int>& color, Vertex v) {
    const int n = g.order();
    if (v == n) return true;
    int used_max = 0;
    for (Vertex u = 0; u < v; ++u) used_max = std::max(used_max, color[u]);
    const int limit = std::min(k, used_max + 1);
    for (int c = 1; c <= limit; ++c) {
        bool ok = true;
        for (Vertex u : g.neighbors(v))
            if (u < v && color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (!creates_bicolored_cycle(g, color, v) && acyclic_colorable_with(g, k, color, v + 1))
            return true;
        color[v] = 0;
    }
    return false;
}

} // namespace

int chromatic_number(const SignedGraph& g) {
    if (g.order() > 20) throw std::invalid_argument("chromatic_number caps |V| at 20");
    if (g.order() == 0) return 0;
    for (int k = greedy_clique_bound(g);; ++k) {
        std::vector<int> color(g.order(), 0);
        if (colorable_with(g, k, color, 0)) return k;
    }
}

int acyclic_chromatic_number(const SignedGraph& g) {
    if (g.order() > 14) throw std::invalid_argument("acyclic_chromatic_number caps |V| at 14");
    if (g.order() == 0) return 0;
    for (int k = chromatic_number(g);; ++k) {
        std::vector<int> color(g.order(), 0);
        if (acyclic_colorable_with(g, k, color, 0)) return k;
    }
}

bool sandwich_check(const SignedGraph& g, int cap, const SearchOptions& opts) {
    auto s = chi_s(g, cap, opts);
    auto sp = chi_sp(g, cap, opts);
    if (!s.found() || !sp.found())
        throw std::runtime_error("sandwich_check: search cap exhausted");
    int a = s.result->value;
    int b = sp.result->value;
    return a <= b && b <= 2 * a;
}

} // namespace sg::solver

#include "sg/minors.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sg::solver {

namespace {

struct MinorSearch {
    int n_branches = 0;
    std::vector<std::uint32_t> connected_sets;    // all connected vertex subsets
    std::vector<std::uint32_t> set_neighborhoods; // open neighborhood of each set

    // Picks branch sets with strictly increasing indices (the sets are
    // unordered, so this is a pure symmetry break). Every new set must avoid
    // used vertices and touch the neighborhood of every chosen set.
    bool extend(std::vector<std::size_t>& chosen, std::uint32_t used, std::size_t from) {
        if (static_cast<int>(chosen.size()) == n_branches) return true;
        for (std::size_t i = from; i < connected_sets.size(); ++i) {
            std::uint32_t s = connected_sets[i];
            if (s & used) continue;
            bool ok = true;
            for (std::size_t j : chosen)
                if (!(set_neighborhoods[j] & s)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            if (extend(chosen, used | s, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

bool has_clique_minor(const SignedGraph& g, int n) {
    if (g.order() > 12) throw std::invalid_argument("has_clique_minor caps |V| at 12");
    if (n > 6) throw std::invalid_argument("has_clique_minor caps n at 6");
    if (n <= 0) return true;
    if (n == 1) return g.order() >= 1;
    const int nv = g.order();
    if (nv < n) return false;

    std::vector<std::uint32_t> adj(nv, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= std::uint32_t{1} << e.v;
        adj[e.v] |= std::uint32_t{1} << e.u;
    }

    MinorSearch search;
    search.n_branches = n;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << nv); ++s) {
        // Connectivity by mask flooding from the lowest vertex.
        std::uint32_t reach = s & (~s + 1);
        while (true) {
            std::uint32_t grow = reach;
            std::uint32_t bits = reach;
            while (bits) {
                int v = std::countr_zero(bits);
                bits &= bits - 1;
                grow |= adj[v] & s;
            }
            if (grow == reach) break;
            reach = grow;
        }
        if (reach != s) continue;
        std::uint32_t nbhd = 0;
        std::uint32_t bits = s;
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            nbhd |= adj[v];
        }
        search.connected_sets.push_back(s);
        search.set_neighborhoods.push_back(nbhd & ~s);
    }

    std::vector<std::size_t> chosen;
    return search.extend(chosen, 0, 0);
}

} // namespace sg::solver

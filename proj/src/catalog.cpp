#include "sg/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "sg/generators.hpp"

namespace sg::gen {

namespace {

std::mutex cache_mutex;

std::vector<SignedGraph> build_underlying(int order) {
    if (order < 0 || order > 7)
        throw std::invalid_argument("underlying_graphs supports orders 0..7");
    const int pairs = order * (order - 1) / 2;
    std::vector<std::pair<Vertex, Vertex>> pair_list;
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v) pair_list.emplace_back(u, v);

    std::map<std::string, SignedGraph> seen;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        std::vector<EdgeSpec> edges;
        for (int i = 0; i < pairs; ++i)
            if (bits >> i & 1)
                edges.push_back({pair_list[i].first, pair_list[i].second, Sign::Positive});
        auto g = SignedGraph::build(order, edges);
        auto key = canonical_key(g, CanonMode::Sp);
        seen.emplace(std::move(key), std::move(g));
    }
    std::vector<SignedGraph> out;
    out.reserve(seen.size());
    for (auto& [key, g] : seen) out.push_back(std::move(g));
    return out;
}

std::shared_ptr<const TargetCatalog> build_catalog(int order, CanonMode mode) {
    auto catalog = std::make_shared<TargetCatalog>();
    catalog->order = order;
    catalog->mode = mode;

    std::map<std::string, SignedGraph> seen;
    for (const auto& base : underlying_graphs(order)) {
        if (mode == CanonMode::Sp) {
            const auto& skeleton = base.edges();
            const int m = static_cast<int>(skeleton.size());
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
                std::vector<EdgeSpec> edges = skeleton;
                for (int i = 0; i < m; ++i)
                    if (bits >> i & 1) edges[i].sign = Sign::Negative;
                auto g = SignedGraph::build(order, edges);
                auto key = canonical_key(g, CanonMode::Sp);
                seen.emplace(std::move(key), std::move(g));
            }
        } else {
            for (auto& g : enumerate_signatures_mod_switching(base)) {
                auto key = canonical_key(g, CanonMode::Signed);
                seen.emplace(std::move(key), std::move(g));
            }
        }
    }
    for (auto& [key, g] : seen) {
        catalog->keys.push_back(key);
        catalog->targets.push_back(std::move(g));
    }
    return catalog;
}

} // namespace

const std::vector<SignedGraph>& underlying_graphs(int order) {
    static std::map<int, std::vector<SignedGraph>> cache;
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, build_underlying(order)).first;
    return it->second;
}

std::shared_ptr<const TargetCatalog> enumerate_targets(int order, CanonMode mode,
                                                       bool allow_over_cap) {
    const int cap = mode == CanonMode::Sp ? kSpCatalogCap : kSignedCatalogCap;
    if (order < 0) throw std::invalid_argument("order must be non-negative");
    if (order > cap && !allow_over_cap)
        throw std::invalid_argument("target catalog order exceeds default cap; pass the override");
    if (order > 7)
        throw std::invalid_argument("target catalogs support orders up to 7");

    static std::map<std::pair<int, int>, std::shared_ptr<const TargetCatalog>> cache;
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find({order, static_cast<int>(mode)});
        if (it != cache.end()) return it->second;
    }
    auto built = build_catalog(order, mode);
    std::lock_guard lock(cache_mutex);
    return cache.emplace(std::make_pair(order, static_cast<int>(mode)), built).first->second;
}

} // namespace sg::gen

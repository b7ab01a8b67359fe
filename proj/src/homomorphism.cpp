#include "sg/homomorphism.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sg::solver {

namespace {

struct TargetTables {
    int n = 0;
    std::vector<std::uint64_t> pos, neg; // per-vertex sign-filtered masks
    std::uint64_t all = 0;

    explicit TargetTables(const SignedGraph& t) : n(t.order()), pos(t.order()), neg(t.order()) {
        if (n > 64) throw std::logic_error("target order must be <= 64");
        for (Vertex v = 0; v < n; ++v) {
            pos[v] = t.neighbor_mask(v, Sign::Positive);
            neg[v] = t.neighbor_mask(v, Sign::Negative);
        }
        all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }
};

// Vertices in the reverse of a min-degree elimination order, so each vertex
// sees as many already-placed neighbors as possible.
std::vector<Vertex> degeneracy_order(const SignedGraph& g) {
    const int n = g.order();
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<Vertex> elimination;
    elimination.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        elimination.push_back(best);
        for (Vertex u : g.neighbors(best))
            if (!removed[u]) --deg[u];
    }
    std::reverse(elimination.begin(), elimination.end());
    return elimination;
}

class SpHomSearch {
public:
    SpHomSearch(const SignedGraph& source, const SignedGraph& target, const SearchOptions& opts)
        : src_(source), tables_(target) {
        if (opts.deterministic) {
            order_.resize(source.order());
            for (Vertex v = 0; v < source.order(); ++v) order_[v] = v;
        } else {
            order_ = degeneracy_order(source);
        }
        deadline_ = opts.time_budget
                        ? std::optional(std::chrono::steady_clock::now() + *opts.time_budget)
                        : std::nullopt;
    }

    // visit returns false to stop; result reports Found when stopped early,
    // Absent when the search space is exhausted.
    HomStatus run(const std::function<bool(const std::vector<Vertex>&)>& visit) {
        const int n = src_.order();
        std::uint64_t base = tables_.all;
        std::vector<std::uint64_t> candidates(n, base);
        for (Vertex v = 0; v < n; ++v) {
            // An image must offer a neighbor of each sign the vertex uses.
            if (src_.degree(v, Sign::Positive) > 0) {
                std::uint64_t m = 0;
                for (Vertex t = 0; t < tables_.n; ++t)
                    if (tables_.pos[t]) m |= std::uint64_t{1} << t;
                candidates[v] &= m;
            }
            if (src_.degree(v, Sign::Negative) > 0) {
                std::uint64_t m = 0;
                for (Vertex t = 0; t < tables_.n; ++t)
                    if (tables_.neg[t]) m |= std::uint64_t{1} << t;
                candidates[v] &= m;
            }
            if (candidates[v] == 0 && n > 0) return HomStatus::Absent;
        }
        image_.assign(n, -1);
        stopped_ = false;
        dfs(0, candidates, visit);
        if (budget_hit_) return HomStatus::BudgetExceeded;
        return stopped_ ? HomStatus::Found : HomStatus::Absent;
    }

private:
    bool dfs(int depth, const std::vector<std::uint64_t>& candidates,
             const std::function<bool(const std::vector<Vertex>&)>& visit) {
        if (budget_hit_) return false;
        if (depth == static_cast<int>(order_.size())) {
            if (!visit(image_)) stopped_ = true;
            return !stopped_;
        }
        if ((++nodes_ & 0x3ff) == 0 && deadline_ &&
            std::chrono::steady_clock::now() > *deadline_) {
            budget_hit_ = true;
            return false;
        }
        Vertex v = order_[depth];
        std::uint64_t cand = candidates[v];
        while (cand) {
            Vertex t = std::countr_zero(cand);
            cand &= cand - 1;
            auto next = candidates;
            bool feasible = true;
            for (Vertex u : src_.neighbors(v)) {
                if (image_[u] != -1) continue; // already checked on assignment
                const auto& mask =
                    src_.sign(v, u) == Sign::Positive ? tables_.pos[t] : tables_.neg[t];
                next[u] &= mask;
                if (next[u] == 0) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            // Consistency with already-assigned neighbors is guaranteed by
            // forward checking (their assignments shrank candidates[v]).
            image_[v] = t;
            if (!dfs(depth + 1, next, visit)) {
                image_[v] = -1;
                return false;
            }
            image_[v] = -1;
        }
        return true;
    }

    const SignedGraph& src_;
    TargetTables tables_;
    std::vector<Vertex> order_;
    std::vector<Vertex> image_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    long nodes_ = 0;
    bool stopped_ = false;
    bool budget_hit_ = false;
};

} // namespace

HomResult sp_hom(const SignedGraph& source, const SignedGraph& target, const SearchOptions& opts) {
    if (source.order() > 0 && target.order() == 0) return {HomStatus::Absent, std::nullopt};
    SpHomSearch search(source, target, opts);
    std::optional<Mapping> witness;
    auto status = search.run([&](const std::vector<Vertex>& image) {
        witness = Mapping{image, std::nullopt};
        return false;
    });
    return {status, std::move(witness)};
}

HomResult hom(const SignedGraph& source, const SignedGraph& target, const SearchOptions& opts) {
    const int n = target.order();
    if (n == 0) {
        if (source.order() == 0) return {HomStatus::Found, Mapping{{}, VertexSet{}}};
        return {HomStatus::Absent, std::nullopt};
    }
    auto lifted = sp_hom(source, double_switching(target), opts);
    if (!lifted.found()) return lifted;
    std::vector<Vertex> folded(source.order());
    std::vector<Vertex> switch_set;
    for (Vertex v = 0; v < source.order(); ++v) {
        Vertex t = lifted.mapping->image[v];
        folded[v] = t % n;
        if (t >= n) switch_set.push_back(v);
    }
    return {HomStatus::Found, Mapping{std::move(folded), VertexSet(std::move(switch_set))}};
}

bool hom_oracle(const SignedGraph& source, const SignedGraph& target) {
    if (source.order() > 12)
        throw std::invalid_argument("hom_oracle caps source order at 12");
    SearchOptions fast;
    fast.deterministic = false;
    for (const auto& switched_source : all_switchings(source))
        if (sp_hom(switched_source, target, fast).found()) return true;
    return false;
}

bool is_sp_homomorphism(const SignedGraph& source, const SignedGraph& target,
                        const std::vector<Vertex>& image) {
    if (static_cast<int>(image.size()) != source.order()) return false;
    for (Vertex t : image)
        if (t < 0 || t >= target.order()) return false;
    for (const auto& e : source.edges()) {
        if (image[e.u] == image[e.v]) return false;
        if (!target.has_edge(image[e.u], image[e.v])) return false;
        if (target.sign(image[e.u], image[e.v]) != e.sign) return false;
    }
    return true;
}

bool is_valid_hom_witness(const SignedGraph& source, const SignedGraph& target,
                          const Mapping& mapping) {
    const auto& witness = mapping.switch_witness;
    auto src = witness ? switched(source, *witness) : source;
    return is_sp_homomorphism(src, target, mapping.image);
}

long for_each_sp_hom(const SignedGraph& source, const SignedGraph& target,
                     const std::function<bool(const std::vector<Vertex>&)>& visit) {
    if (source.order() > 0 && target.order() == 0) return 0;
    long count = 0;
    SearchOptions opts; // deterministic: lexicographic enumeration
    SpHomSearch search(source, target, opts);
    search.run([&](const std::vector<Vertex>& image) {
        ++count;
        return visit(image);
    });
    return count;
}

} // namespace sg::solver

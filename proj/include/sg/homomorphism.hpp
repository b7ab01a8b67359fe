#pragma once

#include <chrono>
#include <functional>
#include <optional>

#include "sg/signed_graph.hpp"

namespace sg::solver {

struct SearchOptions {
    // Lex-least witness via id-order search; verdicts do not depend on this.
    bool deterministic = true;
    std::optional<std::chrono::milliseconds> time_budget;
    int parallel = 1;
};

enum class HomStatus { Found, Absent, BudgetExceeded };

struct HomResult {
    HomStatus status = HomStatus::Absent;
    std::optional<Mapping> mapping;

    bool found() const { return status == HomStatus::Found; }
};

// Sign-preserving homomorphism: f(u)f(v) an edge of the target with the same
// sign, for every source edge. Backtracking over source vertices (degeneracy
// order, or id order when opts.deterministic) with per-vertex candidate
// bitsets and forward checking through sign-filtered neighborhoods.
// Requires target order <= 64.
HomResult sp_hom(const SignedGraph& source, const SignedGraph& target,
                 const SearchOptions& opts = {});

// Homomorphism of signed graphs (adjacency + closed-walk signs): present iff
// the source sp-maps into the double switching graph of the target. The
// returned mapping is folded back onto target vertices together with a
// switching set on the source that makes it sign-preserving.
HomResult hom(const SignedGraph& source, const SignedGraph& target,
              const SearchOptions& opts = {});

// Test oracle: tries an sp-homomorphism from every switching of the source.
// Requires source order <= 12.
bool hom_oracle(const SignedGraph& source, const SignedGraph& target);

bool is_sp_homomorphism(const SignedGraph& source, const SignedGraph& target,
                        const std::vector<Vertex>& image);

// Re-checks a witnessed mapping: image valid, and the source switched at the
// witness (empty set when absent) sp-maps via the image.
bool is_valid_hom_witness(const SignedGraph& source, const SignedGraph& target,
                          const Mapping& mapping);

// Enumerates sp-homomorphisms in lexicographic image order until the visitor
// returns false. Returns the number visited.
long for_each_sp_hom(const SignedGraph& source, const SignedGraph& target,
                     const std::function<bool(const std::vector<Vertex>&)>& visit);

} // namespace sg::solver

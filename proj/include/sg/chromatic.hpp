#pragma once

#include <optional>

#include "sg/homomorphism.hpp"
#include "sg/signed_graph.hpp"

namespace sg::solver {

struct ChromaticResult {
    int value = 0;
    SignedGraph witness_target;
    Mapping witness_map;
};

struct ChromaticOutcome {
    std::optional<ChromaticResult> result; // nullopt: every order <= cap exhausted
    int cap = 0;
    bool budget_exceeded = false;

    bool found() const { return result.has_value(); }
};

// Least target order <= cap admitting an sp-homomorphism (chi_sp) or a
// homomorphism (chi_s). Scans the exhaustive catalog at each order; once
// every order below |V(g)| is exhausted the identity map certifies |V(g)|,
// so catalogs are only ever needed up to min(cap, |V(g)|-1).
ChromaticOutcome chi_sp(const SignedGraph& g, int cap, const SearchOptions& opts = {});
ChromaticOutcome chi_s(const SignedGraph& g, int cap, const SearchOptions& opts = {});

// Exact chromatic number of the underlying graph, branch and bound; |V| <= 20.
int chromatic_number(const SignedGraph& g);

// Least k admitting a proper coloring whose every two color classes induce a
// forest; exhaustive with pruning, |V| <= 14.
int acyclic_chromatic_number(const SignedGraph& g);

// chi_s <= chi_sp <= 2 chi_s, both computed under the cap. Throws when either
// search exhausts the cap.
bool sandwich_check(const SignedGraph& g, int cap, const SearchOptions& opts = {});

} // namespace sg::solver

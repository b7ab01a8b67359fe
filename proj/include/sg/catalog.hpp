#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sg/canonical.hpp"
#include "sg/signed_graph.hpp"

namespace sg::gen {

// Deduplicated enumeration of all signed graphs of a fixed order, up to
// sp-isomorphism or signed isomorphism, sorted by canonical key.
struct TargetCatalog {
    int order = 0;
    CanonMode mode = CanonMode::Sp;
    std::vector<SignedGraph> targets;
    std::vector<std::string> keys;
};

inline constexpr int kSpCatalogCap = 7;
inline constexpr int kSignedCatalogCap = 6;

// Memoized and thread-safe; the default caps (7 for sp, 6 for signed) guard
// against accidental exponential requests and can be overridden explicitly.
std::shared_ptr<const TargetCatalog> enumerate_targets(int order, CanonMode mode,
                                                       bool allow_over_cap = false);

// All underlying simple graphs of the given order up to isomorphism, as
// all-positive signed graphs sorted by canonical key. Memoized; order <= 7.
const std::vector<SignedGraph>& underlying_graphs(int order);

} // namespace sg::gen

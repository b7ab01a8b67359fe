#pragma once

#include <cstdint>

namespace sg::solver {

struct KnMinorFreeBounds {
    std::uint64_t chi_sp_lower = 0; // (2^{n+1}-5)/3 even n, (2^{n+1}-4)/3 odd n
    std::uint64_t chi_s_lower = 0;  // (2^n-1)/3 even n,     (2^n-2)/3 odd n
};

// Parity-split lower bounds for the K_n-minor-free family; n in [2, 61].
KnMinorFreeBounds kn_lower_bound_formulas(int n);

struct MaxDegreeBounds {
    double lower_real = 0;          // 2^{delta/2 - 1}, left as a real
    std::uint64_t lower_floor = 0;
    std::uint64_t upper = 0;        // (delta-3)(delta-1)2^{delta-1} + 2
};

// Connected bounded-degree family bounds; the theorem's validity window
// starts at delta = 29, and 64-bit exact evaluation caps delta at 53.
MaxDegreeBounds max_degree_bound_formulas(int delta);

} // namespace sg::solver

#include "sg/formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace sg::solver {

KnMinorFreeBounds kn_lower_bound_formulas(int n) {
    if (n < 2) throw std::invalid_argument("kn_lower_bound_formulas requires n >= 2");
    if (n > 61) throw std::invalid_argument("kn_lower_bound_formulas caps n at 61");
    const std::uint64_t pow_n = std::uint64_t{1} << n;
    const std::uint64_t pow_n1 = std::uint64_t{1} << (n + 1);
    KnMinorFreeBounds b;
    if (n % 2 == 0) {
        b.chi_sp_lower = (pow_n1 - 5) / 3;
        b.chi_s_lower = (pow_n - 1) / 3;
    } else {
        b.chi_sp_lower = (pow_n1 - 4) / 3;
        b.chi_s_lower = (pow_n - 2) / 3;
    }
    return b;
}

MaxDegreeBounds max_degree_bound_formulas(int delta) {
    if (delta < 29)
        throw std::invalid_argument("outside the theorem's validity window (delta >= 29)");
    if (delta > 53)
        throw std::invalid_argument("max_degree_bound_formulas caps delta at 53 (64-bit exact)");
    MaxDegreeBounds b;
    b.lower_real = std::exp2(delta / 2.0 - 1.0);
    b.lower_floor = static_cast<std::uint64_t>(std::floor(b.lower_real));
    b.upper = static_cast<std::uint64_t>(delta - 3) * static_cast<std::uint64_t>(delta - 1) *
                  (std::uint64_t{1} << (delta - 1)) +
              2;
    return b;
}

} // namespace sg::solver

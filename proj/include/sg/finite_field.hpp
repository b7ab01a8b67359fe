#pragma once

#include <vector>

#include "sg/types.hpp"

namespace sg::gen {

// Arithmetic tables for GF(q), q = p^k a small prime power. Extension fields
// are polynomial quotients by the lexicographically least monic irreducible
// of degree k over GF(p) (coefficients compared high degree first), so
// element indexing is reproducible. Elements are indexed by their
// base-p coefficient expansion: a_0 + a_1*p + ... + a_{k-1}*p^{k-1}.
class FiniteField {
public:
    // Throws std::invalid_argument unless q is a prime power with q <= 128.
    static FiniteField make(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int k() const { return k_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[check(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    bool is_square(int a) const { return square_[check(a)]; } // nonzero squares only
    std::vector<int> squares() const;

    const std::vector<int>& modulus() const { return modulus_; } // empty when k == 1

private:
    FiniteField() = default;
    int idx(int a, int b) const { return check(a) * q_ + check(b); }
    int check(int a) const;

    int q_ = 0, p_ = 0, k_ = 0;
    std::vector<int> add_, mul_, neg_;
    std::vector<char> square_;
    std::vector<int> modulus_;
};

} // namespace sg::gen

#include "sg/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace sg::gen {

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first, no
// trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

// Remainder of a by monic divisor d.
Poly poly_mod(Poly a, const Poly& d, int p) {
    trim(a);
    while (a.size() >= d.size()) {
        int coeff = a.back();
        std::size_t shift = a.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) {
            int& x = a[shift + i];
            x = ((x - coeff * d[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

bool is_irreducible(const Poly& f, int p) {
    // Trial division by every monic polynomial of degree 1..deg/2.
    int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            g[d] = 1;
            int c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Least monic irreducible of degree k, comparing coefficient tuples from the
// highest non-leading coefficient down.
Poly least_irreducible(int p, int k) {
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
        Poly f(k + 1, 0);
        f[k] = 1;
        int c = code;
        for (int i = k - 1; i >= 0; --i) { // high coefficients vary slowest
            f[i] = c % p;
            c /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

} // namespace

int FiniteField::check(int a) const {
    if (a < 0 || a >= q_) throw std::invalid_argument("field element out of range");
    return a;
}

std::vector<int> FiniteField::squares() const {
    std::vector<int> out;
    for (int a = 0; a < q_; ++a)
        if (square_[a]) out.push_back(a);
    return out;
}

FiniteField FiniteField::make(int q) {
    if (q < 2 || q > 128) throw std::invalid_argument("field order must be in [2, 128]");
    int p = 0;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q; // q itself prime
    int k = 0, power = 1;
    while (power < q) {
        power *= p;
        ++k;
    }
    if (power != q) throw std::invalid_argument("field order is not a prime power");

    FiniteField f;
    f.q_ = q;
    f.p_ = p;
    f.k_ = k;
    f.add_.assign(static_cast<std::size_t>(q) * q, 0);
    f.mul_.assign(static_cast<std::size_t>(q) * q, 0);
    f.neg_.assign(q, 0);
    f.square_.assign(q, 0);

    auto decode = [&](int a) {
        Poly v(k, 0);
        for (int i = 0; i < k; ++i) {
            v[i] = a % p;
            a /= p;
        }
        trim(v);
        return v;
    };
    auto encode = [&](const Poly& v) {
        int a = 0, w = 1;
        for (int i = 0; i < k; ++i) {
            a += (i < static_cast<int>(v.size()) ? v[i] : 0) * w;
            w *= p;
        }
        return a;
    };

    Poly modulus;
    if (k > 1) {
        modulus = least_irreducible(p, k);
        f.modulus_ = modulus;
    }

    for (int a = 0; a < q; ++a) {
        Poly va = decode(a);
        Poly neg(va.size());
        for (std::size_t i = 0; i < va.size(); ++i) neg[i] = (p - va[i]) % p;
        trim(neg);
        f.neg_[a] = encode(neg);
        for (int b = 0; b < q; ++b) {
            Poly vb = decode(b);
            Poly sum(std::max(va.size(), vb.size()), 0);
            for (std::size_t i = 0; i < sum.size(); ++i) {
                int x = (i < va.size() ? va[i] : 0) + (i < vb.size() ? vb[i] : 0);
                sum[i] = x % p;
            }
            trim(sum);
            f.add_[static_cast<std::size_t>(a) * q + b] = encode(sum);
            Poly prod = poly_mul(va, vb, p);
            if (k > 1) prod = poly_mod(std::move(prod), modulus, p);
            f.mul_[static_cast<std::size_t>(a) * q + b] = encode(prod);
        }
    }
    for (int a = 1; a < q; ++a) f.square_[f.mul(a, a)] = 1;
    return f;
}

} // namespace sg::gen

#pragma once

#include <cmath>
#include <numeric>

namespace dihedral {

/// Canonical representative of x mod n in [0, n-1]; works for negative x.
constexpr int mod_norm(long long x, int n) {
    long long r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

constexpr int gcd3(int a, int b, int n) {
    return std::gcd(std::gcd(a, b), n);
}

/// Deterministic trial division; n stays desk-scale here.
constexpr bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Exact integer square root.
inline int isqrt(int n) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace dihedral

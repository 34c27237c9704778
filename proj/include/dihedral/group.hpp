#pragma once

/// Exact arithmetic in the dihedral group D_n and the rotation-index
/// projection onto Z_n, plus validation and canonicalization of
/// three-reflection generating sets.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dihedral/arith.hpp"
#include "dihedral/residue_set.hpp"

namespace dihedral {

/// An element r^rot (refl == false) or r^rot f (refl == true) of D_n.
struct DihedralElement {
    int n;
    int rot;  // in [0, n-1]
    bool refl;

    bool operator==(const DihedralElement&) const = default;
};

inline DihedralElement identity(int n) { return {n, 0, false}; }
inline DihedralElement rotation(int n, long long i) { return {n, mod_norm(i, n), false}; }
inline DihedralElement reflection(int n, long long i) { return {n, mod_norm(i, n), true}; }

inline void require_same_group(const DihedralElement& x, const DihedralElement& y, const char* op) {
    if (x.n != y.n)
        throw std::invalid_argument(std::string(op) + ": modulus mismatch (" +
                                    std::to_string(x.n) + " vs " + std::to_string(y.n) + ")");
}

/// (r^i f^j)(r^k f^m) = r^{i + (-1)^j k} f^{j xor m}.
inline DihedralElement multiply(const DihedralElement& x, const DihedralElement& y) {
    require_same_group(x, y, "multiply");
    int rot = mod_norm(static_cast<long long>(x.rot) + (x.refl ? -y.rot : y.rot), x.n);
    return {x.n, rot, x.refl != y.refl};
}

inline DihedralElement inverse(const DihedralElement& x) {
    if (x.refl) return x; // reflections are involutions
    return {x.n, mod_norm(-static_cast<long long>(x.rot), x.n), false};
}

/// g s g^-1.
inline DihedralElement conjugate(const DihedralElement& g, const DihedralElement& s) {
    require_same_group(g, s, "conjugate");
    return multiply(multiply(g, s), inverse(g));
}

/// F(r^i f^k) = i: the projection onto Z_n that forgets the reflection flag.
inline int project(const DihedralElement& x) { return x.rot; }

/// "e", "r^i", "f" or "r^i f".
inline std::string to_string(const DihedralElement& x) {
    if (!x.refl) return x.rot == 0 ? "e" : "r^" + std::to_string(x.rot);
    return x.rot == 0 ? "f" : "r^" + std::to_string(x.rot) + " f";
}

/// A three-reflection set S = {f, r^a f, r^b f}, stored by its projected
/// offsets S' = {0, a, b}.  Construction normalizes a and b into [1, n-1]
/// and enforces distinctness; whether the set actually generates D_n is a
/// separate question (is_generating) so that non-generating sets can be
/// constructed, inspected and rejected where it matters.
class GeneratingSet {
public:
    GeneratingSet(int n, long long a, long long b)
        : n_(n), a_(mod_norm(a, n < 1 ? 1 : n)), b_(mod_norm(b, n < 1 ? 1 : n)) {
        if (n < 3)
            throw std::invalid_argument("GeneratingSet: need n >= 3 for three distinct reflection offsets");
        if (a_ == 0 || b_ == 0)
            throw std::invalid_argument("GeneratingSet: offsets a, b must be nonzero mod n");
        if (a_ == b_)
            throw std::invalid_argument("GeneratingSet: offsets a, b must be distinct mod n");
    }

    int modulus() const { return n_; }
    int a() const { return a_; }
    int b() const { return b_; }

    /// S' = {0, a, b}.
    ResidueSet offsets() const { return ResidueSet(n_, {0, a_, b_}); }

    /// The three reflections in ascending offset order.
    std::array<DihedralElement, 3> reflections() const {
        std::array<int, 3> off{0, std::min(a_, b_), std::max(a_, b_)};
        return {reflection(n_, off[0]), reflection(n_, off[1]), reflection(n_, off[2])};
    }

    bool operator==(const GeneratingSet&) const = default;

private:
    int n_, a_, b_;
};

/// S generates D_n iff gcd(a, b, n) = 1 (cross-checked against a closure
/// enumeration in the tests).
inline bool is_generating(const GeneratingSet& S) {
    return gcd3(S.a(), S.b(), S.modulus()) == 1;
}

/// The six offset pairs obtained by re-basing the set at each of its three
/// reflections and permuting the remaining two, as ordered pairs, duplicates
/// removed, sorted.
inline std::vector<std::pair<int, int>> canonical_orbit(const GeneratingSet& S) {
    int n = S.modulus(), a = S.a(), b = S.b();
    std::vector<std::pair<int, int>> orbit{
        {a, b},
        {b, a},
        {mod_norm(-a, n), mod_norm(b - a, n)},
        {mod_norm(b - a, n), mod_norm(-a, n)},
        {mod_norm(-b, n), mod_norm(a - b, n)},
        {mod_norm(a - b, n), mod_norm(-b, n)},
    };
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

/// Lexicographically smallest (a, b) over the relabeling orbit.  Two sets
/// with the same canonical form have identical word-length statistics.
/// The negation symmetry (a, b) -> (-a, -b) is deliberately NOT folded in;
/// it is surfaced as a report field instead.
inline GeneratingSet canonical_form(const GeneratingSet& S) {
    auto orbit = canonical_orbit(S);
    return GeneratingSet(S.modulus(), orbit.front().first, orbit.front().second);
}

} // namespace dihedral

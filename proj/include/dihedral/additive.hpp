#pragma once

/// Mechanical checkers for the two imported additive-combinatorics facts:
/// Cauchy-Davenport (|A+B| >= min(p, |A|+|B|-1) in Z_p) and Kneser's
/// identity (|A+B| = |A+H| + |B+H| - |H| with H = Stab(A+B), whenever
/// |A+B| < |A| + |B|).
///
/// Both are proven theorems; these checkers exist as cross-validation of
/// the set-algebra kernel, so a failure signals a kernel defect rather
/// than a mathematical discovery.

#include <random>
#include <stdexcept>

#include "dihedral/arith.hpp"
#include "dihedral/residue_set.hpp"

namespace dihedral {

inline bool check_cauchy_davenport(const ResidueSet& A, const ResidueSet& B, int p) {
    if (A.modulus() != p || B.modulus() != p)
        throw std::invalid_argument("check_cauchy_davenport: operands must live in Z_p");
    if (!is_prime(p))
        throw std::invalid_argument("check_cauchy_davenport: modulus is not prime");
    if (A.empty() || B.empty())
        throw std::invalid_argument("check_cauchy_davenport: operands must be nonempty");
    auto lhs = static_cast<long long>(sumset(A, B).count());
    auto rhs = std::min<long long>(p, static_cast<long long>(A.count() + B.count()) - 1);
    return lhs >= rhs;
}

struct KneserReport {
    int n;
    ResidueSet A, B;
    ResidueSet H;        // stabilizer of A+B
    int lhs;             // |A+B|
    int rhs;             // |A+H| + |B+H| - |H|
    bool hypothesis_met; // |A+B| < |A| + |B|
    bool identity_holds; // lhs == rhs; only guaranteed when hypothesis_met
};

inline KneserReport check_kneser(const ResidueSet& A, const ResidueSet& B) {
    A.require_same_modulus(B, "check_kneser");
    if (A.empty() || B.empty())
        throw std::invalid_argument("check_kneser: operands must be nonempty");
    ResidueSet C = sumset(A, B);
    ResidueSet H = stabilizer(C);
    int lhs = static_cast<int>(C.count());
    int rhs = static_cast<int>(sumset(A, H).count() + sumset(B, H).count() - H.count());
    bool hyp = lhs < static_cast<int>(A.count() + B.count());
    return {A.modulus(), A, B, std::move(H), lhs, rhs, hyp, lhs == rhs};
}

/// Uniformly random nonempty subset of Z_n: each element kept with
/// probability 1/2, empty draws rejected.
inline ResidueSet random_subset(int n, std::mt19937_64& rng) {
    ResidueSet s(n);
    do {
        s = ResidueSet(n);
        for (int i = 0; i < n; ++i)
            if (rng() & 1) s.insert(i);
    } while (s.empty());
    return s;
}

} // namespace dihedral

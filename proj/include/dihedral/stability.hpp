#pragma once

/// The stability metric lambda_1(D_n, S) = max over g in D_n, s in S of
/// l_S(g s g^-1), together with the named bounds it is measured against:
///
///  * floor(n/2) + 1       for every generating three-reflection set;
///  * floor(n/3) + 1       claimed when n is prime and the seven values
///                         {0, a, b, -a, -b, a-b, b-a} are distinct mod n
///                         (reported; see verify_prime_lambda_bound for how
///                         it actually fares);
///  * the mod-4 sharpness formula for S' = {0, 1, n-1};
///  * the O(sqrt n) construction S' = {0, 1, floor(sqrt n)}.

#include <optional>
#include <stdexcept>
#include <utility>

#include "dihedral/arith.hpp"
#include "dihedral/group.hpp"
#include "dihedral/word_length.hpp"

namespace dihedral {

inline int max_reflection_length(const WordLengthTable& table) {
    int best = 0;
    for (int len : table.reflection_lengths) best = std::max(best, len);
    return best;
}

/// n prime and the seven values {0, a, b, -a, -b, a-b, b-a} pairwise
/// distinct mod n.
inline bool prime_condition(int n, const GeneratingSet& S) {
    if (!is_prime(n)) return false;
    int a = S.a(), b = S.b();
    ResidueSet vals(n, {0, a, b, -a, -b, a - b, b - a});
    return vals.count() == 7;
}

struct LambdaWitness {
    DihedralElement g;
    DihedralElement s;
};

struct LambdaReport {
    int n;
    GeneratingSet given;
    GeneratingSet canonical;
    std::pair<int, int> negation_canonical; // canonical form of {0,-a,-b}; reported, not identified
    Engine engine;
    int lambda1;
    LambdaWitness witness; // first (g-index, s-index) pair attaining the max
    int max_reflection_length;
    int bound_n_half;                     // floor(n/2) + 1
    std::optional<int> bound_prime_third; // floor(n/3) + 1, present iff prime_condition_met
    bool prime_condition_met;
};

/// Sweep l_S(g s g^-1) over all 2n * 3 pairs.  Witness ties break to the
/// first pair in (g-index, s-index) order, g indexed 0..2n-1 rotations
/// first, s in ascending offset order.
inline LambdaReport lambda1(int n, const GeneratingSet& S, Engine engine = Engine::sumset) {
    WordLengthTable table = engine == Engine::bfs ? bfs_lengths(n, S) : sumset_lengths(n, S);
    const auto refl = S.reflections();
    int best = -1;
    LambdaWitness wit{identity(n), refl[0]};
    for (int gi = 0; gi < 2 * n; ++gi) {
        DihedralElement g = gi < n ? rotation(n, gi) : reflection(n, gi - n);
        for (const auto& s : refl) {
            int len = table.length_of(conjugate(g, s));
            if (len > best) {
                best = len;
                wit = {g, s};
            }
        }
    }
    GeneratingSet neg(n, -S.a(), -S.b());
    bool pc = prime_condition(n, S);
    return LambdaReport{
        n,
        S,
        canonical_form(S),
        {canonical_form(neg).a(), canonical_form(neg).b()},
        engine,
        best,
        wit,
        max_reflection_length(table),
        n / 2 + 1,
        pc ? std::optional<int>(n / 3 + 1) : std::nullopt,
        pc,
    };
}

struct SharpnessReport {
    int n;
    int measured;  // max reflection length for S' = {0, 1, n-1}
    int predicted; // floor(n/2)+1 if n = 0,1 mod 4, floor(n/2) if n = 2,3 mod 4
    bool match;
};

inline SharpnessReport check_sharpness(int n) {
    if (n < 3) throw std::invalid_argument("check_sharpness: need n >= 3");
    GeneratingSet S(n, 1, n - 1);
    int measured = max_reflection_length(sumset_lengths(n, S));
    int predicted = (n % 4 == 0 || n % 4 == 1) ? n / 2 + 1 : n / 2;
    return {n, measured, predicted, measured == predicted};
}

/// S' = {0, 1, floor(sqrt n)}; needs n >= 5 so the offsets are distinct.
inline GeneratingSet sqrt_presentation(int n) {
    if (n < 5) throw std::invalid_argument("sqrt_presentation: need n >= 5");
    return GeneratingSet(n, 1, isqrt(n));
}

struct SqrtBoundReport {
    int n;
    int max_length; // over all 2n elements
    int bound;      // 2*ceil(n/floor(sqrt n)) + 2*(floor(sqrt n) - 1) + 1
    bool holds;
};

inline SqrtBoundReport check_sqrt_bound(int n, Engine engine = Engine::sumset) {
    GeneratingSet S = sqrt_presentation(n);
    WordLengthTable table = engine == Engine::bfs ? bfs_lengths(n, S) : sumset_lengths(n, S);
    int max_len = 0;
    for (int len : table.rotation_lengths) max_len = std::max(max_len, len);
    max_len = std::max(max_len, max_reflection_length(table));
    int c = isqrt(n);
    int bound = 2 * ((n + c - 1) / c) + 2 * (c - 1) + 1;
    return {n, max_len, bound, max_len <= bound};
}

} // namespace dihedral

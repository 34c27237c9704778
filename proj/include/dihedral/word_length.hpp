#pragma once

/// Minimal word lengths l_S(g) for all of D_n, computed by two independent
/// routes:
///
///  * bfs_lengths    — breadth-first search on the Cayley graph (the oracle,
///                     realizing the definition of l_S directly);
///  * sumset_lengths — the parity-alternating sumset iteration
///                     W'_{l+1} = W'_l + S'  (l even)
///                     W'_{l+1} = W'_l - S'  (l odd)
///                     on the projections W'_l of the length-l word sets.
///
/// Because 0 is an offset of S', the projected levels are nested
/// (W'_l is contained in W'_{l+1}), so the minimal length of an element is
/// the first level of the correct parity containing its rotation index:
/// rotations live at even levels, reflections at odd ones.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dihedral/group.hpp"
#include "dihedral/residue_set.hpp"

namespace dihedral {

enum class Engine { bfs, sumset };

inline const char* engine_name(Engine e) { return e == Engine::bfs ? "bfs" : "sumset"; }

struct WordLengthTable {
    int n;
    GeneratingSet S;
    Engine engine;
    std::vector<int> rotation_lengths;   // index i -> l_S(r^i), always even
    std::vector<int> reflection_lengths; // index i -> l_S(r^i f), always odd

    int length_of(const DihedralElement& x) const {
        return x.refl ? reflection_lengths[x.rot] : rotation_lengths[x.rot];
    }
};

/// Length arrays agree (the engine tag is not part of the comparison).
inline bool same_lengths(const WordLengthTable& lhs, const WordLengthTable& rhs) {
    return lhs.n == rhs.n && lhs.S == rhs.S &&
           lhs.rotation_lengths == rhs.rotation_lengths &&
           lhs.reflection_lengths == rhs.reflection_lengths;
}

namespace detail {

inline void require_generating(int n, const GeneratingSet& S, const char* op) {
    if (n != S.modulus())
        throw std::invalid_argument(std::string(op) + ": n does not match the generating set modulus");
    if (!is_generating(S))
        throw std::domain_error(std::string(op) + ": S' = {0," + std::to_string(S.a()) + "," +
                                std::to_string(S.b()) + "} does not generate D_" + std::to_string(n) +
                                " (gcd(a,b,n) = " + std::to_string(gcd3(S.a(), S.b(), n)) + ")");
}

} // namespace detail

/// Breadth-first search from e with right-multiplication by the three
/// reflections of S.  Elements are indexed 0..2n-1, rotations first.
inline WordLengthTable bfs_lengths(int n, const GeneratingSet& S) {
    detail::require_generating(n, S, "bfs_lengths");
    const auto refl = S.reflections();
    std::vector<int> dist(2 * static_cast<std::size_t>(n), -1);
    std::vector<int> frontier{0}, next;
    dist[0] = 0;
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (int v : frontier) {
            for (const auto& s : refl) {
                // right-multiplying a rotation by r^k f gives a reflection,
                // and a reflection r^x f by r^k f gives the rotation r^{x-k}
                int u = v < n ? n + mod_norm(v + s.rot, n)
                              : mod_norm((v - n) - s.rot, n);
                if (dist[u] < 0) {
                    dist[u] = level;
                    next.push_back(u);
                }
            }
        }
        frontier.swap(next);
    }
    WordLengthTable t{n, S, Engine::bfs,
                      std::vector<int>(dist.begin(), dist.begin() + n),
                      std::vector<int>(dist.begin() + n, dist.end())};
    return t;
}

/// Lengths from the sumset recurrence.  Iterates until the levels of both
/// parities are full; a first appearance at level l means length l if the
/// parity matches, else l+1 (the levels are nested).
inline WordLengthTable sumset_lengths(int n, const GeneratingSet& S) {
    detail::require_generating(n, S, "sumset_lengths");
    const ResidueSet sp = S.offsets();
    WordLengthTable t{n, S, Engine::sumset,
                      std::vector<int>(n, -1), std::vector<int>(n, -1)};
    ResidueSet cur(n);
    cur.insert(0);
    // index 0 is in W'_0 and never shows up as "new": e has length 0 and
    // f = r^0 f has length 1 (0 is an offset of S')
    t.rotation_lengths[0] = 0;
    t.reflection_lengths[0] = 1;

    bool full_even = cur.is_full(), full_odd = false;
    int l = 0;
    while (!(full_even && full_odd)) {
        ResidueSet next = (l % 2 == 0) ? sumset(cur, sp) : diffset(cur, sp);
        ++l; // next is W'_l
        next.for_each_member_not_in(cur, [&](int i) {
            // first appearance at level l: length l at this parity, l+1 at the other
            if (l % 2 == 0) {
                t.rotation_lengths[i] = l;
                t.reflection_lengths[i] = l + 1;
            } else {
                t.reflection_lengths[i] = l;
                t.rotation_lengths[i] = l + 1;
            }
        });
        if (next.is_full()) (l % 2 == 0 ? full_even : full_odd) = true;
        if (l > 2 * n + 2)
            throw std::logic_error("sumset_lengths: level iteration exceeded the 2n+2 safety bound");
        cur = std::move(next);
    }
    return t;
}

/// The projected level sequence W'_0, ..., W'_l_max (default l_max = n+1).
/// Generation is not required; partial sequences of non-generating sets are
/// legal and useful for stabilizer inspection.
struct WPrimeSequence {
    int n;
    GeneratingSet S;
    std::vector<ResidueSet> levels; // levels[l] = W'_l
};

inline WPrimeSequence w_prime_sequence(int n, const GeneratingSet& S, int l_max = -1) {
    if (n != S.modulus())
        throw std::invalid_argument("w_prime_sequence: n does not match the generating set modulus");
    if (l_max < 0) l_max = n + 1;
    const ResidueSet sp = S.offsets();
    WPrimeSequence seq{n, S, {}};
    seq.levels.reserve(static_cast<std::size_t>(l_max) + 1);
    ResidueSet cur(n);
    cur.insert(0);
    seq.levels.push_back(cur);
    for (int l = 0; l < l_max; ++l) {
        cur = (l % 2 == 0) ? sumset(cur, sp) : diffset(cur, sp);
        seq.levels.push_back(cur);
    }
    return seq;
}

} // namespace dihedral

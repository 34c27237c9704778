#include <gtest/gtest.h>

#include <random>

#include "dihedral/io.hpp"
#include "dihedral/residue_set.hpp"
#include "test_util.hpp"

using namespace dihedral;
using oracle::make_set;
using oracle::to_set;

// =============================================================================
// Construction and basics
// =============================================================================

TEST(ResidueSet, NormalizesNegativeInputs) {
    ResidueSet s(7, {-1, -8, 9});
    EXPECT_EQ(to_set(s), (std::set<int>{2, 6})); // -1 = 6, -8 = 6, 9 = 2 mod 7
}

TEST(ResidueSet, RejectsNonPositiveModulus) {
    EXPECT_THROW(ResidueSet(0), std::invalid_argument);
}

TEST(ResidueSet, MembersAscending) {
    ResidueSet s(200, {150, 3, 64, 63, 128, 199});
    EXPECT_EQ(s.members(), (std::vector<int>{3, 63, 64, 128, 150, 199}));
    EXPECT_EQ(s.count(), 6u);
}

TEST(ResidueSet, FullSet) {
    auto s = ResidueSet::full(130);
    EXPECT_TRUE(s.is_full());
    EXPECT_EQ(s.count(), 130u);
    EXPECT_EQ(stabilizer(s), s); // translation-invariant full set
}

TEST(ResidueSet, RotatedAcrossWordBoundaries) {
    // multi-word rotation, checked against element-wise translation
    std::mt19937 rng(7);
    for (int n : {5, 64, 65, 127, 128, 129, 200, 1000}) {
        std::set<int> a;
        for (int i = 0; i < n; ++i)
            if (rng() & 1) a.insert(i);
        ResidueSet s = make_set(n, a);
        for (int k : {0, 1, n - 1, n / 2, 63 % n, 64 % n}) {
            std::set<int> expect;
            for (int m : a) expect.insert((m + k) % n);
            EXPECT_EQ(to_set(s.rotated(k)), expect) << "n=" << n << " k=" << k;
            EXPECT_EQ(s.rotate_matches(k), s.rotated(k) == s);
        }
    }
}

// =============================================================================
// sumset
// =============================================================================

TEST(Sumset, IdentitySingleton) {
    ResidueSet a(7, {0}), b(7, {0, 2, 5});
    EXPECT_EQ(to_set(sumset(a, b)), (std::set<int>{0, 2, 5}));
}

TEST(Sumset, AllPairsZ5) {
    ResidueSet a(5, {0, 1});
    EXPECT_EQ(to_set(sumset(a, a)), (std::set<int>{0, 1, 2}));
}

TEST(Sumset, SubgroupClosed) {
    ResidueSet a(6, {0, 3});
    EXPECT_EQ(to_set(sumset(a, a)), (std::set<int>{0, 3}));
}

TEST(Sumset, EmptyOperand) {
    EXPECT_TRUE(sumset(ResidueSet(9), ResidueSet(9, {1, 2})).empty());
}

TEST(Sumset, ModulusMismatch) {
    EXPECT_THROW(sumset(ResidueSet(5, {0}), ResidueSet(6, {0})), std::invalid_argument);
}

TEST(Sumset, MatchesNaiveEnumeration) {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng() % 130);
        std::set<int> a, b;
        for (int i = 0; i < n; ++i) {
            if (rng() % 3 == 0) a.insert(i);
            if (rng() % 3 == 0) b.insert(i);
        }
        EXPECT_EQ(to_set(sumset(make_set(n, a), make_set(n, b))), oracle::naive_sumset(n, a, b));
    }
}

TEST(Sumset, CommutativeAssociativeWithIdentity) {
    std::mt19937 rng(13);
    ResidueSet zero(11, {0});
    for (int iter = 0; iter < 100; ++iter) {
        std::set<int> a, b, c;
        for (int i = 0; i < 11; ++i) {
            if (rng() & 1) a.insert(i);
            if (rng() & 1) b.insert(i);
            if (rng() & 1) c.insert(i);
        }
        auto A = make_set(11, a), B = make_set(11, b), C = make_set(11, c);
        EXPECT_EQ(sumset(A, B), sumset(B, A));
        EXPECT_EQ(sumset(sumset(A, B), C), sumset(A, sumset(B, C)));
        EXPECT_EQ(sumset(A, zero), A);
    }
}

TEST(Sumset, CardinalityBounds) {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng() % 40);
        std::set<int> a{static_cast<int>(rng() % n)}, b{static_cast<int>(rng() % n)};
        for (int i = 0; i < n; ++i) {
            if (rng() % 4 == 0) a.insert(i);
            if (rng() % 4 == 0) b.insert(i);
        }
        auto A = make_set(n, a), B = make_set(n, b);
        auto c = sumset(A, B).count();
        EXPECT_GE(c, std::max(A.count(), B.count()));
        EXPECT_LE(c, std::min<std::size_t>(n, A.count() * B.count()));
    }
}

// =============================================================================
// diffset
// =============================================================================

TEST(Diffset, ZeroCase) {
    ResidueSet a(9, {0});
    EXPECT_EQ(to_set(diffset(a, a)), (std::set<int>{0}));
}

TEST(Diffset, SevenValueFormula) {
    // S' - S' = {0, a, b, -a, -b, a-b, b-a}
    int n = 11, a = 2, b = 5;
    ResidueSet sp(n, {0, a, b});
    ResidueSet expect(n, {0, a, b, -a, -b, a - b, b - a});
    EXPECT_EQ(diffset(sp, sp), expect);
}

TEST(Diffset, FillsZ7) {
    ResidueSet sp(7, {0, 1, 3});
    EXPECT_TRUE(diffset(sp, sp).is_full());
}

TEST(Diffset, EqualsSumsetOfNegation) {
    std::mt19937 rng(19);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng() % 90);
        std::set<int> a, b;
        for (int i = 0; i < n; ++i) {
            if (rng() % 3 == 0) a.insert(i);
            if (rng() % 3 == 0) b.insert(i);
        }
        auto A = make_set(n, a), B = make_set(n, b);
        EXPECT_EQ(diffset(A, B), sumset(A, B.negated()));
        EXPECT_EQ(to_set(diffset(A, B)), oracle::naive_diffset(n, a, b));
    }
}

// =============================================================================
// stabilizer
// =============================================================================

TEST(Stabilizer, SingletonFixedOnlyByZero) {
    EXPECT_EQ(to_set(stabilizer(ResidueSet(6, {0}))), (std::set<int>{0}));
}

TEST(Stabilizer, SubgroupStabilizesItself) {
    ResidueSet a(6, {0, 2, 4});
    EXPECT_EQ(stabilizer(a), a);
}

TEST(Stabilizer, EmptySetConvention) {
    // every translate of {} is {}, so Stab({}) is all of Z_n
    EXPECT_TRUE(stabilizer(ResidueSet(8)).is_full());
}

TEST(Stabilizer, ExhaustiveSubgroupPropertySmallModuli) {
    // over every subset of Z_n for n <= 12: matches the naive oracle, is a
    // subgroup (0, closure, negation), and sumset(A, Stab(A)) = A
    for (int n = 1; n <= 12; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::set<int> a;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) a.insert(i);
            ResidueSet A = make_set(n, a);
            ResidueSet st = stabilizer(A);
            if (mask != 0) {
                EXPECT_EQ(to_set(st), oracle::naive_stabilizer(n, a));
                EXPECT_EQ(sumset(A, st), A);
            }
            EXPECT_TRUE(st.contains(0));
            for (int g : st.members()) {
                EXPECT_TRUE(st.contains(g == 0 ? 0 : n - g));
                for (int h : st.members()) EXPECT_TRUE(st.contains((g + h) % n));
            }
        }
    }
}

// =============================================================================
// cyclic_subgroup and coset_decomposition
// =============================================================================

TEST(CyclicSubgroup, Trivial) {
    EXPECT_EQ(to_set(cyclic_subgroup(0, 5)), (std::set<int>{0}));
}

TEST(CyclicSubgroup, ProperSubgroup) {
    EXPECT_EQ(to_set(cyclic_subgroup(2, 6)), (std::set<int>{0, 2, 4}));
}

TEST(CyclicSubgroup, CoprimeGeneratesEverything) {
    EXPECT_TRUE(cyclic_subgroup(3, 7).is_full());
}

TEST(CyclicSubgroup, MatchesIteratedMultiples) {
    for (int n = 1; n <= 30; ++n)
        for (int c = 0; c < n; ++c) {
            std::set<int> expect;
            int x = 0;
            do {
                expect.insert(x);
                x = (x + c) % n;
            } while (x != 0);
            EXPECT_EQ(to_set(cyclic_subgroup(c, n)), expect);
        }
}

TEST(CosetDecomposition, SingleCompleteCoset) {
    ResidueSet a(6, {0, 2, 4});
    auto entries = coset_decomposition(a, a);
    ASSERT_EQ(entries.size(), 1u);
    EXPECT_EQ(entries[0], (CosetEntry{0, true}));
}

TEST(CosetDecomposition, PartialCosets) {
    auto entries = coset_decomposition(ResidueSet(6, {0, 1, 2}), ResidueSet(6, {0, 3}));
    ASSERT_EQ(entries.size(), 3u);
    EXPECT_EQ(entries[0], (CosetEntry{0, false}));
    EXPECT_EQ(entries[1], (CosetEntry{1, false}));
    EXPECT_EQ(entries[2], (CosetEntry{2, false}));
}

TEST(CosetDecomposition, EmptySet) {
    EXPECT_TRUE(coset_decomposition(ResidueSet(4), ResidueSet(4, {0})).empty());
}

TEST(CosetDecomposition, RejectsNonSubgroup) {
    EXPECT_THROW(coset_decomposition(ResidueSet(6, {0}), ResidueSet(6, {1, 2})), std::invalid_argument);
    EXPECT_THROW(coset_decomposition(ResidueSet(6, {0}), ResidueSet(6, {0, 2})), std::invalid_argument);
}

TEST(CosetDecomposition, EntriesPartitionTheSet) {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + static_cast<int>(rng() % 36);
        // pick a random subgroup <d> with d | n
        std::vector<int> divisors;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) divisors.push_back(d);
        int d = divisors[rng() % divisors.size()];
        ResidueSet H = cyclic_subgroup(d % n, n);
        std::set<int> a;
        for (int i = 0; i < n; ++i)
            if (rng() & 1) a.insert(i);
        ResidueSet A = make_set(n, a);
        std::set<int> covered;
        for (const auto& entry : coset_decomposition(A, H)) {
            int step = H.count() == 1 ? n : *std::next(H.members().begin());
            bool complete = true;
            for (int m = entry.representative; m < n; m += step) {
                if (a.count(m)) covered.insert(m);
                else complete = false;
            }
            EXPECT_EQ(entry.complete, complete);
        }
        EXPECT_EQ(covered, a);
    }
}

// =============================================================================
// serialization
// =============================================================================

TEST(ResidueSetJson, Format) {
    EXPECT_EQ(to_json(ResidueSet(7, {5, 0, 2})).dump(), R"({"n":7,"members":[0,2,5]})");
}

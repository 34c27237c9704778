#pragma once

/// Exact set algebra over the cyclic group Z_n: sumsets, difference sets,
/// stabilizers, subgroups and coset decompositions.
///
/// Sets are stored as a dense bit table of n booleans packed into 64-bit
/// words, so a sumset A+B costs O(|B| * n/64) word operations (one cyclic
/// shift-and-or per member of the smaller operand) and a stabilizer costs
/// at most O(|A| * n/64) with early exit. n is desk-scale throughout, so
/// density always wins over sparse structures.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dihedral/arith.hpp"

namespace dihedral {

class ResidueSet {
public:
    explicit ResidueSet(int n) : n_(n), words_(word_count(n), 0) {
        if (n < 1) throw std::invalid_argument("ResidueSet: modulus must be positive");
    }

    ResidueSet(int n, std::initializer_list<long long> members) : ResidueSet(n) {
        for (long long m : members) insert(m);
    }

    ResidueSet(int n, const std::vector<long long>& members) : ResidueSet(n) {
        for (long long m : members) insert(m);
    }

    /// All of Z_n.
    static ResidueSet full(int n) {
        ResidueSet s(n);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.mask_tail();
        return s;
    }

    static ResidueSet singleton(int n, long long m) {
        ResidueSet s(n);
        s.insert(m);
        return s;
    }

    int modulus() const { return n_; }

    bool contains(long long m) const {
        int i = mod_norm(m, n_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void insert(long long m) {
        int i = mod_norm(m, n_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void erase(long long m) {
        int i = mod_norm(m, n_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_full() const { return count() == static_cast<std::size_t>(n_); }

    /// Members in ascending numeric order (iteration order is part of the
    /// contract: it keeps every report deterministic).
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for_each_member([&](int m) { out.push_back(m); });
        return out;
    }

    template <class F>
    void for_each_member(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(wi * 64 + bit));
                w &= w - 1;
            }
        }
    }

    /// Visit members of this set that are not members of `other`.
    template <class F>
    void for_each_member_not_in(const ResidueSet& other, F&& f) const {
        require_same_modulus(other, "for_each_member_not_in");
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi] & ~other.words_[wi];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(wi * 64 + bit));
                w &= w - 1;
            }
        }
    }

    /// Smallest member, or -1 if empty.
    int first_member() const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi]) return static_cast<int>(wi * 64 + std::countr_zero(words_[wi]));
        return -1;
    }

    /// { (m + k) mod n : m in this } — the cyclic translate.
    ResidueSet rotated(long long k) const {
        int s = mod_norm(k, n_);
        if (s == 0) return *this;
        ResidueSet out(n_);
        out.or_rotated(*this, s);
        return out;
    }

    /// this |= rotate(src, k). src may not alias this.
    void or_rotated(const ResidueSet& src, long long k) {
        int s = mod_norm(k, n_);
        const int W = static_cast<int>(words_.size());
        // result bit i' takes src bit i'-s (for i' >= s, a left shift by s)
        // or src bit i'-s+n (for i' < s, a right shift by n-s).
        int ws = s >> 6, bs = s & 63;
        for (int i = W - 1; i >= ws; --i) {
            std::uint64_t v = src.words_[i - ws] << bs;
            if (bs && i - ws - 1 >= 0) v |= src.words_[i - ws - 1] >> (64 - bs);
            words_[i] |= v;
        }
        if (s != 0) {
            int s2 = n_ - s;
            int ws2 = s2 >> 6, bs2 = s2 & 63;
            for (int i = 0; i + ws2 < W; ++i) {
                std::uint64_t v = src.words_[i + ws2] >> bs2;
                if (bs2 && i + ws2 + 1 < W) v |= src.words_[i + ws2 + 1] << (64 - bs2);
                words_[i] |= v;
            }
        }
        mask_tail();
    }

    /// Does rotate(this, k) equal this?  Early-exits on the first differing
    /// word; no allocation — this is the stabilizer inner loop.
    bool rotate_matches(long long k) const {
        int s = mod_norm(k, n_);
        if (s == 0) return true;
        const int W = static_cast<int>(words_.size());
        int ws = s >> 6, bs = s & 63;
        int s2 = n_ - s;
        int ws2 = s2 >> 6, bs2 = s2 & 63;
        for (int i = 0; i < W; ++i) {
            std::uint64_t v = 0;
            if (i - ws >= 0) {
                v = words_[i - ws] << bs;
                if (bs && i - ws - 1 >= 0) v |= words_[i - ws - 1] >> (64 - bs);
            }
            if (i + ws2 < W) {
                v |= words_[i + ws2] >> bs2;
                if (bs2 && i + ws2 + 1 < W) v |= words_[i + ws2 + 1] << (64 - bs2);
            }
            if (i == W - 1 && (n_ & 63)) v &= tail_mask();
            if (v != words_[i]) return false;
        }
        return true;
    }

    /// { (-m) mod n : m in this }.
    ResidueSet negated() const {
        ResidueSet out(n_);
        for_each_member([&](int m) { out.insert(m == 0 ? 0 : n_ - m); });
        return out;
    }

    ResidueSet& operator|=(const ResidueSet& rhs) {
        require_same_modulus(rhs, "operator|=");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= rhs.words_[i];
        return *this;
    }

    bool operator==(const ResidueSet& rhs) const {
        return n_ == rhs.n_ && words_ == rhs.words_;
    }
    bool operator!=(const ResidueSet& rhs) const { return !(*this == rhs); }

    /// True if every member of this is a member of rhs.
    bool subset_of(const ResidueSet& rhs) const {
        require_same_modulus(rhs, "subset_of");
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~rhs.words_[i]) return false;
        return true;
    }

    void require_same_modulus(const ResidueSet& rhs, const char* op) const {
        if (n_ != rhs.n_)
            throw std::invalid_argument(std::string(op) + ": modulus mismatch (" +
                                        std::to_string(n_) + " vs " + std::to_string(rhs.n_) + ")");
    }

private:
    static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

    std::uint64_t tail_mask() const { return ~std::uint64_t{0} >> (64 - (n_ & 63)); }

    void mask_tail() {
        if (n_ & 63) words_.back() &= tail_mask();
    }

    int n_;
    std::vector<std::uint64_t> words_; // bit i set <=> i is a member; tail bits zero
};

/// A + B = { a + b mod n }. Empty if either operand is empty.
inline ResidueSet sumset(const ResidueSet& A, const ResidueSet& B) {
    A.require_same_modulus(B, "sumset");
    ResidueSet out(A.modulus());
    if (A.empty() || B.empty()) return out;
    // shift the larger operand by each member of the smaller one
    const ResidueSet& big = A.count() >= B.count() ? A : B;
    const ResidueSet& small = A.count() >= B.count() ? B : A;
    small.for_each_member([&](int b) { out.or_rotated(big, b); });
    return out;
}

/// A - B = { a - b mod n }.
inline ResidueSet diffset(const ResidueSet& A, const ResidueSet& B) {
    A.require_same_modulus(B, "diffset");
    ResidueSet out(A.modulus());
    if (A.empty() || B.empty()) return out;
    B.for_each_member([&](int b) { out.or_rotated(A, -b); });
    return out;
}

/// Stab(A) = { g : g + A = A }.  Always a subgroup of Z_n containing 0.
/// Stab of the empty set is all of Z_n (every translate of {} is {}).
inline ResidueSet stabilizer(const ResidueSet& A) {
    int n = A.modulus();
    if (A.empty()) return ResidueSet::full(n);
    ResidueSet st(n);
    st.insert(0);
    // g + A = A forces m0 + g into A, so candidates are exactly A - m0.
    int m0 = A.first_member();
    A.for_each_member([&](int x) {
        int g = mod_norm(x - m0, n);
        if (g != 0 && A.rotate_matches(g)) st.insert(g);
    });
    return st;
}

/// <c> = { k*c mod n : k >= 0 } = the multiples of gcd(c, n).
inline ResidueSet cyclic_subgroup(int c, int n) {
    if (c < 0 || c >= n) throw std::invalid_argument("cyclic_subgroup: need 0 <= c < n");
    ResidueSet out(n);
    int g = c == 0 ? n : std::gcd(c, n);
    for (int m = 0; m < n; m += g) out.insert(m);
    return out;
}

struct CosetEntry {
    int representative; // smallest member of the coset
    bool complete;      // coset entirely inside A
    bool operator==(const CosetEntry&) const = default;
};

/// One entry per coset of H that intersects A, sorted by representative.
/// H must be a subgroup of Z_n.
inline std::vector<CosetEntry> coset_decomposition(const ResidueSet& A, const ResidueSet& H) {
    A.require_same_modulus(H, "coset_decomposition");
    int n = A.modulus();
    if (!H.contains(0)) throw std::invalid_argument("coset_decomposition: H is not a subgroup (0 missing)");
    for (int h1 : H.members())
        for (int h2 : H.members())
            if (!H.contains(h1 + h2))
                throw std::invalid_argument("coset_decomposition: H is not a subgroup (not closed)");
    // a subgroup of Z_n is generated by its smallest non-zero member
    int d = static_cast<int>(H.count()) == 1 ? n : [&] {
        for (int m : H.members())
            if (m != 0) return m;
        return n;
    }();
    std::vector<CosetEntry> out;
    for (int rep = 0; rep < d; ++rep) {
        bool meets = false, complete = true;
        for (int m = rep; m < n; m += d) {
            if (A.contains(m)) meets = true;
            else complete = false;
        }
        if (meets) out.push_back({rep, complete});
    }
    return out;
}

} // namespace dihedral

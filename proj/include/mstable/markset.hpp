#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mstable {

inline constexpr int kMaxMarks = 62;

/// Subset of the marks {1, ..., n}, n <= 62, stored as a bitmask (bit i-1 <-> mark i).
///
/// Ordered by (cardinality, bitmask), which is the canonical order of boundary
/// divisors in every basis listing.
class MarkSet {
public:
    constexpr MarkSet() = default;
    static constexpr MarkSet from_bits(std::uint64_t bits) { return MarkSet(bits); }
    static MarkSet of(std::initializer_list<int> marks);
    static MarkSet of(const std::vector<int>& marks);
    /// {1, ..., n}
    static MarkSet full(int n);
    /// Inverse of to_string(): "1,2,5". Empty string gives the empty set.
    static MarkSet parse(std::string_view text);

    constexpr std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int mark) const { return mark >= 1 && mark <= kMaxMarks && ((bits_ >> (mark - 1)) & 1U); }
    /// Largest mark present, 0 for the empty set.
    int max_mark() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }
    int min_mark() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
    bool subset_of(MarkSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool disjoint(MarkSet o) const { return (bits_ & o.bits_) == 0; }

    /// Ascending 1-based members.
    std::vector<int> members() const;
    std::string to_string() const;

    MarkSet operator|(MarkSet o) const { return MarkSet(bits_ | o.bits_); }
    MarkSet operator&(MarkSet o) const { return MarkSet(bits_ & o.bits_); }
    MarkSet minus(MarkSet o) const { return MarkSet(bits_ & ~o.bits_); }
    MarkSet with(int mark) const;

    friend constexpr bool operator==(MarkSet a, MarkSet b) { return a.bits_ == b.bits_; }
    friend std::strong_ordering operator<=>(MarkSet a, MarkSet b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    constexpr explicit MarkSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

/// All k-subsets of {1..n} in increasing bitmask order.
std::vector<MarkSet> subsets_of_size(int n, int k);

}  // namespace mstable

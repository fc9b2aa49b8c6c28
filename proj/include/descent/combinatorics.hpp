#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace descent {

/// Thrown when a value violates the invariants of one of the combinatorial types.
class invalid_argument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }                       // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// Part i (0-based), 0 beyond the length.
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }

    Partition transpose() const;
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Sequence of parts summing to n. A weak composition may contain zeros.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts, bool weak = false);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool weak() const { return weak_; }

    /// Drops zero parts (mu-bar).
    Composition strip_zeros() const;
    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
    bool weak_ = false;
};

enum class SubsetVariant : std::uint8_t { TypeA, TypeB };

/// Subset of [n-1] (type A) or of {0} u [n-1] (type B).
///
/// Stored as a bitmask: bit i-1 for element i in type A, bit i for element i
/// in type B. Binary-counter order on masks is the canonical enumeration order.
class IndexSubset {
public:
    IndexSubset() = default;
    IndexSubset(int n, std::vector<int> elements, SubsetVariant variant = SubsetVariant::TypeA);

    static IndexSubset from_mask(int n, std::uint32_t mask, SubsetVariant variant);
    static IndexSubset full(int n, SubsetVariant variant);
    /// All subsets of the variant's range in binary-counter order.
    static std::vector<IndexSubset> all(int n, SubsetVariant variant);
    /// Number of subsets: 2^(n-1) for type A, 2^n for type B.
    static std::uint32_t count(int n, SubsetVariant variant);

    int rank() const { return n_; }
    SubsetVariant variant() const { return variant_; }
    std::uint32_t mask() const { return mask_; }
    std::vector<int> elements() const;
    bool contains(int i) const;
    int cardinality() const;
    bool subset_of(const IndexSubset& other) const { return (mask_ & ~other.mask_) == 0; }

    std::string to_string() const;

    friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
    friend auto operator<=>(const IndexSubset& a, const IndexSubset& b) { return a.mask_ <=> b.mask_; }

private:
    int n_ = 0;
    std::uint32_t mask_ = 0;
    SubsetVariant variant_ = SubsetVariant::TypeA;
};

/// Pair (minus, plus) of partitions: a 2-quotient, or a signed cycle type.
struct BiPartition {
    Partition minus;
    Partition plus;

    int size() const { return minus.size() + plus.size(); }
    std::string to_string() const;

    friend auto operator<=>(const BiPartition&, const BiPartition&) = default;
};

// Composition <-> subset bijection.
IndexSubset set_of_comp(const Composition& alpha);
Composition comp_of_set(const IndexSubset& subset);
std::vector<Composition> enumerate_compositions(int n);

/// All partitions of n in reverse lexicographic order: [n], [n-1,1], ..., [1^n].
std::vector<Partition> enumerate_partitions(int n);
/// All bipartitions of total size n, ordered by |minus| then by each component's order.
std::vector<BiPartition> enumerate_bipartitions(int n);

/// Beta numbers lambda_i - i for i = 1..L with L even and L >= length.
std::vector<int> beta_numbers(const Partition& lambda);

bool is_empty_two_core(const Partition& lambda);
/// 2-quotient (lambda^-, lambda^+). lambda^- collects the dominos whose top-right
/// cell has even content, i.e. the '-' cells of the checkerboard that starts
/// with '-' in the top-left corner.
BiPartition two_quotient(const Partition& lambda);
/// Inverse of two_quotient.
Partition from_two_quotient(const BiPartition& quotient);
/// Empty-2-core partitions of 2n, reverse lexicographic.
std::vector<Partition> enumerate_P0(int n);

/// A domino: two edge-adjacent cells (row, col), first cell top-left.
struct Domino {
    int row = 0;
    int col = 0;
    bool vertical = false;

    int row2() const { return vertical ? row + 1 : row; }
    int col2() const { return vertical ? col : col + 1; }
    /// Content (col - row) of the domino's top-right cell.
    int top_right_content() const { return vertical ? col - row : col + 1 - row; }
    bool is_minus() const { return (top_right_content() % 2 + 2) % 2 == 0; }

    friend bool operator==(const Domino&, const Domino&) = default;
};

/// Canonical tiling: repeatedly peel the removable domino from the lowest row
/// of the rim (horizontal preferred over vertical at equal row). Throws if lambda
/// has a non-empty 2-core.
std::vector<Domino> canonical_tiling(const Partition& lambda);

// Conjugacy class bookkeeping.
/// z_rho = prod_i i^{m_i} m_i!.
std::int64_t z_value(const Partition& rho);
/// z^B = 2^{l(minus)+l(plus)} z_minus z_plus; class size is 2^n n! / z^B.
std::int64_t z_value_B(const BiPartition& type);
std::int64_t factorial(int n);

}  // namespace descent

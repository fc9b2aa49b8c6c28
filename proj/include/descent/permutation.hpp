#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "descent/combinatorics.hpp"

namespace descent {

/// Signed permutation of [n] in window notation pi(1), ..., pi(n).
///
/// Entries are nonzero and their absolute values form a permutation of [n];
/// pi(-i) = -pi(i) and pi(0) = 0 are implicit. An unsigned permutation is the
/// special case with all entries positive, so one type serves both S_n and B_n.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> window);

    static SignedPermutation identity(int n);

    int rank() const { return static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }
    /// pi(i) for -n <= i <= n.
    int operator()(int i) const;
    bool is_unsigned() const;

    /// Product in the descent algebra convention: this acts first, so
    /// (this * other)(i) = other(this(i)).
    SignedPermutation operator*(const SignedPermutation& other) const;
    SignedPermutation inverse() const;

    /// Type A descent set {1 <= i <= n-1 : pi(i) > pi(i+1)}; requires is_unsigned().
    IndexSubset descent_set() const;
    /// Type B descent set {0 <= i <= n-1 : pi(i) > pi(i+1)} with pi(0) = 0.
    IndexSubset b_descent_set() const;

    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> window_;
};

using Permutation = SignedPermutation;

/// S_n in lexicographic order of windows.
std::vector<SignedPermutation> enumerate_symmetric_group(int n);
/// B_n: for each permutation in lexicographic order, sign patterns in binary-counter order.
std::vector<SignedPermutation> enumerate_hyperoctahedral_group(int n);

/// Cycle type on [n] split by cycle sign: negative cycles (odd number of
/// negative entries along the cycle) go to minus, positive cycles to plus.
BiPartition signed_cycle_type(const SignedPermutation& pi);
/// Cycle type of an unsigned permutation.
Partition cycle_type(const SignedPermutation& pi);

/// Lehmer-code rank of an unsigned window in [0, n!).
std::uint32_t permutation_rank(std::span<const std::uint8_t> window);

}  // namespace descent

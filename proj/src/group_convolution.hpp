#pragma once

// Exhaustive convolution of descent classes in S_n and B_n.

#include <array>
#include <cstdint>
#include <vector>

#include "descent/constant_table.hpp"
#include "descent/permutation.hpp"

namespace descent::detail {

inline constexpr int kMaxGroupRank = 8;

/// Elements of S_n or B_n indexed by rank: Lehmer rank of |window| times 2^n
/// plus the sign mask (type B), so that rank order is enumeration order.
class GroupData {
public:
    static GroupData symmetric(int n);
    static GroupData hyperoctahedral(int n);

    int rank() const { return n_; }
    SubsetVariant variant() const { return variant_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(windows_.size()); }
    std::uint32_t class_count() const { return IndexSubset::count(n_, variant_); }
    std::uint32_t descent(std::uint32_t g) const { return descent_[g]; }
    const std::vector<std::uint32_t>& descent_class(std::uint32_t mask) const { return classes_[mask]; }

    /// Rank of the product gh in the descent algebra convention: g acts first,
    /// so (gh)(i) = h(g(i)).
    std::uint32_t product(std::uint32_t g, std::uint32_t h) const;
    std::uint32_t inverse(std::uint32_t g) const;

private:
    using Window = std::array<std::int8_t, kMaxGroupRank>;

    GroupData(int n, SubsetVariant variant, const std::vector<SignedPermutation>& elements);
    std::uint32_t rank_of(const Window& w) const;

    int n_;
    SubsetVariant variant_;
    std::vector<Window> windows_;
    std::vector<std::uint32_t> descent_;
    std::vector<std::vector<std::uint32_t>> classes_;
};

/// [D_K] D_I D_J for every (I, J, K). The multiplicity of each product element
/// is checked to be constant on descent classes; a violation throws std::logic_error.
ConstantTable class_convolution(const GroupData& g, Flavor flavor);

/// Containment classes B_I = sum of D_{I'} over I' subset of I, multiplied directly;
/// coefficients in the B_K basis recovered by Moebius inversion over supersets.
ConstantTable containment_convolution(const GroupData& g);

/// Number of (s1, s2, s3) with descent sets (I, J, K) and s1 s2 s3 = id, for all triples.
ConstantTable identity_triples(const GroupData& g, Flavor flavor);
/// Same for one triple, by looping over D_I x D_J.
std::int64_t identity_triple_count(const GroupData& g, std::uint32_t i, std::uint32_t j, std::uint32_t k);

}  // namespace descent::detail

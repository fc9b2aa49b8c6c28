#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "descent/combinatorics.hpp"

namespace descent {

enum class Flavor : std::uint8_t {
    A,        // a^K_{IJ} = [D_K] D_I D_J
    B,        // b^K_{IJ} = [B_K] B_I B_J
    C,        // c^K_{IJ}, type B descent algebra
    ATriple,  // a^{emptyset}_{I,J,K}
    CTriple,  // c^{emptyset}_{I,J,K}
};

std::string flavor_name(Flavor f);

/// Dense table over triples of subsets (I, J, K); the third slot is the
/// product's class for pairwise flavors and the third factor for triple flavors.
class ConstantTable {
public:
    ConstantTable(int n, SubsetVariant variant, Flavor flavor);

    int rank() const { return n_; }
    SubsetVariant variant() const { return variant_; }
    Flavor flavor() const { return flavor_; }
    std::uint32_t subset_count() const { return count_; }
    std::vector<IndexSubset> subsets() const { return IndexSubset::all(n_, variant_); }

    std::int64_t operator()(const IndexSubset& i, const IndexSubset& j, const IndexSubset& k) const;
    std::int64_t at(std::uint32_t i, std::uint32_t j, std::uint32_t k) const { return values_[index(i, j, k)]; }
    std::int64_t& at(std::uint32_t i, std::uint32_t j, std::uint32_t k) { return values_[index(i, j, k)]; }

private:
    std::size_t index(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
        return (static_cast<std::size_t>(i) * count_ + j) * count_ + k;
    }

    int n_;
    SubsetVariant variant_;
    Flavor flavor_;
    std::uint32_t count_;
    std::vector<std::int64_t> values_;
};

}  // namespace descent

#include "group_convolution.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace descent::detail {

GroupData::GroupData(int n, SubsetVariant variant, const std::vector<SignedPermutation>& elements)
    : n_(n), variant_(variant) {
    windows_.reserve(elements.size());
    descent_.reserve(elements.size());
    classes_.resize(class_count());
    for (const auto& e : elements) {
        Window w{};
        for (int i = 0; i < n; ++i) w[i] = static_cast<std::int8_t>(e.window()[i]);
        const std::uint32_t r = static_cast<std::uint32_t>(windows_.size());
        if (rank_of(w) != r) throw std::logic_error("group enumeration order disagrees with ranking");
        windows_.push_back(w);
        const auto d = variant == SubsetVariant::TypeA ? e.descent_set() : e.b_descent_set();
        descent_.push_back(d.mask());
        classes_[d.mask()].push_back(r);
    }
}

GroupData GroupData::symmetric(int n) {
    if (n < 1 || n > kMaxGroupRank) throw invalid_argument("symmetric group rank out of range");
    return GroupData(n, SubsetVariant::TypeA, enumerate_symmetric_group(n));
}

GroupData GroupData::hyperoctahedral(int n) {
    if (n < 1 || n > kMaxGroupRank) throw invalid_argument("hyperoctahedral group rank out of range");
    return GroupData(n, SubsetVariant::TypeB, enumerate_hyperoctahedral_group(n));
}

std::uint32_t GroupData::rank_of(const Window& w) const {
    std::array<std::uint8_t, kMaxGroupRank> abs_w{};
    std::uint32_t signs = 0;
    for (int i = 0; i < n_; ++i) {
        abs_w[i] = static_cast<std::uint8_t>(std::abs(w[i]));
        if (w[i] < 0) signs |= 1u << i;
    }
    const std::uint32_t lehmer = permutation_rank(std::span<const std::uint8_t>(abs_w.data(), n_));
    return variant_ == SubsetVariant::TypeA ? lehmer : (lehmer << n_) | signs;
}

std::uint32_t GroupData::product(std::uint32_t g, std::uint32_t h) const {
    const auto& a = windows_[g];
    const auto& b = windows_[h];
    Window w{};
    for (int i = 0; i < n_; ++i) {
        const int v = a[i];
        w[i] = static_cast<std::int8_t>(v > 0 ? b[v - 1] : -b[-v - 1]);
    }
    return rank_of(w);
}

std::uint32_t GroupData::inverse(std::uint32_t g) const {
    const auto& a = windows_[g];
    Window w{};
    for (int i = 0; i < n_; ++i) {
        const int v = a[i];
        w[std::abs(v) - 1] = static_cast<std::int8_t>(v > 0 ? i + 1 : -(i + 1));
    }
    return rank_of(w);
}

ConstantTable class_convolution(const GroupData& g, Flavor flavor) {
    const std::uint32_t classes = g.class_count();
    const std::uint32_t order = g.size();
    ConstantTable table(g.rank(), g.variant(), flavor);
    std::vector<std::int32_t> counts(static_cast<std::size_t>(classes) * order);
    for (std::uint32_t i = 0; i < classes; ++i) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::uint32_t s : g.descent_class(i))
            for (std::uint32_t t = 0; t < order; ++t)
                ++counts[static_cast<std::size_t>(g.descent(t)) * order + g.product(s, t)];
        for (std::uint32_t j = 0; j < classes; ++j) {
            const auto* row = &counts[static_cast<std::size_t>(j) * order];
            for (std::uint32_t k = 0; k < classes; ++k) {
                const auto& members = g.descent_class(k);
                const std::int32_t value = row[members.front()];
                for (std::uint32_t p : members)
                    if (row[p] != value)
                        throw std::logic_error("descent class multiplicity not constant at (I,J,K) masks (" +
                                               std::to_string(i) + "," + std::to_string(j) + "," +
                                               std::to_string(k) + ")");
                table.at(i, j, k) = value;
            }
        }
    }
    return table;
}

ConstantTable containment_convolution(const GroupData& g) {
    const std::uint32_t classes = g.class_count();
    const std::uint32_t order = g.size();
    ConstantTable table(g.rank(), g.variant(), Flavor::B);
    std::vector<std::int64_t> counts(order);
    std::vector<std::int64_t> per_class(classes);
    for (std::uint32_t i = 0; i < classes; ++i) {
        for (std::uint32_t j = 0; j < classes; ++j) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::uint32_t s = 0; s < order; ++s) {
                if ((g.descent(s) & ~i) != 0) continue;
                for (std::uint32_t t = 0; t < order; ++t) {
                    if ((g.descent(t) & ~j) != 0) continue;
                    ++counts[g.product(s, t)];
                }
            }
            // Coefficient of pi is sum_{K' >= set(pi)} b^{K'}; constant on D_K.
            for (std::uint32_t k = 0; k < classes; ++k) {
                const auto& members = g.descent_class(k);
                per_class[k] = counts[members.front()];
                for (std::uint32_t p : members)
                    if (counts[p] != per_class[k]) throw std::logic_error("B-class product not constant on D_K");
            }
            for (std::uint32_t k = 0; k < classes; ++k) {
                std::int64_t b = 0;
                const std::uint32_t full = classes - 1;
                const std::uint32_t free = full & ~k;
                for (std::uint32_t extra = free;; extra = (extra - 1) & free) {
                    b += (std::popcount(extra) % 2 ? -1 : 1) * per_class[k | extra];
                    if (extra == 0) break;
                }
                table.at(i, j, k) = b;
            }
        }
    }
    return table;
}

ConstantTable identity_triples(const GroupData& g, Flavor flavor) {
    ConstantTable table(g.rank(), g.variant(), flavor);
    const std::uint32_t order = g.size();
    for (std::uint32_t s = 0; s < order; ++s)
        for (std::uint32_t t = 0; t < order; ++t)
            ++table.at(g.descent(s), g.descent(t), g.descent(g.inverse(g.product(s, t))));
    return table;
}

std::int64_t identity_triple_count(const GroupData& g, std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    std::int64_t count = 0;
    for (std::uint32_t s : g.descent_class(i))
        for (std::uint32_t t : g.descent_class(j))
            if (g.descent(g.inverse(g.product(s, t))) == k) ++count;
    return count;
}

}  // namespace descent::detail

#include "descent/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace descent {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    const int n = rank();
    std::vector<bool> seen(n + 1, false);
    for (int v : window_) {
        const int a = std::abs(v);
        if (a < 1 || a > n || seen[a]) throw invalid_argument("window is not a signed permutation");
        seen[a] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return SignedPermutation(std::move(w));
}

int SignedPermutation::operator()(int i) const {
    if (i == 0) return 0;
    return i > 0 ? window_[i - 1] : -window_[-i - 1];
}

bool SignedPermutation::is_unsigned() const {
    return std::all_of(window_.begin(), window_.end(), [](int v) { return v > 0; });
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& other) const {
    if (other.rank() != rank()) throw invalid_argument("rank mismatch in permutation product");
    std::vector<int> w(rank());
    for (int i = 1; i <= rank(); ++i) w[i - 1] = other((*this)(i));
    SignedPermutation out;
    out.window_ = std::move(w);
    return out;
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> w(rank());
    for (int i = 1; i <= rank(); ++i) {
        const int v = window_[i - 1];
        w[std::abs(v) - 1] = v > 0 ? i : -i;
    }
    SignedPermutation out;
    out.window_ = std::move(w);
    return out;
}

IndexSubset SignedPermutation::descent_set() const {
    if (!is_unsigned()) throw invalid_argument("type A descent set of a signed permutation");
    std::uint32_t mask = 0;
    for (int i = 1; i < rank(); ++i)
        if (window_[i - 1] > window_[i]) mask |= 1u << (i - 1);
    return IndexSubset::from_mask(rank(), mask, SubsetVariant::TypeA);
}

IndexSubset SignedPermutation::b_descent_set() const {
    std::uint32_t mask = 0;
    for (int i = 0; i < rank(); ++i)
        if ((*this)(i) > (*this)(i + 1)) mask |= 1u << i;
    return IndexSubset::from_mask(rank(), mask, SubsetVariant::TypeB);
}

std::vector<SignedPermutation> enumerate_symmetric_group(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<SignedPermutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<SignedPermutation> enumerate_hyperoctahedral_group(int n) {
    std::vector<SignedPermutation> out;
    for (const auto& p : enumerate_symmetric_group(n)) {
        for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
            std::vector<int> w = p.window();
            for (int i = 0; i < n; ++i)
                if (signs & (1u << i)) w[i] = -w[i];
            out.emplace_back(std::move(w));
        }
    }
    return out;
}

BiPartition signed_cycle_type(const SignedPermutation& pi) {
    const int n = pi.rank();
    std::vector<bool> seen(n + 1, false);
    std::vector<int> neg, pos;
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        int len = 0, negatives = 0, i = start;
        while (!seen[i]) {
            seen[i] = true;
            ++len;
            const int v = pi(i);
            if (v < 0) ++negatives;
            i = std::abs(v);
        }
        (negatives % 2 ? neg : pos).push_back(len);
    }
    std::sort(neg.rbegin(), neg.rend());
    std::sort(pos.rbegin(), pos.rend());
    return {Partition(std::move(neg)), Partition(std::move(pos))};
}

Partition cycle_type(const SignedPermutation& pi) {
    if (!pi.is_unsigned()) throw invalid_argument("cycle_type expects an unsigned permutation");
    return signed_cycle_type(pi).plus;
}

std::uint32_t permutation_rank(std::span<const std::uint8_t> window) {
    const std::size_t n = window.size();
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (window[j] < window[i]) ++smaller;
        r = r * static_cast<std::uint32_t>(n - i) + smaller;
    }
    return r;
}

}  // namespace descent

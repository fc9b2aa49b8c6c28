#include "descent/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace descent {

namespace {

std::string join_parts(const std::vector<int>& parts, char open, char close) {
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << close;
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw invalid_argument("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) throw invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
    std::vector<int> cols(empty() ? 0 : parts_.front(), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++cols[j];
    return Partition(std::move(cols));
}

std::string Partition::to_string() const { return join_parts(parts_, '[', ']'); }

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::vector<int> parts, bool weak) : parts_(std::move(parts)), weak_(weak) {
    for (int p : parts_) {
        if (p < 0 || (p == 0 && !weak_)) throw invalid_argument("composition parts must be positive");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::strip_zeros() const {
    std::vector<int> out;
    std::copy_if(parts_.begin(), parts_.end(), std::back_inserter(out), [](int p) { return p > 0; });
    return Composition(std::move(out));
}

std::string Composition::to_string() const { return join_parts(parts_, '(', ')'); }

// ---------------------------------------------------------------------------
// IndexSubset

IndexSubset::IndexSubset(int n, std::vector<int> elements, SubsetVariant variant) : n_(n), variant_(variant) {
    if (n < 0) throw invalid_argument("subset rank must be non-negative");
    const int lo = variant == SubsetVariant::TypeA ? 1 : 0;
    for (int e : elements) {
        if (e < lo || e > n - 1) throw invalid_argument("subset element " + std::to_string(e) + " out of range");
        const std::uint32_t bit = 1u << (e - lo);
        if (mask_ & bit) throw invalid_argument("duplicate subset element");
        mask_ |= bit;
    }
}

IndexSubset IndexSubset::from_mask(int n, std::uint32_t mask, SubsetVariant variant) {
    IndexSubset s;
    s.n_ = n;
    s.variant_ = variant;
    if (mask >= count(n, variant)) throw invalid_argument("subset mask out of range");
    s.mask_ = mask;
    return s;
}

IndexSubset IndexSubset::full(int n, SubsetVariant variant) { return from_mask(n, count(n, variant) - 1, variant); }

std::uint32_t IndexSubset::count(int n, SubsetVariant variant) {
    if (variant == SubsetVariant::TypeA) return n <= 1 ? 1u : (1u << (n - 1));
    return 1u << n;
}

std::vector<IndexSubset> IndexSubset::all(int n, SubsetVariant variant) {
    std::vector<IndexSubset> out;
    const auto total = count(n, variant);
    out.reserve(total);
    for (std::uint32_t m = 0; m < total; ++m) out.push_back(from_mask(n, m, variant));
    return out;
}

std::vector<int> IndexSubset::elements() const {
    const int lo = variant_ == SubsetVariant::TypeA ? 1 : 0;
    std::vector<int> out;
    for (int b = 0; b < 32; ++b)
        if (mask_ & (1u << b)) out.push_back(b + lo);
    return out;
}

bool IndexSubset::contains(int i) const {
    const int bit = variant_ == SubsetVariant::TypeA ? i - 1 : i;
    return bit >= 0 && bit < 32 && (mask_ >> bit) & 1u;
}

int IndexSubset::cardinality() const { return std::popcount(mask_); }

std::string IndexSubset::to_string() const { return join_parts(elements(), '{', '}'); }

std::string BiPartition::to_string() const { return "(" + minus.to_string() + "," + plus.to_string() + ")"; }

// ---------------------------------------------------------------------------
// comp / set

IndexSubset set_of_comp(const Composition& alpha) {
    if (alpha.weak())
        for (int p : alpha.parts())
            if (p == 0) throw invalid_argument("set_of_comp requires a composition without zero parts");
    std::vector<int> sums;
    int acc = 0;
    for (int i = 0; i + 1 < alpha.length(); ++i) {
        acc += alpha.parts()[i];
        sums.push_back(acc);
    }
    return IndexSubset(alpha.size(), std::move(sums), SubsetVariant::TypeA);
}

Composition comp_of_set(const IndexSubset& subset) {
    if (subset.variant() != SubsetVariant::TypeA) throw invalid_argument("comp_of_set requires a type A subset");
    std::vector<int> parts;
    int prev = 0;
    for (int e : subset.elements()) {
        parts.push_back(e - prev);
        prev = e;
    }
    if (subset.rank() > 0) parts.push_back(subset.rank() - prev);
    return Composition(std::move(parts));
}

std::vector<Composition> enumerate_compositions(int n) {
    std::vector<Composition> out;
    for (const auto& s : IndexSubset::all(n, SubsetVariant::TypeA)) out.push_back(comp_of_set(s));
    return out;
}

// ---------------------------------------------------------------------------
// Partitions

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw invalid_argument("n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<BiPartition> enumerate_bipartitions(int n) {
    std::vector<BiPartition> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& m : enumerate_partitions(k))
            for (const auto& p : enumerate_partitions(n - k)) out.push_back({m, p});
    return out;
}

std::vector<int> beta_numbers(const Partition& lambda) {
    int len = lambda.length() + (lambda.length() % 2);
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] - (i + 1);
    return beta;
}

bool is_empty_two_core(const Partition& lambda) {
    const auto beta = beta_numbers(lambda);
    const auto even = std::count_if(beta.begin(), beta.end(), [](int b) { return b % 2 == 0; });
    return 2 * even == static_cast<long>(beta.size());
}

namespace {

// Partition read off one runner of the 2-abacus: beads at runner positions k
// (sorted decreasing), part j = k_j + j for j = 1..m.
Partition runner_partition(std::vector<int> ks) {
    std::sort(ks.rbegin(), ks.rend());
    std::vector<int> parts;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        const int part = ks[j] + static_cast<int>(j) + 1;
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

}  // namespace

BiPartition two_quotient(const Partition& lambda) {
    if (!is_empty_two_core(lambda))
        throw invalid_argument("partition " + lambda.to_string() + " has a non-empty 2-core");
    std::vector<int> even, odd;
    for (int b : beta_numbers(lambda)) {
        // A domino whose top-right cell has content d moves a bead to position d.
        if (b % 2 == 0)
            even.push_back(b / 2);
        else
            odd.push_back((b - 1) / 2);
    }
    return {runner_partition(std::move(even)), runner_partition(std::move(odd))};
}

Partition from_two_quotient(const BiPartition& quotient) {
    const int m = std::max(quotient.minus.length(), quotient.plus.length());
    std::vector<int> beads;
    for (int j = 0; j < m; ++j) {
        beads.push_back(2 * (quotient.minus[j] - (j + 1)));
        beads.push_back(2 * (quotient.plus[j] - (j + 1)) + 1);
    }
    std::sort(beads.rbegin(), beads.rend());
    std::vector<int> parts;
    for (std::size_t i = 0; i < beads.size(); ++i) {
        const int part = beads[i] + static_cast<int>(i) + 1;
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_P0(int n) {
    std::vector<Partition> out;
    for (auto& p : enumerate_partitions(2 * n))
        if (is_empty_two_core(p)) out.push_back(std::move(p));
    return out;
}

std::vector<Domino> canonical_tiling(const Partition& lambda) {
    if (!is_empty_two_core(lambda))
        throw invalid_argument("partition " + lambda.to_string() + " cannot be tiled by dominos");
    std::vector<int> rows = lambda.parts();
    std::vector<Domino> tiling;
    auto row_len = [&](int i) { return i < static_cast<int>(rows.size()) ? rows[i] : 0; };
    while (!rows.empty()) {
        bool removed = false;
        for (int i = static_cast<int>(rows.size()) - 1; i >= 0 && !removed; --i) {
            if (row_len(i) - 2 >= row_len(i + 1)) {
                tiling.push_back({i, row_len(i) - 2, false});
                rows[i] -= 2;
                removed = true;
            } else if (i > 0 && row_len(i - 1) == row_len(i) && row_len(i) - 1 >= row_len(i + 1)) {
                tiling.push_back({i - 1, row_len(i) - 1, true});
                rows[i - 1] -= 1;
                rows[i] -= 1;
                removed = true;
            }
        }
        if (!removed) throw invalid_argument("no removable domino in " + lambda.to_string());
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
    }
    std::reverse(tiling.begin(), tiling.end());
    return tiling;
}

// ---------------------------------------------------------------------------
// Class sizes

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::int64_t z_value(const Partition& rho) {
    std::map<int, int> mult;
    for (int p : rho.parts()) ++mult[p];
    std::int64_t z = 1;
    for (auto [part, m] : mult) {
        for (int k = 0; k < m; ++k) z *= part;
        z *= factorial(m);
    }
    return z;
}

std::int64_t z_value_B(const BiPartition& type) {
    return (std::int64_t{1} << (type.minus.length() + type.plus.length())) * z_value(type.minus) *
           z_value(type.plus);
}

}  // namespace descent

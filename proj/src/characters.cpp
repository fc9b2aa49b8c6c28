#include "descent/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace descent {

namespace {

// Bead positions and the parts of rho still to remove.
using BetaKey = std::pair<std::vector<int>, std::vector<int>>;

// Murnaghan-Nakayama on beta sets: removing a rim hook of length r moves a bead
// from b to b - r; the sign counts the beads jumped over.
std::int64_t mn_recurse(std::vector<int>& beads, const std::vector<int>& rho, std::size_t k,
                        std::map<BetaKey, std::int64_t>& memo) {
    if (k == rho.size()) return 1;
    BetaKey key{beads, std::vector<int>(rho.begin() + static_cast<std::ptrdiff_t>(k), rho.end())};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = rho[k];
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beads.size(); ++i) {
        const int b = beads[i];
        const int target = b - r;
        if (target < 0 || std::binary_search(beads.begin(), beads.end(), target)) continue;
        const auto between = std::count_if(beads.begin(), beads.end(), [&](int x) { return x > target && x < b; });
        std::vector<int> next = beads;
        next[i] = target;
        std::sort(next.begin(), next.end());
        total += (between % 2 ? -1 : 1) * mn_recurse(next, rho, k + 1, memo);
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::int64_t chi_with_memo(const Partition& lambda, const Partition& rho, std::map<BetaKey, std::int64_t>& memo) {
    if (lambda.size() != rho.size()) throw invalid_argument("chi: |lambda| != |rho|");
    const int len = lambda.length();
    std::vector<int> beads(len);
    for (int i = 0; i < len; ++i) beads[i] = lambda[i] + (len - 1 - i);
    std::sort(beads.begin(), beads.end());
    return mn_recurse(beads, rho.parts(), 0, memo);
}

std::int64_t psi_on_type(const BiPartition& index, const BiPartition& type,
                         const std::function<std::int64_t(const Partition&, const Partition&)>& chi_fn) {
    if (index.size() != type.size()) throw invalid_argument("psi_B: rank mismatch");
    // prod_{a in type.minus} (p_a(U) - p_a(V)) prod_{b in type.plus} (p_b(U) + p_b(V)),
    // expanded over which factors pick V; then p_rho(U) p_sigma(V) -> s_{index.plus}(U) s_{index.minus}(V).
    std::vector<std::pair<int, bool>> factors;
    for (int a : type.minus.parts()) factors.emplace_back(a, true);
    for (int b : type.plus.parts()) factors.emplace_back(b, false);
    const std::size_t m = factors.size();
    std::int64_t total = 0;
    for (std::uint32_t choice = 0; choice < (1u << m); ++choice) {
        std::vector<int> u, v;
        int sign = 1;
        for (std::size_t f = 0; f < m; ++f) {
            if (choice & (1u << f)) {
                v.push_back(factors[f].first);
                if (factors[f].second) sign = -sign;
            } else {
                u.push_back(factors[f].first);
            }
        }
        std::sort(u.rbegin(), u.rend());
        std::sort(v.rbegin(), v.rend());
        const Partition rho(std::move(u)), sigma(std::move(v));
        if (rho.size() != index.plus.size() || sigma.size() != index.minus.size()) continue;
        total += sign * chi_fn(index.plus, rho) * chi_fn(index.minus, sigma);
    }
    return total;
}

}  // namespace

std::int64_t chi(const Partition& lambda, const Partition& rho) {
    std::map<BetaKey, std::int64_t> memo;
    return chi_with_memo(lambda, rho, memo);
}

std::int64_t psi_B(const Partition& lambda, const BiPartition& type) {
    std::map<BetaKey, std::int64_t> memo;
    return psi_on_type(two_quotient(lambda), type,
                       [&](const Partition& l, const Partition& r) { return chi_with_memo(l, r, memo); });
}

std::int64_t psi_B(const Partition& lambda, const Partition& mu) { return psi_B(lambda, two_quotient(mu)); }

std::int64_t CharacterTable::group_order() const {
    return group == Group::Symmetric ? factorial(n) : (std::int64_t{1} << n) * factorial(n);
}

CharacterTable symmetric_character_table(int n) {
    CharacterTable t{Group::Symmetric, n, enumerate_partitions(n), enumerate_partitions(n), {}, {}};
    std::map<BetaKey, std::int64_t> memo;
    for (const auto& rho : t.columns) t.class_sizes.push_back(factorial(n) / z_value(rho));
    for (const auto& lambda : t.rows) {
        std::vector<std::int64_t> row;
        for (const auto& rho : t.columns) row.push_back(chi_with_memo(lambda, rho, memo));
        t.values.push_back(std::move(row));
    }
    return t;
}

CharacterTable hyperoctahedral_character_table(int n) {
    CharacterTable t{Group::Hyperoctahedral, n, enumerate_P0(n), enumerate_P0(n), {}, {}};
    std::map<BetaKey, std::int64_t> memo;
    auto chi_fn = [&](const Partition& l, const Partition& r) { return chi_with_memo(l, r, memo); };
    const std::int64_t order = t.group_order();
    for (const auto& mu : t.columns) t.class_sizes.push_back(order / z_value_B(two_quotient(mu)));
    for (const auto& lambda : t.rows) {
        const auto index = two_quotient(lambda);
        std::vector<std::int64_t> row;
        for (const auto& mu : t.columns) row.push_back(psi_on_type(index, two_quotient(mu), chi_fn));
        t.values.push_back(std::move(row));
    }
    return t;
}

namespace {

std::int64_t triple_class_sum(const CharacterTable& t, std::size_t a, std::size_t b, std::size_t c) {
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < t.columns.size(); ++k)
        sum += t.class_sizes[k] * t.values[a][k] * t.values[b][k] * t.values[c][k];
    const std::int64_t order = t.group_order();
    if (sum % order != 0) throw std::logic_error("Kronecker coefficient is not integral");
    if (sum < 0) throw std::logic_error("Kronecker coefficient is negative");
    return sum / order;
}

std::size_t row_index(const CharacterTable& t, const Partition& p) {
    auto it = std::find(t.rows.begin(), t.rows.end(), p);
    if (it == t.rows.end()) throw invalid_argument("no character indexed by " + p.to_string());
    return static_cast<std::size_t>(it - t.rows.begin());
}

}  // namespace

std::int64_t kronecker_g(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() || mu.size() != nu.size()) throw invalid_argument("kronecker_g: size mismatch");
    const auto t = symmetric_character_table(lambda.size());
    return triple_class_sum(t, row_index(t, lambda), row_index(t, mu), row_index(t, nu));
}

std::int64_t kronecker_gB(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() || mu.size() != nu.size()) throw invalid_argument("kronecker_gB: size mismatch");
    const auto t = hyperoctahedral_character_table(lambda.size() / 2);
    return triple_class_sum(t, row_index(t, lambda), row_index(t, mu), row_index(t, nu));
}

KroneckerTable kronecker_table(const CharacterTable& table) {
    KroneckerTable out;
    for (std::size_t a = 0; a < table.rows.size(); ++a)
        for (std::size_t b = 0; b < table.rows.size(); ++b)
            for (std::size_t c = 0; c < table.rows.size(); ++c)
                out[{table.rows[a], table.rows[b], table.rows[c]}] = triple_class_sum(table, a, b, c);
    return out;
}

}  // namespace descent

#include "descent/descent_a.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "group_convolution.hpp"

namespace descent {

IndexSubset descent_set(const Permutation& pi) { return pi.descent_set(); }

ConstantTable a_constants(int n) {
    return detail::class_convolution(detail::GroupData::symmetric(n), Flavor::A);
}

ConstantTable cumulative_a(const ConstantTable& a) {
    const std::uint32_t c = a.subset_count();
    ConstantTable out(a.rank(), a.variant(), a.flavor());
    for (std::uint32_t i = 0; i < c; ++i)
        for (std::uint32_t j = 0; j < c; ++j)
            for (std::uint32_t k = 0; k < c; ++k) out.at(i, j, k) = a.at(i, j, k);
    // Subset-sum (zeta) transform in the first two slots.
    for (std::uint32_t bit = 1; bit < c; bit <<= 1)
        for (std::uint32_t i = 0; i < c; ++i)
            if (i & bit)
                for (std::uint32_t j = 0; j < c; ++j)
                    for (std::uint32_t k = 0; k < c; ++k) out.at(i, j, k) += out.at(i ^ bit, j, k);
    for (std::uint32_t bit = 1; bit < c; bit <<= 1)
        for (std::uint32_t j = 0; j < c; ++j)
            if (j & bit)
                for (std::uint32_t i = 0; i < c; ++i)
                    for (std::uint32_t k = 0; k < c; ++k) out.at(i, j, k) += out.at(i, j ^ bit, k);
    return out;
}

ConstantTable b_constants(const ConstantTable& a) {
    if (a.flavor() != Flavor::A) throw invalid_argument("b_constants expects an a table");
    const auto cum = cumulative_a(a);
    const std::uint32_t c = a.subset_count();
    const std::uint32_t full = c - 1;
    ConstantTable b(a.rank(), a.variant(), Flavor::B);
    for (std::uint32_t i = 0; i < c; ++i)
        for (std::uint32_t j = 0; j < c; ++j)
            for (std::uint32_t k = 0; k < c; ++k) {
                std::int64_t v = 0;
                const std::uint32_t free = full & ~k;
                for (std::uint32_t extra = free;; extra = (extra - 1) & free) {
                    v += (std::popcount(extra) % 2 ? -1 : 1) * cum.at(i, j, k | extra);
                    if (extra == 0) break;
                }
                if (v < 0) throw std::logic_error("negative b structure constant");
                b.at(i, j, k) = v;
            }
    return b;
}

ConstantTable b_constants(int n) { return b_constants(a_constants(n)); }

ConstantTable b_constants_direct(int n) {
    return detail::containment_convolution(detail::GroupData::symmetric(n));
}

void for_each_matrix(const std::vector<int>& row_sums, const std::vector<int>& col_sums,
                     const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    const std::size_t rows = row_sums.size(), cols = col_sums.size();
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
    std::vector<int> row_left = row_sums, col_left = col_sums;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t j) {
        if (i == rows) {
            if (std::all_of(col_left.begin(), col_left.end(), [](int v) { return v == 0; })) visit(m);
            return;
        }
        if (j + 1 == cols) {
            // Last cell of the row takes what is left.
            const int v = row_left[i];
            if (v > col_left[j]) return;
            m[i][j] = v;
            row_left[i] -= v;
            col_left[j] -= v;
            fill(i + 1, 0);
            row_left[i] += v;
            col_left[j] += v;
            return;
        }
        for (int v = std::min(row_left[i], col_left[j]); v >= 0; --v) {
            m[i][j] = v;
            row_left[i] -= v;
            col_left[j] -= v;
            fill(i, j + 1);
            row_left[i] += v;
            col_left[j] += v;
        }
    };
    if (cols == 0) {
        if (std::all_of(row_sums.begin(), row_sums.end(), [](int v) { return v == 0; })) visit(m);
        return;
    }
    fill(0, 0);
}

namespace {

IndexSubset reading_word_subset(const std::vector<std::vector<int>>& m) {
    std::vector<int> word;
    for (const auto& row : m)
        for (int v : row)
            if (v) word.push_back(v);
    return set_of_comp(Composition(std::move(word)));
}

}  // namespace

std::int64_t gr_matrix_count(const IndexSubset& i, const IndexSubset& j, const IndexSubset& k) {
    if (i.rank() != j.rank() || j.rank() != k.rank()) throw invalid_argument("gr_matrix_count: rank mismatch");
    std::int64_t count = 0;
    for_each_matrix(comp_of_set(i).parts(), comp_of_set(j).parts(), [&](const auto& m) {
        if (reading_word_subset(m) == k) ++count;
    });
    return count;
}

ConstantTable gr_matrix_table(int n) {
    ConstantTable table(n, SubsetVariant::TypeA, Flavor::B);
    for (const auto& i : IndexSubset::all(n, SubsetVariant::TypeA))
        for (const auto& j : IndexSubset::all(n, SubsetVariant::TypeA))
            for_each_matrix(comp_of_set(i).parts(), comp_of_set(j).parts(),
                            [&](const auto& m) { ++table.at(i.mask(), j.mask(), reading_word_subset(m).mask()); });
    return table;
}

std::int64_t m_matrix(const Composition& r, const Composition& c) {
    if (r.size() != c.size()) return 0;
    std::int64_t count = 0;
    for_each_matrix(r.parts(), c.parts(), [&](const auto&) { ++count; });
    return count;
}

std::int64_t m_3d(const Composition& p, const Composition& q, const Composition& r) {
    if (p.size() != q.size() || q.size() != r.size()) return 0;
    std::vector<int> pl = p.parts(), ql = q.parts(), rl = r.parts();
    const std::size_t ni = rl.size(), nj = ql.size(), nk = pl.size();
    std::int64_t count = 0;
    const std::size_t cells = ni * nj * nk;
    std::function<void(std::size_t)> fill = [&](std::size_t cell) {
        if (cell == cells) {
            if (std::all_of(pl.begin(), pl.end(), [](int v) { return v == 0; }) &&
                std::all_of(ql.begin(), ql.end(), [](int v) { return v == 0; }) &&
                std::all_of(rl.begin(), rl.end(), [](int v) { return v == 0; }))
                ++count;
            return;
        }
        const std::size_t i = cell / (nj * nk), j = (cell / nk) % nj, k = cell % nk;
        // The last cell of each i-slab must exhaust r_i.
        const bool last_in_slab = j + 1 == nj && k + 1 == nk;
        const int hi = std::min({rl[i], ql[j], pl[k]});
        const int lo = last_in_slab ? rl[i] : 0;
        for (int v = lo; v <= hi; ++v) {
            rl[i] -= v;
            ql[j] -= v;
            pl[k] -= v;
            fill(cell + 1);
            rl[i] += v;
            ql[j] += v;
            pl[k] += v;
        }
    };
    fill(0);
    return count;
}

std::int64_t triple_a_empty(const IndexSubset& i, const IndexSubset& j, const IndexSubset& k) {
    if (i.rank() != j.rank() || j.rank() != k.rank()) throw invalid_argument("triple_a_empty: rank mismatch");
    for (const auto* s : {&i, &j, &k})
        if (s->variant() != SubsetVariant::TypeA) throw invalid_argument("triple_a_empty expects type A subsets");
    const auto g = detail::GroupData::symmetric(i.rank());
    return detail::identity_triple_count(g, i.mask(), j.mask(), k.mask());
}

ConstantTable triple_a_table(int n) {
    return detail::identity_triples(detail::GroupData::symmetric(n), Flavor::ATriple);
}

}  // namespace descent

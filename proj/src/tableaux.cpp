#include "descent/tableaux.hpp"

#include <algorithm>

namespace descent {

namespace {

Partition shape_of(const TableauRows& rows) {
    std::vector<int> parts;
    for (const auto& r : rows)
        if (!r.empty()) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

void check_rows(const TableauRows& rows, bool strict_rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j && (strict_rows ? rows[i][j] <= rows[i][j - 1] : rows[i][j] < rows[i][j - 1]))
                throw invalid_argument("tableau row condition violated");
            if (i && rows[i][j] <= rows[i - 1][j]) throw invalid_argument("tableau column condition violated");
        }
    }
}

}  // namespace

StandardYoungTableau::StandardYoungTableau(TableauRows rows) : rows_(std::move(rows)), shape_(shape_of(rows_)) {
    check_rows(rows_, true);
    std::vector<bool> seen(shape_.size() + 1, false);
    for (const auto& r : rows_)
        for (int v : r) {
            if (v < 1 || v > shape_.size() || seen[v]) throw invalid_argument("standard tableau must use 1..n once");
            seen[v] = true;
        }
}

IndexSubset StandardYoungTableau::descent_set() const {
    const int n = size();
    std::vector<int> row_of(n + 1, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (int v : rows_[i]) row_of[v] = static_cast<int>(i);
    std::vector<int> d;
    for (int i = 1; i < n; ++i)
        if (row_of[i + 1] > row_of[i]) d.push_back(i);
    return IndexSubset(n, std::move(d), SubsetVariant::TypeA);
}

SemistandardYoungTableau::SemistandardYoungTableau(TableauRows rows)
    : rows_(std::move(rows)), shape_(shape_of(rows_)) {
    check_rows(rows_, false);
}

std::vector<int> SemistandardYoungTableau::weight() const {
    std::vector<int> mu;
    for (const auto& r : rows_)
        for (int v : r) {
            if (v < 0) throw invalid_argument("weight of a tableau with negative entries");
            if (static_cast<int>(mu.size()) <= v) mu.resize(v + 1, 0);
            ++mu[v];
        }
    return mu;
}

std::vector<StandardYoungTableau> enumerate_SYT(const Partition& lambda) {
    // Grow by placing 1, 2, ..., n in addable corners.
    const int n = lambda.size();
    std::vector<StandardYoungTableau> out;
    TableauRows rows(lambda.length());
    std::function<void(int)> grow = [&](int next) {
        if (next > n) {
            out.emplace_back(rows);
            return;
        }
        for (int i = 0; i < lambda.length(); ++i) {
            const auto len = static_cast<int>(rows[i].size());
            if (len < lambda[i] && (i == 0 || static_cast<int>(rows[i - 1].size()) > len)) {
                rows[i].push_back(next);
                grow(next + 1);
                rows[i].pop_back();
            }
        }
    };
    grow(1);
    return out;
}

IndexSubset syt_descent_set(const StandardYoungTableau& t) { return t.descent_set(); }

void for_each_ssyt(const Partition& lambda, int lo, int hi, const std::function<void(const TableauRows&)>& visit) {
    TableauRows rows(lambda.length());
    for (int i = 0; i < lambda.length(); ++i) rows[i].assign(lambda[i], 0);
    // Row-major filling; cell (i, j) must be >= its left neighbour and > the cell above.
    std::function<void(int, int)> fill = [&](int i, int j) {
        if (i == lambda.length()) {
            visit(rows);
            return;
        }
        if (j == lambda[i]) {
            fill(i + 1, 0);
            return;
        }
        int min_v = lo;
        if (j > 0) min_v = std::max(min_v, rows[i][j - 1]);
        if (i > 0) min_v = std::max(min_v, rows[i - 1][j] + 1);
        // Entries below must still fit: column strictness leaves (length - i - 1) larger values.
        int rows_below = 0;
        while (i + 1 + rows_below < lambda.length() && lambda[i + 1 + rows_below] > j) ++rows_below;
        for (int v = min_v; v + rows_below <= hi; ++v) {
            rows[i][j] = v;
            fill(i, j + 1);
        }
    };
    fill(0, 0);
}

std::vector<SemistandardYoungTableau> enumerate_SSYT(const Partition& lambda, int lo, int hi) {
    std::vector<SemistandardYoungTableau> out;
    for_each_ssyt(lambda, lo, hi, [&](const TableauRows& rows) { out.emplace_back(rows); });
    return out;
}

DTable d_table(int n) {
    if (n < 1) throw invalid_argument("d_table requires n >= 1");
    DTable table;
    for (const auto& lambda : enumerate_partitions(n)) {
        auto& row = table[lambda];
        for (const auto& t : enumerate_SYT(lambda)) ++row[t.descent_set()];
    }
    return table;
}

std::int64_t d_entry(const DTable& table, const Partition& lambda, const IndexSubset& subset) {
    auto it = table.find(lambda);
    if (it == table.end()) return 0;
    auto jt = it->second.find(subset);
    return jt == it->second.end() ? 0 : jt->second;
}

std::int64_t kostka(const Partition& lambda, const Composition& mu) {
    if (lambda.size() != mu.size()) throw invalid_argument("kostka: |lambda| != |mu|");
    // Fill horizontal strips of 1s, 2s, ... and count the chains.
    std::int64_t count = 0;
    std::vector<int> shape(lambda.length(), 0);
    std::function<void(std::size_t)> strip = [&](std::size_t k) {
        if (k == mu.parts().size()) {
            ++count;
            return;
        }
        // Distribute mu_k boxes over rows so that the result is a horizontal strip inside lambda.
        std::vector<int> next = shape;
        std::function<void(int, int)> place = [&](int row, int left) {
            if (row == lambda.length()) {
                if (left == 0) {
                    auto saved = shape;
                    shape = next;
                    strip(k + 1);
                    shape = saved;
                }
                return;
            }
            // Row may grow up to lambda_row and at most up to the old length of the row above.
            const int cap = std::min(lambda[row], row == 0 ? lambda[0] : shape[row - 1]);
            for (int add = 0; add <= std::min(left, cap - shape[row]); ++add) {
                next[row] = shape[row] + add;
                place(row + 1, left - add);
            }
            next[row] = shape[row];
        };
        place(0, mu.parts()[k]);
    };
    strip(0);
    return count;
}

}  // namespace descent

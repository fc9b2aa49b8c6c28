#include "descent/domino.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace descent {

namespace {

int row_len(const std::vector<int>& rows, int i) {
    return i >= 0 && i < static_cast<int>(rows.size()) ? rows[i] : 0;
}

// Dominos that can be removed from the rim of `rows` leaving a partition.
std::vector<Domino> removable_dominos(const std::vector<int>& rows) {
    std::vector<Domino> out;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (row_len(rows, i) - 2 >= row_len(rows, i + 1)) out.push_back({i, rows[i] - 2, false});
        if (row_len(rows, i) > 0 && row_len(rows, i) == row_len(rows, i + 1) &&
            row_len(rows, i + 1) - 1 >= row_len(rows, i + 2))
            out.push_back({i, rows[i] - 1, true});
    }
    return out;
}

void remove_domino(std::vector<int>& rows, const Domino& d) {
    if (d.vertical) {
        --rows[d.row];
        --rows[d.row + 1];
    } else {
        rows[d.row] -= 2;
    }
}

void add_domino(std::vector<int>& rows, const Domino& d) {
    if (static_cast<int>(rows.size()) <= d.row2()) rows.resize(d.row2() + 1, 0);
    if (d.vertical) {
        ++rows[d.row];
        ++rows[d.row + 1];
    } else {
        rows[d.row] += 2;
    }
}

Partition to_partition(std::vector<int> rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(std::move(rows));
}

}  // namespace

// ---------------------------------------------------------------------------
// DominoTableau

DominoTableau::DominoTableau(Partition shape, std::vector<Domino> dominos, std::vector<int> labels, DominoMode mode)
    : shape_(std::move(shape)), dominos_(std::move(dominos)), labels_(std::move(labels)), mode_(mode) {
    if (dominos_.size() != labels_.size()) throw invalid_argument("one label per domino required");
    if (2 * static_cast<int>(dominos_.size()) != shape_.size())
        throw invalid_argument("dominos do not cover shape " + shape_.to_string());
    const auto ids = pairing_grid();
    for (const auto& row : ids)
        for (int id : row)
            if (id < 0) throw invalid_argument("dominos do not tile shape " + shape_.to_string());
    const auto grid = label_grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            if (j && grid[i][j] < grid[i][j - 1]) throw invalid_argument("domino labels decrease along a row");
            if (i && ids[i][j] != ids[i - 1][j] && grid[i][j] <= grid[i - 1][j])
                throw invalid_argument("domino labels do not increase down a column");
        }
    }
    if (mode_ == DominoMode::Standard) {
        std::vector<int> sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k)
            if (sorted[k] != static_cast<int>(k) + 1) throw invalid_argument("standard domino tableau must use 1..n once");
    } else {
        for (int l : labels_)
            if (l < 0) throw invalid_argument("domino labels must be non-negative");
        if (top_left_vertical() && grid[0][0] == 0) throw invalid_argument("top-left vertical domino labelled 0");
    }
}

TableauRows DominoTableau::pairing_grid() const {
    TableauRows ids(shape_.length());
    for (int i = 0; i < shape_.length(); ++i) ids[i].assign(shape_[i], -1);
    auto mark = [&](int r, int c, int id) {
        if (r >= shape_.length() || c >= shape_[r] || ids[r][c] != -1)
            throw invalid_argument("domino outside the shape or overlapping");
        ids[r][c] = id;
    };
    for (std::size_t k = 0; k < dominos_.size(); ++k) {
        const auto& d = dominos_[k];
        if (d.row < 0 || d.col < 0) throw invalid_argument("domino outside the shape");
        mark(d.row, d.col, static_cast<int>(k));
        mark(d.row2(), d.col2(), static_cast<int>(k));
    }
    return ids;
}

TableauRows DominoTableau::label_grid() const {
    TableauRows grid(shape_.length());
    for (int i = 0; i < shape_.length(); ++i) grid[i].assign(shape_[i], -1);
    for (std::size_t k = 0; k < dominos_.size(); ++k) {
        const auto& d = dominos_[k];
        grid[d.row][d.col] = labels_[k];
        grid[d.row2()][d.col2()] = labels_[k];
    }
    return grid;
}

std::vector<int> DominoTableau::weight() const {
    std::vector<int> mu;
    for (int l : labels_) {
        if (static_cast<int>(mu.size()) <= l) mu.resize(l + 1, 0);
        ++mu[l];
    }
    return mu;
}

bool DominoTableau::top_left_vertical() const {
    for (const auto& d : dominos_)
        if (d.row == 0 && d.col == 0) return d.vertical;
    return false;
}

IndexSubset DominoTableau::descent_set() const {
    if (mode_ != DominoMode::Standard) throw invalid_argument("descent set of a non-standard domino tableau");
    const int n = size();
    std::vector<const Domino*> by_label(n + 1, nullptr);
    for (std::size_t k = 0; k < dominos_.size(); ++k) by_label[labels_[k]] = &dominos_[k];
    std::vector<int> d;
    if (n > 0 && by_label[1]->vertical) d.push_back(0);
    for (int i = 1; i < n; ++i)
        if (by_label[i + 1]->row > by_label[i]->row2()) d.push_back(i);
    return IndexSubset(n, std::move(d), SubsetVariant::TypeB);
}

// ---------------------------------------------------------------------------
// Standard domino tableaux

std::vector<DominoTableau> enumerate_SDT(const Partition& lambda) {
    if (!is_empty_two_core(lambda))
        throw invalid_argument("shape " + lambda.to_string() + " cannot be tiled by dominos");
    const int n = lambda.size() / 2;
    std::vector<DominoTableau> out;
    std::vector<int> rows = lambda.parts();
    std::vector<Domino> dominos(n);
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::function<void(int)> peel = [&](int label) {
        if (label == 0) {
            out.emplace_back(lambda, dominos, labels, DominoMode::Standard);
            return;
        }
        for (const auto& d : removable_dominos(rows)) {
            dominos[label - 1] = d;
            remove_domino(rows, d);
            peel(label - 1);
            add_domino(rows, d);
        }
    };
    peel(n);
    return out;
}

IndexSubset sdt_descent_set(const DominoTableau& t) { return t.descent_set(); }

DTable dB_table(int n) {
    if (n < 1) throw invalid_argument("dB_table requires n >= 1");
    DTable table;
    for (const auto& lambda : enumerate_P0(n)) {
        auto& row = table[lambda];
        for (const auto& t : enumerate_SDT(lambda)) ++row[t.descent_set()];
    }
    return table;
}

// ---------------------------------------------------------------------------
// Semistandard domino tableaux

namespace {

// Tilings of the skew shape outer/inner by dominos forming a strip: no two
// different dominos of the strip are vertically adjacent.
void for_each_strip_tiling(const std::vector<int>& inner, const std::vector<int>& outer,
                           const std::function<void(const std::vector<Domino>&)>& visit) {
    const int len = static_cast<int>(outer.size());
    auto in_skew = [&](int r, int c) { return r >= 0 && r < len && c >= row_len(inner, r) && c < outer[r]; };
    std::vector<std::vector<bool>> covered(len);
    for (int r = 0; r < len; ++r) covered[r].assign(outer[r], false);
    std::vector<Domino> tiling;
    std::function<void(int, int)> next = [&](int r, int c) {
        while (r < len && (c >= outer[r] || !in_skew(r, c) || covered[r][c])) {
            if (c >= outer[r]) {
                ++r;
                c = 0;
            } else {
                ++c;
            }
        }
        if (r == len) {
            visit(tiling);
            return;
        }
        // Horizontal: nothing of the strip directly above or below either cell.
        if (in_skew(r, c + 1) && !covered[r][c + 1] && !in_skew(r - 1, c) && !in_skew(r - 1, c + 1) &&
            !in_skew(r + 1, c) && !in_skew(r + 1, c + 1)) {
            covered[r][c] = covered[r][c + 1] = true;
            tiling.push_back({r, c, false});
            next(r, c + 2);
            tiling.pop_back();
            covered[r][c] = covered[r][c + 1] = false;
        }
        if (in_skew(r + 1, c) && !covered[r + 1][c] && !in_skew(r - 1, c) && !in_skew(r + 2, c)) {
            covered[r][c] = covered[r + 1][c] = true;
            tiling.push_back({r, c, true});
            next(r, c + 1);
            tiling.pop_back();
            covered[r][c] = covered[r + 1][c] = false;
        }
    };
    next(0, 0);
}

}  // namespace

void for_each_SSDT(const Partition& lambda, int max_label,
                   const std::function<void(const std::vector<Domino>&, const std::vector<int>&)>& visit) {
    if (!is_empty_two_core(lambda))
        throw invalid_argument("shape " + lambda.to_string() + " cannot be tiled by dominos");
    const int len = lambda.length();
    std::vector<int> cur(len, 0);
    std::vector<Domino> dominos;
    std::vector<int> labels;
    std::function<void(int)> layer = [&](int label) {
        if (label > max_label) {
            if (cur == lambda.parts()) visit(dominos, labels);
            return;
        }
        // Choose the next shape mu with cur <= mu <= lambda row by row, then tile mu/cur.
        std::vector<int> mu(len, 0);
        std::function<void(int, int)> choose = [&](int r, int added) {
            if (r == len) {
                if (added % 2) return;
                if (added == 0) {
                    layer(label + 1);
                    return;
                }
                const auto inner = cur;
                for_each_strip_tiling(inner, mu, [&](const std::vector<Domino>& strip) {
                    if (label == 0)
                        for (const auto& d : strip)
                            if (d.row == 0 && d.col == 0 && d.vertical) return;
                    for (const auto& d : strip) {
                        dominos.push_back(d);
                        labels.push_back(label);
                    }
                    cur = mu;
                    layer(label + 1);
                    cur = inner;
                    dominos.resize(dominos.size() - strip.size());
                    labels.resize(labels.size() - strip.size());
                });
                return;
            }
            const int hi = std::min(lambda[r], r == 0 ? lambda[0] : mu[r - 1]);
            for (int v = cur[r]; v <= hi; ++v) {
                mu[r] = v;
                choose(r + 1, added + v - cur[r]);
            }
        };
        choose(0, 0);
    };
    layer(0);
}

std::vector<DominoTableau> enumerate_SSDT(const Partition& lambda, int max_label) {
    std::vector<DominoTableau> out;
    for_each_SSDT(lambda, max_label, [&](const std::vector<Domino>& d, const std::vector<int>& l) {
        out.emplace_back(lambda, d, l, DominoMode::Semistandard);
    });
    return out;
}

namespace {

// Domino indices in standardization order: by label, then left to right.
std::vector<std::size_t> standard_order(const DominoTableau& t) {
    std::vector<std::size_t> order(t.dominos().size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (t.labels()[a] != t.labels()[b]) return t.labels()[a] < t.labels()[b];
        return t.dominos()[a].col < t.dominos()[b].col;
    });
    return order;
}

}  // namespace

DominoTableau standardize(const DominoTableau& t) {
    const auto order = standard_order(t);
    std::vector<int> labels(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) labels[order[k]] = static_cast<int>(k) + 1;
    return DominoTableau(t.shape(), t.dominos(), std::move(labels), DominoMode::Standard);
}

IndexSubset S_of(const DominoTableau& t) {
    std::vector<int> elements;
    if (t.top_left_vertical()) elements.push_back(0);
    int acc = 0;
    const auto mu = t.weight();
    const int n = t.size();
    for (int m : mu) {
        if (m == 0) continue;
        acc += m;
        if (acc < n) elements.push_back(acc);
    }
    return IndexSubset(n, std::move(elements), SubsetVariant::TypeB);
}

std::optional<DominoTableau> destandardize(const DominoTableau& t, const std::vector<int>& weight) {
    if (t.mode() != DominoMode::Standard) throw invalid_argument("destandardize expects a standard tableau");
    if (std::accumulate(weight.begin(), weight.end(), 0) != t.size())
        throw invalid_argument("weight does not sum to the number of dominos");
    // Standard label s receives the value k with mu_0 + ... + mu_{k-1} < s <= mu_0 + ... + mu_k.
    std::vector<int> value_of(t.size() + 1);
    int s = 1;
    for (std::size_t k = 0; k < weight.size(); ++k)
        for (int m = 0; m < weight[k]; ++m) value_of[s++] = static_cast<int>(k);
    std::vector<int> labels(t.size());
    for (int k = 0; k < t.size(); ++k) labels[k] = value_of[t.labels()[k]];
    try {
        DominoTableau out(t.shape(), t.dominos(), std::move(labels), DominoMode::Semistandard);
        if (!(standardize(out) == t)) return std::nullopt;
        return out;
    } catch (const invalid_argument&) {
        return std::nullopt;
    }
}

std::pair<SemistandardYoungTableau, SemistandardYoungTableau> tableau_two_quotient(const DominoTableau& t) {
    const auto order = standard_order(t);
    std::vector<int> rows;
    TableauRows minus_rows, plus_rows;
    BiPartition before = two_quotient(Partition());
    for (std::size_t idx : order) {
        const auto& d = t.dominos()[idx];
        add_domino(rows, d);
        const BiPartition after = two_quotient(to_partition(rows));
        // Exactly one component gains one cell; the label goes at the end of that row.
        auto grow = [&](const Partition& old_p, const Partition& new_p, TableauRows& target) {
            for (int r = 0; r < new_p.length(); ++r) {
                if (new_p[r] != old_p[r]) {
                    if (static_cast<int>(target.size()) <= r) target.resize(r + 1);
                    target[r].push_back(t.labels()[idx]);
                    return;
                }
            }
            throw std::logic_error("2-quotient did not grow");
        };
        const bool minus_grew = after.minus.size() > before.minus.size();
        if (minus_grew != d.is_minus()) throw std::logic_error("sign rule disagrees with the abacus 2-quotient");
        if (minus_grew)
            grow(before.minus, after.minus, minus_rows);
        else
            grow(before.plus, after.plus, plus_rows);
        before = after;
    }
    return {SemistandardYoungTableau(minus_rows), SemistandardYoungTableau(plus_rows)};
}

}  // namespace descent

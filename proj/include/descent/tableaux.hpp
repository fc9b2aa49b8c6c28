#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "descent/combinatorics.hpp"

namespace descent {

using TableauRows = std::vector<std::vector<int>>;

/// Filling of a Young diagram by 1..n, strictly increasing along rows and down columns.
class StandardYoungTableau {
public:
    explicit StandardYoungTableau(TableauRows rows);

    const TableauRows& rows() const { return rows_; }
    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    /// {i : i+1 lies in a strictly lower row than i}.
    IndexSubset descent_set() const;

private:
    TableauRows rows_;
    Partition shape_;
};

/// Rows weakly increasing, columns strictly increasing. Entries are arbitrary
/// integers here (0 is allowed: the plus part of a domino 2-quotient uses it).
class SemistandardYoungTableau {
public:
    explicit SemistandardYoungTableau(TableauRows rows);

    const TableauRows& rows() const { return rows_; }
    const Partition& shape() const { return shape_; }
    /// mu_k = number of entries equal to k, for k = 0..max entry.
    std::vector<int> weight() const;

    friend auto operator<=>(const SemistandardYoungTableau& a, const SemistandardYoungTableau& b) {
        return a.rows_ <=> b.rows_;
    }
    friend bool operator==(const SemistandardYoungTableau& a, const SemistandardYoungTableau& b) {
        return a.rows_ == b.rows_;
    }

private:
    TableauRows rows_;
    Partition shape_;
};

std::vector<StandardYoungTableau> enumerate_SYT(const Partition& lambda);
IndexSubset syt_descent_set(const StandardYoungTableau& t);

/// Calls visit for every SSYT of shape lambda with entries in [lo, hi].
void for_each_ssyt(const Partition& lambda, int lo, int hi, const std::function<void(const TableauRows&)>& visit);
std::vector<SemistandardYoungTableau> enumerate_SSYT(const Partition& lambda, int lo, int hi);

/// (lambda, I) -> d_{lambda I}; zero entries are omitted.
using DTable = std::map<Partition, std::map<IndexSubset, std::int64_t>>;
DTable d_table(int n);
std::int64_t d_entry(const DTable& table, const Partition& lambda, const IndexSubset& subset);

/// Number of SSYT of shape lambda and type mu (mu_i entries equal to i).
std::int64_t kostka(const Partition& lambda, const Composition& mu);

}  // namespace descent

#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "descent/combinatorics.hpp"
#include "descent/permutation.hpp"

using namespace descent;

namespace {

// Partition count by the standard recurrence on the largest part, used as an oracle.
std::int64_t partition_count(int n, int max_part) {
    if (n == 0) return 1;
    std::int64_t total = 0;
    for (int k = std::min(n, max_part); k >= 1; --k) total += partition_count(n - k, k);
    return total;
}

}  // namespace

TEST_CASE("set_of_comp and comp_of_set") {
    CHECK(set_of_comp(Composition({2, 3, 1})) == IndexSubset(6, {2, 5}));
    CHECK(set_of_comp(Composition({6})) == IndexSubset(6, {}));
    CHECK(set_of_comp(Composition({1, 1, 1})) == IndexSubset(3, {1, 2}));
    CHECK(comp_of_set(IndexSubset(6, {2, 5})) == Composition({2, 3, 1}));
    CHECK(comp_of_set(IndexSubset(6, {})) == Composition({6}));
    CHECK_THROWS_AS(set_of_comp(Composition({2, 0, 1}, true)), invalid_argument);
    CHECK_THROWS_AS(Composition({2, 0, 1}), invalid_argument);

    for (int n = 1; n <= 10; ++n) {
        for (const auto& s : IndexSubset::all(n, SubsetVariant::TypeA)) CHECK(set_of_comp(comp_of_set(s)) == s);
        for (const auto& c : enumerate_compositions(n)) CHECK(comp_of_set(set_of_comp(c)) == c);
    }
    for (int n = 1; n <= 12; ++n) {
        CHECK(IndexSubset::count(n, SubsetVariant::TypeA) == (1u << (n - 1)));
        CHECK(enumerate_compositions(n).size() == (1u << (n - 1)));
    }
}

TEST_CASE("IndexSubset encodings") {
    const IndexSubset b(7, {0, 3, 5, 6}, SubsetVariant::TypeB);
    CHECK(b.to_string() == "{0,3,5,6}");
    CHECK(b.contains(0));
    CHECK(b.cardinality() == 4);
    CHECK(IndexSubset(3, {}).to_string() == "{}");
    CHECK_THROWS_AS(IndexSubset(3, {0}), invalid_argument);
    CHECK_THROWS_AS(IndexSubset(3, {3}), invalid_argument);
    CHECK_THROWS_AS(IndexSubset(3, {1, 1}), invalid_argument);
    CHECK(IndexSubset(4, {3, 1}) == IndexSubset(4, {1, 3}));
    CHECK(IndexSubset::count(3, SubsetVariant::TypeB) == 8u);
    const auto all = IndexSubset::all(3, SubsetVariant::TypeB);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].mask() == i);
}

TEST_CASE("partitions") {
    CHECK(Partition({5, 5, 4, 1, 1}).to_string() == "[5,5,4,1,1]");
    CHECK(Partition({3, 1}).transpose() == Partition({2, 1, 1}));
    CHECK(Partition({4}).transpose() == Partition({1, 1, 1, 1}));
    CHECK_THROWS_AS(Partition({1, 2}), invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), invalid_argument);

    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0].empty());
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(10).size() == 42);
    for (int n = 0; n <= 12; ++n) CHECK(enumerate_partitions(n).size() == static_cast<std::size_t>(partition_count(n, n)));

    const auto p5 = enumerate_partitions(5);
    CHECK(p5.front() == Partition({5}));
    CHECK(p5.back() == Partition({1, 1, 1, 1, 1}));
    for (std::size_t i = 1; i < p5.size(); ++i) CHECK(p5[i - 1].parts() > p5[i].parts());

    for (int n = 0; n <= 8; ++n)
        for (const auto& l : enumerate_partitions(n)) {
            CHECK(l.transpose().transpose() == l);
            CHECK(l.transpose().size() == l.size());
        }
}

TEST_CASE("two_quotient on small shapes") {
    CHECK(two_quotient(Partition({2})) == BiPartition{Partition(), Partition({1})});
    CHECK(two_quotient(Partition({1, 1})) == BiPartition{Partition({1}), Partition()});
    CHECK(two_quotient(Partition({2, 2})) == BiPartition{Partition({1}), Partition({1})});
    CHECK(two_quotient(Partition({4})) == BiPartition{Partition(), Partition({2})});
    CHECK(two_quotient(Partition({1, 1, 1, 1})) == BiPartition{Partition({1, 1}), Partition()});
    CHECK_FALSE(is_empty_two_core(Partition({3, 2, 1})));
    CHECK_FALSE(is_empty_two_core(Partition({1})));
    CHECK_THROWS_AS(two_quotient(Partition({3, 2, 1})), invalid_argument);
    CHECK(BiPartition{Partition({1}), Partition({2})}.to_string() == "([1],[2])");
}

TEST_CASE("P0 enumeration and the 2-quotient bijection") {
    CHECK(enumerate_P0(0).size() == 1);
    CHECK(enumerate_P0(1) == std::vector<Partition>{Partition({2}), Partition({1, 1})});
    CHECK(enumerate_P0(2).size() == 5);
    const auto p3 = enumerate_P0(3);
    CHECK(std::find(p3.begin(), p3.end(), Partition({3, 2, 1})) == p3.end());

    for (int n = 0; n <= 8; ++n) {
        std::int64_t expected = 0;
        for (int k = 0; k <= n; ++k) expected += partition_count(k, k) * partition_count(n - k, n - k);
        CHECK(static_cast<std::int64_t>(enumerate_P0(n).size()) == expected);
    }
    for (int n = 0; n <= 6; ++n) {
        std::set<BiPartition> seen;
        for (const auto& l : enumerate_P0(n)) {
            const auto q = two_quotient(l);
            CHECK(q.size() == n);
            CHECK(seen.insert(q).second);
            CHECK(from_two_quotient(q) == l);
        }
        const auto all = enumerate_bipartitions(n);
        CHECK(std::set<BiPartition>(all.begin(), all.end()) == seen);
    }
}

TEST_CASE("canonical tiling agrees with the 2-quotient sign rule") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : enumerate_P0(n)) {
            const auto tiling = canonical_tiling(l);
            CHECK(static_cast<int>(tiling.size()) == n);
            int minus = 0;
            for (const auto& d : tiling) minus += d.is_minus() ? 1 : 0;
            CHECK(minus == two_quotient(l).minus.size());
        }
    CHECK_THROWS_AS(canonical_tiling(Partition({3, 2, 1})), invalid_argument);
}

TEST_CASE("signed cycle types and class sizes") {
    CHECK(signed_cycle_type(SignedPermutation::identity(3)) == BiPartition{Partition(), Partition({1, 1, 1})});
    CHECK(signed_cycle_type(SignedPermutation({-1})) == BiPartition{Partition({1}), Partition()});
    CHECK(cycle_type(SignedPermutation({2, 3, 1})) == Partition({3}));
    CHECK(z_value(Partition({2, 1, 1})) == 4);
    for (int n = 1; n <= 5; ++n) {
        std::map<BiPartition, std::int64_t> counts;
        for (const auto& pi : enumerate_hyperoctahedral_group(n)) ++counts[signed_cycle_type(pi)];
        std::int64_t total = 0;
        for (const auto& type : enumerate_bipartitions(n)) {
            const std::int64_t size = (std::int64_t{1} << n) * factorial(n) / z_value_B(type);
            CHECK(counts[type] == size);
            total += size;
        }
        CHECK(total == (std::int64_t{1} << n) * factorial(n));
    }
}

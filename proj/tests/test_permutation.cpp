#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "descent/permutation.hpp"

using namespace descent;

TEST_CASE("signed permutation basics") {
    const SignedPermutation pi({-2, 3, 1});
    CHECK(pi(0) == 0);
    CHECK(pi(1) == -2);
    CHECK(pi(-1) == 2);
    CHECK((pi * pi.inverse()) == SignedPermutation::identity(3));
    CHECK((pi.inverse() * pi) == SignedPermutation::identity(3));
    const SignedPermutation sigma({2, 1, 3});
    const auto prod = pi * sigma;
    for (int i = 1; i <= 3; ++i) CHECK(prod(i) == sigma(pi(i)));
    CHECK_THROWS_AS(SignedPermutation({1, 1}), invalid_argument);
    CHECK_THROWS_AS(SignedPermutation({0, 1}), invalid_argument);
}

TEST_CASE("descent sets") {
    CHECK(SignedPermutation::identity(4).descent_set() == IndexSubset(4, {}));
    CHECK(SignedPermutation({4, 3, 2, 1}).descent_set() == IndexSubset(4, {1, 2, 3}));
    CHECK(SignedPermutation::identity(3).b_descent_set() == IndexSubset(3, {}, SubsetVariant::TypeB));
    CHECK(SignedPermutation({-1}).b_descent_set() == IndexSubset(1, {0}, SubsetVariant::TypeB));
    CHECK(SignedPermutation({2, -1}).b_descent_set() == IndexSubset(2, {1}, SubsetVariant::TypeB));
    CHECK_THROWS(SignedPermutation({-1, 2}).descent_set());
}

TEST_CASE("group enumeration") {
    for (int n = 1; n <= 7; ++n) {
        const auto g = enumerate_symmetric_group(n);
        CHECK(static_cast<std::int64_t>(g.size()) == factorial(n));
        CHECK(std::is_sorted(g.begin(), g.end()));
        std::map<std::uint32_t, int> classes;
        for (const auto& p : g) ++classes[p.descent_set().mask()];
        CHECK(classes.size() == (1u << (n - 1)));
    }
    for (int n = 1; n <= 5; ++n) {
        const auto g = enumerate_hyperoctahedral_group(n);
        CHECK(static_cast<std::int64_t>(g.size()) == (std::int64_t{1} << n) * factorial(n));
        CHECK(std::set<SignedPermutation>(g.begin(), g.end()).size() == g.size());
        std::int64_t total = 0;
        std::map<std::uint32_t, std::int64_t> classes;
        for (const auto& p : g) ++classes[p.b_descent_set().mask()];
        for (const auto& [mask, c] : classes) total += c;
        CHECK(total == static_cast<std::int64_t>(g.size()));
        CHECK(classes.size() == (1u << n));
    }
}

TEST_CASE("permutation rank matches lexicographic order") {
    const auto g = enumerate_symmetric_group(5);
    for (std::size_t r = 0; r < g.size(); ++r) {
        std::vector<std::uint8_t> w(g[r].window().begin(), g[r].window().end());
        CHECK(permutation_rank(w) == r);
    }
}

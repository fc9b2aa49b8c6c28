#include "doctest.h"

#include <map>

#include "descent/characters.hpp"
#include "descent/combinatorics.hpp"
#include "descent/permutation.hpp"
#include "descent/tableaux.hpp"

using namespace descent;

TEST_CASE("symmetric group characters") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& rho : enumerate_partitions(n)) {
            CHECK(chi(Partition({n}), rho) == 1);
            CHECK(chi(Partition(std::vector<int>(n, 1)), rho) == ((n - rho.length()) % 2 ? -1 : 1));
        }
    for (int n = 1; n <= 7; ++n)
        for (const auto& l : enumerate_partitions(n))
            CHECK(chi(l, Partition(std::vector<int>(n, 1))) == static_cast<std::int64_t>(enumerate_SYT(l).size()));
    CHECK_THROWS_AS(chi(Partition({2}), Partition({3})), invalid_argument);
    CHECK(chi(Partition({2, 1}), Partition({3})) == -1);
    CHECK(chi(Partition({2, 1}), Partition({2, 1})) == 0);
}

TEST_CASE("orthogonality of the S_n table") {
    for (int n = 1; n <= 6; ++n) {
        const auto t = symmetric_character_table(n);
        CHECK(t.group_order() == factorial(n));
        std::int64_t class_total = 0;
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            CHECK(t.class_sizes[c] * z_value(t.columns[c]) == factorial(n));
            class_total += t.class_sizes[c];
        }
        CHECK(class_total == factorial(n));
        for (std::size_t a = 0; a < t.rows.size(); ++a)
            for (std::size_t b = 0; b < t.rows.size(); ++b) {
                std::int64_t s = 0;
                for (std::size_t c = 0; c < t.columns.size(); ++c) s += t.class_sizes[c] * t.values[a][c] * t.values[b][c];
                CHECK(s == (a == b ? factorial(n) : 0));
            }
    }
}

TEST_CASE("hyperoctahedral characters") {
    // n = 1: the 2-quotient (0,(1)) gives the trivial character, ((1),0) the sign of x0.
    const BiPartition positive{Partition(), Partition({1})}, negative{Partition({1}), Partition()};
    CHECK(psi_B(Partition({2}), positive) == 1);
    CHECK(psi_B(Partition({2}), negative) == 1);
    CHECK(psi_B(Partition({1, 1}), positive) == 1);
    CHECK(psi_B(Partition({1, 1}), negative) == -1);

    for (int n = 1; n <= 4; ++n) {
        const auto t = hyperoctahedral_character_table(n);
        const std::int64_t order = (std::int64_t{1} << n) * factorial(n);
        CHECK(t.group_order() == order);
        // Class sizes against brute-force enumeration.
        std::map<BiPartition, std::int64_t> counts;
        for (const auto& pi : enumerate_hyperoctahedral_group(n)) ++counts[signed_cycle_type(pi)];
        for (std::size_t c = 0; c < t.columns.size(); ++c) CHECK(t.class_sizes[c] == counts[two_quotient(t.columns[c])]);
        for (std::size_t a = 0; a < t.rows.size(); ++a) {
            if (two_quotient(t.rows[a]).plus == Partition({n}))
                for (std::size_t c = 0; c < t.columns.size(); ++c) CHECK(t.values[a][c] == 1);
            for (std::size_t b = 0; b < t.rows.size(); ++b) {
                std::int64_t s = 0;
                for (std::size_t c = 0; c < t.columns.size(); ++c) s += t.class_sizes[c] * t.values[a][c] * t.values[b][c];
                CHECK(s == (a == b ? order : 0));
            }
        }
        // Identity class column: the 2-quotient (0, (1^n)).
        std::int64_t dims = 0;
        for (const auto& l : t.rows) {
            const auto d = psi_B(l, BiPartition{Partition(), Partition(std::vector<int>(n, 1))});
            CHECK(d > 0);
            dims += d * d;
        }
        CHECK(dims == order);
    }
}

TEST_CASE("Kronecker coefficients") {
    CHECK(kronecker_g(Partition({2, 1}), Partition({2, 1}), Partition({2, 1})) == 1);
    for (int n = 1; n <= 5; ++n) {
        const auto parts = enumerate_partitions(n);
        const Partition trivial({n}), sign(std::vector<int>(n, 1));
        for (const auto& l : parts)
            for (const auto& m : parts) {
                CHECK(kronecker_g(l, m, trivial) == (l == m ? 1 : 0));
                CHECK(kronecker_g(l, m, sign) == (l == m.transpose() ? 1 : 0));
            }
        const auto table = kronecker_table(symmetric_character_table(n));
        for (const auto& [key, v] : table) {
            const auto& [a, b, c] = key;
            CHECK(v >= 0);
            CHECK(v == table.at({b, a, c}));
            CHECK(v == table.at({c, b, a}));
            CHECK(v == table.at({a, c, b}));
        }
    }
    for (int n = 1; n <= 3; ++n) {
        const auto shapes = enumerate_P0(n);
        const Partition trivial({2 * n});
        for (const auto& l : shapes)
            for (const auto& m : shapes) CHECK(kronecker_gB(l, m, trivial) == (l == m ? 1 : 0));
        const auto table = kronecker_table(hyperoctahedral_character_table(n));
        for (const auto& [key, v] : table) {
            const auto& [a, b, c] = key;
            CHECK(v >= 0);
            CHECK(v == kronecker_gB(a, b, c));
            CHECK(v == table.at({b, a, c}));
            CHECK(v == table.at({c, b, a}));
            CHECK(v == table.at({a, c, b}));
            CHECK(v == table.at({b, c, a}));
        }
    }
}

#include "doctest.h"

#include "descent/characters.hpp"
#include "descent/descent_a.hpp"
#include "descent/permutation.hpp"
#include "descent/tableaux.hpp"

using namespace descent;

namespace {

IndexSubset sub(int n, std::vector<int> e) { return IndexSubset(n, std::move(e)); }

std::map<std::uint32_t, std::int64_t> class_sizes(int n) {
    std::map<std::uint32_t, std::int64_t> sizes;
    for (const auto& p : enumerate_symmetric_group(n)) ++sizes[p.descent_set().mask()];
    return sizes;
}

}  // namespace

TEST_CASE("descent sets partition S_n") {
    CHECK(descent_set(Permutation::identity(4)) == sub(4, {}));
    CHECK(descent_set(Permutation({3, 2, 1})) == sub(3, {1, 2}));
    for (int n = 1; n <= 7; ++n) {
        std::int64_t total = 0;
        for (const auto& [mask, size] : class_sizes(n)) total += size;
        CHECK(total == factorial(n));
    }
}

TEST_CASE("a constants") {
    const auto a2 = a_constants(2);
    CHECK(a2(sub(2, {1}), sub(2, {1}), sub(2, {})) == 1);
    CHECK(a2(sub(2, {1}), sub(2, {1}), sub(2, {1})) == 0);
    for (int n = 1; n <= 5; ++n) {
        const auto a = a_constants(n);
        const auto sizes = class_sizes(n);
        for (const auto& i : a.subsets())
            for (const auto& j : a.subsets()) {
                std::int64_t weighted = 0;
                for (const auto& k : a.subsets()) {
                    CHECK(a(i, j, k) >= 0);
                    weighted += a(i, j, k) * sizes.at(k.mask());
                    if (i.mask() == 0) CHECK(a(i, j, k) == (j == k ? 1 : 0));
                }
                CHECK(weighted == sizes.at(i.mask()) * sizes.at(j.mask()));
            }
    }
}

TEST_CASE("b constants three ways") {
    const auto b2 = b_constants(2);
    CHECK(b2(sub(2, {1}), sub(2, {1}), sub(2, {1})) == 2);
    CHECK(b2(sub(2, {1}), sub(2, {1}), sub(2, {})) == 0);
    for (int n = 1; n <= 5; ++n) {
        const auto b = b_constants(n);
        const auto gr = gr_matrix_table(n);
        const auto full = IndexSubset::full(n, SubsetVariant::TypeA);
        for (const auto& i : b.subsets())
            for (const auto& j : b.subsets())
                for (const auto& k : b.subsets()) {
                    CHECK(b(i, j, k) == gr(i, j, k));
                    if (i == full) {
                        std::int64_t bj = 0;
                        for (const auto& [mask, size] : class_sizes(n))
                            if ((mask & ~j.mask()) == 0) bj += size;
                        CHECK(b(i, j, k) == (k == full ? bj : 0));
                    }
                }
        if (n <= 4) {
            const auto direct = b_constants_direct(n);
            for (const auto& i : b.subsets())
                for (const auto& j : b.subsets())
                    for (const auto& k : b.subsets()) CHECK(b(i, j, k) == direct(i, j, k));
        }
    }
    CHECK(gr_matrix_count(sub(2, {1}), sub(2, {1}), sub(2, {1})) == 2);
    // comp(K) = (1,1,1,1) needs four nonzero cells; a 1x2 grid has two.
    CHECK(gr_matrix_count(sub(4, {}), sub(4, {2}), sub(4, {1, 2, 3})) == 0);
}

TEST_CASE("contingency matrices") {
    CHECK(m_matrix(Composition({4}), Composition({4})) == 1);
    CHECK(m_matrix(Composition({1, 1}), Composition({1, 1})) == 2);
    CHECK(m_matrix(Composition({2, 1}), Composition({1, 1, 1})) == 3);
    CHECK(m_matrix(Composition({2}), Composition({1})) == 0);
    CHECK(m_3d(Composition({3}), Composition({3}), Composition({3})) == 1);
    CHECK(m_3d(Composition({1, 1}), Composition({2}), Composition({2})) == 1);
    // Symmetry of the 3D count under permuting the margins.
    for (const auto& p : enumerate_compositions(4))
        for (const auto& q : enumerate_compositions(4)) {
            const Composition r({2, 1, 1});
            const auto v = m_3d(p, q, r);
            CHECK(v == m_3d(q, p, r));
            CHECK(v == m_3d(r, q, p));
        }
    // m_3d with one margin (n) collapses to a matrix count.
    for (const auto& p : enumerate_compositions(4))
        for (const auto& q : enumerate_compositions(4)) CHECK(m_3d(p, q, Composition({4})) == m_matrix(q, p));
}

TEST_CASE("identity triples") {
    for (int n = 1; n <= 4; ++n) {
        const auto t = triple_a_table(n);
        const auto e = sub(n, {});
        CHECK(t(e, e, e) == 1);
        const auto group = enumerate_symmetric_group(n);
        for (const auto& i : t.subsets())
            for (const auto& j : t.subsets()) {
                std::int64_t inverse_pairs = 0;
                for (const auto& s : group) inverse_pairs += s.descent_set() == i && s.inverse().descent_set() == j;
                CHECK(t(i, j, e) == inverse_pairs);
                for (const auto& k : t.subsets()) {
                    CHECK(t(i, j, k) == t(j, k, i));
                    CHECK(t(i, j, k) == triple_a_empty(i, j, k));
                }
            }
    }
}

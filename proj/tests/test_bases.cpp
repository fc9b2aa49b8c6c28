#include "doctest.h"

#include "descent/bases.hpp"
#include "descent/domino.hpp"
#include "descent/tableaux.hpp"

using namespace descent;

namespace {

SparsePolynomial monomial_poly(const AlphabetPtr& x, std::vector<std::uint32_t> word, long c = 1) {
    SparsePolynomial p(x);
    p.add_term(Monomial::from_word(word), c);
    return p;
}

// Quasisymmetry: the coefficient of x_{i1}^{a1}...x_{ip}^{ap} does not depend on i1 < ... < ip.
bool is_quasisymmetric(const SparsePolynomial& p) {
    const auto n = p.alphabet()->size();
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> word;
        std::uint32_t var = 0;
        for (const auto& [v, e] : m.entries()) {
            for (std::uint32_t k = 0; k < e; ++k) word.push_back(var);
            ++var;
        }
        if (p.coefficient(Monomial::from_word(word)) != c) return false;
        (void)n;
    }
    return true;
}

}  // namespace

TEST_CASE("M and F on small alphabets") {
    const auto x2 = Alphabet::type_a(2);
    CHECK(eval_M(Composition({2}), x2) == monomial_poly(x2, {0, 0}) + monomial_poly(x2, {1, 1}));
    CHECK(eval_M(Composition({1, 1}), Alphabet::type_a(1)).is_zero());
    const auto x3 = Alphabet::type_a(3);
    // F_(3): all weakly increasing words.
    CHECK(eval_F(Composition({3}), x3).term_count() == 10);
    // F_(1,1,1): strictly increasing words only.
    CHECK(eval_F(Composition({1, 1, 1}), x3) == monomial_poly(x3, {0, 1, 2}));
    for (int n = 1; n <= 5; ++n) {
        const auto x = Alphabet::type_a(n);
        for (const auto& a : enumerate_compositions(n)) {
            SparsePolynomial sum(x);
            for (const auto& b : enumerate_compositions(n))
                if (set_of_comp(a).subset_of(set_of_comp(b))) sum += eval_M(b, x);
            CHECK(eval_F(a, x) == sum);
            CHECK(eval_F(a, x).homogeneous_degree() == static_cast<std::uint32_t>(n));
        }
    }
}

TEST_CASE("quasisymmetry of evaluated bases") {
    for (int n = 1; n <= 4; ++n) {
        const auto x = Alphabet::type_a(6);
        for (const auto& a : enumerate_compositions(n)) {
            CHECK(is_quasisymmetric(eval_M(a, x)));
            CHECK(is_quasisymmetric(eval_F(a, x)));
        }
        for (const auto& l : enumerate_partitions(n)) CHECK(is_quasisymmetric(eval_s(l, x)));
    }
}

TEST_CASE("Schur functions in F and M") {
    for (int n = 1; n <= 5; ++n) {
        const auto x = Alphabet::type_a(n);
        const auto d = d_table(n);
        CHECK(eval_s(Partition({n}), x) == eval_F(Composition({n}), x));
        CHECK(eval_s(Partition(std::vector<int>(n, 1)), Alphabet::type_a(n - 1)).is_zero());
        for (const auto& l : enumerate_partitions(n)) {
            const auto s = eval_s(l, x);
            SparsePolynomial via_f(x), via_m(x);
            for (const auto& a : enumerate_compositions(n)) {
                via_f += eval_F(a, x) * Integer(static_cast<long>(d_entry(d, l, set_of_comp(a))));
                via_m += eval_M(a, x) * Integer(static_cast<long>(kostka(l, a)));
            }
            CHECK(s == via_f);
            CHECK(s == via_m);
            const auto coeffs = expand_in_F(s, n);
            for (const auto& sub : IndexSubset::all(n, SubsetVariant::TypeA)) {
                const auto it = coeffs.find(sub);
                const Integer got = it == coeffs.end() ? Integer(0) : it->second;
                CHECK(got == d_entry(d, l, sub));
            }
            const auto mcoeffs = expand_in_M(s, n);
            for (const auto& a : enumerate_compositions(n)) {
                const auto it = mcoeffs.find(set_of_comp(a));
                const Integer got = it == mcoeffs.end() ? Integer(0) : it->second;
                CHECK(got == kostka(l, a));
            }
        }
    }
}

TEST_CASE("F expansion round trip and residual") {
    const auto x = Alphabet::type_a(4);
    for (const auto& a : enumerate_compositions(4)) {
        const auto e = expand_in_F(eval_F(a, x), 4);
        REQUIRE(e.size() == 1);
        CHECK(e.begin()->first == set_of_comp(a));
        CHECK(e.begin()->second == 1);
    }
    // x1^2 x2 alone is not quasisymmetric.
    CHECK_THROWS_AS(expand_in_F(monomial_poly(x, {1, 1, 2}), 3), expansion_error);
    CHECK_THROWS_AS(expand_in_F(monomial_poly(x, {0, 0, 1}), 3), expansion_error);
}

TEST_CASE("Cauchy identity on a product alphabet") {
    for (int n = 1; n <= 4; ++n) {
        const auto x = Alphabet::type_a(4, "x"), y = Alphabet::type_a(4, "y");
        const auto u = Alphabet::juxtapose({x, y});
        const auto lhs = collapse_product(eval_s(Partition({n}), Alphabet::product(x, y)), u);
        SparsePolynomial rhs(u);
        for (const auto& l : enumerate_partitions(n)) rhs += embed(eval_s(l, x), u, 0) * embed(eval_s(l, y), u, 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("type B quasisymmetric functions") {
    const auto x = Alphabet::type_b(2);
    // F^B_{1} = x0x1 + x0x2 + x1x2, F^B_{0,1} = x1x2.
    CHECK(eval_FB(IndexSubset(2, {1}, SubsetVariant::TypeB), x) ==
          monomial_poly(x, {0, 1}) + monomial_poly(x, {0, 2}) + monomial_poly(x, {1, 2}));
    CHECK(eval_FB(IndexSubset(2, {0, 1}, SubsetVariant::TypeB), x) == monomial_poly(x, {1, 2}));
    for (int n = 1; n <= 4; ++n) {
        const auto xb = Alphabet::type_b(n);
        for (const auto& i : IndexSubset::all(n, SubsetVariant::TypeB)) {
            SparsePolynomial sum(xb);
            for (const auto& j : IndexSubset::all(n, SubsetVariant::TypeB))
                if (i.subset_of(j)) sum += eval_MB(j, xb);
            CHECK(eval_FB(i, xb) == sum);
            const auto e = expand_in_FB(eval_FB(i, xb), n);
            REQUIRE(e.size() == 1);
            CHECK(e.begin()->first == i);
        }
    }
}

TEST_CASE("domino functions") {
    for (int n = 1; n <= 3; ++n) {
        const auto x = Alphabet::type_b(3);
        CHECK(eval_G(Partition({2 * n}), x) == eval_FB(IndexSubset(n, {}, SubsetVariant::TypeB), x));
        for (const auto& l : enumerate_P0(n)) {
            const auto q = two_quotient(l);
            CHECK(eval_G(l, x) == eval_s_minus(q.minus, x) * eval_s_plus(q.plus, x));
        }
    }
    const auto x = Alphabet::type_b(3);
    CHECK(eval_G(Partition({1, 1}), x) == monomial_poly(x, {1}) + monomial_poly(x, {2}) + monomial_poly(x, {3}));
    CHECK_THROWS_AS(eval_G(Partition({3, 2, 1}), x), invalid_argument);
}

TEST_CASE("Schur block expansion") {
    const auto a = Alphabet::type_a(3, "a"), b = Alphabet::type_a(3, "b");
    const auto u = Alphabet::juxtapose({a, b});
    const auto p = embed(eval_s(Partition({2, 1}), a), u, 0) * embed(eval_s(Partition({1}), b), u, 1) * Integer(3) +
                   embed(eval_s(Partition({3}), a), u, 0) * embed(eval_s(Partition({1}), b), u, 1);
    const auto e = expand_in_schur_blocks(p);
    CHECK(e.size() == 2);
    CHECK(e.at({Partition({2, 1}), Partition({1})}) == 3);
    CHECK(e.at({Partition({3}), Partition({1})}) == 1);
}

#include "doctest.h"

#include <random>

#include "descent/polynomial.hpp"

using namespace descent;

namespace {

SparsePolynomial random_poly(const AlphabetPtr& x, std::mt19937& rng) {
    SparsePolynomial p(x);
    std::uniform_int_distribution<int> var(0, static_cast<int>(x->size()) - 1), coef(-5, 5), len(0, 4);
    const int terms = len(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> word;
        const int deg = len(rng);
        for (int d = 0; d < deg; ++d) word.push_back(static_cast<std::uint32_t>(var(rng)));
        p.add_term(Monomial::from_word(word), Integer(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("monomials") {
    const auto m = Monomial::from_word({2, 0, 2});
    CHECK(m.degree() == 3);
    CHECK(m.exponent(2) == 2);
    CHECK(m.exponent(1) == 0);
    CHECK((m * Monomial::from_word({1})) == Monomial::from_word({0, 1, 2, 2}));
    CHECK(lex_greater(Monomial::from_word({0}), Monomial::from_word({1, 1})));
    CHECK_FALSE(lex_greater(Monomial::from_word({1}), Monomial::from_word({1})));
}

TEST_CASE("alphabets") {
    const auto a = Alphabet::type_a(2);
    const auto aa = Alphabet::product(a, a);
    CHECK(aa->size() == 4);
    CHECK(aa->factor_labels(0) == std::pair{0, 0});
    CHECK(aa->factor_labels(1) == std::pair{0, 1});
    CHECK(aa->factor_labels(2) == std::pair{1, 0});
    CHECK(aa->factor_labels(3) == std::pair{1, 1});

    const auto b = Alphabet::type_b(2);
    CHECK(b->size() == 3);
    CHECK(b->nonzero_size() == 2);
    const auto bb = Alphabet::product(b, b);
    CHECK(bb->size() == 13);
    CHECK(bb->kind() == AlphabetKind::TypeB);
    CHECK(bb->factor_labels(0) == std::pair{0, 0});
    for (std::uint32_t v = 1; v < bb->size(); ++v) {
        const auto prev = bb->factor_labels(v - 1), cur = bb->factor_labels(v);
        CHECK(prev < cur);
    }
    CHECK(Alphabet::product(Alphabet::type_b(3), Alphabet::type_b(3))->size() == 25);
    CHECK_THROWS(Alphabet::product(a, b));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(12345);
    const auto x = Alphabet::type_a(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(x, rng), q = random_poly(x, rng), r = random_poly(x, rng);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
        CHECK(p + q == q + p);
    }
}

TEST_CASE("polynomial basics") {
    const auto x = Alphabet::type_a(2);
    SparsePolynomial p(x);
    p.add_term(Monomial::from_word({0}), 3);
    p.add_term(Monomial::from_word({1, 1}), -2);
    CHECK_FALSE(p.homogeneous_degree().has_value());
    p.add_term(Monomial::from_word({0}), -3);
    CHECK(p.term_count() == 1);
    CHECK(p.homogeneous_degree() == 2u);
    CHECK(p.coefficient(Monomial::from_word({1, 1})) == -2);
    CHECK(p.dump() == "-2 * x2^2\n");
    CHECK_THROWS(p + SparsePolynomial(Alphabet::type_a(3)));
}

TEST_CASE("embedding and collapsing product alphabets") {
    const auto x = Alphabet::type_a(2, "x"), y = Alphabet::type_a(2, "y");
    const auto xy = Alphabet::product(x, y);
    const auto u = Alphabet::juxtapose({x, y});
    CHECK(u->size() == 4);
    SparsePolynomial p(xy);
    p.add_term(Monomial::from_word({1, 2}), 5);  // (x1,y2)(x2,y1)
    const auto c = collapse_product(p, u);
    CHECK(c.coefficient(Monomial::from_word({0, 1, 2, 3})) == 5);

    const auto xb = Alphabet::type_b(2, "x"), yb = Alphabet::type_b(2, "y");
    const auto xyb = Alphabet::product(xb, yb);
    const auto ub = Alphabet::juxtapose({xb, yb});
    for (std::uint32_t v = 0; v < xyb->size(); ++v) {
        SparsePolynomial q(xyb);
        q.add_term(Monomial::from_word({v}), 1);
        const auto [i, j] = xyb->factor_labels(v);
        const auto cq = collapse_product(q, ub);
        CHECK(cq.coefficient(Monomial::from_word({static_cast<std::uint32_t>(std::abs(i)),
                                                  static_cast<std::uint32_t>(3 + std::abs(j))})) == 1);
    }
    SparsePolynomial e(x);
    e.add_term(Monomial::from_word({1}), 1);
    CHECK(embed(e, u, 0).coefficient(Monomial::from_word({1})) == 1);
    CHECK_THROWS(embed(e, u, 1));
}

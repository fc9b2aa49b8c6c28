#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "descent/combinatorics.hpp"

namespace descent {

using Integer = mpz_class;

/// Sparse exponent vector: (variable index, exponent) pairs sorted by index, exponents > 0.
class Monomial {
public:
    using Entry = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);
    /// Monomial x_{w_1} x_{w_2} ... for a word of variable indices (any order).
    static Monomial from_word(const std::vector<std::uint32_t>& word);

    const std::vector<Entry>& entries() const { return entries_; }
    std::uint32_t degree() const;
    std::uint32_t exponent(std::uint32_t var) const;
    Monomial operator*(const Monomial& other) const;
    /// Shift every variable index by offset.
    Monomial shifted(std::uint32_t offset) const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Entry> entries_;
};

/// Lexicographic comparison of the dense exponent vectors, variable 0 most significant.
bool lex_greater(const Monomial& a, const Monomial& b);

enum class AlphabetKind : std::uint8_t { TypeA, TypeB, Union };

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Explicitly ordered finite set of commuting variables.
///
/// Variable order is index order. A type B alphabet stores only its nonnegative
/// part: index 0 is the distinguished zero variable x_0, indices 1..N stand for
/// x_i = x_{-i}. A union alphabet juxtaposes blocks (X then Y ...) and is where
/// products like F_I(X) F_J(Y) live.
class Alphabet {
public:
    static AlphabetPtr type_a(int n, std::string name = "x");
    static AlphabetPtr type_b(int n, std::string name = "x");
    /// XY. Type A: pairs (i, j) in lexicographic order. Type B: signed pairs
    /// (i, j) >= (0, 0) in lexicographic order, the pair (-i, -j) folded onto (i, j).
    static AlphabetPtr product(const AlphabetPtr& x, const AlphabetPtr& y);
    static AlphabetPtr juxtapose(std::vector<AlphabetPtr> blocks);

    AlphabetKind kind() const { return kind_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }
    const std::string& name(std::uint32_t var) const { return names_.at(var); }
    /// Type B only: number of nonzero variables (|X^-|).
    std::uint32_t nonzero_size() const;

    bool is_product() const { return left_ != nullptr; }
    const AlphabetPtr& left() const { return left_; }
    const AlphabetPtr& right() const { return right_; }
    /// For product alphabets: the factor labels of variable v. Type A: 0-based
    /// indices; type B: signed labels in [-M, M] of the factors' full alphabets.
    std::pair<int, int> factor_labels(std::uint32_t var) const { return pairs_.at(var); }

    const std::vector<AlphabetPtr>& blocks() const { return blocks_; }
    std::uint32_t block_offset(std::size_t block) const { return offsets_.at(block); }

    bool same_as(const Alphabet& other) const;

private:
    Alphabet() = default;

    AlphabetKind kind_ = AlphabetKind::TypeA;
    std::vector<std::string> names_;
    AlphabetPtr left_, right_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<AlphabetPtr> blocks_;
    std::vector<std::uint32_t> offsets_;
};

/// Exact polynomial with arbitrary-precision integer coefficients.
class SparsePolynomial {
public:
    using Terms = std::map<Monomial, Integer>;

    explicit SparsePolynomial(AlphabetPtr alphabet);
    SparsePolynomial(AlphabetPtr alphabet, Terms terms);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Integer coefficient(const Monomial& m) const;
    /// Degree if every term has the same total degree.
    std::optional<std::uint32_t> homogeneous_degree() const;

    void add_term(const Monomial& m, const Integer& c);

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial& operator-=(const SparsePolynomial& other);
    SparsePolynomial operator+(const SparsePolynomial& other) const;
    SparsePolynomial operator-(const SparsePolynomial& other) const;
    SparsePolynomial operator*(const SparsePolynomial& other) const;
    SparsePolynomial operator*(const Integer& scalar) const;
    bool operator==(const SparsePolynomial& other) const;

    /// Sorted "coeff * x1^e..." lines.
    std::string dump() const;

private:
    void require_same_alphabet(const SparsePolynomial& other) const;

    AlphabetPtr alphabet_;
    Terms terms_;
};

/// Reinterpret a polynomial over block `block` of a union alphabet.
SparsePolynomial embed(const SparsePolynomial& p, const AlphabetPtr& union_alphabet, std::size_t block);
/// Substitute (x_i, y_j) -> x_|i| y_|j| for a polynomial over a product alphabet XY;
/// the result lives over juxtapose({X, Y}) (which the caller passes in).
SparsePolynomial collapse_product(const SparsePolynomial& p, const AlphabetPtr& union_xy);

/// Ring homomorphism sending variable v of p's alphabet to images[v], a monomial over target.
SparsePolynomial substitute_variables(const SparsePolynomial& p, const AlphabetPtr& target,
                                      const std::vector<Monomial>& images);

}  // namespace descent

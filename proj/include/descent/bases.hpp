#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "descent/combinatorics.hpp"
#include "descent/polynomial.hpp"

namespace descent {

/// The polynomial is not in the span of the requested basis (or the alphabet is too small).
class expansion_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Type A quasisymmetric and symmetric functions, evaluated on a finite type A alphabet.
SparsePolynomial eval_M(const Composition& alpha, const AlphabetPtr& x);
SparsePolynomial eval_F(const Composition& alpha, const AlphabetPtr& x);
SparsePolynomial eval_F(const IndexSubset& subset, const AlphabetPtr& x);
SparsePolynomial eval_s(const Partition& lambda, const AlphabetPtr& x);
SparsePolynomial eval_p(const Partition& lambda, const AlphabetPtr& x);

// Type B: x must be a type B alphabet (zero variable at index 0).
SparsePolynomial eval_FB(const IndexSubset& subset, const AlphabetPtr& x);
SparsePolynomial eval_MB(const IndexSubset& subset, const AlphabetPtr& x);
/// s_lambda(X^-): Schur function in the nonzero variables x_1..x_N.
SparsePolynomial eval_s_minus(const Partition& lambda, const AlphabetPtr& x);
/// s_lambda(X^+): Schur function in x_0..x_N.
SparsePolynomial eval_s_plus(const Partition& lambda, const AlphabetPtr& x);
/// Power sums over the full signed alphabet: p_k(X) = x_0^k + 2 sum_{i>0} x_i^k.
SparsePolynomial eval_p_signed(const Partition& lambda, const AlphabetPtr& x);
/// Domino function: sum of X^T over semistandard domino tableaux of shape lambda.
SparsePolynomial eval_G(const Partition& lambda, const AlphabetPtr& x);

using QuasiExpansion = std::map<IndexSubset, Integer>;
using QuasiExpansion2 = std::map<std::pair<IndexSubset, IndexSubset>, Integer>;

/// Coefficients in the F basis (type A alphabet) or F^B basis (type B alphabet),
/// keyed by subset. Throws expansion_error with the residual when not in the span.
QuasiExpansion expand_in_F(const SparsePolynomial& poly, int n);
QuasiExpansion expand_in_FB(const SparsePolynomial& poly, int n);
/// Same keyed by composition.
std::map<Composition, Integer> expand_in_F_compositions(const SparsePolynomial& poly, int n);
/// Coefficients in the M basis (type A) keyed by subset.
QuasiExpansion expand_in_M(const SparsePolynomial& poly, int n);

/// Double expansion of a polynomial over juxtapose({X, Y}) in F_I(X) F_J(Y)
/// (both blocks type A) or F^B_I(X) F^B_J(Y) (both type B).
QuasiExpansion2 expand_in_F2(const SparsePolynomial& poly, int n);

/// Expansion of a polynomial over a juxtaposition of type A blocks in products
/// of Schur functions, one per block, by leading-monomial elimination.
std::map<std::vector<Partition>, Integer> expand_in_schur_blocks(const SparsePolynomial& poly);

/// Sum of coefficient * basis element; used to form residuals.
SparsePolynomial combine_F(const QuasiExpansion& coeffs, const AlphabetPtr& x);
SparsePolynomial combine_F2(const QuasiExpansion2& coeffs, const AlphabetPtr& union_xy);

}  // namespace descent

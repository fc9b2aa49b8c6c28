#pragma once

#include <cstdint>

#include "descent/characters.hpp"
#include "descent/combinatorics.hpp"
#include "descent/constant_table.hpp"
#include "descent/permutation.hpp"

namespace descent {

/// set(pi) = {0 <= i <= n-1 : pi(i) > pi(i+1)} with pi(0) = 0.
IndexSubset b_descent_set(const SignedPermutation& pi);

/// c^K_{IJ} = [D^B_K] D^B_I D^B_J by convolving descent classes of B_n, with the
/// same constancy assertion as a_constants.
ConstantTable c_constants(int n);

/// Triples (pi1, pi2, pi3) in D^B_I x D^B_J x D^B_K with pi1 pi2 pi3 the identity of B_n.
std::int64_t triple_c_empty(const IndexSubset& i, const IndexSubset& j, const IndexSubset& k);
ConstantTable triple_c_table(int n);

/// g^B read off the domino-function coproduct
///   G_lambda(XY) = sum g^B(lambda, mu, nu) G_mu(X) G_nu(Y),
/// computed with X^-, X^+, Y^-, Y^+ lifted to four independent alphabets so that
/// the products of Schur functions on the right are linearly independent.
KroneckerTable kronecker_gB_via_polynomials(int n);

}  // namespace descent

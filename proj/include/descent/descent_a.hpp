#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "descent/combinatorics.hpp"
#include "descent/constant_table.hpp"
#include "descent/permutation.hpp"

namespace descent {

/// set(pi) = {1 <= i <= n-1 : pi(i) > pi(i+1)}.
IndexSubset descent_set(const Permutation& pi);

/// a^K_{IJ} by convolving descent classes of S_n. Solomon's theorem (the
/// multiplicity of pi in D_I D_J depends only on set(pi)) is asserted for every
/// cell; a violation throws std::logic_error.
ConstantTable a_constants(int n);

/// b^K_{IJ} from the a table through
///   sum_{I' <= I, J' <= J} a^K_{I'J'} = sum_{K' >= K} b^{K'}_{IJ}.
/// Throws std::logic_error on a negative value.
ConstantTable b_constants(const ConstantTable& a);
ConstantTable b_constants(int n);
/// b^K_{IJ} by multiplying the containment classes B_I, B_J directly.
ConstantTable b_constants_direct(int n);

/// A^K_{I,J} = sum_{I' <= I, J' <= J} a^K_{I'J'}.
ConstantTable cumulative_a(const ConstantTable& a);

/// Non-negative integer matrices with the given row and column sums.
void for_each_matrix(const std::vector<int>& row_sums, const std::vector<int>& col_sums,
                     const std::function<void(const std::vector<std::vector<int>>&)>& visit);
/// Matrices with row sums comp(I), column sums comp(J) and row-major reading
/// word of nonzero entries comp(K).
std::int64_t gr_matrix_count(const IndexSubset& i, const IndexSubset& j, const IndexSubset& k);
/// gr_matrix_count for all triples at once.
ConstantTable gr_matrix_table(int n);

std::int64_t m_matrix(const Composition& r, const Composition& c);
/// Arrays M_{ijk} >= 0 with sum_{i,j} M_{ijk} = p_k, sum_{i,k} M_{ijk} = q_j, sum_{j,k} M_{ijk} = r_i.
std::int64_t m_3d(const Composition& p, const Composition& q, const Composition& r);

/// a^{emptyset}_{I,J,K}: triples in D_I x D_J x D_K with product the identity.
std::int64_t triple_a_empty(const IndexSubset& i, const IndexSubset& j, const IndexSubset& k);
ConstantTable triple_a_table(int n);

}  // namespace descent

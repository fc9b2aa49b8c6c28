#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "descent/combinatorics.hpp"

namespace descent {

/// chi^lambda evaluated on the class of cycle type rho (Murnaghan-Nakayama).
std::int64_t chi(const Partition& lambda, const Partition& rho);

/// psi^lambda on the class of signed cycle type `type` (minus = negative cycles).
/// lambda is in P^0(n); its 2-quotient indexes the character.
std::int64_t psi_B(const Partition& lambda, const BiPartition& type);
/// psi^lambda_mu with the class given by the 2-quotient of mu in P^0(n).
std::int64_t psi_B(const Partition& lambda, const Partition& mu);

enum class Group : std::uint8_t { Symmetric, Hyperoctahedral };

/// Full character table with class sizes.
///
/// S_n: rows and columns are partitions of n (reverse lexicographic).
/// B_n: rows are P^0(n) shapes, columns are the same shapes read as signed
/// cycle types through their 2-quotients.
struct CharacterTable {
    Group group;
    int n = 0;
    std::vector<Partition> rows;
    std::vector<Partition> columns;
    std::vector<std::int64_t> class_sizes;
    std::vector<std::vector<std::int64_t>> values;  // values[row][column]

    std::int64_t group_order() const;
};

CharacterTable symmetric_character_table(int n);
CharacterTable hyperoctahedral_character_table(int n);

/// g(lambda, mu, nu) = (1/n!) sum_w chi^lambda(w) chi^mu(w) chi^nu(w).
std::int64_t kronecker_g(const Partition& lambda, const Partition& mu, const Partition& nu);
/// g^B over B_n, arguments in P^0(n).
std::int64_t kronecker_gB(const Partition& lambda, const Partition& mu, const Partition& nu);

using KroneckerTable = std::map<std::tuple<Partition, Partition, Partition>, std::int64_t>;
/// All triples (zero entries included), from one character table.
KroneckerTable kronecker_table(const CharacterTable& table);

}  // namespace descent

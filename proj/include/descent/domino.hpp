#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "descent/combinatorics.hpp"
#include "descent/tableaux.hpp"

namespace descent {

enum class DominoMode : std::uint8_t { Standard, Semistandard };

/// Labelled domino tiling of a shape in P^0(n).
///
/// Labels are compared cell-wise: weakly increasing along rows, strictly
/// increasing down columns between different dominos. Standard tableaux use each
/// of 1..n once; semistandard ones use labels >= 0, and a vertical domino in the
/// top-left corner may not carry 0.
class DominoTableau {
public:
    DominoTableau(Partition shape, std::vector<Domino> dominos, std::vector<int> labels, DominoMode mode);

    const Partition& shape() const { return shape_; }
    const std::vector<Domino>& dominos() const { return dominos_; }
    const std::vector<int>& labels() const { return labels_; }
    DominoMode mode() const { return mode_; }
    int size() const { return static_cast<int>(dominos_.size()); }

    /// Row-wise label grid.
    TableauRows label_grid() const;
    /// Row-wise grid of domino indices (the pairing).
    TableauRows pairing_grid() const;
    /// mu_k = number of dominos labelled k, k = 0..max label.
    std::vector<int> weight() const;
    bool top_left_vertical() const;

    /// Descents of a standard tableau: 0 if domino 1 is vertical, i > 0 if
    /// domino i+1 lies strictly below domino i.
    IndexSubset descent_set() const;

    friend bool operator==(const DominoTableau& a, const DominoTableau& b) {
        return a.label_grid() == b.label_grid() && a.pairing_grid() == b.pairing_grid();
    }

private:
    Partition shape_;
    std::vector<Domino> dominos_;
    std::vector<int> labels_;
    DominoMode mode_;
};

/// All standard domino tableaux of shape lambda (peel the domino labelled n off the rim, recursively).
std::vector<DominoTableau> enumerate_SDT(const Partition& lambda);
IndexSubset sdt_descent_set(const DominoTableau& t);

/// (lambda, I) -> d^B_{lambda I} over lambda in P^0(n); zero entries omitted.
DTable dB_table(int n);

/// Calls visit(dominos, labels) for every semistandard domino tableau of shape
/// lambda with labels in {0..max_label}; built layer by layer as domino strips.
void for_each_SSDT(const Partition& lambda, int max_label,
                   const std::function<void(const std::vector<Domino>&, const std::vector<int>&)>& visit);
std::vector<DominoTableau> enumerate_SSDT(const Partition& lambda, int max_label);

/// Relabel by 1..n: smaller labels first, equal labels left to right.
DominoTableau standardize(const DominoTableau& t);
/// set(mu-bar), plus 0 when the top-left domino is vertical; type B subset of rank n.
IndexSubset S_of(const DominoTableau& t);
/// The semistandard tableau of the given weight whose standardization is t, if any.
std::optional<DominoTableau> destandardize(const DominoTableau& t, const std::vector<int>& weight);

/// Bi-tableau (T^-, T^+) with shapes two_quotient(sh(T)).
std::pair<SemistandardYoungTableau, SemistandardYoungTableau> tableau_two_quotient(const DominoTableau& t);

}  // namespace descent

#pragma once

#include "linrel/matrix.hpp"
#include "linrel/poly.hpp"

#include <compare>
#include <vector>

namespace linrel {

/// Monic non-constant f_1 | f_2 | ... | f_r with sum of degrees equal to the matrix size.
/// A complete invariant of matrix similarity.
struct InvariantFactors {
    std::vector<Poly> factors;

    friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
    friend std::strong_ordering operator<=>(const InvariantFactors& a, const InvariantFactors& b) {
        return std::lexicographical_compare_three_way(a.factors.begin(), a.factors.end(), b.factors.begin(),
                                                      b.factors.end());
    }
};

/// Smith normal form of x I - M over GF(p)[x]; unit diagonal entries are discarded.
/// Pivot choice: minimal degree, ties broken by (row, column).
InvariantFactors invariant_factors(const Matrix& m);

/// Same size and identical invariant factors.
bool similar(const Matrix& a, const Matrix& b);

}  // namespace linrel

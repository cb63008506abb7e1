#pragma once

#include "linrel/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace linrel {

/// A subspace of GF(p)^n stored by its canonical basis: reduced row-echelon
/// form, monic pivots, strictly increasing pivot columns, no zero rows.
/// Equal subspaces have identical bases, so equality and hashing are structural.
class Subspace {
public:
    static Subspace zero(Prime p, std::size_t ambient);
    static Subspace full(Prime p, std::size_t ambient);
    /// Row space of an arbitrary generator matrix.
    static Subspace row_space(const Matrix& generators);
    /// Adopts a basis that is already canonical. Not checked beyond shape.
    static Subspace from_canonical(Matrix basis, std::vector<std::size_t> pivots);

    [[nodiscard]] Prime prime() const noexcept { return basis_.prime(); }
    [[nodiscard]] std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.rows(); }
    [[nodiscard]] const Matrix& basis() const noexcept { return basis_; }
    [[nodiscard]] std::span<const std::size_t> pivots() const noexcept { return pivots_; }
    [[nodiscard]] bool is_zero() const noexcept { return dim() == 0; }
    [[nodiscard]] bool is_full() const noexcept { return dim() == ambient_dim(); }

    [[nodiscard]] bool contains(const Vector& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;

    [[nodiscard]] std::size_t hash() const noexcept;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Linear hull of `vectors` inside GF(p)^ambient.
Subspace span(Prime p, std::span<const Vector> vectors, std::size_t ambient);

Subspace sum(const Subspace& s, const Subspace& t);
/// Zassenhaus: row-reduce [S|S ; T|0] and read S∩T off the rows with zero left half.
Subspace intersect(const Subspace& s, const Subspace& t);
inline bool equals(const Subspace& s, const Subspace& t) { return s == t; }

/// Standard basis vectors at the non-pivot coordinates of `s`.
std::vector<Vector> complement_basis(const Subspace& s);

/// {v[lead..) : v in rowspace(generators), v[0..lead) = 0}, as a subspace of the trailing coordinates.
Subspace eliminate_leading(const Matrix& generators, std::size_t lead);

/// Image of `s` under the coordinate projection onto columns [first, first+count).
Subspace project(const Subspace& s, std::size_t first, std::size_t count);

/// Number of subspaces of GF(p)^n (sum of Gaussian binomials); saturates at UINT64_MAX.
std::uint64_t count_subspaces(std::uint32_t p, std::size_t n);

/// A choice of pivot columns for an RREF basis, with the number of free entries it leaves.
struct PivotPattern {
    std::vector<std::size_t> pivots;
    std::size_t free_entries = 0;
    std::uint64_t offset = 0;  ///< index of this pattern's first subspace in the full stream
    std::uint64_t count = 0;   ///< p^free_entries
};

/// Deterministic enumeration of every subspace of GF(p)^n exactly once, generated
/// directly from pivot patterns. Order: dimension, then pivot tuple (lexicographic),
/// then free entries in row-major order with the last entry varying fastest.
class SubspaceEnumeration {
public:
    /// Guard: p^n <= 2^20, otherwise GuardExceeded.
    SubspaceEnumeration(Prime p, std::size_t n);

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] std::size_t ambient_dim() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t size() const noexcept { return total_; }
    [[nodiscard]] const std::vector<PivotPattern>& patterns() const noexcept { return patterns_; }

    /// Visits the subspaces of one pattern in stream order, passing the global stream index.
    void for_each_in_pattern(std::size_t pattern_index,
                             const std::function<void(std::uint64_t, const Subspace&)>& visit) const;
    void for_each(const std::function<void(std::uint64_t, const Subspace&)>& visit) const;

private:
    Prime p_;
    std::size_t n_;
    std::vector<PivotPattern> patterns_;
    std::uint64_t total_ = 0;
};

/// Materializes the full stream.
std::vector<Subspace> enumerate_subspaces(Prime p, std::size_t n);

}  // namespace linrel

template <>
struct std::hash<linrel::Subspace> {
    std::size_t operator()(const linrel::Subspace& s) const noexcept { return s.hash(); }
};

#pragma once

#include "linrel/field.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace linrel {

/// A coordinate vector in GF(p)^n.
class Vector {
public:
    Vector(Prime p, std::size_t n) : p_(p), coords_(n, 0) {}
    Vector(Prime p, std::vector<Residue> coords);
    Vector(Prime p, std::initializer_list<std::int64_t> coords);

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
    [[nodiscard]] Residue operator[](std::size_t i) const { return coords_[i]; }
    Residue& operator[](std::size_t i) { return coords_[i]; }
    [[nodiscard]] std::span<const Residue> coords() const noexcept { return coords_; }
    [[nodiscard]] bool is_zero() const noexcept;

    [[nodiscard]] Scalar at(std::size_t i) const { return {coords_.at(i), p_}; }

    static Vector unit(Prime p, std::size_t n, std::size_t i);

    friend Vector operator+(const Vector& a, const Vector& b);
    friend Vector operator*(Residue c, const Vector& v);
    friend bool operator==(const Vector&, const Vector&) = default;

private:
    Prime p_;
    std::vector<Residue> coords_;
};

/// Dense row-major matrix over GF(p). Zero rows or columns are allowed.
class Matrix {
public:
    Matrix(Prime p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(Prime p, std::size_t cols, std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static Matrix identity(Prime p, std::size_t n);
    static Matrix from_rows(Prime p, std::size_t cols, std::span<const Vector> rows);

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return rows_ == 0; }

    [[nodiscard]] Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] Vector row_vector(std::size_t r) const;
    [[nodiscard]] std::span<const Residue> data() const noexcept { return data_; }

    void append_row(std::span<const Residue> r);
    void append_row(const Vector& v) { append_row(v.coords()); }

    /// Columns [first, first+count) as a new matrix.
    [[nodiscard]] Matrix columns(std::size_t first, std::size_t count) const;
    /// Reorders columns: result column j is source column order[j].
    [[nodiscard]] Matrix permute_columns(std::span<const std::size_t> order) const;
    [[nodiscard]] Matrix transpose() const;

    [[nodiscard]] Vector apply(const Vector& x) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    Prime p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

/// Result of row reduction: reduced row-echelon rows (no zero rows) and their pivot columns.
struct Echelon {
    Matrix rows;
    std::vector<std::size_t> pivots;
};

/// In-place Gauss-Jordan elimination with monic pivots; zero rows are dropped.
Echelon row_reduce(Matrix m);

/// Reduced row-echelon form with zero rows removed.
Matrix rref(const Matrix& m);

/// Inverse of a square invertible matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

std::size_t rank(const Matrix& m);

}  // namespace linrel

#include "linrel/matrix.hpp"

#include "linrel/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace linrel {

Vector::Vector(Prime p, std::vector<Residue> coords) : p_(p), coords_(std::move(coords)) {
    for (auto& c : coords_) c = p_.reduce(c);
}

Vector::Vector(Prime p, std::initializer_list<std::int64_t> coords) : p_(p) {
    coords_.reserve(coords.size());
    for (auto c : coords) coords_.push_back(p.reduce(c));
}

bool Vector::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Residue c) { return c == 0; });
}

Vector Vector::unit(Prime p, std::size_t n, std::size_t i) {
    Vector v(p, n);
    v.coords_.at(i) = 1;
    return v;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.p_ != b.p_ || a.size() != b.size()) throw ShapeError("vector shape mismatch");
    Vector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.coords_[i] = a.p_.add(a.coords_[i], b.coords_[i]);
    return out;
}

Vector operator*(Residue c, const Vector& v) {
    Vector out = v;
    for (auto& x : out.coords_) x = v.p_.mul(c % v.p_.value(), x);
    return out;
}

Matrix::Matrix(Prime p, std::size_t cols, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : p_(p), rows_(0), cols_(cols) {
    for (const auto& r : rows) {
        if (r.size() != cols) throw ShapeError("ragged matrix literal");
        for (auto v : r) data_.push_back(p.reduce(v));
        ++rows_;
    }
}

Matrix Matrix::identity(Prime p, std::size_t n) {
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(Prime p, std::size_t cols, std::span<const Vector> rows) {
    Matrix m(p, 0, cols);
    for (const auto& v : rows) {
        if (v.prime() != p) throw ShapeError("vector over a different field");
        if (v.size() != cols)
            throw ShapeError("vector length " + std::to_string(v.size()) + " does not match ambient dimension " +
                             std::to_string(cols));
        m.append_row(v);
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {p_, std::vector<Residue>(s.begin(), s.end())};
}

void Matrix::append_row(std::span<const Residue> r) {
    if (r.size() != cols_) throw ShapeError("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw ShapeError("column range out of bounds");
    Matrix out(p_, rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    return out;
}

Matrix Matrix::permute_columns(std::span<const std::size_t> order) const {
    Matrix out(p_, rows_, order.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < order.size(); ++c) out(r, c) = (*this)(r, order[c]);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_ || x.prime() != p_) throw ShapeError("matrix-vector shape mismatch");
    Vector y(p_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Residue acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = p_.add(acc, p_.mul((*this)(r, c), x[c]));
        y[r] = acc;
    }
    return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.p_ != b.p_ || a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
    const Prime p = a.p_;
    Matrix out(p, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            Residue aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = p.add(out(i, j), p.mul(aik, b(k, j)));
        }
    return out;
}

Echelon row_reduce(Matrix m) {
    const Prime p = m.prime();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t sel = lead;
        while (sel < rows && m(sel, c) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != lead) std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(lead).begin());
        auto lr = m.row(lead);
        if (Residue piv = lr[c]; piv != 1) {
            Residue s = p.inv(piv);
            for (std::size_t j = c; j < cols; ++j) lr[j] = p.mul(lr[j], s);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead) continue;
            auto rr = m.row(r);
            Residue f = rr[c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) rr[j] = p.sub(rr[j], p.mul(f, lr[j]));
        }
        pivots.push_back(c);
        ++lead;
    }
    Matrix out(p, 0, cols);
    for (std::size_t r = 0; r < lead; ++r) out.append_row(m.row(r));
    return {std::move(out), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return row_reduce(m).rows; }

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw ShapeError("inverse of a non-square matrix");
    Matrix aug(m.prime(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto ech = row_reduce(std::move(aug));
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1))
        throw std::domain_error("matrix is singular");
    return ech.rows.columns(n, n);
}

}  // namespace linrel

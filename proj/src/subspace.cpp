#include "linrel/subspace.hpp"

#include "linrel/errors.hpp"

#include <limits>
#include <string>

namespace linrel {

namespace {

void require_same(const Subspace& s, const Subspace& t) {
    if (s.prime() != t.prime()) throw ShapeError("subspaces over different fields");
    if (s.ambient_dim() != t.ambient_dim())
        throw ShapeError("ambient mismatch: " + std::to_string(s.ambient_dim()) + " vs " +
                         std::to_string(t.ambient_dim()));
}

}  // namespace

Subspace Subspace::zero(Prime p, std::size_t ambient) { return {Matrix(p, 0, ambient), {}}; }

Subspace Subspace::full(Prime p, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
    return {Matrix::identity(p, ambient), std::move(piv)};
}

Subspace Subspace::row_space(const Matrix& generators) {
    auto ech = row_reduce(generators);
    return {std::move(ech.rows), std::move(ech.pivots)};
}

Subspace Subspace::from_canonical(Matrix basis, std::vector<std::size_t> pivots) {
    if (basis.rows() != pivots.size()) throw ShapeError("pivot count does not match basis rows");
    return {std::move(basis), std::move(pivots)};
}

bool Subspace::contains(const Vector& v) const {
    if (v.prime() != prime() || v.size() != ambient_dim()) throw ShapeError("vector does not live in the ambient space");
    const Prime p = prime();
    std::vector<Residue> w(v.coords().begin(), v.coords().end());
    for (std::size_t r = 0; r < dim(); ++r) {
        Residue f = w[pivots_[r]];
        if (f == 0) continue;
        auto br = basis_.row(r);
        for (std::size_t j = pivots_[r]; j < w.size(); ++j) w[j] = p.sub(w[j], p.mul(f, br[j]));
    }
    for (auto x : w)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    require_same(*this, other);
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row_vector(r))) return false;
    return true;
}

std::size_t Subspace::hash() const noexcept {
    std::size_t h = 1469598103934665603ull ^ (ambient_dim() * 1099511628211ull) ^ (prime().value() << 20);
    for (auto x : basis_.data()) h = (h ^ x) * 1099511628211ull;
    return h;
}

Subspace span(Prime p, std::span<const Vector> vectors, std::size_t ambient) {
    return Subspace::row_space(Matrix::from_rows(p, ambient, vectors));
}

Subspace sum(const Subspace& s, const Subspace& t) {
    require_same(s, t);
    Matrix stacked = s.basis();
    for (std::size_t r = 0; r < t.dim(); ++r) stacked.append_row(t.basis().row(r));
    return Subspace::row_space(stacked);
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    require_same(s, t);
    const std::size_t n = s.ambient_dim();
    Matrix block(s.prime(), 0, 2 * n);
    std::vector<Residue> row(2 * n);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        auto b = s.basis().row(r);
        std::copy(b.begin(), b.end(), row.begin());
        std::copy(b.begin(), b.end(), row.begin() + n);
        block.append_row(row);
    }
    for (std::size_t r = 0; r < t.dim(); ++r) {
        auto b = t.basis().row(r);
        std::copy(b.begin(), b.end(), row.begin());
        std::fill(row.begin() + n, row.end(), 0);
        block.append_row(row);
    }
    return eliminate_leading(block, n);
}

std::vector<Vector> complement_basis(const Subspace& s) {
    std::vector<Vector> out;
    auto piv = s.pivots();
    std::size_t k = 0;
    for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
        if (k < piv.size() && piv[k] == c) {
            ++k;
            continue;
        }
        out.push_back(Vector::unit(s.prime(), s.ambient_dim(), c));
    }
    return out;
}

Subspace eliminate_leading(const Matrix& generators, std::size_t lead) {
    auto ech = row_reduce(generators);
    const std::size_t tail = generators.cols() - lead;
    Matrix basis(generators.prime(), 0, tail);
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < ech.rows.rows(); ++r) {
        if (ech.pivots[r] < lead) continue;
        basis.append_row(ech.rows.row(r).subspan(lead));
        pivots.push_back(ech.pivots[r] - lead);
    }
    // Rows pivoting in the tail are zero on the leading block, and their tail parts are already in RREF.
    return Subspace::from_canonical(std::move(basis), std::move(pivots));
}

Subspace project(const Subspace& s, std::size_t first, std::size_t count) {
    return Subspace::row_space(s.basis().columns(first, count));
}

std::uint64_t count_subspaces(std::uint32_t p, std::size_t n) {
    // Gaussian binomials via the recurrence [n,k] = [n-1,k-1] + p^k [n-1,k].
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
    auto sat_mul = [](std::uint64_t a, std::uint64_t b) { return (b != 0 && a > kMax / b) ? kMax : a * b; };
    std::vector<std::uint64_t> row{1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<std::uint64_t> next(m + 1, 0);
        std::uint64_t pk = 1;
        for (std::size_t k = 0; k <= m; ++k) {
            std::uint64_t left = k > 0 ? row[k - 1] : 0;
            std::uint64_t right = k < m ? sat_mul(pk, row[k]) : 0;
            next[k] = sat_add(left, right);
            pk = sat_mul(pk, p);
        }
        row = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto v : row) total = sat_add(total, v);
    return total;
}

SubspaceEnumeration::SubspaceEnumeration(Prime p, std::size_t n) : p_(p), n_(n) {
    std::uint64_t pn = 1;
    for (std::size_t i = 0; i < n; ++i) {
        pn *= p.value();
        if (pn > (1u << 20))
            throw GuardExceeded("subspace enumeration guard exceeded: " + std::to_string(p.value()) + "^" +
                                std::to_string(n) + " > 2^20");
    }
    for (std::size_t dim = 0; dim <= n; ++dim) {
        // pivot tuples of size dim in lexicographic order
        std::vector<std::size_t> c(dim);
        for (std::size_t i = 0; i < dim; ++i) c[i] = i;
        while (true) {
            PivotPattern pat;
            pat.pivots = c;
            for (std::size_t i = 0; i < dim; ++i) pat.free_entries += (n - 1 - c[i]) - (dim - 1 - i);
            pat.count = 1;
            for (std::size_t i = 0; i < pat.free_entries; ++i) {
                if (pat.count > std::numeric_limits<std::uint64_t>::max() / p.value())
                    throw GuardExceeded("subspace enumeration too large");
                pat.count *= p.value();
            }
            pat.offset = total_;
            total_ += pat.count;
            patterns_.push_back(std::move(pat));
            // advance to the next combination
            std::size_t i = dim;
            while (i > 0 && c[i - 1] == n - dim + i - 1) --i;
            if (i == 0) break;
            ++c[i - 1];
            for (std::size_t j = i; j < dim; ++j) c[j] = c[j - 1] + 1;
        }
    }
}

void SubspaceEnumeration::for_each_in_pattern(
    std::size_t pattern_index, const std::function<void(std::uint64_t, const Subspace&)>& visit) const {
    const auto& pat = patterns_.at(pattern_index);
    const std::size_t dim = pat.pivots.size();
    // free positions (row, col) in row-major order
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<bool> is_pivot(n_, false);
    for (auto c : pat.pivots) is_pivot[c] = true;
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = pat.pivots[r] + 1; c < n_; ++c)
            if (!is_pivot[c]) slots.emplace_back(r, c);

    Matrix basis(p_, dim, n_);
    for (std::size_t r = 0; r < dim; ++r) basis(r, pat.pivots[r]) = 1;
    std::vector<Residue> digits(slots.size(), 0);
    for (std::uint64_t idx = 0; idx < pat.count; ++idx) {
        for (std::size_t s = 0; s < slots.size(); ++s) basis(slots[s].first, slots[s].second) = digits[s];
        visit(pat.offset + idx, Subspace::from_canonical(basis, pat.pivots));
        for (std::size_t s = slots.size(); s-- > 0;) {
            if (++digits[s] < p_.value()) break;
            digits[s] = 0;
        }
    }
}

void SubspaceEnumeration::for_each(const std::function<void(std::uint64_t, const Subspace&)>& visit) const {
    for (std::size_t i = 0; i < patterns_.size(); ++i) for_each_in_pattern(i, visit);
}

std::vector<Subspace> enumerate_subspaces(Prime p, std::size_t n) {
    SubspaceEnumeration e(p, n);
    std::vector<Subspace> out;
    out.reserve(e.size());
    e.for_each([&](std::uint64_t, const Subspace& s) { out.push_back(s); });
    return out;
}

}  // namespace linrel

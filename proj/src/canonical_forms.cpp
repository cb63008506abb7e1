#include "linrel/canonical_forms.hpp"

#include "linrel/errors.hpp"

#include <optional>

namespace linrel {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

std::optional<std::pair<std::size_t, std::size_t>> min_degree_entry(const PolyMatrix& a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    int best_deg = 0;
    for (std::size_t i = t; i < a.size(); ++i)
        for (std::size_t j = t; j < a.size(); ++j) {
            if (a[i][j].is_zero()) continue;
            if (!best || a[i][j].degree() < best_deg) {
                best = {i, j};
                best_deg = a[i][j].degree();
            }
        }
    return best;
}

}  // namespace

InvariantFactors invariant_factors(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw ShapeError("invariant factors of a non-square matrix");
    const Prime p = m.prime();
    PolyMatrix a(n, std::vector<Poly>(n, Poly(p)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly entry = Poly::constant(p, p.neg(m(i, j)));
            if (i == j) entry = entry + Poly::x(p);
            a[i][j] = std::move(entry);
        }

    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            auto pos = min_degree_entry(a, t);
            if (!pos) break;
            auto [pi, pj] = *pos;
            std::swap(a[t], a[pi]);
            for (auto& row : a) std::swap(row[t], row[pj]);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a[i][t].is_zero()) continue;
                auto [q, r] = divmod(a[i][t], a[t][t]);
                for (std::size_t j = t; j < n; ++j) a[i][j] = a[i][j] - q * a[t][j];
                clean = clean && r.is_zero();
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j].is_zero()) continue;
                auto [q, r] = divmod(a[t][j], a[t][t]);
                for (std::size_t i = t; i < n; ++i) a[i][j] = a[i][j] - q * a[i][t];
                clean = clean && r.is_zero();
            }
            if (!clean) continue;

            // the pivot must divide the remaining block; otherwise fold an offending row into row t
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!divmod(a[i][j], a[t][t]).second.is_zero()) {
                        for (std::size_t c = t; c < n; ++c) a[t][c] = a[t][c] + a[i][c];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
    }

    InvariantFactors out;
    for (std::size_t t = 0; t < n; ++t) {
        if (a[t][t].is_zero()) throw InvariantViolation("x I - M has a zero Smith invariant");
        if (a[t][t].degree() > 0) out.factors.push_back(monic(a[t][t]));
    }
    return out;
}

bool similar(const Matrix& a, const Matrix& b) {
    if (a.prime() != b.prime()) throw ShapeError("similarity across fields");
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return invariant_factors(a) == invariant_factors(b);
}

}  // namespace linrel

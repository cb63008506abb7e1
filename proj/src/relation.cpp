#include "linrel/relation.hpp"

#include "linrel/errors.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace linrel {

LinearRelation::LinearRelation(std::size_t dim_dom, std::size_t dim_cod, Subspace graph)
    : dom_(dim_dom), cod_(dim_cod), graph_(std::move(graph)) {
    if (graph_.ambient_dim() != dom_ + cod_)
        throw ShapeError("graph ambient " + std::to_string(graph_.ambient_dim()) + " != " + std::to_string(dom_) +
                         " + " + std::to_string(cod_));
}

LinearRelation LinearRelation::from_generators(Prime p, std::size_t dim_dom, std::size_t dim_cod,
                                               std::span<const Vector> generators) {
    return {dim_dom, dim_cod, span(p, generators, dim_dom + dim_cod)};
}

LinearRelation LinearRelation::from_matrix(const Matrix& m) {
    const std::size_t dom = m.cols(), cod = m.rows();
    Matrix g(m.prime(), dom, dom + cod);
    std::vector<std::size_t> piv(dom);
    for (std::size_t i = 0; i < dom; ++i) {
        g(i, i) = 1;
        piv[i] = i;
        for (std::size_t j = 0; j < cod; ++j) g(i, dom + j) = m(j, i);
    }
    return {dom, cod, Subspace::from_canonical(std::move(g), std::move(piv))};
}

LinearRelation LinearRelation::top(Prime p, std::size_t dim_dom, std::size_t dim_cod) {
    return {dim_dom, dim_cod, Subspace::full(p, dim_dom + dim_cod)};
}

LinearRelation LinearRelation::bottom(Prime p, std::size_t dim_dom, std::size_t dim_cod) {
    return {dim_dom, dim_cod, Subspace::zero(p, dim_dom + dim_cod)};
}

LinearRelation LinearRelation::identity(Prime p, std::size_t n) { return from_matrix(Matrix::identity(p, n)); }

bool LinearRelation::relates(const Vector& x, const Vector& y) const {
    if (x.size() != dom_ || y.size() != cod_) throw ShapeError("pair does not match relation shape");
    std::vector<Residue> xy(x.coords().begin(), x.coords().end());
    xy.insert(xy.end(), y.coords().begin(), y.coords().end());
    return graph_.contains(Vector(prime(), std::move(xy)));
}

LinearRelation compose(const LinearRelation& psi, const LinearRelation& phi) {
    if (phi.prime() != psi.prime()) throw ShapeError("composition across fields");
    if (phi.dim_cod() != psi.dim_dom())
        throw ShapeError("cannot compose: codomain " + std::to_string(phi.dim_cod()) + " != domain " +
                         std::to_string(psi.dim_dom()));
    const Prime p = phi.prime();
    const std::size_t a = phi.dim_dom(), b = phi.dim_cod(), c = psi.dim_cod();
    // Columns ordered (B, A, C). Rows (b, a, 0) from phi and (-b', 0, c) from psi span
    // W = {(b - b', a, c)}; its slice with vanishing B block is the intersection of phi+C and A+psi
    // inside A+B+C, projected to A+C.
    Matrix w(p, 0, b + a + c);
    std::vector<Residue> row(b + a + c);
    const auto& pg = phi.graph().basis();
    for (std::size_t r = 0; r < pg.rows(); ++r) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t j = 0; j < a; ++j) row[b + j] = pg(r, j);
        for (std::size_t j = 0; j < b; ++j) row[j] = pg(r, a + j);
        w.append_row(row);
    }
    const auto& qg = psi.graph().basis();
    for (std::size_t r = 0; r < qg.rows(); ++r) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t j = 0; j < b; ++j) row[j] = p.neg(qg(r, j));
        for (std::size_t j = 0; j < c; ++j) row[b + a + j] = qg(r, b + j);
        w.append_row(row);
    }
    return {a, c, eliminate_leading(w, b)};
}

LinearRelation inverse(const LinearRelation& phi) {
    const std::size_t a = phi.dim_dom(), b = phi.dim_cod();
    std::vector<std::size_t> order(a + b);
    for (std::size_t j = 0; j < b; ++j) order[j] = a + j;
    for (std::size_t j = 0; j < a; ++j) order[b + j] = j;
    return {b, a, Subspace::row_space(phi.graph().basis().permute_columns(order))};
}

Subspace image(const LinearRelation& phi, const Subspace& s) {
    if (s.prime() != phi.prime() || s.ambient_dim() != phi.dim_dom())
        throw ShapeError("subspace does not live in the relation's domain");
    const Prime p = phi.prime();
    const std::size_t a = phi.dim_dom(), b = phi.dim_cod();
    // rows (a, b) of phi and (-s, 0); keep combinations with zero domain part
    Matrix w = phi.graph().basis();
    std::vector<Residue> row(a + b, 0);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        for (std::size_t j = 0; j < a; ++j) row[j] = p.neg(s.basis()(r, j));
        w.append_row(row);
    }
    return eliminate_leading(w, a);
}

Subspace preimage(const LinearRelation& phi, const Subspace& s) { return image(inverse(phi), s); }

Subspace indeterminacy(const LinearRelation& phi) { return image(phi, Subspace::zero(phi.prime(), phi.dim_dom())); }

Subspace kernel(const LinearRelation& phi) { return preimage(phi, Subspace::zero(phi.prime(), phi.dim_cod())); }

Subspace domain_of_definition(const LinearRelation& phi) { return project(phi.graph(), 0, phi.dim_dom()); }

Subspace range(const LinearRelation& phi) { return project(phi.graph(), phi.dim_dom(), phi.dim_cod()); }

bool is_single_valued(const LinearRelation& phi) { return indeterminacy(phi).is_zero(); }
bool is_total(const LinearRelation& phi) { return domain_of_definition(phi).is_full(); }
bool is_injective(const LinearRelation& phi) { return kernel(phi).is_zero(); }
bool is_surjective(const LinearRelation& phi) { return range(phi).is_full(); }
bool is_matching(const LinearRelation& phi) { return is_single_valued(phi) && is_injective(phi); }
bool is_correspondence(const LinearRelation& phi) { return is_total(phi) && is_surjective(phi); }
bool is_isomorphism(const LinearRelation& phi) { return is_matching(phi) && is_correspondence(phi); }

LinearRelation power(const LinearRelation& alpha, std::int64_t k) {
    if (!alpha.is_endo())
        throw ShapeError("power of a non-endorelation (" + std::to_string(alpha.dim_dom()) + " -> " +
                         std::to_string(alpha.dim_cod()) + ")");
    LinearRelation base = k < 0 ? inverse(alpha) : alpha;
    auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
    LinearRelation acc = LinearRelation::identity(alpha.prime(), alpha.dim_dom());
    while (e != 0) {
        if (e & 1u) acc = compose(base, acc);
        e >>= 1;
        if (e != 0) base = compose(base, base);
    }
    return acc;
}

Matrix to_matrix(const LinearRelation& phi) {
    if (!is_single_valued(phi) || !is_total(phi))
        throw std::domain_error("to_matrix requires a single-valued total relation");
    const std::size_t a = phi.dim_dom(), b = phi.dim_cod();
    // canonical basis rows are (e_i, M e_i), i = 0..a-1
    return phi.graph().basis().columns(a, b).transpose();
}

LinearRelation random_relation(Prime p, std::size_t dim_dom, std::size_t dim_cod, std::mt19937_64& rng) {
    const std::size_t n = dim_dom + dim_cod;
    std::uniform_int_distribution<std::size_t> count(0, n);
    std::uniform_int_distribution<Residue> entry(0, p.value() - 1);
    Matrix g(p, count(rng), n);
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) g(r, c) = entry(rng);
    return {dim_dom, dim_cod, Subspace::row_space(g)};
}

}  // namespace linrel

namespace linrel {

std::optional<Vector> find_image(const LinearRelation& phi, const Vector& x) {
    if (x.prime() != phi.prime() || x.size() != phi.dim_dom()) throw ShapeError("vector is not in the domain");
    const Prime p = phi.prime();
    const std::size_t a = phi.dim_dom(), b = phi.dim_cod();
    const auto& basis = phi.graph().basis();
    const auto piv = phi.graph().pivots();
    std::vector<Residue> rest(x.coords().begin(), x.coords().end());
    std::vector<Residue> y(b, 0);
    for (std::size_t r = 0; r < basis.rows() && piv[r] < a; ++r) {
        Residue f = rest[piv[r]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < a; ++j) rest[j] = p.sub(rest[j], p.mul(f, basis(r, j)));
        for (std::size_t j = 0; j < b; ++j) y[j] = p.add(y[j], p.mul(f, basis(r, a + j)));
    }
    for (auto v : rest)
        if (v != 0) return std::nullopt;
    return Vector(p, std::move(y));
}

}  // namespace linrel

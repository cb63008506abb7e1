#pragma once

#include "linrel/subspace.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace linrel {

/// A linear relation phi: GF(p)^dom -o GF(p)^cod, stored as its graph, a subspace
/// of GF(p)^(dom+cod) with domain coordinates first.
class LinearRelation {
public:
    LinearRelation(std::size_t dim_dom, std::size_t dim_cod, Subspace graph);

    static LinearRelation from_generators(Prime p, std::size_t dim_dom, std::size_t dim_cod,
                                          std::span<const Vector> generators);
    /// Graph of x -> M x, where M is cod x dom.
    static LinearRelation from_matrix(const Matrix& m);
    static LinearRelation top(Prime p, std::size_t dim_dom, std::size_t dim_cod);
    static LinearRelation bottom(Prime p, std::size_t dim_dom, std::size_t dim_cod);
    static LinearRelation identity(Prime p, std::size_t n);

    [[nodiscard]] Prime prime() const noexcept { return graph_.prime(); }
    [[nodiscard]] std::size_t dim_dom() const noexcept { return dom_; }
    [[nodiscard]] std::size_t dim_cod() const noexcept { return cod_; }
    [[nodiscard]] const Subspace& graph() const noexcept { return graph_; }
    [[nodiscard]] bool is_endo() const noexcept { return dom_ == cod_; }

    /// (x, y) in the graph.
    [[nodiscard]] bool relates(const Vector& x, const Vector& y) const;

    friend bool operator==(const LinearRelation&, const LinearRelation&) = default;

private:
    std::size_t dom_;
    std::size_t cod_;
    Subspace graph_;
};

/// psi o phi = {(a, c) : exists b, (a, b) in phi, (b, c) in psi}.
LinearRelation compose(const LinearRelation& psi, const LinearRelation& phi);
LinearRelation inverse(const LinearRelation& phi);

Subspace image(const LinearRelation& phi, const Subspace& s);
Subspace preimage(const LinearRelation& phi, const Subspace& s);

/// phi(0)
Subspace indeterminacy(const LinearRelation& phi);
/// phi^{-1}(0)
Subspace kernel(const LinearRelation& phi);
/// phi^{-1}(B)
Subspace domain_of_definition(const LinearRelation& phi);
/// phi(A)
Subspace range(const LinearRelation& phi);

bool is_single_valued(const LinearRelation& phi);
bool is_total(const LinearRelation& phi);
bool is_injective(const LinearRelation& phi);
bool is_surjective(const LinearRelation& phi);
bool is_matching(const LinearRelation& phi);
bool is_correspondence(const LinearRelation& phi);
bool is_isomorphism(const LinearRelation& phi);

/// alpha^k for signed k; alpha^0 is the identity and alpha^{-k} = (alpha^{-1})^k.
LinearRelation power(const LinearRelation& alpha, std::int64_t k);

/// The cod x dom matrix of a single-valued total relation.
/// Throws std::domain_error otherwise.
Matrix to_matrix(const LinearRelation& phi);

/// Span of a random number (0..dom+cod) of uniform random generators.
LinearRelation random_relation(Prime p, std::size_t dim_dom, std::size_t dim_cod, std::mt19937_64& rng);

}  // namespace linrel

namespace linrel {

/// Some y with (x, y) in phi, or nullopt when x is outside the domain of definition.
std::optional<Vector> find_image(const LinearRelation& phi, const Vector& x);

}  // namespace linrel

#pragma once

#include "linrel/relation.hpp"

#include <vector>

namespace linrel {

/// An object (GF(p)^n, alpha) with alpha an endorelation. n = 0 is allowed.
class EndoObject {
public:
    explicit EndoObject(LinearRelation alpha);
    /// (0, id_0)
    static EndoObject zero_object(Prime p);

    [[nodiscard]] Prime prime() const noexcept { return alpha_.prime(); }
    [[nodiscard]] std::size_t dim() const noexcept { return alpha_.dim_dom(); }
    [[nodiscard]] const LinearRelation& alpha() const noexcept { return alpha_; }

    friend bool operator==(const EndoObject&, const EndoObject&) = default;

private:
    LinearRelation alpha_;
};

/// Iterates S_{l+1} = alpha(S_l) until two consecutive terms agree.
/// terms[index] == terms[index + 1]; index is the first such position.
struct StabilizedChain {
    std::vector<Subspace> terms;
    std::size_t index = 0;

    [[nodiscard]] const Subspace& limit() const { return terms[index]; }
};

/// Throws InvariantViolation if the chain has not settled after dim + 1 steps.
StabilizedChain stabilize(const LinearRelation& step, const Subspace& start);

StabilizedChain forward_kernel_chain(const EndoObject& obj);   ///< alpha^l(0)
StabilizedChain backward_kernel_chain(const EndoObject& obj);  ///< alpha^{-l}(0)
StabilizedChain forward_image_chain(const EndoObject& obj);    ///< alpha^l(A)
StabilizedChain backward_image_chain(const EndoObject& obj);   ///< alpha^{-l}(A)

/// Generalized kernel: sum of the stabilized alpha^l(0) and alpha^{-l}(0).
Subspace gker(const EndoObject& obj);
/// Generalized image: intersection of the stabilized alpha^l(A) and alpha^{-l}(A).
Subspace gim(const EndoObject& obj);

/// Embedding GF(p)^{dim S} -> ambient sending e_i to the i-th canonical basis vector of S.
LinearRelation inclusion_relation(const Subspace& s);
/// Surjection GF(p)^n -> GF(p)^{n - dim K} killing K and sending the complement basis of K to the standard basis.
LinearRelation projection_relation(std::size_t ambient_dim, const Subspace& k);

/// phi o alpha == beta o phi
bool is_endo_morphism(const LinearRelation& phi, const EndoObject& src, const EndoObject& dst);

/// Restriction to the generalized image: (gim, i^{-1} o alpha o i).
EndoObject LE(const EndoObject& obj);
/// Quotient by the generalized kernel: (A/gker, pi o alpha o pi^{-1}).
EndoObject LM(const EndoObject& obj);

/// i_B^{-1} o phi o i_A. Throws std::invalid_argument unless phi is a morphism src -> dst.
LinearRelation le_morphism(const LinearRelation& phi, const EndoObject& src, const EndoObject& dst);
/// pi_B o phi o pi_A^{-1}. Same precondition.
LinearRelation lm_morphism(const LinearRelation& phi, const EndoObject& src, const EndoObject& dst);

/// The bijection produced by the Leray functor, in the basis induced by the
/// gker complement followed by the canonical gim basis.
struct LerayForm {
    Prime p;
    std::size_t dim;
    Matrix matrix;  ///< dim x dim, invertible
};

/// L = LE o LM. Throws InvariantViolation if the result is not an isomorphism relation.
LerayForm leray(const EndoObject& obj);
/// LM o LE, the reversed order. Same check.
LerayForm leray_reversed(const EndoObject& obj);

/// Explicit Szymczak isomorphism data [phi, k] : obj -> target and [psi, k] : target -> obj.
struct SzymWitness {
    LinearRelation phi;
    LinearRelation psi;
    std::size_t k;
    EndoObject target;
};

/// phi = i^{-1} o alpha^k, psi = alpha^k o i, k the stabilization index of the image chains.
SzymWitness szym_witness_LE(const EndoObject& obj);
/// phi = pi o alpha^k, psi = alpha^k o pi^{-1}, k the stabilization index of the kernel chains.
SzymWitness szym_witness_LM(const EndoObject& obj);

/// The four identities a witness must satisfy, with beta the target endorelation:
///   (a) beta o phi = phi o alpha        (b) psi o beta = alpha o psi
///   (c) psi o phi = alpha^{2k}          (d) beta^{2k} = phi o psi
struct WitnessCheck {
    bool a = false, b = false, c = false, d = false;
    [[nodiscard]] bool all() const noexcept { return a && b && c && d; }
};
WitnessCheck check_witness(const EndoObject& obj, const SzymWitness& w);

}  // namespace linrel

#include "linrel/leray.hpp"

#include "linrel/errors.hpp"

#include <algorithm>
#include <string>

namespace linrel {

EndoObject::EndoObject(LinearRelation alpha) : alpha_(std::move(alpha)) {
    if (!alpha_.is_endo())
        throw ShapeError("not an endorelation: " + std::to_string(alpha_.dim_dom()) + " -> " +
                         std::to_string(alpha_.dim_cod()));
}

EndoObject EndoObject::zero_object(Prime p) { return EndoObject(LinearRelation::identity(p, 0)); }

StabilizedChain stabilize(const LinearRelation& step, const Subspace& start) {
    StabilizedChain chain;
    chain.terms.push_back(start);
    const std::size_t cap = step.dim_dom() + 1;
    for (std::size_t l = 0;; ++l) {
        chain.terms.push_back(image(step, chain.terms.back()));
        if (chain.terms[l] == chain.terms[l + 1]) {
            chain.index = l;
            return chain;
        }
        if (l >= cap)
            throw InvariantViolation("subspace chain failed to stabilize within " + std::to_string(cap) + " steps");
    }
}

StabilizedChain forward_kernel_chain(const EndoObject& obj) {
    return stabilize(obj.alpha(), Subspace::zero(obj.prime(), obj.dim()));
}
StabilizedChain backward_kernel_chain(const EndoObject& obj) {
    return stabilize(inverse(obj.alpha()), Subspace::zero(obj.prime(), obj.dim()));
}
StabilizedChain forward_image_chain(const EndoObject& obj) {
    return stabilize(obj.alpha(), Subspace::full(obj.prime(), obj.dim()));
}
StabilizedChain backward_image_chain(const EndoObject& obj) {
    return stabilize(inverse(obj.alpha()), Subspace::full(obj.prime(), obj.dim()));
}

Subspace gker(const EndoObject& obj) {
    return sum(forward_kernel_chain(obj).limit(), backward_kernel_chain(obj).limit());
}

Subspace gim(const EndoObject& obj) {
    return intersect(forward_image_chain(obj).limit(), backward_image_chain(obj).limit());
}

LinearRelation inclusion_relation(const Subspace& s) { return LinearRelation::from_matrix(s.basis().transpose()); }

LinearRelation projection_relation(std::size_t ambient_dim, const Subspace& k) {
    if (k.ambient_dim() != ambient_dim) throw ShapeError("kernel subspace does not live in the ambient space");
    const Prime p = k.prime();
    const auto comp = complement_basis(k);
    const std::size_t m = comp.size();
    Matrix g(p, 0, ambient_dim + m);
    std::vector<Residue> row(ambient_dim + m);
    for (std::size_t r = 0; r < k.dim(); ++r) {
        std::fill(row.begin(), row.end(), 0);
        auto b = k.basis().row(r);
        std::copy(b.begin(), b.end(), row.begin());
        g.append_row(row);
    }
    for (std::size_t j = 0; j < m; ++j) {
        std::fill(row.begin(), row.end(), 0);
        std::copy(comp[j].coords().begin(), comp[j].coords().end(), row.begin());
        row[ambient_dim + j] = 1;
        g.append_row(row);
    }
    return {ambient_dim, m, Subspace::row_space(g)};
}

bool is_endo_morphism(const LinearRelation& phi, const EndoObject& src, const EndoObject& dst) {
    if (phi.dim_dom() != src.dim() || phi.dim_cod() != dst.dim()) return false;
    return compose(phi, src.alpha()) == compose(dst.alpha(), phi);
}

namespace {

LinearRelation conjugate(const LinearRelation& outer_inv, const LinearRelation& middle, const LinearRelation& inner) {
    return compose(outer_inv, compose(middle, inner));
}

void require_morphism(const LinearRelation& phi, const EndoObject& src, const EndoObject& dst) {
    if (!is_endo_morphism(phi, src, dst)) throw std::invalid_argument("relation is not a morphism in Endo");
}

}  // namespace

EndoObject LE(const EndoObject& obj) {
    const auto incl = inclusion_relation(gim(obj));
    return EndoObject(conjugate(inverse(incl), obj.alpha(), incl));
}

EndoObject LM(const EndoObject& obj) {
    const auto proj = projection_relation(obj.dim(), gker(obj));
    return EndoObject(conjugate(proj, obj.alpha(), inverse(proj)));
}

LinearRelation le_morphism(const LinearRelation& phi, const EndoObject& src, const EndoObject& dst) {
    require_morphism(phi, src, dst);
    return conjugate(inverse(inclusion_relation(gim(dst))), phi, inclusion_relation(gim(src)));
}

LinearRelation lm_morphism(const LinearRelation& phi, const EndoObject& src, const EndoObject& dst) {
    require_morphism(phi, src, dst);
    return conjugate(projection_relation(dst.dim(), gker(dst)), phi,
                     inverse(projection_relation(src.dim(), gker(src))));
}

namespace {

LerayForm extract_form(const EndoObject& result, const char* what) {
    if (!is_isomorphism(result.alpha()))
        throw InvariantViolation(std::string(what) + " did not produce a bijection");
    return {result.prime(), result.dim(), to_matrix(result.alpha())};
}

}  // namespace

LerayForm leray(const EndoObject& obj) { return extract_form(LE(LM(obj)), "LE o LM"); }

LerayForm leray_reversed(const EndoObject& obj) { return extract_form(LM(LE(obj)), "LM o LE"); }

SzymWitness szym_witness_LE(const EndoObject& obj) {
    const auto fwd = forward_image_chain(obj);
    const auto bwd = backward_image_chain(obj);
    const std::size_t k = std::max(fwd.index, bwd.index);
    const auto incl = inclusion_relation(intersect(fwd.limit(), bwd.limit()));
    const auto incl_inv = inverse(incl);
    const auto ak = power(obj.alpha(), static_cast<std::int64_t>(k));
    return {compose(incl_inv, ak), compose(ak, incl), k, EndoObject(conjugate(incl_inv, obj.alpha(), incl))};
}

SzymWitness szym_witness_LM(const EndoObject& obj) {
    const auto fwd = forward_kernel_chain(obj);
    const auto bwd = backward_kernel_chain(obj);
    const std::size_t k = std::max(fwd.index, bwd.index);
    const auto proj = projection_relation(obj.dim(), sum(fwd.limit(), bwd.limit()));
    const auto proj_inv = inverse(proj);
    const auto ak = power(obj.alpha(), static_cast<std::int64_t>(k));
    return {compose(proj, ak), compose(ak, proj_inv), k, EndoObject(conjugate(proj, obj.alpha(), proj_inv))};
}

WitnessCheck check_witness(const EndoObject& obj, const SzymWitness& w) {
    const auto& alpha = obj.alpha();
    const auto& beta = w.target.alpha();
    const auto twice = static_cast<std::int64_t>(2 * w.k);
    WitnessCheck out;
    out.a = compose(beta, w.phi) == compose(w.phi, alpha);
    out.b = compose(w.psi, beta) == compose(alpha, w.psi);
    out.c = compose(w.psi, w.phi) == power(alpha, twice);
    out.d = power(beta, twice) == compose(w.phi, w.psi);
    return out;
}

}  // namespace linrel

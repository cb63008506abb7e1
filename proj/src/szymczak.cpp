#include "linrel/szymczak.hpp"

#include "linrel/errors.hpp"
#include "linrel/relation_io.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

namespace linrel {

SzymClassLabel szym_label(const LerayForm& form) {
    return {form.p.value(), form.dim, invariant_factors(form.matrix)};
}

SzymClassLabel szym_label(const EndoObject& obj) { return szym_label(leray(obj)); }

bool szym_equiv(const EndoObject& a, const EndoObject& b) {
    if (a.prime() != b.prime()) throw ShapeError("Szymczak equivalence across fields");
    return szym_label(a) == szym_label(b);
}

nlohmann::json label_to_json(const SzymClassLabel& label) {
    auto factors = nlohmann::json::array();
    for (const auto& f : label.factors.factors) factors.push_back(f.coeffs());
    return {{"p", label.p}, {"dim", label.dim}, {"invariant_factors", factors}};
}

SzymClassLabel label_from_json(const nlohmann::json& doc) {
    try {
        const Prime p(doc.at("p").get<std::uint32_t>());
        SzymClassLabel out{p.value(), doc.at("dim").get<std::size_t>(), {}};
        for (const auto& f : doc.at("invariant_factors")) out.factors.factors.emplace_back(p, f.get<std::vector<Residue>>());
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed class label: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("malformed class label: ") + e.what());
    }
}

std::string label_key(const SzymClassLabel& label) {
    return std::to_string(label.dim) + ":" + label_to_json(label).at("invariant_factors").dump();
}

nlohmann::json leray_form_to_json(const LerayForm& form) {
    return {{"p", form.p.value()},
            {"dim", form.dim},
            {"matrix", matrix_to_json(form.matrix)},
            {"label", label_to_json(szym_label(form))}};
}

PowerProfile power_profile(const LinearRelation& alpha) {
    if (!alpha.is_endo()) throw ShapeError("power profile of a non-endorelation");
    std::unordered_map<Subspace, std::size_t> seen;
    LinearRelation current = LinearRelation::identity(alpha.prime(), alpha.dim_dom());
    for (std::size_t j = 0;; ++j) {
        auto [it, inserted] = seen.emplace(current.graph(), j);
        if (!inserted) return {it->second, j - it->second};
        current = compose(alpha, current);
    }
}

bool is_shift_equivalence(const EndoObject& a, const EndoObject& b, const LinearRelation& phi,
                          const LinearRelation& psi, std::size_t t, std::size_t k) {
    const auto& alpha = a.alpha();
    const auto& beta = b.alpha();
    if (!is_endo_morphism(phi, a, b) || !is_endo_morphism(psi, b, a)) return false;
    const auto kk = static_cast<std::int64_t>(k), tk = static_cast<std::int64_t>(t + k);
    return compose(compose(psi, phi), power(alpha, kk)) == power(alpha, tk) &&
           compose(compose(phi, psi), power(beta, kk)) == power(beta, tk);
}

std::optional<OracleWitness> oracle_search(const EndoObject& a, const EndoObject& b) {
    if (a.prime() != b.prime()) throw ShapeError("Szymczak equivalence across fields");
    const Prime p = a.prime();
    const std::size_t n = a.dim() + b.dim();
    {
        std::uint64_t size = 1;
        for (std::size_t i = 0; i < n * n; ++i) {
            size *= p.value();
            if (size > (1u << 24))
                throw GuardExceeded("oracle guard exceeded: p^((dimA+dimB)^2) > 2^24");
        }
    }
    const auto pa = power_profile(a.alpha());
    const auto pb = power_profile(b.alpha());
    const std::size_t bound = std::max(pa.preperiod, pb.preperiod) + std::lcm(pa.period, pb.period);

    std::vector<LinearRelation> apow, bpow;
    apow.push_back(LinearRelation::identity(p, a.dim()));
    bpow.push_back(LinearRelation::identity(p, b.dim()));
    for (std::size_t j = 1; j <= 2 * bound; ++j) {
        apow.push_back(compose(a.alpha(), apow.back()));
        bpow.push_back(compose(b.alpha(), bpow.back()));
    }

    SubspaceEnumeration all(p, n);
    std::vector<LinearRelation> phis, psis;
    all.for_each([&](std::uint64_t, const Subspace& g) {
        LinearRelation phi(a.dim(), b.dim(), g);
        if (is_endo_morphism(phi, a, b)) phis.push_back(phi);
        LinearRelation psi(b.dim(), a.dim(), g);
        if (is_endo_morphism(psi, b, a)) psis.push_back(std::move(psi));
    });

    for (const auto& phi : phis)
        for (const auto& psi : psis) {
            const auto left = compose(psi, phi);
            const auto right = compose(phi, psi);
            for (std::size_t k = 0; k <= bound; ++k) {
                const auto lk = compose(left, apow[k]);
                const auto rk = compose(right, bpow[k]);
                for (std::size_t t = 0; t <= bound; ++t)
                    if (lk == apow[t + k] && rk == bpow[t + k]) return OracleWitness{phi, psi, t, k};
            }
        }
    return std::nullopt;
}

bool oracle_szym_equiv(const EndoObject& a, const EndoObject& b) { return oracle_search(a, b).has_value(); }

}  // namespace linrel

std::size_t std::hash<linrel::SzymClassLabel>::operator()(const linrel::SzymClassLabel& l) const noexcept {
    std::size_t h = std::hash<std::uint64_t>{}(l.p * 1000003ull + l.dim);
    for (const auto& f : l.factors.factors)
        for (auto c : f.coeffs()) h = (h ^ c) * 1099511628211ull;
    return h;
}

#pragma once

#include "linrel/canonical_forms.hpp"
#include "linrel/leray.hpp"

#include "json.hpp"

#include <compare>
#include <cstddef>
#include <optional>

namespace linrel {

/// Complete invariant of a Szymczak class: dimension of the Leray image and the
/// invariant factors of its bijection. (0, id_0) is labelled (0, []).
struct SzymClassLabel {
    std::uint32_t p = 0;
    std::size_t dim = 0;
    InvariantFactors factors;

    friend bool operator==(const SzymClassLabel&, const SzymClassLabel&) = default;
    friend std::strong_ordering operator<=>(const SzymClassLabel& a, const SzymClassLabel& b) {
        if (auto c = a.p <=> b.p; c != 0) return c;
        if (auto c = a.dim <=> b.dim; c != 0) return c;
        return a.factors <=> b.factors;
    }
};

SzymClassLabel szym_label(const LerayForm& form);
SzymClassLabel szym_label(const EndoObject& obj);

/// Labels agree. Throws ShapeError across fields.
bool szym_equiv(const EndoObject& a, const EndoObject& b);

/// {"p":3, "dim":1, "invariant_factors":[[1,1]]}, coefficients lowest degree first.
nlohmann::json label_to_json(const SzymClassLabel& label);
SzymClassLabel label_from_json(const nlohmann::json& doc);
/// Compact text form used as a map key and in CSV/DOT output, e.g. "1:[[1,1]]".
std::string label_key(const SzymClassLabel& label);

/// {"p", "dim", "matrix", "label"}
nlohmann::json leray_form_to_json(const LerayForm& form);

/// Minimal (preperiod, period) with alpha^preperiod == alpha^(preperiod + period).
struct PowerProfile {
    std::size_t preperiod = 0;
    std::size_t period = 1;
    friend bool operator==(const PowerProfile&, const PowerProfile&) = default;
};
PowerProfile power_profile(const LinearRelation& alpha);

/// A Szymczak morphism [phi, shift] between two endo-objects.
struct SzymMorphism {
    LinearRelation phi;
    std::size_t shift = 0;
};

/// Checks the shift-equivalence identities for phi: A -o B, psi: B -o A with total shift t and lag k:
///   phi o alpha = beta o phi,  psi o beta = alpha o psi,
///   psi o phi o alpha^k = alpha^{t+k},  phi o psi o beta^k = beta^{t+k}.
bool is_shift_equivalence(const EndoObject& a, const EndoObject& b, const LinearRelation& phi,
                          const LinearRelation& psi, std::size_t t, std::size_t k);

struct OracleWitness {
    LinearRelation phi;
    LinearRelation psi;
    std::size_t t = 0;
    std::size_t k = 0;
};

/// Exhaustive search for a shift equivalence over every pair of relations phi, psi, with
/// t, k <= max preperiod + lcm of periods. Guard: p^{(dimA+dimB)^2} <= 2^24, else GuardExceeded.
std::optional<OracleWitness> oracle_search(const EndoObject& a, const EndoObject& b);
bool oracle_szym_equiv(const EndoObject& a, const EndoObject& b);

}  // namespace linrel

template <>
struct std::hash<linrel::SzymClassLabel> {
    std::size_t operator()(const linrel::SzymClassLabel& l) const noexcept;
};
